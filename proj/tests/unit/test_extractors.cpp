#include <doctest.h>

#include "bicliq/constructions.hpp"
#include "bicliq/error.hpp"
#include "bicliq/extractors.hpp"
#include "bicliq/families.hpp"
#include "bicliq/harness.hpp"
#include "support/support.hpp"

using namespace bicliq;
using testkit::Rng;

namespace {

BipartiteGraph full(std::size_t n) { return bipartite_complement(BipartiteGraph(n, n)); }

BipartiteGraph blocks(std::size_t count, std::size_t size) {
    const auto n = count * size;
    std::vector<std::string> rows(n, std::string(n, '0'));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = (u / size) * size; v < (u / size + 1) * size; ++v) rows[u][v] = '1';
    return from_matrix(rows);
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void check_sound(const BipartiteGraph& g, const Dichotomy& d) {
    REQUIRE(d.copy.has_value() != d.cert.has_value());
    if (d.copy) {
        CHECK(verify_embedding(g, d.pattern, *d.copy));
    } else {
        CHECK(verify_certificate(g, *d.cert));
        CHECK(testkit::naive_certificate_ok(g, *d.cert));
    }
}

// Runs an extractor on g; on pattern-free g the certificate must meet `floor`.
void check_bound(const BipartiteGraph& g, const Dichotomy& d, std::size_t floor) {
    check_sound(g, d);
    const bool fits = d.pattern.n_top() <= g.n_top() && d.pattern.n_bottom() <= g.n_bottom();
    if (!fits || !find_induced_copy(g, d.pattern)) {
        REQUIRE(d.cert);
        CHECK(d.cert->size() >= floor);
        CHECK(d.cert->size() >= d.guaranteed);
    }
}

}  // namespace

TEST_SUITE("extractors") {
    TEST_CASE("maxdeg co-biclique") {
        const auto e = extract_maxdeg_cobiclique(BipartiteGraph(4, 4), 1);
        CHECK(e.kind == CertificateKind::CoBiclique);
        CHECK(e.top_set.size() == 4);
        CHECK(e.bottom_set.size() == 4);

        const auto m = from_matrix({"1000", "0100", "0010", "0001"});
        const auto c = extract_maxdeg_cobiclique(m, 2);
        CHECK(c.top_set.size() >= 2);
        CHECK(c.bottom_set.size() >= 2);
        CHECK(verify_certificate(m, c));

        try {
            extract_maxdeg_cobiclique(m, 1);
            FAIL("expected DegreeTooHigh");
        } catch (const Error& err) {
            CHECK(err.code() == ErrorCode::DegreeTooHigh);
        }
    }

    TEST_CASE("maxdeg guarantee on random low-degree graphs") {
        Rng rng(31);
        for (int i = 0; i < 200; ++i) {
            const auto n = 2 + rng.below(12);
            const auto s = 1 + rng.below(4);
            std::vector<std::string> rows(n, std::string(n, '0'));
            for (auto& r : rows)
                for (std::size_t k = 0, d = rng.below(s); k < d; ++k) r[rng.below(n)] = '1';
            const auto g = from_matrix(rows);
            const auto c = extract_maxdeg_cobiclique(g, s);
            CHECK(verify_certificate(g, c));
            CHECK(c.size() >= n / s);
        }
    }

    TEST_CASE("single row") {
        const auto a = extract_single_row(BipartiteGraph(4, 4), 1, 1);
        REQUIRE(a.cert);
        CHECK(a.cert->size() >= 2);

        auto rows = std::vector<std::string>(4, "1111");
        rows[2] = "1011";
        const auto g = from_matrix(rows);
        const auto b = extract_single_row(g, 2, 1);
        REQUIRE(b.copy);
        CHECK(verify_embedding(g, b.pattern, *b.copy));

        const auto m = from_matrix({"100000", "010000", "001000", "000100", "000010", "000001"});
        const auto c = extract_single_row(m, 1, 2);
        REQUIRE(c.copy);
        CHECK(verify_embedding(m, c.pattern, *c.copy));

        const auto bad = extract_single_row(BipartiteGraph(2, 2), 2, 2);
        CHECK(bad.bad_pattern);
        REQUIRE(bad.cert);
        CHECK(verify_certificate(BipartiteGraph(2, 2), *bad.cert));
    }

    TEST_CASE("H_s examples") {
        for (std::size_t s = 1; s <= 3; ++s) {
            const auto d = extract_Hs(full(7), s, s);
            REQUIRE(d.cert);
            CHECK(d.cert->size() >= d.guaranteed);
            CHECK(verify_certificate(full(7), *d.cert));
        }
        // 2K2 = H_{1,1}: two disjoint K22s leave no certificate of size 2 with a copy present.
        const auto two = blocks(2, 2);
        const auto d = extract_Hs(two, 1, 1);
        check_sound(two, d);
        if (d.cert) CHECK(d.cert->size() >= d.guaranteed);

        // Staggered neighbourhoods {i, i+1 mod 8}.
        std::vector<std::string> rows(8, std::string(8, '0'));
        for (std::size_t i = 0; i < 8; ++i) {
            rows[i][i] = '1';
            rows[i][(i + 1) % 8] = '1';
        }
        const auto st = from_matrix(rows);
        const auto e = extract_Hs(st, 2, 2);
        check_sound(st, e);
        if (e.cert) CHECK(e.cert->size() >= 2);
    }

    TEST_CASE("M_s examples") {
        for (std::size_t n : {5, 12}) {
            const auto a = extract_Ms(full(n), 1, 1);
            REQUIRE(a.cert);
            CHECK(a.cert->size() >= a.guaranteed);
            CHECK(verify_certificate(full(n), *a.cert));
            const auto b = extract_Ms(BipartiteGraph(n, n), 1, 1);
            REQUIRE(b.cert);
            CHECK(b.cert->size() >= b.guaranteed);
            CHECK(verify_certificate(BipartiteGraph(n, n), *b.cert));
        }
        const auto g = blocks(3, 4);
        REQUIRE_FALSE(find_induced_copy(g, make_m_family(1, 1)));
        const auto d = extract_Ms(g, 1, 1);
        REQUIRE(d.cert);
        CHECK(verify_certificate(g, *d.cert));
        CHECK(d.cert->size() >= ceil_div(12, 54));
        CHECK(d.cert->size() <= 4);

        const auto e = extract_Ms_star(g, 1, 1);
        check_sound(g, e);
    }

    TEST_CASE("M_s threshold table matches a recomputation") {
        for (std::size_t s = 1; s <= 8; ++s) {
            for (bool star : {false, true}) {
                CAPTURE(s);
                CAPTURE(star);
                CHECK(compute_ms_threshold(s, star, 4000) == ms_threshold(s, star));
            }
        }
        CHECK_FALSE(ms_threshold(1, false).has_value());
        CHECK_FALSE(ms_threshold(1, true).has_value());
        CHECK(ms_threshold(2, false) == std::optional<std::size_t>{1});
    }

    TEST_CASE("M_s guarantee dominates the linear floor past n0") {
        for (std::size_t s = 2; s <= 3; ++s)
            for (std::size_t n = 1; n <= 3000; ++n) {
                CHECK(ms_guarantee(n, s) >= ceil_div(n, 54 * s));
                CHECK(ms_star_guarantee(n, s) >= ceil_div(n, 108 * s));
            }
        // s = 1 has no n0: the chain falls below n/54 for large n.
        CHECK(ms_guarantee(ms_threshold_horizon, 1) < ceil_div(ms_threshold_horizon, 54));
    }

    TEST_CASE("P4, 2K2 and H4 extractors") {
        const auto p4 = extract_P4free(tight_P4(6));
        REQUIRE(p4.cert);
        CHECK(p4.cert->size() == 2);

        std::vector<std::string> rows{"1111", "1111", "0000", "0000"};
        const auto k24 = from_matrix(rows);
        const auto t = extract_2K2free(k24);
        REQUIRE(t.cert);
        CHECK(t.cert->size() == 2);

        const auto h4 = extract_H4free(tight_H4(5));
        REQUIRE(h4.cert);
        CHECK(h4.cert->size() == 2);
    }

    TEST_CASE("P4, 2K2 and H4 extractors find copies") {
        const auto two = blocks(2, 2);
        const auto a = extract_2K2free(two);
        REQUIRE(a.copy);
        CHECK(verify_embedding(two, pattern_2k2(), *a.copy));

        const auto p = from_matrix({"110", "011", "000"});
        const auto b = extract_P4free(p);
        REQUIRE(b.copy);
        CHECK(verify_embedding(p, pattern_p4(), *b.copy));

        const auto h = from_matrix({"110", "000", "001"});
        const auto c = extract_H4free(h);
        REQUIRE(c.copy);
        CHECK(verify_embedding(h, pattern_h4(), *c.copy));
    }

    TEST_CASE("H4-free graphs have a sunflower, exhaustively for n <= 4") {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
                const auto g = testkit::graph_from_code(n, n, code);
                if (n >= 2 && find_induced_copy(g, pattern_h4())) continue;
                auto petals_ok = [&](const BipartiteGraph& w) {
                    VertexSet core(n);
                    core.set();
                    for (std::size_t u = 0; u < n; ++u) core &= w.row(u);
                    for (std::size_t u = 0; u < n; ++u)
                        if ((w.row(u) - core).count() > 1) return false;
                    return true;
                };
                REQUIRE((petals_ok(g) || petals_ok(bipartite_complement(g))));
                const auto d = extract_H4free(g);
                REQUIRE(d.cert);
                REQUIRE(d.cert->size() >= 2 * n / 5);
            }
        }
    }

    TEST_CASE("bounds over all small pattern-free graphs") {
        for (std::size_t n = 2; n <= 4; ++n) {
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
                const auto g = testkit::graph_from_code(n, n, code);
                check_bound(g, extract_P4free(g), ceil_div(n, 3));
                check_bound(g, extract_2K2free(g), ceil_div(n, 2));
                check_bound(g, extract_Hs(g, 1, 1), 0);
                check_bound(g, extract_Ms(g, 1, 1), 0);
            }
        }
    }

    TEST_CASE("every extractor is sound on random graphs") {
        Rng rng(41);
        for (int i = 0; i < 300; ++i) {
            const auto n = 1 + rng.below(10);
            const auto g = testkit::random_graph(n, n, rng.unit(), rng);
            const auto s1 = 1 + rng.below(3);
            const auto s2 = rng.below(s1 + 1);
            CAPTURE(g.to_matrix_text());
            check_bound(g, extract_P4free(g), ceil_div(n, 3));
            check_bound(g, extract_2K2free(g), ceil_div(n, 2));
            check_bound(g, extract_H4free(g), 2 * n / 5);
            check_bound(g, extract_Hs(g, s1, s2), 0);
            check_bound(g, extract_Ms(g, s1, s2), 0);
            check_bound(g, extract_Ms_star(g, s1, s2), 0);
            check_bound(g, extract_single_row(g, s1, s2 + 1), 0);
        }
    }

    TEST_CASE("extractors on generated pattern-free graphs") {
        Rng rng(43);
        for (int i = 0; i < 60; ++i) {
            const auto n = 6 + rng.below(20);
            const auto s = 1 + rng.below(2);
            auto gen = [&](const BipartiteGraph& h) {
                return random_pattern_free({n, h, rng.unit(), rng.eng(), GenMethod::Repair, 100000, 0.5});
            };
            const auto a = gen(make_h_family(s, s));
            check_bound(a, extract_Hs(a, s, s), 0);
            const auto b = gen(make_m_family(s, s));
            const auto db = extract_Ms(b, s, s);
            check_bound(b, db, ms_guarantee(n, s));
            REQUIRE(db.cert);
            if (!db.sub_threshold) CHECK(db.cert->size() >= ceil_div(n, 54 * s));
            const auto c = gen(make_mstar_family(s, s));
            const auto dc = extract_Ms_star(c, s, s);
            check_bound(c, dc, ms_star_guarantee(n, s));
            REQUIRE(dc.cert);
            if (!dc.sub_threshold) CHECK(dc.cert->size() >= ceil_div(n, 108 * s));
            const auto d = gen(pattern_h4());
            check_bound(d, extract_H4free(d), 2 * n / 5);
        }
    }

    TEST_CASE("ehp examples") {
        const auto g = blocks(3, 2);
        const auto a = ehp_embed(g, pattern_2k2());
        REQUIRE(a.copy);
        CHECK(verify_embedding(g, pattern_2k2(), *a.copy));

        const auto k16 = full(16);
        CHECK(ehp_t(16, 2, 2) == 2);
        const auto b = ehp_embed(k16, pattern_2k2());
        REQUIRE(b.cert);
        CHECK(b.cert->kind == CertificateKind::Biclique);
        CHECK(b.cert->size() >= 2);
        CHECK(verify_certificate(k16, *b.cert));

        const auto small = ehp_embed(BipartiteGraph(3, 3), from_matrix({"110", "011", "000"}));
        CHECK(small.sub_threshold);
        check_sound(BipartiteGraph(3, 3), small);

        CHECK_THROWS_AS(ehp_embed(full(4), from_matrix({"1", "0"})), Error);
    }

    TEST_CASE("ehp_t is exact") {
        CHECK(ehp_t(8, 2, 2) == 2);
        CHECK(ehp_t(7, 2, 2) == 1);
        CHECK(ehp_t(18, 2, 2) == 3);
        CHECK(ehp_t(17, 2, 2) == 2);
        CHECK(ehp_t(1, 3, 2) == 0);
        CHECK(ehp_t(54, 3, 2) == 3);
    }

    TEST_CASE("extract_auto dispatch") {
        const auto a = extract_auto(tight_P4(6), pattern_p4());
        REQUIRE(a.cert);
        CHECK(a.cert->size() == 2);

        try {
            extract_auto(full(6), pattern_p7());
            FAIL("expected Unsupported");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Unsupported);
            CHECK(std::string(e.what()).find("exceptional-pattern") != std::string::npos);
        }
        try {
            extract_auto(full(6), from_matrix({"11", "11"}));
            FAIL("expected Unsupported");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Unsupported);
            CHECK(std::string(e.what()).find("not-strongly-acyclic") != std::string::npos);
        }
    }

    TEST_CASE("extract_auto handles complemented and transposed patterns") {
        Rng rng(47);
        const std::vector<BipartiteGraph> patterns{
            pattern_p4(), bipartite_complement(pattern_p4()), transpose(pattern_h4()),
            bipartite_complement(make_h_family(2, 1)), transpose(make_m_family(2, 1)),
            bipartite_complement(transpose(make_mstar_family(1, 1))), make_single_row(2, 1),
            transpose(make_single_row(1, 2))};
        for (int i = 0; i < 200; ++i) {
            const auto n = 3 + rng.below(8);
            const auto g = testkit::random_graph(n, n, rng.unit(), rng);
            const auto& h = patterns[rng.below(patterns.size())];
            const auto d = extract_auto(g, h);
            REQUIRE(d.copy.has_value() != d.cert.has_value());
            if (d.copy) CHECK(verify_embedding(g, h, *d.copy));
            else CHECK(verify_certificate(g, *d.cert));
        }
    }

    TEST_CASE("complement duality of extract_auto") {
        Rng rng(53);
        for (int i = 0; i < 150; ++i) {
            const auto n = 3 + rng.below(8);
            const auto g = testkit::random_graph(n, n, rng.unit(), rng);
            const std::vector<BipartiteGraph> pats{pattern_p4(), make_h_family(2, 1), make_mstar_family(1, 1),
                                                   make_single_row(2, 1), transpose(make_m_family(2, 2))};
            const auto& h = pats[i % pats.size()];
            const auto a = extract_auto(g, h);
            const auto b = extract_auto(bipartite_complement(g), bipartite_complement(h));
            REQUIRE(a.cert.has_value() == b.cert.has_value());
            CHECK(a.guaranteed == b.guaranteed);
            if (a.cert) {
                CHECK(a.cert->size() == b.cert->size());
                // Self-complementary patterns may tie between the two kinds.
                if (i % pats.size() == 0) CHECK(a.cert->kind == flipped(b.cert->kind));
            }
        }
    }

    TEST_CASE("non-square input") {
        CHECK_THROWS_AS(extract_2K2free(BipartiteGraph(2, 3)), Error);
    }
}
