// Acceptance run: one PASS/FAIL line per criterion. `acceptance 4 7` runs a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "bicliq/classifier.hpp"
#include "bicliq/constructions.hpp"
#include "bicliq/extractors.hpp"
#include "bicliq/families.hpp"
#include "bicliq/harness.hpp"
#include "bicliq/solvers.hpp"
#include "bicliq/tree_split.hpp"
#include "support/support.hpp"

using namespace bicliq;
using testkit::Rng;

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// Collects failures; prints the first few.
struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        if (++failures <= 5) std::printf("    violation: %s\n", what.c_str());
    }
};

bool same_class(const BipartiteGraph& a, const BipartiteGraph& b) {
    return isomorphic(a, b) || isomorphic(a, bipartite_complement(b));
}

// 1. Strongly acyclic graphs with both parts >= 3.
void criterion1(Tally& t) {
    struct Case {
        std::size_t k, l;
        std::vector<BipartiteGraph> want;
    };
    const std::vector<Case> cases{{3, 3, {pattern_p5prime(), pattern_p6()}},
                                  {3, 4, {pattern_h34(), pattern_p7()}},
                                  {3, 5, {}},
                                  {4, 4, {}},
                                  {4, 5, {}}};
    for (const auto& c : cases) {
        const auto got = enumerate_strongly_acyclic(c.k, c.l);
        const auto tag = "(" + std::to_string(c.k) + "," + std::to_string(c.l) + ")";
        t.expect(got.size() == c.want.size(), tag + " count " + std::to_string(got.size()));
        for (const auto& w : c.want) {
            bool hit = false;
            for (const auto& g : got) hit = hit || same_class(g, w);
            t.expect(hit, tag + " misses an expected graph");
        }
        for (const auto& g : got) t.expect(is_strongly_acyclic(g), tag + " returned a graph with a cycle");
    }
}

// 2. Exact values of the tight constructions.
void criterion2(Tally& t) {
    auto check = [&](const std::string& name, const BipartiteGraph& g, const BipartiteGraph& h, std::size_t want) {
        const auto got = tilde_h(g).t;
        t.expect(got == want, name + ": h = " + std::to_string(got) + ", want " + std::to_string(want));
        t.expect(!find_induced_copy(g, h), name + " contains the pattern");
    };
    check("tight_P4(6)", tight_P4(6), pattern_p4(), 2);
    check("tight_P4(9)", tight_P4(9), pattern_p4(), 3);
    for (std::size_t n = 3; n <= 8; ++n)
        check("tight_2K2(" + std::to_string(n) + ")", tight_2K2(n), pattern_2k2(), ceil_div(n, 2));
    check("tight_H4(5)", tight_H4(5), pattern_h4(), 2);
    check("tight_H4(10)", tight_H4(10), pattern_h4(), 4);
}

// 3. forb_min oracle values, bracketed by the lower bound and the construction.
void criterion3(Tally& t) {
    struct Case {
        std::string name;
        std::size_t n;
        BipartiteGraph h;
        std::size_t want, lower, upper;
    };
    const std::vector<Case> cases{
        {"2K2 n=3", 3, pattern_2k2(), 2, ceil_div(3, 2), tilde_h(tight_2K2(3)).t},
        {"P4 n=3", 3, pattern_p4(), 1, ceil_div(3, 3), tilde_h(tight_P4(3)).t},
        {"2K2 n=4", 4, pattern_2k2(), 2, ceil_div(4, 2), tilde_h(tight_2K2(4)).t},
    };
    for (const auto& c : cases) {
        const auto r = forb_min(c.n, c.h);
        t.expect(r.value == c.want, c.name + ": forb_min = " + std::to_string(r.value));
        t.expect(c.lower <= r.value && r.value <= c.upper, c.name + ": outside [lower, construction]");
        t.expect(!find_induced_copy(r.argmin, c.h) && tilde_h(r.argmin).t == r.value, c.name + ": bad argmin");
    }
}

// 4. Extractor bounds on generated pattern-free graphs.
struct Family {
    std::string name;
    BenchFamily family;
    std::size_t s1, s2, n_lo, n_hi;
    std::function<std::optional<std::size_t>(std::size_t)> bound;  // nullopt: validity only
};

void criterion4(Tally& t) {
    std::vector<Family> fams{
        {"2K2", BenchFamily::TwoK2, 1, 1, 4, 40, [](std::size_t n) { return ceil_div(n, 2); }},
        {"P4", BenchFamily::P4, 1, 0, 3, 39, [](std::size_t n) { return ceil_div(n, 3); }},
        {"H4", BenchFamily::H4, 1, 1, 5, 40, [](std::size_t n) { return 2 * n / 5; }},
    };
    for (std::size_t s = 1; s <= 3; ++s)
        fams.push_back({"H_" + std::to_string(s), BenchFamily::Hs, s, s, 4 * s, 60,
                        [s](std::size_t n) { return ceil_div(n, 2 * s); }});
    for (std::size_t s = 1; s <= 2; ++s) {
        for (bool star : {false, true}) {
            const auto n0 = ms_threshold(s, star);
            fams.push_back({std::string(star ? "M*_" : "M_") + std::to_string(s),
                            star ? BenchFamily::MsStar : BenchFamily::Ms, s, s, 2 * s + 2, 60,
                            [n0, s, star](std::size_t n) -> std::optional<std::size_t> {
                                if (!n0 || n < *n0) return std::nullopt;
                                return ms_linear_floor(n, s, star);
                            }});
        }
    }
    constexpr std::size_t kInstances = 500;
    for (const auto& f : fams) {
        const auto start = std::chrono::steady_clock::now();
        const auto span = f.n_hi - f.n_lo + 1;
        const auto per_n = ceil_div(kInstances, span);
        const auto pattern = bench_pattern(f.family, f.s1, f.s2);
        std::size_t count = 0, asserted = 0, min_ratio_num = 0, min_ratio_den = 1;
        bool first = true;
        for (std::size_t n = f.n_lo; n <= f.n_hi; ++n) {
            for (std::size_t i = 0; i < per_n; ++i) {
                std::mt19937_64 rng(trial_seed(2024, n, i));
                const double density = 0.05 + 0.9 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
                const auto g = random_pattern_free({n, pattern, density, rng(), GenMethod::Repair, 100000, 1.0});
                const auto d = run_extractor(f.family, g, f.s1, f.s2);
                ++count;
                const auto where = f.name + " n=" + std::to_string(n) + " trial " + std::to_string(i);
                if (d.copy) {
                    t.expect(false, where + ": copy returned on a pattern-free input");
                    continue;
                }
                t.expect(d.cert.has_value(), where + ": no certificate");
                if (!d.cert) continue;
                t.expect(testkit::naive_certificate_ok(g, *d.cert) && verify_certificate(g, *d.cert),
                         where + ": certificate fails verification");
                t.expect(d.cert->size() >= d.guaranteed, where + ": below the extractor's own guarantee");
                if (const auto b = f.bound(n)) {
                    ++asserted;
                    t.expect(d.cert->size() >= *b, where + ": size " + std::to_string(d.cert->size()) +
                                                       " < " + std::to_string(*b));
                }
                if (first || d.cert->size() * min_ratio_den < min_ratio_num * n) {
                    min_ratio_num = d.cert->size();
                    min_ratio_den = n;
                    first = false;
                }
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("    %-5s n=%zu..%zu instances=%zu bound-asserted=%zu min cert/n=%zu/%zu (%.1f s)\n",
                    f.name.c_str(), f.n_lo, f.n_hi, count, asserted, min_ratio_num, min_ratio_den, secs);
    }
}

// 5. tree_split on random trees, checked without the library's ancestor index.
void criterion5(Tally& t) {
    Rng rng(5);
    for (int i = 0; i < 10000; ++i) {
        const auto n = 1 + rng.below(1000);
        const auto tree = testkit::random_tree(n, rng, rng.unit());
        const auto s = tree_split(tree);
        const auto th = ceil_div(n, 4);
        const auto where = "tree " + std::to_string(i) + " n=" + std::to_string(n);
        if (s.is_path) {
            const auto& p = s.handle_path;
            bool ok = p.size() >= th && tree.parent[p[0]] == p[0];
            for (std::size_t k = 1; ok && k < p.size(); ++k) ok = tree.parent[p[k]] == p[k - 1];
            t.expect(ok, where + ": bad path");
            continue;
        }
        t.expect(s.forest_a.size() >= th && s.forest_b.size() >= th, where + ": forest too small");
        // Mark every ancestor (inclusive) of one side; the other side must stay unmarked.
        auto closed_up = [&](const std::vector<std::size_t>& set) {
            std::vector<char> mark(n, 0);
            for (auto v : set) {
                while (!mark[v]) {
                    mark[v] = 1;
                    if (tree.parent[v] == v) break;
                    v = tree.parent[v];
                }
            }
            return mark;
        };
        const auto up_a = closed_up(s.forest_a);
        const auto up_b = closed_up(s.forest_b);
        bool ok = true;
        for (auto v : s.forest_b) ok = ok && !up_a[v];
        for (auto v : s.forest_a) ok = ok && !up_b[v];
        t.expect(ok, where + ": forests are not independent");
    }
}

// 6. ehp_embed dichotomy against exact solving.
void criterion6(Tally& t) {
    Rng rng(6);
    std::size_t copies = 0, forced = 0;
    for (int i = 0; i < 200; ++i) {
        const bool square = i % 2 == 0;
        const std::size_t k = 2, l = square ? 2 : 3;
        auto h = testkit::random_graph(k, l, rng.unit(), rng);
        if (!square && rng.coin(0.5)) h = transpose(h);
        const auto n = k + rng.below(l * l * 4 - k + 1);
        const auto g = testkit::random_graph(n, n, rng.unit(), rng);
        const auto d = ehp_embed(g, h);
        const auto where = "pair " + std::to_string(i) + " n=" + std::to_string(n);
        t.expect(d.copy.has_value() != d.cert.has_value(), where + ": not exactly one branch");
        if (d.copy) {
            ++copies;
            t.expect(verify_embedding(g, h, *d.copy), where + ": embedding fails verification");
        } else if (d.cert) {
            t.expect(testkit::naive_certificate_ok(g, *d.cert) && verify_certificate(g, *d.cert),
                     where + ": certificate fails verification");
        }
        const auto tt = static_cast<std::size_t>(std::floor(std::pow(double(n) / double(l), 1.0 / double(k)) + 1e-9));
        t.expect(tt == ehp_t(n, k, l), where + ": t mismatch");
        if (tilde_omega(g).t < tt && tilde_alpha(g).t < tt) {
            ++forced;
            t.expect(d.copy.has_value(), where + ": small h but no copy");
        }
    }
    std::printf("    copies=%zu forced-copy cases=%zu\n", copies, forced);
}

// 7. Golden LLL parameters.
void criterion7(Tally& t) {
    std::ifstream in(std::string(BICLIQ_TEST_DATA_DIR) + "/lll_golden.json");
    t.expect(static_cast<bool>(in), "golden file missing");
    if (!in) return;
    const auto j = nlohmann::json::parse(in);
    const LLLParams params{j["n"], j["cycle_len"], j["t"], j["p"], j["max_resamples"], j["seed"]};
    const auto c = lll_search(params);
    t.expect(c.has_value(), "lll_search failed on the golden parameters");
    if (!c) return;
    const auto r = verify_coloring(*c, params);
    t.expect(r.red_violations == 0 && r.blue_violations == 0,
             "report (" + std::to_string(r.red_violations) + "," + std::to_string(r.blue_violations) + ")");
    if (params.cycle_len == 4) {
        // Red C4-freeness by codegree: no two tops share two red neighbours.
        const auto rows = c->red.to_rows();
        bool free = true;
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = a + 1; b < rows.size(); ++b) {
                std::size_t common = 0;
                for (std::size_t v = 0; v < rows.size(); ++v) common += rows[a][v] == '1' && rows[b][v] == '1';
                free = free && common < 2;
            }
        t.expect(free, "red C4 found by codegree check");
    }
    std::printf("    n=%zu t=%zu p=%.2f red edges=%zu blue omega=%zu\n", params.n, params.t, params.p,
                c->red.edge_count(), r.blue_omega);
}

// 8. Duality and soundness invariants.
void criterion8(Tally& t) {
    Rng rng(8);
    for (int i = 0; i < 2000; ++i) {
        const auto n = 1 + rng.below(8);
        const auto g = testkit::random_graph(n, n, rng.unit(), rng);
        const auto c = bipartite_complement(g);
        t.expect(bipartite_complement(c) == g, "complement is not an involution");
        t.expect(tilde_omega(g).t == tilde_alpha(c).t, "omega/alpha duality");
        t.expect(tilde_h(g).t == tilde_h(c).t, "h duality");
    }
    for (std::size_t k = 1; k <= 4; ++k)
        for (std::size_t l = 1; l <= 4; ++l)
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << (k * l)); ++code) {
                const auto h = testkit::graph_from_code(k, l, code);
                const auto cls = classify(h);
                t.expect((cls.tag == PatternTag::NotStronglyAcyclic) == !is_strongly_acyclic(h),
                         "classify disagrees with is_strongly_acyclic");
                t.expect(cls.tag == classify(bipartite_complement(h)).tag, "classify not complement-stable");
            }
    for (int i = 0; i < 5000; ++i) {
        const auto n = 1 + rng.below(6);
        const auto g = testkit::random_graph(n, n, rng.unit(), rng);
        Certificate cert{rng.coin(0.5) ? CertificateKind::Biclique : CertificateKind::CoBiclique, {}, {}};
        for (std::size_t u = 0; u < n; ++u)
            if (rng.coin(0.4)) cert.top_set.push_back(u);
        for (std::size_t v = 0; v < n; ++v)
            if (rng.coin(0.4)) cert.bottom_set.push_back(v);
        t.expect(verify_certificate(g, cert) == testkit::naive_certificate_ok(g, cert),
                 "verify_certificate disagrees with the naive checker");
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, void (*)(Tally&)>> criteria{
        {"strongly acyclic enumeration for parts >= 3", criterion1},
        {"exact values of the tight constructions", criterion2},
        {"forb_min oracle values", criterion3},
        {"extractor bound suite", criterion4},
        {"tree_split on 10^4 random trees", criterion5},
        {"ehp_embed dichotomy", criterion6},
        {"LLL golden parameters", criterion7},
        {"duality and soundness invariants", criterion8},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (!only.empty() && !only.count(id)) continue;
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        bool crashed = false;
        try {
            criteria[i].second(t);
        } catch (const std::exception& e) {
            std::printf("    exception: %s\n", e.what());
            crashed = true;
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = !crashed && t.failures == 0;
        failed += !ok;
        std::printf("criterion %d: %s  %s (%zu checks, %zu violations, %.1f s)\n", id, ok ? "PASS" : "FAIL",
                    criteria[i].first, t.checks, t.failures, secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
