#include "bicliq/harness.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <thread>

#include "bicliq/error.hpp"
#include "bicliq/families.hpp"

namespace bicliq {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<VertexSet> sample_rows(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (auto& r : rows)
        for (std::size_t j = 0; j < n; ++j) r[j] = unit(rng) < p;
    return rows;
}

// Copies through the pair (u, v), capped.
std::size_t copies_through(const BipartiteGraph& g, const BipartiteGraph& h, std::size_t u,
                           std::size_t v, std::size_t cap) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < h.n_top() && total < cap; ++i) {
        for (std::size_t j = 0; j < h.n_bottom() && total < cap; ++j) {
            for_each_induced_copy(
                g, h,
                [&](const Embedding&) { return ++total < cap; },
                CopyAnchor{i, u, j, v});
        }
    }
    return std::min(total, cap);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t index) {
    return splitmix(splitmix(seed ^ splitmix(n)) + index);
}

BipartiteGraph random_pattern_free(const GenSpec& spec) {
    if (!(spec.density >= 0.0 && spec.density <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "density must lie in [0,1]");
    if (!(spec.noise >= 0.0 && spec.noise <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "noise must lie in [0,1]");
    const auto n = spec.n;
    const auto& h = spec.pattern;
    std::mt19937_64 rng(spec.seed);
    const bool fits = h.n_top() <= n && h.n_bottom() <= n;
    if (!fits) return BipartiteGraph(n, sample_rows(n, spec.density, rng));

    if (spec.method == GenMethod::Rejection) {
        for (std::size_t attempt = 0; attempt < spec.budget; ++attempt) {
            BipartiteGraph g(n, sample_rows(n, spec.density, rng));
            if (!find_induced_copy(g, h)) return g;
        }
        throw Error(ErrorCode::Timeout, "rejection sampling exhausted its budget of " +
                                            std::to_string(spec.budget) + " samples");
    }

    constexpr std::size_t kLookaheadCap = 64;
    auto rows = sample_rows(n, spec.density, rng);
    for (std::size_t flips = 0; flips <= spec.budget; ++flips) {
        BipartiteGraph g(n, rows);
        const auto copy = find_induced_copy(g, h);
        if (!copy) return g;
        if (flips == spec.budget) break;
        // Noise step, as in WalkSAT: greedy flips alone can cycle.
        if (unit(rng) < spec.noise) {
            const auto u = copy->top_map[rng() % copy->top_map.size()];
            const auto v = copy->bottom_map[rng() % copy->bottom_map.size()];
            rows[u].flip(v);
            continue;
        }
        std::vector<std::pair<std::size_t, std::size_t>> best;
        long long best_score = std::numeric_limits<long long>::max();
        // Only copies containing both u and v change, so after - before is
        // the exact change in the total copy count (up to the cap).
        for (auto u : copy->top_map) {
            for (auto v : copy->bottom_map) {
                auto trial = rows;
                trial[u].flip(v);
                const auto after = copies_through(BipartiteGraph(n, std::move(trial)), h, u, v,
                                                  kLookaheadCap);
                const auto before = copies_through(g, h, u, v, kLookaheadCap);
                const auto score = static_cast<long long>(after) - static_cast<long long>(before);
                if (score < best_score) {
                    best_score = score;
                    best.clear();
                }
                if (score == best_score) best.emplace_back(u, v);
            }
        }
        const auto [u, v] = best[rng() % best.size()];
        rows[u].flip(v);
    }
    throw Error(ErrorCode::Timeout,
                "repair exhausted its budget of " + std::to_string(spec.budget) + " flips");
}

bool verify_certificate(const BipartiteGraph& g, const Certificate& cert) {
    for (auto u : cert.top_set)
        if (u >= g.n_top()) throw Error(ErrorCode::IndexOutOfRange, "certificate top index out of range");
    for (auto v : cert.bottom_set)
        if (v >= g.n_bottom())
            throw Error(ErrorCode::IndexOutOfRange, "certificate bottom index out of range");
    const bool want = cert.kind == CertificateKind::Biclique;
    for (auto u : cert.top_set)
        for (auto v : cert.bottom_set)
            if (g.row(u).test(v) != want) return false;
    return true;
}

bool verify_embedding(const BipartiteGraph& g, const BipartiteGraph& h, const Embedding& emb) {
    for (auto u : emb.top_map)
        if (u >= g.n_top()) throw Error(ErrorCode::IndexOutOfRange, "embedding top index out of range");
    for (auto v : emb.bottom_map)
        if (v >= g.n_bottom())
            throw Error(ErrorCode::IndexOutOfRange, "embedding bottom index out of range");
    if (emb.top_map.size() != h.n_top() || emb.bottom_map.size() != h.n_bottom()) return false;
    std::vector<char> seen_top(g.n_top(), 0), seen_bottom(g.n_bottom(), 0);
    for (auto u : emb.top_map) {
        if (seen_top[u]) return false;
        seen_top[u] = 1;
    }
    for (auto v : emb.bottom_map) {
        if (seen_bottom[v]) return false;
        seen_bottom[v] = 1;
    }
    for (std::size_t i = 0; i < h.n_top(); ++i)
        for (std::size_t j = 0; j < h.n_bottom(); ++j)
            if (h.row(i).test(j) != g.row(emb.top_map[i]).test(emb.bottom_map[j])) return false;
    return true;
}

bool verify_dichotomy(const BipartiteGraph& g, const Dichotomy& d) {
    if (d.copy.has_value() == d.cert.has_value()) return false;
    return d.copy ? verify_embedding(g, d.pattern, *d.copy) : verify_certificate(g, *d.cert);
}

std::string_view to_string(BenchFamily f) noexcept {
    switch (f) {
        case BenchFamily::Hs: return "Hs";
        case BenchFamily::Ms: return "Ms";
        case BenchFamily::MsStar: return "MsStar";
        case BenchFamily::P4: return "P4";
        case BenchFamily::TwoK2: return "2K2";
        case BenchFamily::H4: return "H4";
        case BenchFamily::SingleRow: return "SingleRow";
    }
    return "Unknown";
}

BenchFamily parse_bench_family(std::string_view name) {
    std::string low;
    for (char c : name) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (low == "hs") return BenchFamily::Hs;
    if (low == "ms") return BenchFamily::Ms;
    if (low == "msstar" || low == "ms*") return BenchFamily::MsStar;
    if (low == "p4") return BenchFamily::P4;
    if (low == "2k2") return BenchFamily::TwoK2;
    if (low == "h4") return BenchFamily::H4;
    if (low == "singlerow") return BenchFamily::SingleRow;
    throw Error(ErrorCode::InvalidArgument, "unknown bench family '" + std::string(name) + "'");
}

BipartiteGraph bench_pattern(BenchFamily f, std::size_t s1, std::size_t s2) {
    switch (f) {
        case BenchFamily::Hs: return make_h_family(s1, s2);
        case BenchFamily::Ms: return make_m_family(s1, s2);
        case BenchFamily::MsStar: return make_mstar_family(s1, s2);
        case BenchFamily::P4: return pattern_p4();
        case BenchFamily::TwoK2: return pattern_2k2();
        case BenchFamily::H4: return pattern_h4();
        case BenchFamily::SingleRow: return make_single_row(s1, s2);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown bench family");
}

Dichotomy run_extractor(BenchFamily f, const BipartiteGraph& g, std::size_t s1, std::size_t s2) {
    switch (f) {
        case BenchFamily::Hs: return extract_Hs(g, s1, s2);
        case BenchFamily::Ms: return extract_Ms(g, s1, s2);
        case BenchFamily::MsStar: return extract_Ms_star(g, s1, s2);
        case BenchFamily::P4: return extract_P4free(g);
        case BenchFamily::TwoK2: return extract_2K2free(g);
        case BenchFamily::H4: return extract_H4free(g);
        case BenchFamily::SingleRow: return extract_single_row(g, s1, s2);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown bench family");
}

std::vector<BoundRow> bound_report(const BoundReportSpec& spec) {
    if (spec.n_lo == 0 || spec.n_lo > spec.n_hi)
        throw Error(ErrorCode::InvalidArgument, "n range must satisfy 1 <= lo <= hi");
    const auto pattern = bench_pattern(spec.family, spec.s1, spec.s2);
    std::vector<BoundRow> rows;
    for (std::size_t n = spec.n_lo; n <= spec.n_hi; ++n) {
        struct Outcome {
            std::size_t size = 0;
            std::size_t floor = 0;
            bool violation = false;
            bool sub_threshold = false;
        };
        std::vector<Outcome> out(spec.trials);
        std::vector<std::exception_ptr> errors(spec.trials);
        auto work = [&](std::size_t i) {
            try {
                const auto seed = trial_seed(spec.seed, n, i);
                std::mt19937_64 rng(seed);
                GenSpec gen{n, pattern, 0.05 + 0.9 * unit(rng), rng(), GenMethod::Repair, 100000, spec.noise};
                const auto g = random_pattern_free(gen);
                const auto d = run_extractor(spec.family, g, spec.s1, spec.s2);
                auto& o = out[i];
                o.floor = d.guaranteed;
                o.sub_threshold = d.sub_threshold;
                if (!verify_dichotomy(g, d) || d.copy) {
                    o.violation = true;
                } else {
                    o.size = d.cert->size();
                    o.violation = o.size < d.guaranteed;
                }
            } catch (...) {
                errors[i] = std::current_exception();
            }
        };
        auto threads = spec.threads ? spec.threads : std::max(1U, std::thread::hardware_concurrency());
        threads = std::min<std::size_t>(threads, std::max<std::size_t>(1, spec.trials));
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < spec.trials; i += threads) work(i);
            });
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);

        BoundRow row;
        row.n = n;
        row.trials = spec.trials;
        row.min = spec.trials ? static_cast<std::size_t>(-1) : 0;
        double total = 0;
        for (const auto& o : out) {
            row.min = std::min(row.min, o.size);
            total += static_cast<double>(o.size);
            row.floor = std::max(row.floor, o.floor);
            row.violations += o.violation ? 1 : 0;
            row.sub_threshold = row.sub_threshold || o.sub_threshold;
        }
        row.mean = spec.trials ? total / static_cast<double>(spec.trials) : 0.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace bicliq
