#include <algorithm>
#include <limits>

#include "bicliq/detail.hpp"
#include "bicliq/extractors.hpp"

namespace bicliq {

namespace {

constexpr std::size_t kSat = std::numeric_limits<std::size_t>::max();

std::size_t pow_sat(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > kSat / base) return kSat;
        r *= base;
    }
    return r;
}

std::size_t mul_sat(std::size_t a, std::size_t b) {
    if (a != 0 && b > kSat / a) return kSat;
    return a * b;
}

// Consecutive near-equal blocks of [0, n).
std::vector<std::vector<std::size_t>> blocks(std::size_t n, std::size_t parts) {
    std::vector<std::vector<std::size_t>> out(parts);
    std::size_t next = 0;
    for (std::size_t i = 0; i < parts; ++i) {
        const auto size = n / parts + (i < n % parts ? 1 : 0);
        for (std::size_t j = 0; j < size; ++j) out[i].push_back(next++);
    }
    return out;
}

}  // namespace

std::size_t ehp_t(std::size_t n, std::size_t k, std::size_t l) {
    if (k == 0 || l == 0) throw Error(ErrorCode::BadPattern, "pattern part is empty");
    std::size_t t = 0;
    while (mul_sat(pow_sat(t + 1, k), l) <= n) ++t;
    return t;
}

Dichotomy ehp_embed(const BipartiteGraph& g, const BipartiteGraph& h) {
    detail::require_square(g);
    const bool transposed = h.n_top() < h.n_bottom();
    const BipartiteGraph hh = transposed ? transpose(h) : h;
    const BipartiteGraph w = transposed ? transpose(g) : g;
    const auto l = hh.n_top();     // embedded into U
    const auto k = hh.n_bottom();  // embedded into V, one vertex per round
    if (k < 2) throw Error(ErrorCode::BadPattern, "smaller pattern part must have at least 2 vertices");
    const auto n = w.n_top();

    Dichotomy d;
    d.pattern = h;
    const auto t = ehp_t(n, k, l);
    d.guaranteed = t;
    d.sub_threshold = n < pow_sat(l, k);

    auto give = [&](Certificate c, const char* route) {
        if (transposed) std::swap(c.top_set, c.bottom_set);
        d.cert = std::move(c);
        d.route = route;
        return d;
    };
    if (t == 0) return give(detail::trivial_certificate(w), "cert:trivial");

    const auto u_groups = blocks(n, l);
    const auto v_groups = blocks(n, k);
    std::vector<VertexSet> cur;
    for (const auto& grp : u_groups) cur.push_back(from_indices(n, grp));
    VertexSet used(n);
    std::vector<std::size_t> chosen;

    for (std::size_t j = 0; j < k; ++j) {
        const auto need = pow_sat(t, k - j - 1);
        // Candidate pool: V_j, widened to all unused bottoms when V_j is too
        // small for the pigeonhole step.
        std::vector<std::size_t> pool;
        for (auto v : v_groups[j])
            if (!used.test(v)) pool.push_back(v);
        if (pool.size() < mul_sat(t, l))
            for (std::size_t v = 0; v < n; ++v)
                if (!used.test(v) && std::find(pool.begin(), pool.end(), v) == pool.end())
                    pool.push_back(v);

        auto side = [&](std::size_t i, std::size_t v) {
            return hh.has_edge(i, j) ? (cur[i] & w.column(v)).count()
                                     : (cur[i] - w.column(v)).count();
        };
        std::optional<std::size_t> good;
        std::vector<std::vector<std::size_t>> bad_for(l);
        for (auto v : pool) {
            std::size_t i = 0;
            while (i < l && side(i, v) >= need) ++i;
            if (i == l) {
                good = v;
                break;
            }
            bad_for[i].push_back(v);
        }

        if (!good) {
            // Pigeonhole: t vertices bad for one class give a K_{t,t} or an
            // empty t x t pair.
            for (std::size_t i = 0; i < l; ++i) {
                if (bad_for[i].size() < t) continue;
                std::vector<std::size_t> vs(bad_for[i].begin(), bad_for[i].begin() + static_cast<std::ptrdiff_t>(t));
                VertexSet us = cur[i];
                const bool edge = hh.has_edge(i, j);
                for (auto v : vs) {
                    if (edge) us -= w.column(v);
                    else us &= w.column(v);
                }
                std::sort(vs.begin(), vs.end());
                Certificate c{edge ? CertificateKind::CoBiclique : CertificateKind::Biclique,
                              to_indices(us), vs};
                return give(std::move(c), edge ? "cert:bad-class-cobiclique" : "cert:bad-class-biclique");
            }
            d.sub_threshold = true;
            return give(detail::trivial_certificate(w), "cert:pool-exhausted");
        }

        const auto v = *good;
        for (std::size_t i = 0; i < l; ++i) {
            if (hh.has_edge(i, j)) cur[i] &= w.column(v);
            else cur[i] -= w.column(v);
        }
        used.set(v);
        chosen.push_back(v);
    }

    Embedding e;
    for (std::size_t i = 0; i < l; ++i) e.top_map.push_back(cur[i].find_first());
    e.bottom_map = chosen;
    if (transposed) std::swap(e.top_map, e.bottom_map);
    d.copy = std::move(e);
    d.route = "copy:rounds";
    return d;
}

}  // namespace bicliq
