#pragma once

// Hand-rolled generators and naive oracles shared by the test binaries.
// Oracles deliberately avoid the library's own search code.

#include <algorithm>
#include <bit>
#include <functional>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "bicliq/graph.hpp"
#include "bicliq/solvers.hpp"
#include "bicliq/tree_split.hpp"

namespace testkit {

using bicliq::BipartiteGraph;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
    bool coin(double p) { return unit() < p; }
};

inline BipartiteGraph random_graph(std::size_t n_top, std::size_t n_bottom, double p, Rng& rng) {
    std::vector<std::string> rows(n_top, std::string(n_bottom, '0'));
    for (auto& r : rows)
        for (auto& c : r) c = rng.coin(p) ? '1' : '0';
    if (n_top == 0) return BipartiteGraph(0, n_bottom);
    return bicliq::from_matrix(rows);
}

/// Graph from the low n_top*n_bottom bits of code, row-major.
inline BipartiteGraph graph_from_code(std::size_t n_top, std::size_t n_bottom, std::uint64_t code) {
    std::vector<std::string> rows(n_top, std::string(n_bottom, '0'));
    for (std::size_t i = 0; i < n_top; ++i)
        for (std::size_t j = 0; j < n_bottom; ++j)
            if ((code >> (i * n_bottom + j)) & 1U) rows[i][j] = '1';
    return bicliq::from_matrix(rows);
}

inline bool naive_edge(const BipartiteGraph& g, std::size_t u, std::size_t v) {
    return g.to_rows()[u][v] == '1';
}

/// Checks a certificate through the text rendering only.
inline bool naive_certificate_ok(const BipartiteGraph& g, const bicliq::Certificate& c) {
    const auto rows = g.to_rows();
    const char want = c.kind == bicliq::CertificateKind::Biclique ? '1' : '0';
    for (auto u : c.top_set)
        for (auto v : c.bottom_set)
            if (u >= rows.size() || v >= g.n_bottom() || rows[u][v] != want) return false;
    return true;
}

/// Number of side-respecting induced copies (injective maps), by brute force.
inline std::size_t brute_copy_count(const BipartiteGraph& host, const BipartiteGraph& pattern) {
    const auto hr = host.to_rows();
    const auto pr = pattern.to_rows();
    const auto k = pattern.n_top(), l = pattern.n_bottom();
    if (k > host.n_top() || l > host.n_bottom()) return 0;
    std::size_t count = 0;
    std::vector<std::size_t> tmap(k), bmap(l);
    // Enumerate injective maps by recursion.
    std::vector<char> used_t(host.n_top(), 0), used_b(host.n_bottom(), 0);
    auto check = [&] {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < l; ++j)
                if ((pr[i][j] == '1') != (hr[tmap[i]][bmap[j]] == '1')) return false;
        return true;
    };
    std::function<void(std::size_t)> rec_b = [&](std::size_t j) {
        if (j == l) {
            count += check();
            return;
        }
        for (std::size_t v = 0; v < host.n_bottom(); ++v) {
            if (used_b[v]) continue;
            used_b[v] = 1;
            bmap[j] = v;
            rec_b(j + 1);
            used_b[v] = 0;
        }
    };
    std::function<void(std::size_t)> rec_t = [&](std::size_t i) {
        if (i == k) {
            rec_b(0);
            return;
        }
        for (std::size_t u = 0; u < host.n_top(); ++u) {
            if (used_t[u]) continue;
            used_t[u] = 1;
            tmap[i] = u;
            rec_t(i + 1);
            used_t[u] = 0;
        }
    };
    rec_t(0);
    return count;
}

/// Largest t with a K_{t,t}, by trying every top subset (n_top <= ~12).
inline std::size_t naive_omega(const BipartiteGraph& g) {
    const auto rows = g.to_rows();
    const auto k = g.n_top();
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::size_t common = 0;
        for (std::size_t v = 0; v < g.n_bottom(); ++v) {
            bool all = true;
            for (std::size_t u = 0; u < k && all; ++u)
                if ((mask >> u) & 1U) all = rows[u][v] == '1';
            common += all;
        }
        best = std::max(best, std::min<std::size_t>(std::popcount(mask), common));
    }
    return best;
}

inline std::size_t naive_h(const BipartiteGraph& g) {
    return std::max(naive_omega(g), naive_omega(bicliq::bipartite_complement(g)));
}

/// Union-find acyclicity over the bipartite incidence structure.
inline bool naive_is_forest(const BipartiteGraph& g) {
    const auto k = g.n_top();
    std::vector<std::size_t> parent(k + g.n_bottom());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < g.n_bottom(); ++v)
            if (g.has_edge(u, v)) {
                const auto a = find(u), b = find(k + v);
                if (a == b) return false;
                parent[a] = b;
            }
    return true;
}

/// Random rooted tree: vertex i > 0 attaches to a random earlier vertex,
/// then labels are shuffled.
inline bicliq::RootedTree random_tree(std::size_t n, Rng& rng, double path_bias = 0.0) {
    std::vector<std::size_t> par(n, 0);
    for (std::size_t i = 1; i < n; ++i) par[i] = rng.coin(path_bias) ? i - 1 : rng.below(i);
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), std::size_t{0});
    std::shuffle(label.begin(), label.end(), rng.eng);
    bicliq::RootedTree t;
    t.parent.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) t.parent[label[i]] = label[par[i]];
    return t;
}

/// Ancestor relation by walking parent pointers.
inline bool naive_is_ancestor(const bicliq::RootedTree& t, std::size_t a, std::size_t b) {
    while (true) {
        if (a == b) return true;
        if (t.parent[b] == b) return false;
        b = t.parent[b];
    }
}

}  // namespace testkit
