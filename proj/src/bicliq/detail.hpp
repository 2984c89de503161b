#pragma once

// Helpers shared by the extractor translation units. Not installed.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "bicliq/error.hpp"
#include "bicliq/graph.hpp"
#include "bicliq/solvers.hpp"

namespace bicliq::detail {

inline std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

inline void require_square(const BipartiteGraph& g) {
    if (!g.is_square())
        throw Error(ErrorCode::NotSquare, "extractors need equal part sizes, got " +
                                              std::to_string(g.n_top()) + "x" +
                                              std::to_string(g.n_bottom()));
    if (g.n_top() == 0) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
}

struct PrefixPick {
    std::size_t length = 0;
    VertexSet rest;
    std::size_t value = 0;  // min(length, |rest|)
};

// Walks prefixes of a sequence; element i removes excluded[i] from the
// universe. Returns the first prefix maximising min(length, |remaining|).
inline PrefixPick best_prefix(std::span<const VertexSet> excluded, const VertexSet& universe) {
    PrefixPick best;
    best.rest = universe;
    VertexSet rest = universe;
    for (std::size_t i = 0; i < excluded.size(); ++i) {
        rest -= excluded[i];
        const auto value = std::min(i + 1, rest.count());
        if (value > best.value) {
            best.value = value;
            best.length = i + 1;
            best.rest = rest;
        }
    }
    return best;
}

// Co-biclique from a prefix of `tops` against `bottoms`.
inline Certificate cobiclique_prefix(const BipartiteGraph& g, std::span<const std::size_t> tops,
                                     const VertexSet& bottoms) {
    std::vector<VertexSet> rows;
    rows.reserve(tops.size());
    for (auto u : tops) rows.push_back(g.row(u));
    const auto pick = best_prefix(rows, bottoms);
    Certificate c;
    c.kind = CertificateKind::CoBiclique;
    c.top_set.assign(tops.begin(), tops.begin() + static_cast<std::ptrdiff_t>(pick.length));
    std::sort(c.top_set.begin(), c.top_set.end());
    c.bottom_set = to_indices(pick.rest);
    return c;
}

// Tops sorted by ascending degree restricted to `within`, ties by index.
inline std::vector<std::size_t> by_degree_within(const BipartiteGraph& g,
                                                 std::vector<std::size_t> tops,
                                                 const VertexSet& within) {
    std::vector<std::size_t> key(g.n_top(), 0);
    for (auto u : tops) key[u] = (g.row(u) & within).count();
    std::stable_sort(tops.begin(), tops.end(), [&](auto a, auto b) { return key[a] < key[b]; });
    return tops;
}

// 1x1 certificate on the pair (0,0); valid for every non-empty graph.
inline Certificate trivial_certificate(const BipartiteGraph& g) {
    Certificate c;
    c.kind = g.has_edge(0, 0) ? CertificateKind::Biclique : CertificateKind::CoBiclique;
    c.top_set = {0};
    c.bottom_set = {0};
    return c;
}

inline void keep_better(std::optional<Certificate>& best, Certificate candidate) {
    if (!best || candidate.size() > best->size()) best = std::move(candidate);
}

inline std::vector<std::size_t> iota_vec(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

inline VertexSet full_set(std::size_t n) {
    VertexSet s(n);
    s.set();
    return s;
}

// Maps a certificate of an induced subgraph back to host indices.
inline Certificate lift(const Certificate& c, std::span<const std::size_t> tops,
                        std::span<const std::size_t> bottoms) {
    Certificate out;
    out.kind = c.kind;
    for (auto u : c.top_set) out.top_set.push_back(tops[u]);
    for (auto v : c.bottom_set) out.bottom_set.push_back(bottoms[v]);
    std::sort(out.top_set.begin(), out.top_set.end());
    std::sort(out.bottom_set.begin(), out.bottom_set.end());
    return out;
}

inline Embedding lift(const Embedding& e, std::span<const std::size_t> tops,
                      std::span<const std::size_t> bottoms) {
    Embedding out;
    for (auto u : e.top_map) out.top_map.push_back(tops[u]);
    for (auto v : e.bottom_map) out.bottom_map.push_back(bottoms[v]);
    return out;
}

}  // namespace bicliq::detail
