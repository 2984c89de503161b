#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace bicliq {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

std::vector<std::size_t> to_indices(const VertexSet& set);
VertexSet from_indices(std::size_t universe, std::span<const std::size_t> indices);

/// Bipartite graph with a top part U = {0..n_top-1} and a bottom part
/// V = {0..n_bottom-1}. Adjacency is stored as one bottom-indexed row per top
/// vertex. Values are immutable; every transformation returns a new graph.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    /// Empty graph with the given part sizes.
    BipartiteGraph(std::size_t n_top, std::size_t n_bottom);
    /// Takes ownership of rows; every row must have n_bottom bits.
    BipartiteGraph(std::size_t n_bottom, std::vector<VertexSet> rows);

    std::size_t n_top() const noexcept { return rows_.size(); }
    std::size_t n_bottom() const noexcept { return n_bottom_; }
    bool is_square() const noexcept { return n_top() == n_bottom_; }

    bool has_edge(std::size_t top, std::size_t bottom) const { return rows_[top].test(bottom); }
    const VertexSet& row(std::size_t top) const { return rows_[top]; }
    std::span<const VertexSet> rows() const noexcept { return rows_; }

    /// Top neighbourhood of a bottom vertex.
    const VertexSet& column(std::size_t bottom) const { return columns_[bottom]; }

    std::size_t degree(std::size_t top) const { return rows_[top].count(); }
    std::size_t bottom_degree(std::size_t bottom) const { return column(bottom).count(); }
    std::size_t edge_count() const noexcept;

    /// Rows rendered as '0'/'1' strings.
    std::vector<std::string> to_rows() const;
    std::string to_matrix_text() const;

    /// Induced subgraph on the given top and bottom index lists (in order).
    BipartiteGraph induced(std::span<const std::size_t> tops,
                           std::span<const std::size_t> bottoms) const;

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.n_bottom_ == b.n_bottom_ && a.rows_ == b.rows_;
    }

private:
    std::size_t n_bottom_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<VertexSet> columns_;  // transpose, built on construction
};

/// Builds a graph from '0'/'1' rows; throws RaggedInput or BadChar.
BipartiteGraph from_matrix(std::span<const std::string> rows);
BipartiteGraph from_matrix(std::initializer_list<std::string_view> rows);
/// Parses the newline-separated text format; blank lines and lines starting
/// with '#' are ignored.
BipartiteGraph parse_matrix_text(std::string_view text);

BipartiteGraph bipartite_complement(const BipartiteGraph& g);
/// Swaps the roles of the two parts.
BipartiteGraph transpose(const BipartiteGraph& g);

/// Side-respecting map of pattern vertices into host vertices.
struct Embedding {
    std::vector<std::size_t> top_map;
    std::vector<std::size_t> bottom_map;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// True iff the maps are injective, in range and preserve edges and non-edges.
bool is_induced_embedding(const BipartiteGraph& host, const BipartiteGraph& pattern,
                          const Embedding& emb);

/// Backtracking search for a side-respecting induced copy of `pattern` in
/// `host`. Throws PatternTooLarge if a pattern part exceeds the host part.
std::optional<Embedding> find_induced_copy(const BipartiteGraph& host,
                                           const BipartiteGraph& pattern);

/// Enumerates induced copies, optionally pinning one pattern top/bottom pair
/// onto a host top/bottom pair. The visitor returns false to stop. Returns
/// the number of copies visited.
struct CopyAnchor {
    std::size_t pattern_top;
    std::size_t host_top;
    std::size_t pattern_bottom;
    std::size_t host_bottom;
};
std::size_t for_each_induced_copy(const BipartiteGraph& host, const BipartiteGraph& pattern,
                                  const std::function<bool(const Embedding&)>& visit,
                                  std::optional<CopyAnchor> anchor = std::nullopt);

/// True iff a and b have equal part sizes and are side-respecting isomorphic.
bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b);

/// Alternating cycle u1,v1,u2,v2,...; even positions are top indices and odd
/// positions bottom indices.
struct CycleWitness {
    std::vector<std::size_t> vertices;
    std::size_t length() const noexcept { return vertices.size(); }
};

bool is_cycle(const BipartiteGraph& g, const CycleWitness& c);

/// A shortest cycle, or nullopt if g is a forest.
std::optional<CycleWitness> shortest_cycle(const BipartiteGraph& g);

}  // namespace bicliq
