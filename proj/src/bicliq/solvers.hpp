#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "bicliq/graph.hpp"

namespace bicliq {

enum class CertificateKind { Biclique, CoBiclique };

/// A pair (A ⊆ U, B ⊆ V) that is complete (Biclique) or empty (CoBiclique).
/// Index lists are kept sorted and duplicate-free.
struct Certificate {
    CertificateKind kind = CertificateKind::Biclique;
    std::vector<std::size_t> top_set;
    std::vector<std::size_t> bottom_set;

    std::size_t size() const noexcept { return std::min(top_set.size(), bottom_set.size()); }

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

CertificateKind flipped(CertificateKind kind) noexcept;

/// Trims both sides to size() by keeping the smallest indices.
Certificate balanced(Certificate cert);

struct SolveResult {
    std::size_t t = 0;
    Certificate cert;
};

/// Largest t with a K_{t,t}; the certificate has the lexicographically
/// smallest top set among optimal ones and the t smallest common neighbours.
SolveResult tilde_omega(const BipartiteGraph& g);
/// Largest balanced co-biclique (tilde_omega of the complement).
SolveResult tilde_alpha(const BipartiteGraph& g);
/// max(tilde_omega, tilde_alpha); ties report the biclique.
SolveResult tilde_h(const BipartiteGraph& g);

struct ForbMinResult {
    std::size_t value = 0;
    BipartiteGraph argmin;
    std::size_t graphs_checked = 0;  // H-free graphs evaluated
};

/// Exact min of h̃ over all n×n graphs with no induced copy of H; n ≤ 4.
/// With symmetry pruning only graphs with non-decreasing rows are visited,
/// which leaves the minimum unchanged (row order preserves both h̃ and
/// H-freeness). The minimiser is the first one in increasing bitmask order.
ForbMinResult forb_min(std::size_t n, const BipartiteGraph& pattern, bool symmetry_pruning = true);

}  // namespace bicliq
