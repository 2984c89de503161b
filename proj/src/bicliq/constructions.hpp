#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "bicliq/graph.hpp"

namespace bicliq {

/// 3 disjoint K_{n/3,n/3}. Throws BadModulus unless 3 | n.
BipartiteGraph tight_P4(std::size_t n);
/// K_{⌈n/2⌉,n} plus ⌊n/2⌋ isolated tops.
BipartiteGraph tight_2K2(std::size_t n);
/// U = U1 ∪ U2 with |U1| = 2n/5; V = V1 ∪ V2 ∪ V3 with sizes 2n/5, 2n/5, n/5.
/// Every top sees V1, U1 is matched into V2 and U2 into V2 ∪ V3.
/// Throws BadModulus unless 5 | n.
BipartiteGraph tight_H4(std::size_t n);

/// Red/blue coloring of K_{n,n}; blue is the complement of red.
struct TwoColoring {
    BipartiteGraph red;

    std::size_t n() const noexcept { return red.n_top(); }
    BipartiteGraph blue() const { return bipartite_complement(red); }
};

struct LLLParams {
    std::size_t n = 0;
    std::size_t cycle_len = 4;  // 4, 6 or 8
    std::size_t t = 1;          // forbidden blue K_{t,t}
    double p = 0.0;             // red probability
    std::size_t max_resamples = 100000;
    std::uint64_t seed = 0;
};

/// Throws InvalidArgument on cycle_len ∉ {4,6,8}, t = 0 or p ∉ [0,1].
void validate(const LLLParams& params);

/// Lexicographically smallest cycle of the given length in g (as vertex
/// sequence u1,v1,u2,...; u1 is the smallest top on the cycle and v1 < v_last).
std::optional<CycleWitness> smallest_cycle_of_length(const BipartiteGraph& g, std::size_t len);
/// Number of distinct cycles of the given length, counted up to `cap`.
std::size_t count_cycles_of_length(const BipartiteGraph& g, std::size_t len, std::size_t cap);

/// Samples every pair red with probability p, then resamples the smallest red
/// cycle until none is left. A blue K_{t,t} restarts from a fresh derived
/// seed. Every resample and restart consumes one unit of max_resamples;
/// nullopt when the budget runs out. Deterministic in the params.
std::optional<TwoColoring> lll_search(const LLLParams& params);

struct ColoringReport {
    std::size_t red_violations = 0;   // red cycles of length cycle_len (capped)
    std::size_t blue_violations = 0;  // 1 if the blue graph contains K_{t,t}
    std::size_t blue_omega = 0;       // exact largest blue K_{s,s}
    bool ok() const noexcept { return red_violations == 0 && blue_violations == 0; }
};

inline constexpr std::size_t kCycleCountCap = 1000000;

ColoringReport verify_coloring(const TwoColoring& c, const LLLParams& params);

/// Coloring text: red matrix, a blank line, blue matrix.
std::string coloring_to_text(const TwoColoring& c);
/// Reads the red block (up to the first blank line); a following blue block
/// must be its complement. Throws InvalidArgument, RaggedInput, BadChar.
TwoColoring coloring_from_text(std::string_view text);

}  // namespace bicliq
