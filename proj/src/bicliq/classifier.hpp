#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "bicliq/graph.hpp"

namespace bicliq {

enum class PatternTag { SingleRow, Hfam, Mfam, MstarFam, Exceptional, NotStronglyAcyclic };
enum class ExceptionalGraph { P5prime, P6, H34, P7 };

std::string_view to_string(PatternTag tag) noexcept;
std::string_view to_string(ExceptionalGraph which) noexcept;

/// Where a pattern sits in the characterisation of strongly acyclic graphs.
///
/// Parameters by tag:
///  - SingleRow: `s` neighbours and `t` non-neighbours of the lone vertex;
///  - Hfam / Mfam / MstarFam: `s1 >= s2` private leaves of the two hubs;
///  - Exceptional: `which`;
///  - NotStronglyAcyclic: `witness`, a cycle of length 4, 6 or 8 (for parts
///    up to 4) found in H, or in H' when `complemented` is set.
///
/// `complemented` means the tag describes H' rather than H; `transposed`
/// means it describes H (or H') after swapping the two parts. When both are
/// set the complement is applied to the transposed graph.
struct PatternClass {
    PatternTag tag = PatternTag::NotStronglyAcyclic;
    std::size_t s1 = 0;
    std::size_t s2 = 0;
    ExceptionalGraph which = ExceptionalGraph::P5prime;
    std::optional<CycleWitness> witness;
    bool complemented = false;
    bool transposed = false;

    std::size_t s() const noexcept { return s1; }
    std::size_t t() const noexcept { return s2; }
};

bool is_strongly_acyclic(const BipartiteGraph& h);

/// Total classification. Throws BadPattern if a part is empty.
PatternClass classify(const BipartiteGraph& h);

/// The reference graph for a non-cycle tag (family member, single row or
/// exceptional graph), i.e. the graph that H becomes after applying the
/// transposed/complemented flags, up to isomorphism.
BipartiteGraph reference_pattern(const PatternClass& cls);

/// H with the class flags applied (transpose first, then complement).
BipartiteGraph oriented(const BipartiteGraph& h, const PatternClass& cls);

/// All strongly acyclic graphs with parts (k, l), one representative per
/// class of side-respecting isomorphism and bipartite complement; when
/// k == l, swapping the parts is also treated as a symmetry. k, l <= 5.
std::vector<BipartiteGraph> enumerate_strongly_acyclic(std::size_t k, std::size_t l);

/// Canonical code under the symmetries used by enumerate_strongly_acyclic.
/// Parts must be at most 5 each.
std::uint64_t symmetry_class_code(const BipartiteGraph& g, bool allow_transpose);

}  // namespace bicliq
