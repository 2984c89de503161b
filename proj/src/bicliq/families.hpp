#pragma once

#include <cstddef>
#include <string_view>

#include "bicliq/graph.hpp"

namespace bicliq {

// Two-hub families. Tops 0 and 1 are the hubs; bottoms are laid out as
// [s1 leaves of hub 0][s2 leaves of hub 1][common leaf (M, M*)][isolated (M*)].
BipartiteGraph make_h_family(std::size_t s1, std::size_t s2);
BipartiteGraph make_m_family(std::size_t s1, std::size_t s2);
BipartiteGraph make_mstar_family(std::size_t s1, std::size_t s2);

/// One top vertex adjacent to bottoms 0..s-1 and not to s..s+t-1.
BipartiteGraph make_single_row(std::size_t s, std::size_t t);

// Small named patterns.
BipartiteGraph pattern_2k2();      // two disjoint edges
BipartiteGraph pattern_p4();       // path on four vertices
BipartiteGraph pattern_h4();       // two edges sharing a top vertex
BipartiteGraph pattern_p5prime();  // P5 with an isolated top vertex
BipartiteGraph pattern_p6();
BipartiteGraph pattern_h34();      // the (3,4) tree with top degrees 1,3,2
BipartiteGraph pattern_p7();

/// Parses the `family:` shorthand body, e.g. "H,2,1", "M,1,1", "Mstar,2,2",
/// "singlerow,2,3" or a name such as "P4", "2K2", "H4", "P5prime", "P6",
/// "H34", "P7". Throws BadPattern.
BipartiteGraph parse_family(std::string_view spec);

}  // namespace bicliq
