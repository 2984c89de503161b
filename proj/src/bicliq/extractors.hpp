#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "bicliq/classifier.hpp"
#include "bicliq/graph.hpp"
#include "bicliq/solvers.hpp"

namespace bicliq {

/// Either an induced copy of `pattern` in the host or a certificate.
///
/// `guaranteed` is the size the extractor promises when the host is
/// pattern-free; `sub_threshold` marks inputs below the range where that
/// promise matches the linear constant (the certificate is still valid).
struct Dichotomy {
    BipartiteGraph pattern;
    std::optional<Embedding> copy;
    std::optional<Certificate> cert;
    std::size_t guaranteed = 0;
    bool sub_threshold = false;
    bool bad_pattern = false;
    std::string route;  // which branch produced the result

    bool is_copy() const noexcept { return copy.has_value(); }
    bool below_guarantee() const noexcept { return cert && cert->size() < guaranteed; }
};

/// Co-biclique for a graph whose top degrees are all below s. Takes the
/// ascending-degree prefix of U maximising min(|A|, |V \ N(A)|); at least
/// floor(n/s). Throws DegreeTooHigh, NotSquare.
Certificate extract_maxdeg_cobiclique(const BipartiteGraph& g, std::size_t s);

/// Forbidden pattern: one top vertex with s neighbours and t non-neighbours.
Dichotomy extract_single_row(const BipartiteGraph& g, std::size_t s, std::size_t t);

/// Forbidden H_{s1,s2} (s1 >= s2 >= 0, s1 >= 1).
Dichotomy extract_Hs(const BipartiteGraph& g, std::size_t s1, std::size_t s2);

/// Forbidden M_{s1,s2} / M*_{s1,s2} (s1 >= s2 >= 0, s1 >= 1).
Dichotomy extract_Ms(const BipartiteGraph& g, std::size_t s1, std::size_t s2);
Dichotomy extract_Ms_star(const BipartiteGraph& g, std::size_t s1, std::size_t s2);

Dichotomy extract_P4free(const BipartiteGraph& g);
Dichotomy extract_2K2free(const BipartiteGraph& g);
Dichotomy extract_H4free(const BipartiteGraph& g);

/// Embedding dichotomy for an arbitrary pattern with parts k <= l, k >= 2.
/// Throws BadPattern, NotSquare.
Dichotomy ehp_embed(const BipartiteGraph& g, const BipartiteGraph& h);

/// ehp parameter t = floor((n/l)^(1/k)), computed exactly.
std::size_t ehp_t(std::size_t n, std::size_t k, std::size_t l);

/// Classifies h and runs the matching extractor on g (after the same
/// transpose/complement). Throws Unsupported for exceptional patterns and
/// patterns that are not strongly acyclic.
Dichotomy extract_auto(const BipartiteGraph& g, const BipartiteGraph& h);

// Guarantee arithmetic for the M_s / M*_s pipeline.

/// Integer lower bound on the certificate extract_Ms returns for an
/// M_s-free n x n input, following every floored step of the pipeline.
std::size_t ms_guarantee(std::size_t n, std::size_t s);
/// Same for extract_Ms_star (vertex deletion, then extract_Ms).
std::size_t ms_star_guarantee(std::size_t n, std::size_t s);
/// Linear floors ceil(n/(54 s)) and ceil(n/(108 s)).
std::size_t ms_linear_floor(std::size_t n, std::size_t s, bool star);
/// Smallest n0 such that the guarantee meets the linear floor for every
/// n in [n0, ms_threshold_horizon]; nullopt if none. Shipped table for
/// s <= 8, computed on the fly otherwise.
std::optional<std::size_t> ms_threshold(std::size_t s, bool star);
/// Recomputes the threshold by scanning n up to `horizon`.
std::optional<std::size_t> compute_ms_threshold(std::size_t s, bool star, std::size_t horizon);
inline constexpr std::size_t ms_threshold_horizon = 20000;

}  // namespace bicliq
