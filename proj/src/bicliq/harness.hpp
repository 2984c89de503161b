#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bicliq/extractors.hpp"
#include "bicliq/graph.hpp"
#include "bicliq/solvers.hpp"

namespace bicliq {

enum class GenMethod { Rejection, Repair };

struct GenSpec {
    std::size_t n = 0;
    BipartiteGraph pattern;
    double density = 0.5;
    std::uint64_t seed = 0;
    GenMethod method = GenMethod::Repair;
    /// Resamples (rejection) or flips (repair) before giving up.
    std::size_t budget = 100000;
    /// Repair only: chance of a uniformly random flip instead of the lookahead.
    double noise = 0.5;
};

/// Random n x n graph with no induced copy of spec.pattern. Rejection
/// resamples G(n, density) until free; repair starts from one sample and, while a
/// copy exists, flips the pair of that copy whose flip most reduces the number
/// of copies through it (capped lookahead; ties broken by the seed), or with
/// probability spec.noise a random pair of the copy.
/// Deterministic in the spec. Throws Timeout, InvalidArgument.
BipartiteGraph random_pattern_free(const GenSpec& spec);

/// Checks every pair of the certificate against raw adjacency.
/// Throws IndexOutOfRange.
bool verify_certificate(const BipartiteGraph& g, const Certificate& cert);

/// Checks sizes, injectivity and every pair of the pattern.
/// Throws IndexOutOfRange.
bool verify_embedding(const BipartiteGraph& g, const BipartiteGraph& h, const Embedding& emb);

/// Checks whichever branch is populated.
bool verify_dichotomy(const BipartiteGraph& g, const Dichotomy& d);

enum class BenchFamily { Hs, Ms, MsStar, P4, TwoK2, H4, SingleRow };

std::string_view to_string(BenchFamily f) noexcept;
/// Accepts Hs, Ms, MsStar, P4, 2K2, H4, SingleRow (case-insensitive).
BenchFamily parse_bench_family(std::string_view name);

/// Pattern forbidden by a bench family (s1, s2 used where relevant).
BipartiteGraph bench_pattern(BenchFamily f, std::size_t s1, std::size_t s2);
/// Runs the family's extractor.
Dichotomy run_extractor(BenchFamily f, const BipartiteGraph& g, std::size_t s1, std::size_t s2);

struct BoundReportSpec {
    BenchFamily family = BenchFamily::TwoK2;
    std::size_t s1 = 1;
    std::size_t s2 = 1;
    std::size_t n_lo = 4;
    std::size_t n_hi = 4;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    std::size_t threads = 0;  // 0 = hardware concurrency
    /// Repair noise for generation; 1 = plain random flips, the fastest.
    double noise = 1.0;
};

struct BoundRow {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t min = 0;
    double mean = 0;
    std::size_t floor = 0;       // guaranteed size for pattern-free inputs
    std::size_t violations = 0;  // invalid outputs, copies, or certificates below floor
    bool sub_threshold = false;
};

/// Per n: generates `trials` pattern-free instances (repair method, density
/// drawn per trial), runs the extractor and verifies every output.
std::vector<BoundRow> bound_report(const BoundReportSpec& spec);

/// Seed for trial `index` of size `n`; used by bound_report and tests.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t n, std::size_t index);

}  // namespace bicliq
