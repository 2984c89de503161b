#include "bicliq/bicliq.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "bicliq/classifier.hpp"
#include "bicliq/constructions.hpp"
#include "bicliq/error.hpp"
#include "bicliq/extractors.hpp"
#include "bicliq/families.hpp"
#include "bicliq/harness.hpp"
#include "bicliq/json_io.hpp"
#include "bicliq/solvers.hpp"
#include "bicliq/tree_split.hpp"

struct bq_graph {
    bicliq::BipartiteGraph g;
};

namespace {

using bicliq::Json;

thread_local std::string last_error;

bq_status status_of(bicliq::ErrorCode code) {
    using bicliq::ErrorCode;
    switch (code) {
        case ErrorCode::RaggedInput: return BQ_RAGGED_INPUT;
        case ErrorCode::BadChar: return BQ_BAD_CHAR;
        case ErrorCode::BadJson: return BQ_BAD_JSON;
        case ErrorCode::PatternTooLarge: return BQ_PATTERN_TOO_LARGE;
        case ErrorCode::TooLarge: return BQ_TOO_LARGE;
        case ErrorCode::NotSquare: return BQ_NOT_SQUARE;
        case ErrorCode::DegreeTooHigh: return BQ_DEGREE_TOO_HIGH;
        case ErrorCode::BadPattern: return BQ_BAD_PATTERN;
        case ErrorCode::BadModulus: return BQ_BAD_MODULUS;
        case ErrorCode::Unsupported: return BQ_UNSUPPORTED;
        case ErrorCode::Timeout: return BQ_TIMEOUT;
        case ErrorCode::IndexOutOfRange: return BQ_INDEX_OUT_OF_RANGE;
        case ErrorCode::InvalidArgument: return BQ_INVALID_ARGUMENT;
    }
    return BQ_INTERNAL;
}

template <class F>
bq_status guarded(F&& f) {
    try {
        last_error.clear();
        f();
        return BQ_OK;
    } catch (const bicliq::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return BQ_BAD_JSON;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BQ_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return BQ_INTERNAL;
    }
}

void need(const void* p, const char* what) {
    if (!p)
        throw bicliq::Error(bicliq::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const Json& j, char** out) {
    need(out, "out");
    *out = dup(j.dump());
}

void emit_graph(bicliq::BipartiteGraph g, bq_graph** out) {
    need(out, "out");
    *out = new bq_graph{std::move(g)};
}

Json parse_json(const char* text) {
    need(text, "json");
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw bicliq::Error(bicliq::ErrorCode::BadJson, e.what());
    }
}

// Accepts a bare object or one nested under `key` (e.g. solve/extract output).
const Json& unwrap(const Json& j, const char* key) {
    return j.is_object() && j.contains(key) ? j.at(key) : j;
}

}  // namespace

extern "C" {

const char* bq_version(void) { return "1.0.0"; }

const char* bq_status_name(bq_status status) {
    switch (status) {
        case BQ_OK: return "Ok";
        case BQ_RAGGED_INPUT: return "RaggedInput";
        case BQ_BAD_CHAR: return "BadChar";
        case BQ_BAD_JSON: return "BadJson";
        case BQ_PATTERN_TOO_LARGE: return "PatternTooLarge";
        case BQ_TOO_LARGE: return "TooLarge";
        case BQ_NOT_SQUARE: return "NotSquare";
        case BQ_DEGREE_TOO_HIGH: return "DegreeTooHigh";
        case BQ_BAD_PATTERN: return "BadPattern";
        case BQ_BAD_MODULUS: return "BadModulus";
        case BQ_UNSUPPORTED: return "Unsupported";
        case BQ_TIMEOUT: return "Timeout";
        case BQ_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
        case BQ_INVALID_ARGUMENT: return "InvalidArgument";
        case BQ_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* bq_last_error(void) { return last_error.c_str(); }

void bq_string_free(char* s) { std::free(s); }

bq_status bq_graph_parse(const char* text, bq_graph** out) {
    return guarded([&] {
        need(text, "text");
        emit_graph(bicliq::parse_graph_any(text), out);
    });
}

bq_status bq_graph_family(const char* spec, bq_graph** out) {
    return guarded([&] {
        need(spec, "spec");
        emit_graph(bicliq::parse_family(spec), out);
    });
}

void bq_graph_free(bq_graph* g) { delete g; }

size_t bq_graph_n_top(const bq_graph* g) { return g ? g->g.n_top() : 0; }
size_t bq_graph_n_bottom(const bq_graph* g) { return g ? g->g.n_bottom() : 0; }

int bq_graph_has_edge(const bq_graph* g, size_t top, size_t bottom) {
    if (!g || top >= g->g.n_top() || bottom >= g->g.n_bottom()) return -1;
    return g->g.has_edge(top, bottom) ? 1 : 0;
}

bq_status bq_graph_to_json(const bq_graph* g, char** out) {
    return guarded([&] {
        need(g, "graph");
        emit(bicliq::to_json(g->g), out);
    });
}

bq_status bq_graph_to_matrix(const bq_graph* g, char** out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "out");
        *out = dup(g->g.to_matrix_text());
    });
}

bq_status bq_graph_complement(const bq_graph* g, bq_graph** out) {
    return guarded([&] {
        need(g, "graph");
        emit_graph(bicliq::bipartite_complement(g->g), out);
    });
}

bq_status bq_graph_transpose(const bq_graph* g, bq_graph** out) {
    return guarded([&] {
        need(g, "graph");
        emit_graph(bicliq::transpose(g->g), out);
    });
}

bq_status bq_find_induced_copy(const bq_graph* host, const bq_graph* pattern, char** out) {
    return guarded([&] {
        need(host, "host");
        need(pattern, "pattern");
        const auto e = bicliq::find_induced_copy(host->g, pattern->g);
        emit(Json{{"found", e.has_value()}, {"embedding", e ? bicliq::to_json(*e) : Json()}}, out);
    });
}

bq_status bq_solve(const bq_graph* g, const char* which, char** out) {
    return guarded([&] {
        need(g, "graph");
        const std::string w = which ? which : "h";
        bicliq::SolveResult r;
        if (w == "h") r = bicliq::tilde_h(g->g);
        else if (w == "omega") r = bicliq::tilde_omega(g->g);
        else if (w == "alpha") r = bicliq::tilde_alpha(g->g);
        else throw bicliq::Error(bicliq::ErrorCode::InvalidArgument, "which must be h, omega or alpha");
        emit(bicliq::to_json(r), out);
    });
}

bq_status bq_forb_min(size_t n, const bq_graph* pattern, char** out) {
    return guarded([&] {
        need(pattern, "pattern");
        const auto r = bicliq::forb_min(n, pattern->g);
        emit(Json{{"value", r.value},
                  {"argmin", bicliq::to_json(r.argmin)},
                  {"graphs_checked", r.graphs_checked}},
             out);
    });
}

bq_status bq_classify(const bq_graph* pattern, char** out) {
    return guarded([&] {
        need(pattern, "pattern");
        emit(bicliq::to_json(bicliq::classify(pattern->g)), out);
    });
}

bq_status bq_enumerate(size_t k, size_t l, char** out) {
    return guarded([&] {
        Json arr = Json::array();
        for (const auto& g : bicliq::enumerate_strongly_acyclic(k, l)) arr.push_back(bicliq::to_json(g));
        emit(arr, out);
    });
}

bq_status bq_extract(const bq_graph* g, const bq_graph* pattern, char** out) {
    return guarded([&] {
        need(g, "graph");
        need(pattern, "pattern");
        emit(bicliq::to_json(bicliq::extract_auto(g->g, pattern->g)), out);
    });
}

bq_status bq_extract_family(const bq_graph* g, const char* family, size_t s1, size_t s2, char** out) {
    return guarded([&] {
        need(g, "graph");
        need(family, "family");
        const auto f = bicliq::parse_bench_family(family);
        emit(bicliq::to_json(bicliq::run_extractor(f, g->g, s1, s2)), out);
    });
}

bq_status bq_ehp_embed(const bq_graph* g, const bq_graph* pattern, char** out) {
    return guarded([&] {
        need(g, "graph");
        need(pattern, "pattern");
        emit(bicliq::to_json(bicliq::ehp_embed(g->g, pattern->g)), out);
    });
}

bq_status bq_tree_split(const size_t* parent, size_t n, char** out) {
    return guarded([&] {
        if (n > 0) need(parent, "parent");
        bicliq::RootedTree tree{std::vector<std::size_t>(parent, parent + n)};
        const auto s = bicliq::tree_split(tree);
        emit(Json{{"is_path", s.is_path},
                  {"handle_path", s.handle_path},
                  {"forest_a", s.forest_a},
                  {"forest_b", s.forest_b},
                  {"guaranteed", s.guaranteed()}},
             out);
    });
}

bq_status bq_construct(const char* name, size_t n, bq_graph** out) {
    return guarded([&] {
        need(name, "name");
        const std::string s = name;
        if (s == "tight-p4") emit_graph(bicliq::tight_P4(n), out);
        else if (s == "tight-2k2") emit_graph(bicliq::tight_2K2(n), out);
        else if (s == "tight-h4") emit_graph(bicliq::tight_H4(n), out);
        else throw bicliq::Error(bicliq::ErrorCode::InvalidArgument, "unknown construction '" + s + "'");
    });
}

bq_status bq_lll(size_t n, size_t cycle_len, size_t t, double p, uint64_t seed, size_t budget,
                 char** out) {
    return guarded([&] {
        const bicliq::LLLParams params{n, cycle_len, t, p, budget, seed};
        const auto c = bicliq::lll_search(params);
        Json j{{"found", c.has_value()}, {"coloring", Json()}, {"report", Json()}};
        if (c) {
            j["coloring"] = bicliq::coloring_to_text(*c);
            j["report"] = bicliq::to_json(bicliq::verify_coloring(*c, params));
        }
        emit(j, out);
    });
}

bq_status bq_verify_coloring(const char* coloring_text, size_t cycle_len, size_t t, char** out) {
    return guarded([&] {
        need(coloring_text, "coloring");
        const auto c = bicliq::coloring_from_text(coloring_text);
        bicliq::LLLParams params;
        params.n = c.n();
        params.cycle_len = cycle_len;
        params.t = t;
        emit(bicliq::to_json(bicliq::verify_coloring(c, params)), out);
    });
}

bq_status bq_random_pattern_free(size_t n, const bq_graph* pattern, double density, uint64_t seed,
                                 bq_gen_method method, size_t budget, bq_graph** out) {
    return guarded([&] {
        need(pattern, "pattern");
        bicliq::GenSpec spec;
        spec.n = n;
        spec.pattern = pattern->g;
        spec.density = density;
        spec.seed = seed;
        spec.method = method == BQ_GEN_REJECTION ? bicliq::GenMethod::Rejection : bicliq::GenMethod::Repair;
        spec.budget = budget;
        emit_graph(bicliq::random_pattern_free(spec), out);
    });
}

bq_status bq_bench(const char* family, size_t s1, size_t s2, size_t n_lo, size_t n_hi, size_t trials,
                   uint64_t seed, char** out) {
    return guarded([&] {
        need(family, "family");
        bicliq::BoundReportSpec spec;
        spec.family = bicliq::parse_bench_family(family);
        spec.s1 = s1;
        spec.s2 = s2;
        spec.n_lo = n_lo;
        spec.n_hi = n_hi;
        spec.trials = trials;
        spec.seed = seed;
        Json arr = Json::array();
        for (const auto& r : bicliq::bound_report(spec)) arr.push_back(bicliq::to_json(r));
        emit(arr, out);
    });
}

bq_status bq_verify_certificate(const bq_graph* g, const char* certificate_json, int* valid) {
    return guarded([&] {
        need(g, "graph");
        need(valid, "valid");
        const auto j = parse_json(certificate_json);
        const auto c = bicliq::certificate_from_json(unwrap(j, "certificate"));
        *valid = bicliq::verify_certificate(g->g, c) ? 1 : 0;
    });
}

bq_status bq_verify_embedding(const bq_graph* g, const bq_graph* pattern, const char* embedding_json,
                              int* valid) {
    return guarded([&] {
        need(g, "graph");
        need(pattern, "pattern");
        need(valid, "valid");
        const auto j = parse_json(embedding_json);
        const auto e = bicliq::embedding_from_json(unwrap(j, "embedding"));
        *valid = bicliq::verify_embedding(g->g, pattern->g, e) ? 1 : 0;
    });
}

}  // extern "C"
