#pragma once

#include <json.hpp>

#include "bicliq/classifier.hpp"
#include "bicliq/constructions.hpp"
#include "bicliq/extractors.hpp"
#include "bicliq/harness.hpp"
#include "bicliq/solvers.hpp"

namespace bicliq {

using Json = nlohmann::ordered_json;

/// {"n_top","n_bottom","rows":["0101",...]}
Json to_json(const BipartiteGraph& g);
/// Throws BadJson, RaggedInput, BadChar.
BipartiteGraph graph_from_json(const Json& j);

/// {"kind":"biclique"|"cobiclique","top","bottom","size"}
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// {"top_map","bottom_map"}
Json to_json(const Embedding& e);
Embedding embedding_from_json(const Json& j);

Json to_json(const SolveResult& r);
Json to_json(const Dichotomy& d);
Json to_json(const PatternClass& c);
Json to_json(const BoundRow& r);
Json to_json(const ColoringReport& r);

/// Reads a graph from either the matrix text format or JSON (first
/// non-blank character '{').
BipartiteGraph parse_graph_any(std::string_view text);

}  // namespace bicliq
