#include "bicliq/json_io.hpp"

#include "bicliq/error.hpp"

namespace bicliq {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadJson, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::vector<std::size_t> index_list(const Json& j, const char* key) {
    const auto& a = field(j, key);
    if (!a.is_array()) bad(std::string("'") + key + "' must be an array");
    std::vector<std::size_t> out;
    for (const auto& x : a) {
        if (!x.is_number_unsigned()) bad(std::string("'") + key + "' must hold non-negative integers");
        out.push_back(x.get<std::size_t>());
    }
    return out;
}

std::size_t count_field(const Json& j, const char* key) {
    const auto& x = field(j, key);
    if (!x.is_number_unsigned()) bad(std::string("'") + key + "' must be a non-negative integer");
    return x.get<std::size_t>();
}

}  // namespace

Json to_json(const BipartiteGraph& g) {
    return Json{{"n_top", g.n_top()}, {"n_bottom", g.n_bottom()}, {"rows", g.to_rows()}};
}

BipartiteGraph graph_from_json(const Json& j) {
    const auto n_top = count_field(j, "n_top");
    const auto n_bottom = count_field(j, "n_bottom");
    const auto& rows = field(j, "rows");
    if (!rows.is_array()) bad("'rows' must be an array");
    std::vector<std::string> text;
    for (const auto& r : rows) {
        if (!r.is_string()) bad("'rows' must hold strings");
        text.push_back(r.get<std::string>());
    }
    if (text.size() != n_top) throw Error(ErrorCode::RaggedInput, "row count differs from n_top");
    for (const auto& r : text)
        if (r.size() != n_bottom) throw Error(ErrorCode::RaggedInput, "row length differs from n_bottom");
    if (n_top == 0) return BipartiteGraph(0, n_bottom);
    return from_matrix(text);
}

Json to_json(const Certificate& c) {
    return Json{{"kind", c.kind == CertificateKind::Biclique ? "biclique" : "cobiclique"},
                {"top", c.top_set},
                {"bottom", c.bottom_set},
                {"size", c.size()}};
}

Certificate certificate_from_json(const Json& j) {
    const auto& kind = field(j, "kind");
    Certificate c;
    if (kind == "biclique") c.kind = CertificateKind::Biclique;
    else if (kind == "cobiclique") c.kind = CertificateKind::CoBiclique;
    else bad("'kind' must be \"biclique\" or \"cobiclique\"");
    c.top_set = index_list(j, "top");
    c.bottom_set = index_list(j, "bottom");
    return c;
}

Json to_json(const Embedding& e) {
    return Json{{"top_map", e.top_map}, {"bottom_map", e.bottom_map}};
}

Embedding embedding_from_json(const Json& j) {
    return Embedding{index_list(j, "top_map"), index_list(j, "bottom_map")};
}

Json to_json(const SolveResult& r) { return Json{{"t", r.t}, {"certificate", to_json(r.cert)}}; }

Json to_json(const Dichotomy& d) {
    Json j;
    if (d.copy) {
        j["branch"] = "copy";
        j["embedding"] = to_json(*d.copy);
    } else {
        j["branch"] = "certificate";
        j["certificate"] = d.cert ? to_json(*d.cert) : Json();
    }
    j["guaranteed"] = d.guaranteed;
    j["sub_threshold"] = d.sub_threshold;
    j["bad_pattern"] = d.bad_pattern;
    j["route"] = d.route;
    return j;
}

Json to_json(const PatternClass& c) {
    Json j;
    j["tag"] = std::string(to_string(c.tag));
    switch (c.tag) {
        case PatternTag::SingleRow:
            j["s"] = c.s();
            j["t"] = c.t();
            break;
        case PatternTag::Hfam:
        case PatternTag::Mfam:
        case PatternTag::MstarFam:
            j["s1"] = c.s1;
            j["s2"] = c.s2;
            break;
        case PatternTag::Exceptional:
            j["which"] = std::string(to_string(c.which));
            break;
        case PatternTag::NotStronglyAcyclic:
            j["witness"] = c.witness ? Json(c.witness->vertices) : Json();
            break;
    }
    j["complemented"] = c.complemented;
    j["transposed"] = c.transposed;
    return j;
}

Json to_json(const BoundRow& r) {
    return Json{{"n", r.n},         {"trials", r.trials},       {"min", r.min},
                {"mean", r.mean},   {"floor", r.floor},         {"violations", r.violations},
                {"sub_threshold", r.sub_threshold}};
}

Json to_json(const ColoringReport& r) {
    return Json{{"red_violations", r.red_violations},
                {"blue_violations", r.blue_violations},
                {"blue_omega", r.blue_omega}};
}

BipartiteGraph parse_graph_any(std::string_view text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            bad(e.what());
        }
        return graph_from_json(j);
    }
    return parse_matrix_text(text);
}

}  // namespace bicliq
