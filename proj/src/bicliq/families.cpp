#include "bicliq/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "bicliq/error.hpp"

namespace bicliq {

namespace {

BipartiteGraph two_hub(std::size_t s1, std::size_t s2, bool common, bool isolated) {
    const std::size_t l = s1 + s2 + (common ? 1 : 0) + (isolated ? 1 : 0);
    std::vector<VertexSet> rows(2, VertexSet(l));
    for (std::size_t j = 0; j < s1; ++j) rows[0].set(j);
    for (std::size_t j = 0; j < s2; ++j) rows[1].set(s1 + j);
    if (common) {
        rows[0].set(s1 + s2);
        rows[1].set(s1 + s2);
    }
    return BipartiteGraph(l, std::move(rows));
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

BipartiteGraph make_h_family(std::size_t s1, std::size_t s2) { return two_hub(s1, s2, false, false); }
BipartiteGraph make_m_family(std::size_t s1, std::size_t s2) { return two_hub(s1, s2, true, false); }
BipartiteGraph make_mstar_family(std::size_t s1, std::size_t s2) { return two_hub(s1, s2, true, true); }

BipartiteGraph make_single_row(std::size_t s, std::size_t t) {
    std::vector<VertexSet> rows(1, VertexSet(s + t));
    for (std::size_t j = 0; j < s; ++j) rows[0].set(j);
    return BipartiteGraph(s + t, std::move(rows));
}

BipartiteGraph pattern_2k2() { return from_matrix({"10", "01"}); }
BipartiteGraph pattern_p4() { return from_matrix({"11", "01"}); }
BipartiteGraph pattern_h4() { return from_matrix({"11", "00"}); }
BipartiteGraph pattern_p5prime() { return from_matrix({"110", "011", "000"}); }
BipartiteGraph pattern_p6() { return from_matrix({"100", "110", "011"}); }
BipartiteGraph pattern_h34() { return from_matrix({"1000", "1110", "0011"}); }
BipartiteGraph pattern_p7() { return from_matrix({"1100", "0110", "0011"}); }

BipartiteGraph parse_family(std::string_view spec) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        auto comma = spec.find(',', pos);
        parts.emplace_back(spec.substr(pos, comma == std::string_view::npos ? spec.npos : comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    const auto name = lower(parts[0]);
    if (parts.size() == 1) {
        if (name == "2k2") return pattern_2k2();
        if (name == "p4") return pattern_p4();
        if (name == "h4") return pattern_h4();
        if (name == "p5prime" || name == "p5'") return pattern_p5prime();
        if (name == "p6") return pattern_p6();
        if (name == "h34") return pattern_h34();
        if (name == "p7") return pattern_p7();
        throw Error(ErrorCode::BadPattern, "unknown pattern name '" + parts[0] + "'");
    }
    if (parts.size() != 3)
        throw Error(ErrorCode::BadPattern, "family shorthand needs two parameters: '" +
                                               std::string(spec) + "'");
    std::size_t a = 0, b = 0;
    for (int i = 1; i <= 2; ++i) {
        auto& out = i == 1 ? a : b;
        const auto& p = parts[static_cast<std::size_t>(i)];
        auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), out);
        if (ec != std::errc{} || ptr != p.data() + p.size() || out > 64)
            throw Error(ErrorCode::BadPattern, "bad family parameter '" + p + "'");
    }
    if (name == "singlerow") return make_single_row(a, b);
    if (a < b) std::swap(a, b);
    if (name == "h") return make_h_family(a, b);
    if (name == "m") return make_m_family(a, b);
    if (name == "mstar" || name == "m*") return make_mstar_family(a, b);
    throw Error(ErrorCode::BadPattern, "unknown family '" + parts[0] + "'");
}

}  // namespace bicliq
