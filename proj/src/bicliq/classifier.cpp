#include "bicliq/classifier.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bicliq/error.hpp"
#include "bicliq/families.hpp"

namespace bicliq {

std::string_view to_string(PatternTag tag) noexcept {
    switch (tag) {
        case PatternTag::SingleRow: return "SingleRow";
        case PatternTag::Hfam: return "Hfam";
        case PatternTag::Mfam: return "Mfam";
        case PatternTag::MstarFam: return "MstarFam";
        case PatternTag::Exceptional: return "Exceptional";
        case PatternTag::NotStronglyAcyclic: return "NotStronglyAcyclic";
    }
    return "Unknown";
}

std::string_view to_string(ExceptionalGraph which) noexcept {
    switch (which) {
        case ExceptionalGraph::P5prime: return "P5prime";
        case ExceptionalGraph::P6: return "P6";
        case ExceptionalGraph::H34: return "H34";
        case ExceptionalGraph::P7: return "P7";
    }
    return "Unknown";
}

bool is_strongly_acyclic(const BipartiteGraph& h) {
    return !shortest_cycle(h) && !shortest_cycle(bipartite_complement(h));
}

namespace {

struct Orientation {
    BipartiteGraph graph;
    bool complemented;
    bool transposed;
};

std::vector<Orientation> orientations(const BipartiteGraph& h) {
    auto t = transpose(h);
    std::vector<Orientation> out;
    out.push_back({h, false, false});
    out.push_back({bipartite_complement(h), true, false});
    out.push_back({t, false, true});
    out.push_back({bipartite_complement(t), true, true});
    return out;
}

// Matches a graph with exactly two tops against one two-hub family.
std::optional<PatternClass> match_two_hub(const BipartiteGraph& g, PatternTag family) {
    if (g.n_top() != 2) return std::nullopt;
    const auto& a = g.row(0);
    const auto& b = g.row(1);
    const auto common = (a & b).count();
    const auto isolated = g.n_bottom() - (a | b).count();
    const auto pa = (a - b).count();
    const auto pb = (b - a).count();
    bool ok = false;
    switch (family) {
        case PatternTag::Hfam: ok = common == 0 && isolated == 0; break;
        case PatternTag::Mfam: ok = common == 1 && isolated == 0; break;
        case PatternTag::MstarFam: ok = common == 1 && isolated == 1; break;
        default: break;
    }
    if (!ok) return std::nullopt;
    PatternClass cls;
    cls.tag = family;
    cls.s1 = std::max(pa, pb);
    cls.s2 = std::min(pa, pb);
    return cls;
}

const std::vector<std::pair<ExceptionalGraph, BipartiteGraph>>& exceptional_graphs() {
    static const std::vector<std::pair<ExceptionalGraph, BipartiteGraph>> graphs = {
        {ExceptionalGraph::P5prime, pattern_p5prime()},
        {ExceptionalGraph::P6, pattern_p6()},
        {ExceptionalGraph::H34, pattern_h34()},
        {ExceptionalGraph::P7, pattern_p7()},
    };
    return graphs;
}

}  // namespace

PatternClass classify(const BipartiteGraph& h) {
    if (h.n_top() == 0 || h.n_bottom() == 0)
        throw Error(ErrorCode::BadPattern, "pattern has an empty part");

    PatternClass cls;
    if (h.n_top() == 1) {
        cls.tag = PatternTag::SingleRow;
        cls.s1 = h.degree(0);
        cls.s2 = h.n_bottom() - cls.s1;
        return cls;
    }
    if (h.n_bottom() == 1) {
        cls.tag = PatternTag::SingleRow;
        cls.s1 = h.bottom_degree(0);
        cls.s2 = h.n_top() - cls.s1;
        cls.transposed = true;
        return cls;
    }

    const auto views = orientations(h);
    for (auto family : {PatternTag::Hfam, PatternTag::Mfam, PatternTag::MstarFam}) {
        for (const auto& o : views) {
            if (auto m = match_two_hub(o.graph, family)) {
                m->complemented = o.complemented;
                m->transposed = o.transposed;
                return *m;
            }
        }
    }
    for (const auto& o : views) {
        for (const auto& [which, ref] : exceptional_graphs()) {
            if (isomorphic(o.graph, ref)) {
                cls.tag = PatternTag::Exceptional;
                cls.which = which;
                cls.complemented = o.complemented;
                cls.transposed = o.transposed;
                return cls;
            }
        }
    }

    auto direct = shortest_cycle(h);
    auto comp = shortest_cycle(bipartite_complement(h));
    if (!direct && !comp)
        throw std::logic_error("strongly acyclic pattern outside the characterisation");
    cls.tag = PatternTag::NotStronglyAcyclic;
    if (direct && (!comp || direct->length() <= comp->length())) {
        cls.witness = std::move(direct);
    } else {
        cls.witness = std::move(comp);
        cls.complemented = true;
    }
    return cls;
}

BipartiteGraph reference_pattern(const PatternClass& cls) {
    switch (cls.tag) {
        case PatternTag::SingleRow: return make_single_row(cls.s1, cls.s2);
        case PatternTag::Hfam: return make_h_family(cls.s1, cls.s2);
        case PatternTag::Mfam: return make_m_family(cls.s1, cls.s2);
        case PatternTag::MstarFam: return make_mstar_family(cls.s1, cls.s2);
        case PatternTag::Exceptional:
            for (const auto& [which, ref] : exceptional_graphs())
                if (which == cls.which) return ref;
            break;
        case PatternTag::NotStronglyAcyclic: break;
    }
    throw Error(ErrorCode::Unsupported, "pattern class has no reference graph");
}

BipartiteGraph oriented(const BipartiteGraph& h, const PatternClass& cls) {
    BipartiteGraph g = cls.transposed ? transpose(h) : h;
    return cls.complemented ? bipartite_complement(g) : g;
}

namespace {

std::uint64_t code_rows(std::vector<std::uint32_t>& rows, std::size_t width) {
    std::sort(rows.begin(), rows.end());
    std::uint64_t code = 0;
    for (auto r : rows) code = (code << width) | r;
    return code;
}

// Minimum over bottom permutations of the sorted-row encoding.
std::uint64_t iso_code(const BipartiteGraph& g) {
    const auto l = g.n_bottom();
    std::vector<std::size_t> perm(l);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::uint32_t> rows(g.n_top());
    do {
        for (std::size_t u = 0; u < g.n_top(); ++u) {
            std::uint32_t r = 0;
            for (std::size_t j = 0; j < l; ++j)
                if (g.has_edge(u, perm[j])) r |= 1U << j;
            rows[u] = r;
        }
        best = std::min(best, code_rows(rows, l));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::uint64_t symmetry_class_code(const BipartiteGraph& g, bool allow_transpose) {
    if (g.n_top() > 5 || g.n_bottom() > 5)
        throw Error(ErrorCode::TooLarge, "symmetry codes support parts up to 5");
    auto code = std::min(iso_code(g), iso_code(bipartite_complement(g)));
    if (allow_transpose && g.n_top() == g.n_bottom()) {
        const auto t = transpose(g);
        code = std::min({code, iso_code(t), iso_code(bipartite_complement(t))});
    }
    return code;
}

std::vector<BipartiteGraph> enumerate_strongly_acyclic(std::size_t k, std::size_t l) {
    if (k > 5 || l > 5)
        throw Error(ErrorCode::TooLarge, "enumeration supports parts up to 5");
    const std::size_t cells = k * l;
    // A forest on k+l vertices has at most k+l-1 edges, and so does the
    // complement.
    const std::size_t forest_max = k + l == 0 ? 0 : k + l - 1;
    const std::size_t min_edges = cells > forest_max ? cells - forest_max : 0;
    std::vector<BipartiteGraph> out;
    std::set<std::uint64_t> seen;
    if (min_edges > forest_max) return out;

    const std::uint64_t total = std::uint64_t{1} << cells;
    std::vector<VertexSet> rows(k, VertexSet(l));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const auto edges = static_cast<std::size_t>(std::popcount(mask));
        if (edges < min_edges || edges > forest_max) continue;
        for (std::size_t u = 0; u < k; ++u)
            for (std::size_t v = 0; v < l; ++v) rows[u][v] = ((mask >> (u * l + v)) & 1U) != 0;
        BipartiteGraph g(l, rows);
        if (!is_strongly_acyclic(g)) continue;
        if (seen.insert(symmetry_class_code(g, true)).second) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace bicliq
