// M_{s1,s2} and M*_{s1,s2} extraction: small-degree cut, degree bands,
// the intersection graph I and its tree-closure structure, tree splits, and
// the two certificate assemblies.

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

#include "bicliq/detail.hpp"
#include "bicliq/extractors.hpp"
#include "bicliq/families.hpp"
#include "bicliq/tree_split.hpp"

namespace bicliq {

using detail::ceil_div;

namespace {

std::vector<std::size_t> first_k(const VertexSet& set, std::size_t k) {
    std::vector<std::size_t> out;
    for (auto v = set.find_first(); v != VertexSet::npos && out.size() < k; v = set.find_next(v))
        out.push_back(v);
    return out;
}

// Copy of M_{s1,s2} on hubs x, z if their neighbourhoods allow one.
std::optional<Embedding> m_copy(const BipartiteGraph& w, std::size_t x, std::size_t z,
                                std::size_t s1, std::size_t s2) {
    const auto common = w.row(x) & w.row(z);
    if (common.none()) return std::nullopt;
    const auto px = (w.row(x) - w.row(z)).count();
    const auto pz = (w.row(z) - w.row(x)).count();
    if (!(px >= s1 && pz >= s2)) {
        if (!(pz >= s1 && px >= s2)) return std::nullopt;
        std::swap(x, z);
    }
    Embedding e;
    e.top_map = {x, z};
    e.bottom_map = first_k(w.row(x) - w.row(z), s1);
    const auto tail = first_k(w.row(z) - w.row(x), s2);
    e.bottom_map.insert(e.bottom_map.end(), tail.begin(), tail.end());
    e.bottom_map.push_back(common.find_first());
    return e;
}

std::optional<Embedding> pairwise_m_scan(const BipartiteGraph& w, std::size_t s1, std::size_t s2) {
    for (std::size_t x = 0; x < w.n_top(); ++x)
        for (std::size_t z = x + 1; z < w.n_top(); ++z)
            if (auto e = m_copy(w, x, z, s1, s2)) return e;
    return std::nullopt;
}

struct StructureViolation {};

// Builds the underlying rooted tree of one component of I from its cliques.
// The clique in the highest band is adjacent to every other clique of the
// component; its members form a chain, and the remaining sub-components hang
// below the last member.
class TreeBuilder {
public:
    TreeBuilder(const std::vector<std::vector<std::size_t>>& cliques,
                const std::vector<std::size_t>& band, const std::vector<VertexSet>& j_adj)
        : cliques_(cliques), band_(band), j_adj_(j_adj) {}

    // parent[] is over global (U-local) vertex ids; `none` marks the root.
    void build(const std::vector<std::size_t>& component, std::size_t above,
               std::vector<std::size_t>& parent) const {
        std::size_t top = component.front();
        for (auto c : component)
            if (band_[c] > band_[top]) top = c;
        for (auto c : component) {
            if (c == top) continue;
            if (band_[c] == band_[top] || !j_adj_[top].test(c)) throw StructureViolation{};
        }
        std::size_t prev = above;
        for (auto v : cliques_[top]) {
            parent[v] = prev == npos ? v : prev;
            prev = v;
        }
        // Components of the rest, in J.
        std::vector<std::size_t> rest;
        for (auto c : component)
            if (c != top) rest.push_back(c);
        std::vector<char> seen(cliques_.size(), 0);
        for (auto start : rest) {
            if (seen[start]) continue;
            std::vector<std::size_t> part{start};
            seen[start] = 1;
            for (std::size_t i = 0; i < part.size(); ++i)
                for (auto c : rest)
                    if (!seen[c] && j_adj_[part[i]].test(c)) {
                        seen[c] = 1;
                        part.push_back(c);
                    }
            std::sort(part.begin(), part.end());
            build(part, prev, parent);
        }
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    const std::vector<std::vector<std::size_t>>& cliques_;
    const std::vector<std::size_t>& band_;
    const std::vector<VertexSet>& j_adj_;
};

VertexSet neighbourhood(const BipartiteGraph& w, const std::vector<std::size_t>& tops) {
    VertexSet out(w.n_bottom());
    for (auto u : tops) out |= w.row(u);
    return out;
}

Certificate cobiclique_against(std::vector<std::size_t> tops, VertexSet bottoms) {
    std::sort(tops.begin(), tops.end());
    return Certificate{CertificateKind::CoBiclique, std::move(tops), to_indices(bottoms)};
}

Dichotomy ms_pipeline(const BipartiteGraph& w, std::size_t s1, std::size_t s2) {
    const auto n = w.n_top();
    const auto s = s1;
    Dichotomy d;
    d.pattern = make_m_family(s1, s2);
    d.guaranteed = ms_guarantee(n, s);
    const auto n0 = ms_threshold(s, false);
    d.sub_threshold = !n0 || n < *n0;
    const auto all = detail::full_set(n);

    std::optional<Certificate> best;
    auto offer = [&](Certificate c, const char* route) {
        if (!best || c.size() > best->size()) d.route = route;
        detail::keep_better(best, std::move(c));
    };
    auto finish = [&]() {
        if (!best || best->size() == 0) {
            best = detail::trivial_certificate(w);
            d.route = "cert:trivial";
        }
        d.cert = std::move(best);
        return d;
    };
    auto found = [&](Embedding e, const char* route) {
        d.copy = std::move(e);
        d.route = route;
        return d;
    };

    // Small degrees.
    std::vector<std::size_t> small, kept;
    for (std::size_t u = 0; u < n; ++u) (w.degree(u) <= 6 * s ? small : kept).push_back(u);
    if (small.size() >= ceil_div(n, 24 * s)) {
        offer(detail::cobiclique_prefix(w, detail::by_degree_within(w, small, all), all),
              "cert:small-degree");
        return finish();
    }

    // Degree bands of width 2s; keep the larger parity class (even on ties).
    std::vector<std::size_t> even, odd;
    for (auto u : kept) ((w.degree(u) / (2 * s) + 1) % 2 == 0 ? even : odd).push_back(u);
    const auto& U = even.size() >= odd.size() ? even : odd;
    const auto m = U.size();
    std::vector<std::size_t> band(m);
    for (std::size_t i = 0; i < m; ++i) band[i] = w.degree(U[i]) / (2 * s) + 1;

    // Intersection graph I; every edge is a place an M_s copy may sit.
    std::vector<VertexSet> iadj(m, VertexSet(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (!w.row(U[i]).intersects(w.row(U[j]))) continue;
            if (auto e = m_copy(w, U[i], U[j], s1, s2)) return found(std::move(*e), "copy:intersecting-pair");
            iadj[i].set(j);
            iadj[j].set(i);
        }
    }

    std::vector<std::vector<std::size_t>> components;  // of I, local ids
    std::vector<RootedTree> trees;                     // over positions in component
    try {
        // Blob cliques: components of I inside one band must be cliques.
        std::vector<std::vector<std::size_t>> cliques;
        std::vector<std::size_t> clique_band;
        std::vector<std::size_t> clique_of(m);
        std::vector<char> seen(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            if (seen[i]) continue;
            std::vector<std::size_t> part{i};
            seen[i] = 1;
            for (std::size_t k = 0; k < part.size(); ++k)
                for (auto j = iadj[part[k]].find_first(); j != VertexSet::npos;
                     j = iadj[part[k]].find_next(j))
                    if (!seen[j] && band[j] == band[i]) {
                        seen[j] = 1;
                        part.push_back(j);
                    }
            std::sort(part.begin(), part.end());
            for (auto a : part) {
                std::size_t inside = 0;
                for (auto b : part) inside += iadj[a].test(b) ? 1 : 0;
                if (inside != part.size() - 1) throw StructureViolation{};
            }
            for (auto a : part) clique_of[a] = cliques.size();
            cliques.push_back(std::move(part));
            clique_band.push_back(band[i]);
        }

        // Between cliques of different bands I is complete or empty; J
        // records the complete pairs.
        const auto kc = cliques.size();
        std::vector<VertexSet> jadj(kc, VertexSet(kc));
        for (std::size_t a = 0; a < kc; ++a) {
            VertexSet reach(m);
            for (auto v : cliques[a]) reach |= iadj[v];
            for (auto v = reach.find_first(); v != VertexSet::npos; v = reach.find_next(v)) {
                const auto b = clique_of[v];
                if (b == a || jadj[a].test(b)) continue;
                for (auto x : cliques[a])
                    for (auto y : cliques[b])
                        if (!iadj[x].test(y)) throw StructureViolation{};
                jadj[a].set(b);
                jadj[b].set(a);
            }
        }

        // Components of J give the components of I, each a tree closure.
        TreeBuilder builder(cliques, clique_band, jadj);
        std::vector<std::size_t> parent(m, TreeBuilder::npos);
        std::vector<char> cseen(kc, 0);
        for (std::size_t a = 0; a < kc; ++a) {
            if (cseen[a]) continue;
            std::vector<std::size_t> part{a};
            cseen[a] = 1;
            for (std::size_t k = 0; k < part.size(); ++k)
                for (auto b = jadj[part[k]].find_first(); b != VertexSet::npos;
                     b = jadj[part[k]].find_next(b))
                    if (!cseen[b]) {
                        cseen[b] = 1;
                        part.push_back(b);
                    }
            std::sort(part.begin(), part.end());
            builder.build(part, TreeBuilder::npos, parent);

            std::vector<std::size_t> members;
            for (auto c : part) members.insert(members.end(), cliques[c].begin(), cliques[c].end());
            std::sort(members.begin(), members.end());
            std::vector<std::size_t> pos(m, 0);
            for (std::size_t p = 0; p < members.size(); ++p) pos[members[p]] = p;
            RootedTree tree;
            tree.parent.resize(members.size());
            for (std::size_t p = 0; p < members.size(); ++p) {
                const auto v = members[p];
                tree.parent[p] = parent[v] == v ? p : pos[parent[v]];
            }
            // Tree closure: I-adjacency equals the ancestor relation.
            AncestorIndex anc(tree);
            for (std::size_t p = 0; p < members.size(); ++p)
                for (std::size_t q = p + 1; q < members.size(); ++q) {
                    const bool related = anc.is_ancestor(p, q) || anc.is_ancestor(q, p);
                    if (related != iadj[members[p]].test(members[q])) throw StructureViolation{};
                }
            components.push_back(std::move(members));
            trees.push_back(std::move(tree));
        }
    } catch (const StructureViolation&) {
        if (auto e = pairwise_m_scan(w, s1, s2)) return found(std::move(*e), "copy:structure-violation");
        throw std::logic_error("tree-closure structure failed without an M copy");
    }

    // Tree splits: handle paths feed Case 1, independent forests Case 2.
    std::vector<std::vector<std::size_t>> handle_cliques;  // global top ids
    std::vector<std::size_t> case2_tops;
    VertexSet case2_bottoms(n), case2_hood(n);
    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& members = components[c];
        const auto split = tree_split(trees[c]);
        auto global = [&](const std::vector<std::size_t>& local) {
            std::vector<std::size_t> out;
            for (auto p : local) out.push_back(U[members[p]]);
            std::sort(out.begin(), out.end());
            return out;
        };
        if (split.is_path) {
            handle_cliques.push_back(global(split.handle_path));
            continue;
        }
        std::vector<std::size_t> all_q;
        for (auto p : members) all_q.push_back(U[p]);
        const auto nq = neighbourhood(w, all_q);
        const auto qa = global(split.forest_a);
        const auto qb = global(split.forest_b);
        const auto free_a = nq - neighbourhood(w, qa);
        const auto free_b = nq - neighbourhood(w, qb);
        const bool take_a = free_a.count() >= free_b.count();
        const auto& chosen = take_a ? qa : qb;
        case2_tops.insert(case2_tops.end(), chosen.begin(), chosen.end());
        case2_bottoms |= take_a ? free_a : free_b;
        case2_hood |= nq;
    }
    if (!case2_tops.empty())
        offer(cobiclique_against(case2_tops, case2_bottoms | (all - case2_hood)),
              "cert:independent-forests");

    if (!handle_cliques.empty()) {
        std::size_t x = 0;
        std::size_t largest = 0;
        for (std::size_t i = 0; i < handle_cliques.size(); ++i) {
            x += handle_cliques[i].size();
            if (handle_cliques[i].size() > handle_cliques[largest].size()) largest = i;
        }
        const auto& big = handle_cliques[largest];
        if (big.size() >= ceil_div(x, 3)) {
            const auto hood = neighbourhood(w, big);
            offer(cobiclique_against(big, all - hood), "cert:clique-cobiclique");
            // The clique against its neighbourhood has no induced H_{s1,s2}:
            // with a common neighbour such a copy would extend to M_{s1,s2}.
            const auto side = std::min(big.size(), hood.count());
            if (side > 0) {
                const std::vector<std::size_t> sub_tops(big.begin(), big.begin() + static_cast<std::ptrdiff_t>(side));
                const auto sub_bottoms = first_k(hood, side);
                const auto sub = w.induced(sub_tops, sub_bottoms);
                const auto r = extract_Hs(sub, s1, s2);
                if (r.copy) {
                    const auto hx = sub_tops[r.copy->top_map[0]];
                    const auto hz = sub_tops[r.copy->top_map[1]];
                    Embedding e;
                    e.top_map = {hx, hz};
                    for (auto b : r.copy->bottom_map) e.bottom_map.push_back(sub_bottoms[b]);
                    e.bottom_map.push_back((w.row(hx) & w.row(hz)).find_first());
                    return found(std::move(e), "copy:stars-on-clique");
                }
                offer(detail::lift(*r.cert, sub_tops, sub_bottoms), "cert:clique-block");
            }
        }
        // Largest-first packing of the cliques into two groups.
        std::vector<std::size_t> order(handle_cliques.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
            return handle_cliques[a].size() > handle_cliques[b].size();
        });
        std::array<std::vector<std::size_t>, 2> group;
        for (auto i : order) {
            auto& g = group[0].size() <= group[1].size() ? group[0] : group[1];
            g.insert(g.end(), handle_cliques[i].begin(), handle_cliques[i].end());
        }
        for (const auto& g : group)
            if (!g.empty()) offer(cobiclique_against(g, all - neighbourhood(w, g)), "cert:clique-packing");
    }
    return finish();
}

}  // namespace

Dichotomy extract_Ms(const BipartiteGraph& g, std::size_t s1, std::size_t s2) {
    detail::require_square(g);
    if (s1 < s2) std::swap(s1, s2);
    if (s1 == 0) throw Error(ErrorCode::BadPattern, "M_{0,0} is a single-row pattern");
    return ms_pipeline(g, s1, s2);
}

Dichotomy extract_Ms_star(const BipartiteGraph& g, std::size_t s1, std::size_t s2) {
    detail::require_square(g);
    if (s1 < s2) std::swap(s1, s2);
    if (s1 == 0) throw Error(ErrorCode::BadPattern, "M*_{0,0} is not a two-hub pattern");
    const auto n = g.n_top();
    Dichotomy d;
    d.pattern = make_mstar_family(s1, s2);
    d.guaranteed = ms_star_guarantee(n, s1);
    const auto n0 = ms_threshold(s1, true);
    d.sub_threshold = !n0 || n < *n0;

    // A bottom vertex of degree <= n/2, in G or else in G'.
    std::size_t v = 0;
    for (std::size_t b = 1; b < n; ++b)
        if (g.bottom_degree(b) < g.bottom_degree(v)) v = b;
    const bool complemented = g.bottom_degree(v) > n / 2;
    if (complemented) {
        v = 0;
        for (std::size_t b = 1; b < n; ++b)
            if (g.bottom_degree(b) > g.bottom_degree(v)) v = b;
    }
    const BipartiteGraph w = complemented ? bipartite_complement(g) : g;

    std::vector<std::size_t> tops, bottoms;
    for (std::size_t u = 0; u < n; ++u)
        if (!w.has_edge(u, v)) tops.push_back(u);
    for (std::size_t b = 0; b < n; ++b)
        if (b != v) bottoms.push_back(b);
    const auto side = std::min(tops.size(), bottoms.size());
    if (side == 0) {
        d.cert = detail::trivial_certificate(g);
        d.route = "cert:trivial";
        return d;
    }
    tops.resize(side);
    bottoms.resize(side);
    const auto r = ms_pipeline(w.induced(tops, bottoms), s1, s2);
    if (r.copy) {
        // Hubs avoid v, so v is the isolated bottom.
        auto e = detail::lift(*r.copy, tops, bottoms);
        e.bottom_map.push_back(v);
        if (complemented) {
            // In G the hubs swap, and the common and isolated leaves swap.
            std::swap(e.top_map[0], e.top_map[1]);
            std::swap(e.bottom_map[s1 + s2], e.bottom_map[s1 + s2 + 1]);
        }
        d.copy = std::move(e);
        d.route = r.route;
        return d;
    }
    auto c = detail::lift(*r.cert, tops, bottoms);
    if (complemented) c.kind = flipped(c.kind);
    d.cert = std::move(c);
    d.route = r.route;
    return d;
}

// ---------------------------------------------------------------------------
// Guarantee arithmetic. Every quantity is the integer the corresponding
// step can be relied on to deliver.

namespace {

// Case 1 value for a union of handle cliques of total size x. When the
// largest clique S has |S| >= ceil(x/3) (and |S| <= n/2), the worse of the
// co-biclique (S, V \ N(S)) and the H_s route on the square sub-block is
// ceil(|S|/(2s)); otherwise largest-first packing leaves the smaller group
// at least (x - max)/2 against at least ceil(n/2) bottoms.
std::vector<std::size_t> case1_values(std::size_t n, std::size_t s) {
    std::vector<std::size_t> c1(n + 1, 0);
    const auto half = ceil_div(n, 2);
    for (std::size_t x = 1; x <= n; ++x) {
        const auto third = ceil_div(x, 3);
        const auto a = ceil_div(third, 2 * s);
        const auto b = std::min(ceil_div(x - third + 1, 2), half);
        c1[x] = std::min(a, b);
    }
    // Suffix minimum: the union of handle cliques may exceed its floor.
    for (std::size_t x = n; x-- > 0;) c1[x] = std::min(c1[x], c1[x + 1]);
    return c1;
}

}  // namespace

std::size_t ms_guarantee(std::size_t n, std::size_t s) {
    if (n == 0) return 0;
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be positive");
    const auto a0 = ceil_div(n, 24 * s);
    std::size_t g0 = 0;
    for (std::size_t a = 1; a <= a0; ++a) {
        const auto used = 6 * s * a;
        if (used >= n) break;
        g0 = std::max(g0, std::min(a, n - used));
    }
    const auto u = ceil_div(n - a0 + 1, 2);
    const auto c1 = case1_values(n, s);
    const auto half = ceil_div(n, 2);
    std::size_t gmain = static_cast<std::size_t>(-1);
    for (std::size_t u1 = 0; u1 <= u; ++u1) {
        const auto v1 = c1[ceil_div(u1, 4)];
        const auto v2 = std::min(ceil_div(u - u1, 4), half);
        gmain = std::min(gmain, std::max(v1, v2));
    }
    return std::max<std::size_t>(1, std::min(g0, gmain));
}

std::size_t ms_star_guarantee(std::size_t n, std::size_t s) {
    if (n <= 1) return n;
    const auto lo = std::min(ceil_div(n, 2), n - 1);
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t m = lo; m <= n - 1; ++m) best = std::min(best, ms_guarantee(m, s));
    return std::max<std::size_t>(1, best);
}

std::size_t ms_linear_floor(std::size_t n, std::size_t s, bool star) {
    return ceil_div(n, (star ? 108 : 54) * s);
}

std::optional<std::size_t> compute_ms_threshold(std::size_t s, bool star, std::size_t horizon) {
    std::vector<std::size_t> g(horizon + 1, 0);
    for (std::size_t n = 1; n <= horizon; ++n) g[n] = ms_guarantee(n, s);
    std::vector<std::size_t> value(horizon + 1, 0);
    if (!star) {
        value = g;
    } else {
        // Sliding minimum of g over [min(ceil(n/2), n-1), n-1].
        std::deque<std::size_t> window;
        std::size_t next = 1;
        value[1] = 1;
        for (std::size_t n = 2; n <= horizon; ++n) {
            const auto lo = std::min(ceil_div(n, 2), n - 1);
            for (; next <= n - 1; ++next) {
                while (!window.empty() && g[window.back()] >= g[next]) window.pop_back();
                window.push_back(next);
            }
            while (window.front() < lo) window.pop_front();
            value[n] = std::max<std::size_t>(1, g[window.front()]);
        }
    }
    std::size_t last_fail = 0;
    for (std::size_t n = 1; n <= horizon; ++n)
        if (value[n] < ms_linear_floor(n, s, star)) last_fail = n;
    if (last_fail == horizon) return std::nullopt;
    return last_fail + 1;
}

namespace {
// compute_ms_threshold(s, star, ms_threshold_horizon), index s-1; 0 = none.
constexpr std::array<std::size_t, 8> kMsThreshold = {0, 1, 1, 1, 1, 1, 1, 1};
constexpr std::array<std::size_t, 8> kMsStarThreshold = {0, 1, 1, 1, 1, 1, 1, 1};
}  // namespace

std::optional<std::size_t> ms_threshold(std::size_t s, bool star) {
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be positive");
    if (s <= kMsThreshold.size()) {
        const auto v = (star ? kMsStarThreshold : kMsThreshold)[s - 1];
        if (v == 0) return std::nullopt;
        return v;
    }
    return compute_ms_threshold(s, star, ms_threshold_horizon);
}

}  // namespace bicliq
