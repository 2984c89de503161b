#include "bicliq/extractors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bicliq/detail.hpp"
#include "bicliq/families.hpp"

namespace bicliq {

using detail::ceil_div;

namespace {

Dichotomy with_copy(BipartiteGraph pattern, Embedding emb, std::string route) {
    Dichotomy d;
    d.pattern = std::move(pattern);
    d.copy = std::move(emb);
    d.route = std::move(route);
    return d;
}

std::vector<std::size_t> first_k(const VertexSet& set, std::size_t k) {
    std::vector<std::size_t> out;
    for (auto v = set.find_first(); v != VertexSet::npos && out.size() < k; v = set.find_next(v))
        out.push_back(v);
    return out;
}

// Copy of H_{s1,s2}: hub 0 = x with s1 leaves from N(x)\N(z), hub 1 = z with
// s2 leaves from N(z)\N(x). Caller guarantees the private sets are large enough.
Embedding h_copy(const BipartiteGraph& w, std::size_t x, std::size_t z, std::size_t s1,
                 std::size_t s2) {
    Embedding e;
    e.top_map = {x, z};
    auto px = first_k(w.row(x) - w.row(z), s1);
    auto pz = first_k(w.row(z) - w.row(x), s2);
    e.bottom_map = px;
    e.bottom_map.insert(e.bottom_map.end(), pz.begin(), pz.end());
    return e;
}

// An H_{s1,s2} copy in G' is one in G with the hubs swapped.
Embedding h_copy_from_complement(const Embedding& e) {
    Embedding out = e;
    std::swap(out.top_map[0], out.top_map[1]);
    return out;
}

Certificate oriented_cert(Certificate c, bool complemented) {
    if (complemented) c.kind = flipped(c.kind);
    return c;
}

// Prefix of `bottoms` ordered by how many tops they exclude; biclique when
// `adjacent` (tops must see every chosen bottom), co-biclique otherwise.
Certificate bottom_prefix(const BipartiteGraph& w, std::vector<std::size_t> bottoms,
                          bool adjacent) {
    const auto n_top = w.n_top();
    std::vector<VertexSet> excluded;
    excluded.reserve(bottoms.size());
    std::vector<std::size_t> bad(w.n_bottom(), 0);
    for (auto b : bottoms) bad[b] = adjacent ? n_top - w.bottom_degree(b) : w.bottom_degree(b);
    std::stable_sort(bottoms.begin(), bottoms.end(),
                     [&](auto a, auto b) { return bad[a] < bad[b]; });
    for (auto b : bottoms) {
        VertexSet ex = w.column(b);
        if (adjacent) ex.flip();
        excluded.push_back(std::move(ex));
    }
    const auto pick = detail::best_prefix(excluded, detail::full_set(n_top));
    Certificate c;
    c.kind = adjacent ? CertificateKind::Biclique : CertificateKind::CoBiclique;
    c.top_set = to_indices(pick.rest);
    c.bottom_set.assign(bottoms.begin(), bottoms.begin() + static_cast<std::ptrdiff_t>(pick.length));
    std::sort(c.bottom_set.begin(), c.bottom_set.end());
    return c;
}

}  // namespace

Certificate extract_maxdeg_cobiclique(const BipartiteGraph& g, std::size_t s) {
    detail::require_square(g);
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "s must be positive");
    for (std::size_t u = 0; u < g.n_top(); ++u)
        if (g.degree(u) >= s)
            throw Error(ErrorCode::DegreeTooHigh, "top vertex " + std::to_string(u) +
                                                      " has degree " +
                                                      std::to_string(g.degree(u)) +
                                                      " >= " + std::to_string(s));
    const auto all = detail::full_set(g.n_bottom());
    const auto order = detail::by_degree_within(g, detail::iota_vec(g.n_top()), all);
    return detail::cobiclique_prefix(g, order, all);
}

Dichotomy extract_single_row(const BipartiteGraph& g, std::size_t s, std::size_t t) {
    detail::require_square(g);
    if (s + t == 0) throw Error(ErrorCode::BadPattern, "single-row pattern has no bottoms");
    const auto n = g.n_top();
    Dichotomy d;
    d.pattern = make_single_row(s, t);
    d.bad_pattern = s + t > n;

    std::vector<std::size_t> low, high;
    for (std::size_t u = 0; u < n; ++u) {
        const auto deg = g.degree(u);
        const auto non = n - deg;
        if (deg >= s && non >= t) {
            Embedding e;
            e.top_map = {u};
            e.bottom_map = first_k(g.row(u), s);
            VertexSet miss = g.row(u);
            miss.flip();
            const auto rest = first_k(miss, t);
            e.bottom_map.insert(e.bottom_map.end(), rest.begin(), rest.end());
            return with_copy(d.pattern, std::move(e), "copy:vertex");
        }
        (deg < s ? low : high).push_back(u);
    }

    const auto all = detail::full_set(n);
    const bool use_low = low.size() >= high.size();
    if (use_low) {
        d.cert = detail::cobiclique_prefix(g, detail::by_degree_within(g, low, all), all);
        d.route = "cert:low-degree";
    } else {
        const auto gc = bipartite_complement(g);
        d.cert = oriented_cert(
            detail::cobiclique_prefix(gc, detail::by_degree_within(gc, high, all), all), true);
        d.route = "cert:low-non-degree";
    }
    if (d.cert->size() == 0) d.cert = detail::trivial_certificate(g);

    const auto dmax = std::max(s, t);
    if (!d.bad_pattern) {
        d.guaranteed = ceil_div(n, 2 * dmax);
    } else {
        // Degrees in the chosen group are below its parameter; the prefix
        // of length a leaves at least n - a*(param-1) bottoms.
        const auto param = use_low ? s : t;
        const auto m = std::max(low.size(), high.size());
        std::size_t best = 0;
        for (std::size_t a = 1; a <= m; ++a) {
            const auto used = a * (param == 0 ? 0 : param - 1);
            if (used >= n) break;
            best = std::max(best, std::min(a, n - used));
        }
        d.guaranteed = std::max<std::size_t>(best, 1);
    }
    return d;
}

Dichotomy extract_Hs(const BipartiteGraph& g, std::size_t s1, std::size_t s2) {
    detail::require_square(g);
    if (s1 < s2) std::swap(s1, s2);
    if (s1 == 0) throw Error(ErrorCode::BadPattern, "H_{0,0} has no bottom vertices");
    const auto n = g.n_top();
    const auto s = s1;
    Dichotomy d;
    d.pattern = make_h_family(s1, s2);

    // Sorted by degree; median at 1-based position ceil(n/2).
    const auto mid = ceil_div(n, 2) - 1;
    auto order_of = [&](const BipartiteGraph& w) {
        auto order = detail::iota_vec(n);
        std::stable_sort(order.begin(), order.end(),
                         [&](auto a, auto b) { return w.degree(a) < w.degree(b); });
        return order;
    };
    auto order = order_of(g);
    const bool complemented = g.degree(order[mid]) > n / 2;
    const BipartiteGraph w = complemented ? bipartite_complement(g) : g;
    if (complemented) order = order_of(w);
    const auto med = order[mid];

    auto found = [&](std::size_t x, std::size_t z, std::string route) {
        auto e = h_copy(w, x, z, s1, s2);
        if (complemented) e = h_copy_from_complement(e);
        return with_copy(d.pattern, std::move(e), std::move(route));
    };

    for (std::size_t i = 0; i < mid; ++i) {
        const auto u = order[i];
        if ((w.row(u) - w.row(med)).count() >= s) return found(u, med, "copy:lower-half");
    }

    // Lower half (with the median) against Y = V \ N(u_med).
    VertexSet y = w.row(med);
    y.flip();
    std::vector<std::size_t> lower(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(mid + 1));
    std::optional<Certificate> best;
    detail::keep_better(best, oriented_cert(detail::cobiclique_prefix(
                                                w, detail::by_degree_within(w, lower, y), y),
                                            complemented));
    d.route = "cert:lower-half";
    d.guaranteed = ceil_div(n, 2 * s);

    if (s2 == 0) {
        // Every neighbourhood is within s-1 of N(u*) in both directions.
        for (std::size_t u = 0; u < n; ++u) {
            if (u == med) continue;
            if ((w.row(u) - w.row(med)).count() >= s) return found(u, med, "copy:sunflower");
            if ((w.row(med) - w.row(u)).count() >= s) return found(med, u, "copy:sunflower");
        }
        const auto x_side = to_indices(w.row(med));
        const auto y_side = to_indices(y);
        const auto c = x_side.size() >= y_side.size() ? bottom_prefix(w, x_side, true)
                                                       : bottom_prefix(w, y_side, false);
        if (!best || c.size() > best->size()) d.route = "cert:sunflower";
        detail::keep_better(best, oriented_cert(c, complemented));
        d.guaranteed = s == 1 ? ceil_div(n, 2) : std::max(ceil_div(n, 2 * s), n / (2 * s - 1));
    }
    if (best->size() == 0) best = detail::trivial_certificate(g);
    d.cert = std::move(best);
    return d;
}

Dichotomy extract_P4free(const BipartiteGraph& g) {
    detail::require_square(g);
    const auto n = g.n_top();
    Dichotomy d;
    d.pattern = pattern_p4();

    // Tops grouped by neighbourhood, in order of first appearance.
    std::vector<VertexSet> hoods;
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::size_t> isolated_tops;
    for (std::size_t u = 0; u < n; ++u) {
        if (g.row(u).none()) {
            isolated_tops.push_back(u);
            continue;
        }
        auto it = std::find(hoods.begin(), hoods.end(), g.row(u));
        if (it == hoods.end()) {
            hoods.push_back(g.row(u));
            groups.push_back({u});
        } else {
            groups[static_cast<std::size_t>(it - hoods.begin())].push_back(u);
        }
    }
    for (std::size_t i = 0; i < hoods.size(); ++i) {
        for (std::size_t j = i + 1; j < hoods.size(); ++j) {
            const auto common = hoods[i] & hoods[j];
            if (common.none()) continue;
            // Unequal, intersecting: the side with a private leaf is hub 0.
            auto x = groups[i][0], z = groups[j][0];
            if ((g.row(x) - g.row(z)).none()) std::swap(x, z);
            Embedding e;
            e.top_map = {x, z};
            e.bottom_map = {(g.row(x) - g.row(z)).find_first(), common.find_first()};
            return with_copy(d.pattern, std::move(e), "copy:crossing-blocks");
        }
    }

    // Blocks (U_i, V_i); isolated vertices form (1,0) and (0,1) blocks.
    struct Block {
        std::vector<std::size_t> tops, bottoms;
    };
    std::vector<Block> blocks;
    VertexSet covered(n);
    for (std::size_t i = 0; i < hoods.size(); ++i) {
        blocks.push_back({groups[i], to_indices(hoods[i])});
        covered |= hoods[i];
    }
    for (auto u : isolated_tops) blocks.push_back({{u}, {}});
    for (std::size_t v = 0; v < n; ++v)
        if (!covered.test(v)) blocks.push_back({{}, {v}});

    const auto target = ceil_div(n, 3);
    const auto all = detail::full_set(n);
    std::optional<Certificate> best;
    std::string best_route;
    auto offer = [&](CertificateKind kind, VertexSet tops, VertexSet bottoms, const char* route) {
        Certificate c{kind, to_indices(tops), to_indices(bottoms)};
        if (!best || c.size() > best->size()) best_route = route;
        detail::keep_better(best, std::move(c));
    };
    auto tops_of = [&](const std::vector<std::size_t>& ids) {
        VertexSet s(n);
        for (auto i : ids)
            for (auto u : blocks[i].tops) s.set(u);
        return s;
    };
    auto bottoms_of = [&](const std::vector<std::size_t>& ids) {
        VertexSet s(n);
        for (auto i : ids)
            for (auto v : blocks[i].bottoms) s.set(v);
        return s;
    };

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto ut = tops_of({i});
        const auto vb = bottoms_of({i});
        offer(CertificateKind::Biclique, ut, vb, "cert:block-biclique");
        offer(CertificateKind::CoBiclique, ut, all - vb, "cert:block-cobiclique");
        offer(CertificateKind::CoBiclique, all - ut, vb, "cert:block-cobiclique");
    }

    std::vector<std::size_t> i1, i2;  // a_i <= b_i, and the rest
    for (std::size_t i = 0; i < blocks.size(); ++i)
        (blocks[i].tops.size() <= blocks[i].bottoms.size() ? i1 : i2).push_back(i);
    offer(CertificateKind::CoBiclique, tops_of(i2), bottoms_of(i1), "cert:split");

    // Minimal subfamily whose side reaches the target (greedy, then pruned).
    auto minimal = [&](const std::vector<std::size_t>& ids, bool top_side) {
        auto side = [&](std::size_t i) {
            return top_side ? blocks[i].tops.size() : blocks[i].bottoms.size();
        };
        std::vector<std::size_t> chosen;
        std::size_t total = 0;
        for (auto i : ids) {
            if (total >= target) break;
            chosen.push_back(i);
            total += side(i);
        }
        for (std::size_t k = 0; k < chosen.size();) {
            if (total - side(chosen[k]) >= target) {
                total -= side(chosen[k]);
                chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(k));
            } else {
                ++k;
            }
        }
        return chosen;
    };
    const auto m2 = minimal(i2, true);
    offer(CertificateKind::CoBiclique, tops_of(m2), all - bottoms_of(m2), "cert:minimal-tops");
    const auto m1 = minimal(i1, false);
    offer(CertificateKind::CoBiclique, all - tops_of(m1), bottoms_of(m1), "cert:minimal-bottoms");

    if (best->size() == 0) best = detail::trivial_certificate(g);
    d.cert = std::move(best);
    d.route = best_route;
    d.guaranteed = target;
    return d;
}

Dichotomy extract_2K2free(const BipartiteGraph& g) {
    detail::require_square(g);
    const auto n = g.n_top();
    Dichotomy d;
    d.pattern = pattern_2k2();
    auto order = detail::iota_vec(n);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto a = order[i], b = order[i + 1];
        const auto extra = g.row(b) - g.row(a);
        if (extra.none()) continue;
        Embedding e;
        e.top_map = {a, b};
        e.bottom_map = {(g.row(a) - g.row(b)).find_first(), extra.find_first()};
        return with_copy(d.pattern, std::move(e), "copy:not-nested");
    }
    const auto m = ceil_div(n, 2) - 1;
    const auto pivot = order[m];
    Certificate big{CertificateKind::Biclique,
                    std::vector<std::size_t>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m + 1)),
                    to_indices(g.row(pivot))};
    VertexSet rest = g.row(pivot);
    rest.flip();
    Certificate small{CertificateKind::CoBiclique,
                      std::vector<std::size_t>(order.begin() + static_cast<std::ptrdiff_t>(m), order.end()),
                      to_indices(rest)};
    std::sort(big.top_set.begin(), big.top_set.end());
    std::sort(small.top_set.begin(), small.top_set.end());
    const bool use_big = big.bottom_set.size() >= small.bottom_set.size();
    d.cert = use_big ? std::move(big) : std::move(small);
    d.route = use_big ? "cert:upper-biclique" : "cert:lower-cobiclique";
    d.guaranteed = ceil_div(n, 2);
    return d;
}

Dichotomy extract_H4free(const BipartiteGraph& g) {
    detail::require_square(g);
    const auto n = g.n_top();
    Dichotomy d;
    d.pattern = pattern_h4();

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
            if (x == z) continue;
            const auto priv = g.row(x) - g.row(z);
            if (priv.count() < 2) continue;
            Embedding e;
            e.top_map = {x, z};
            e.bottom_map = first_k(priv, 2);
            return with_copy(d.pattern, std::move(e), "copy:two-private");
        }
    }

    // Sunflower core: the intersection of all neighbourhoods, in G or G'.
    auto core_of = [&](const BipartiteGraph& q) -> std::optional<VertexSet> {
        VertexSet core = detail::full_set(n);
        for (std::size_t u = 0; u < n; ++u) core &= q.row(u);
        for (std::size_t u = 0; u < n; ++u)
            if ((q.row(u) - core).count() > 1) return std::nullopt;
        return core;
    };
    bool complemented = false;
    BipartiteGraph q = g;
    auto core = core_of(q);
    if (!core) {
        q = bipartite_complement(g);
        core = core_of(q);
        complemented = true;
    }
    if (!core) throw std::logic_error("H4-free graph without a sunflower neighbourhood system");

    std::optional<Certificate> best;
    best = oriented_cert(Certificate{CertificateKind::Biclique, detail::iota_vec(n), to_indices(*core)},
                         complemented);
    d.route = "cert:core-biclique";
    VertexSet petals = *core;
    petals.flip();
    const auto c = oriented_cert(bottom_prefix(q, to_indices(petals), false), complemented);
    if (c.size() > best->size()) d.route = "cert:petal-cobiclique";
    detail::keep_better(best, c);
    if (best->size() == 0) best = detail::trivial_certificate(g);
    d.cert = std::move(best);
    d.guaranteed = 2 * n / 5;
    return d;
}

Dichotomy extract_auto(const BipartiteGraph& g, const BipartiteGraph& h) {
    detail::require_square(g);
    const auto cls = classify(h);
    switch (cls.tag) {
        case PatternTag::Exceptional:
            throw Error(ErrorCode::Unsupported,
                        "exceptional-pattern: no linear extractor is known for " +
                            std::string(to_string(cls.which)));
        case PatternTag::NotStronglyAcyclic:
            throw Error(ErrorCode::Unsupported,
                        "not-strongly-acyclic: the pattern or its complement has a cycle");
        default: break;
    }
    auto run = [&](const BipartiteGraph& w) {
        switch (cls.tag) {
            case PatternTag::SingleRow: return extract_single_row(w, cls.s1, cls.s2);
            case PatternTag::Hfam: return extract_Hs(w, cls.s1, cls.s2);
            case PatternTag::Mfam: return extract_Ms(w, cls.s1, cls.s2);
            case PatternTag::MstarFam: return extract_Ms_star(w, cls.s1, cls.s2);
            default: throw std::logic_error("unreachable pattern tag");
        }
    };
    const auto w = oriented(g, cls);
    Dichotomy r = run(w);

    // H_{s1,s2} and M*_{s1,s2} equal their own complement, so H and H' land on
    // the same extractor applied to G and G'. Running both and choosing by an
    // order-free rule makes extract_auto(G,H) and extract_auto(G',H') agree.
    const auto ref = reference_pattern(cls);
    if (cls.tag != PatternTag::SingleRow && isomorphic(ref, bipartite_complement(ref))) {
        Dichotomy alt = run(bipartite_complement(w));
        // A copy of R in w' is a copy of R' in w.
        alt.pattern = bipartite_complement(alt.pattern);
        if (alt.cert) alt.cert->kind = flipped(alt.cert->kind);
        auto good = [](const Dichotomy& d) { return d.cert && d.cert->size() >= d.guaranteed; };
        bool take_alt = false;
        if (r.cert && alt.cert) take_alt = alt.cert->size() > r.cert->size();
        else if (r.copy && alt.cert) take_alt = good(alt);
        else if (r.cert && alt.copy) take_alt = !good(r);
        if (take_alt) {
            alt.route += " (complement)";
            r = std::move(alt);
        }
    }

    Dichotomy out = r;
    out.pattern = h;
    if (r.copy) {
        // reference -> oriented(h) is an isomorphism; compose with the copy.
        const auto oh = oriented(h, cls);
        const auto iso = find_induced_copy(oh, r.pattern);
        if (!iso) throw std::logic_error("classified pattern does not match its reference");
        Embedding in_w;
        in_w.top_map.assign(oh.n_top(), 0);
        in_w.bottom_map.assign(oh.n_bottom(), 0);
        for (std::size_t i = 0; i < iso->top_map.size(); ++i)
            in_w.top_map[iso->top_map[i]] = r.copy->top_map[i];
        for (std::size_t j = 0; j < iso->bottom_map.size(); ++j)
            in_w.bottom_map[iso->bottom_map[j]] = r.copy->bottom_map[j];
        // Complementing both graphs keeps induced copies; transposing swaps sides.
        if (cls.transposed) std::swap(in_w.top_map, in_w.bottom_map);
        out.copy = std::move(in_w);
    } else {
        Certificate c = *r.cert;
        if (cls.complemented) c.kind = flipped(c.kind);
        if (cls.transposed) std::swap(c.top_set, c.bottom_set);
        out.cert = std::move(c);
    }
    return out;
}

}  // namespace bicliq
