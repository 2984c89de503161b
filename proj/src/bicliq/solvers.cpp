#include "bicliq/solvers.hpp"

#include <numeric>

#include "bicliq/error.hpp"

namespace bicliq {

CertificateKind flipped(CertificateKind kind) noexcept {
    return kind == CertificateKind::Biclique ? CertificateKind::CoBiclique
                                             : CertificateKind::Biclique;
}

Certificate balanced(Certificate cert) {
    const auto t = cert.size();
    cert.top_set.resize(t);
    cert.bottom_set.resize(t);
    return cert;
}

namespace {

// Branch and bound for the maximum balanced biclique.
class BalancedBicliqueSearch {
public:
    explicit BalancedBicliqueSearch(const BipartiteGraph& g) : g_(g) {
        order_.resize(g.n_top());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
    }

    std::size_t max_size() {
        if (g_.n_top() == 0 || g_.n_bottom() == 0) return 0;
        VertexSet all(g_.n_bottom());
        all.set();
        grow(0, 0, all);
        return best_;
    }

private:
    void grow(std::size_t pos, std::size_t chosen, const VertexSet& common) {
        for (std::size_t i = pos; i < order_.size(); ++i) {
            if (chosen + (order_.size() - i) <= best_) return;
            const auto& row = g_.row(order_[i]);
            if (row.count() <= best_) continue;
            VertexSet next = common & row;
            const auto width = next.count();
            if (width <= best_) continue;
            best_ = std::max(best_, std::min(chosen + 1, width));
            grow(i + 1, chosen + 1, next);
        }
    }

    const BipartiteGraph& g_;
    std::vector<std::size_t> order_;
    std::size_t best_ = 0;
};

// First (lexicographically smallest) top set of size t whose common
// neighbourhood has at least t vertices.
bool lex_first_witness(const BipartiteGraph& g, std::size_t t, std::size_t pos,
                       const VertexSet& common, std::vector<std::size_t>& chosen) {
    if (chosen.size() == t) return true;
    for (std::size_t u = pos; u + (t - chosen.size()) <= g.n_top(); ++u) {
        VertexSet next = common & g.row(u);
        if (next.count() < t) continue;
        chosen.push_back(u);
        if (lex_first_witness(g, t, u + 1, next, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

SolveResult tilde_omega(const BipartiteGraph& g) {
    SolveResult res;
    res.cert.kind = CertificateKind::Biclique;
    res.t = BalancedBicliqueSearch(g).max_size();
    if (res.t == 0) return res;
    VertexSet all(g.n_bottom());
    all.set();
    std::vector<std::size_t> tops;
    lex_first_witness(g, res.t, 0, all, tops);
    VertexSet common = all;
    for (auto u : tops) common &= g.row(u);
    auto bottoms = to_indices(common);
    bottoms.resize(res.t);
    res.cert.top_set = std::move(tops);
    res.cert.bottom_set = std::move(bottoms);
    return res;
}

SolveResult tilde_alpha(const BipartiteGraph& g) {
    auto res = tilde_omega(bipartite_complement(g));
    res.cert.kind = CertificateKind::CoBiclique;
    return res;
}

SolveResult tilde_h(const BipartiteGraph& g) {
    auto omega = tilde_omega(g);
    auto alpha = tilde_alpha(g);
    return alpha.t > omega.t ? alpha : omega;
}

ForbMinResult forb_min(std::size_t n, const BipartiteGraph& pattern, bool symmetry_pruning) {
    if (n > 4)
        throw Error(ErrorCode::TooLarge,
                    "forb_min enumerates 2^(n^2) graphs and accepts n <= 4, got " +
                        std::to_string(n));
    const bool fits = pattern.n_top() <= n && pattern.n_bottom() <= n;
    const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t total = std::uint64_t{1} << (n * n);

    ForbMinResult res;
    bool have = false;
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (std::uint64_t code = 0; code < total; ++code) {
        if (symmetry_pruning) {
            bool sorted = true;
            for (std::size_t i = 1; i < n && sorted; ++i)
                sorted = ((code >> ((i - 1) * n)) & row_mask) <= ((code >> (i * n)) & row_mask);
            if (!sorted) continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const auto bits = (code >> (i * n)) & row_mask;
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = ((bits >> j) & 1U) != 0;
        }
        BipartiteGraph g(n, rows);
        if (fits && find_induced_copy(g, pattern)) continue;
        ++res.graphs_checked;
        const auto value = tilde_h(g).t;
        if (!have || value < res.value) {
            have = true;
            res.value = value;
            res.argmin = std::move(g);
        }
    }
    if (!have)
        throw Error(ErrorCode::InvalidArgument, "every " + std::to_string(n) + "x" +
                                                    std::to_string(n) +
                                                    " graph contains the pattern");
    return res;
}

}  // namespace bicliq
