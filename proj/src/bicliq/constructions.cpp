#include "bicliq/constructions.hpp"

#include <random>
#include <sstream>

#include "bicliq/error.hpp"
#include "bicliq/families.hpp"
#include "bicliq/solvers.hpp"

namespace bicliq {

namespace {

BipartiteGraph checked_free(BipartiteGraph g, const BipartiteGraph& pattern, const char* name) {
    if (g.n_top() >= pattern.n_top() && g.n_bottom() >= pattern.n_bottom() &&
        find_induced_copy(g, pattern))
        throw std::logic_error(std::string(name) + " produced a graph containing its pattern");
    return g;
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool bernoulli(std::mt19937_64& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

// Ordered DFS over alternating sequences u1 v1 u2 v2 ... uk vk.
class CycleWalker {
public:
    CycleWalker(const BipartiteGraph& g, std::size_t len) : g_(g), k_(len / 2) {}

    template <class Visit>
    void run(Visit&& visit) {
        used_top_ = VertexSet(g_.n_top());
        used_bottom_ = VertexSet(g_.n_bottom());
        seq_.clear();
        stop_ = false;
        for (std::size_t u = 0; u < g_.n_top() && !stop_; ++u) {
            push_top(u);
            step_bottom(visit);
            pop_top(u);
        }
    }

private:
    void push_top(std::size_t u) { seq_.push_back(u); used_top_.set(u); }
    void pop_top(std::size_t u) { seq_.pop_back(); used_top_.reset(u); }
    void push_bottom(std::size_t v) { seq_.push_back(v); used_bottom_.set(v); }
    void pop_bottom(std::size_t v) { seq_.pop_back(); used_bottom_.reset(v); }

    // Extend from the last top with a bottom.
    template <class Visit>
    void step_bottom(Visit& visit) {
        const auto u1 = seq_.front();
        const auto cur = seq_.back();
        const bool closing = seq_.size() == 2 * k_ - 1;
        VertexSet cand = g_.row(cur) - used_bottom_;
        if (closing) cand &= g_.row(u1);
        for (auto v = cand.find_first(); v != VertexSet::npos && !stop_; v = cand.find_next(v)) {
            if (closing && v <= seq_[1]) continue;
            push_bottom(v);
            if (closing) {
                if (!visit(CycleWitness{seq_})) stop_ = true;
            } else {
                step_top(visit);
            }
            pop_bottom(v);
        }
    }

    template <class Visit>
    void step_top(Visit& visit) {
        const auto u1 = seq_.front();
        VertexSet cand = g_.column(seq_.back()) - used_top_;
        for (auto u = cand.find_next(u1); u != VertexSet::npos && !stop_; u = cand.find_next(u)) {
            push_top(u);
            step_bottom(visit);
            pop_top(u);
        }
    }

    const BipartiteGraph& g_;
    std::size_t k_;
    VertexSet used_top_, used_bottom_;
    std::vector<std::size_t> seq_;
    bool stop_ = false;
};

void require_cycle_len(std::size_t len) {
    if (len < 4 || len % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "cycle length must be even and at least 4");
}

bool has_blue_ktt(const BipartiteGraph& red, std::size_t t) {
    if (t > red.n_top()) return false;
    return tilde_omega(bipartite_complement(red)).t >= t;
}

std::vector<VertexSet> sample(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (auto& r : rows)
        for (std::size_t j = 0; j < n; ++j) r[j] = bernoulli(rng, p);
    return rows;
}

}  // namespace

BipartiteGraph tight_P4(std::size_t n) {
    if (n % 3 != 0) throw Error(ErrorCode::BadModulus, "tight_P4 needs n divisible by 3");
    std::vector<VertexSet> rows(n, VertexSet(n));
    const auto b = n / 3;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = (u / b) * b; v < (u / b + 1) * b; ++v) rows[u].set(v);
    return checked_free(BipartiteGraph(n, std::move(rows)), pattern_p4(), "tight_P4");
}

BipartiteGraph tight_2K2(std::size_t n) {
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (std::size_t u = 0; u < (n + 1) / 2; ++u) rows[u].set();
    return checked_free(BipartiteGraph(n, std::move(rows)), pattern_2k2(), "tight_2K2");
}

BipartiteGraph tight_H4(std::size_t n) {
    if (n % 5 != 0) throw Error(ErrorCode::BadModulus, "tight_H4 needs n divisible by 5");
    const auto f = n / 5;
    const auto u1 = 2 * f;           // |U1|; U2 = [u1, n)
    const auto v2 = 2 * f;           // V1 = [0, v2), V2 = [v2, 4f), V3 = [4f, n)
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < v2; ++v) rows[u].set(v);
        rows[u].set(v2 + (u < u1 ? u : u - u1));
    }
    return checked_free(BipartiteGraph(n, std::move(rows)), pattern_h4(), "tight_H4");
}

void validate(const LLLParams& params) {
    if (params.cycle_len != 4 && params.cycle_len != 6 && params.cycle_len != 8)
        throw Error(ErrorCode::InvalidArgument, "cycle_len must be 4, 6 or 8");
    if (params.t == 0) throw Error(ErrorCode::InvalidArgument, "t must be at least 1");
    if (!(params.p >= 0.0 && params.p <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "p must lie in [0,1]");
}

std::optional<CycleWitness> smallest_cycle_of_length(const BipartiteGraph& g, std::size_t len) {
    require_cycle_len(len);
    std::optional<CycleWitness> out;
    CycleWalker(g, len).run([&](CycleWitness c) {
        out = std::move(c);
        return false;
    });
    return out;
}

std::size_t count_cycles_of_length(const BipartiteGraph& g, std::size_t len, std::size_t cap) {
    require_cycle_len(len);
    std::size_t count = 0;
    if (cap == 0) return 0;
    CycleWalker(g, len).run([&](const CycleWitness&) { return ++count < cap; });
    return count;
}

std::optional<TwoColoring> lll_search(const LLLParams& params) {
    validate(params);
    const auto n = params.n;
    std::size_t spent = 0;
    for (std::uint64_t restart = 0;; ++restart) {
        std::mt19937_64 rng(restart == 0 ? params.seed : mix(params.seed + restart));
        auto rows = sample(n, params.p, rng);
        for (;;) {
            const BipartiteGraph red(n, rows);
            const auto cycle = smallest_cycle_of_length(red, params.cycle_len);
            if (!cycle) {
                if (!has_blue_ktt(red, params.t)) return TwoColoring{red};
                break;
            }
            if (spent++ >= params.max_resamples) return std::nullopt;
            const auto& s = cycle->vertices;
            for (std::size_t i = 0; i < s.size(); i += 2) {
                rows[s[i]][s[i + 1]] = bernoulli(rng, params.p);
                rows[s[(i + 2) % s.size()]][s[i + 1]] = bernoulli(rng, params.p);
            }
        }
        if (spent++ >= params.max_resamples) return std::nullopt;
    }
}

ColoringReport verify_coloring(const TwoColoring& c, const LLLParams& params) {
    validate(params);
    ColoringReport r;
    // Independent of the sampler: count cycles directly, solve blue exactly.
    r.red_violations = count_cycles_of_length(c.red, params.cycle_len, kCycleCountCap);
    r.blue_omega = tilde_omega(c.blue()).t;
    r.blue_violations = r.blue_omega >= params.t ? 1 : 0;
    return r;
}

std::string coloring_to_text(const TwoColoring& c) {
    return c.red.to_matrix_text() + "\n" + c.blue().to_matrix_text();
}

TwoColoring coloring_from_text(std::string_view text) {
    std::vector<std::vector<std::string>> blocks(1);
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') continue;
        if (line.empty()) {
            if (!blocks.back().empty()) blocks.emplace_back();
            continue;
        }
        blocks.back().push_back(line);
    }
    if (blocks.back().empty()) blocks.pop_back();
    if (blocks.empty() || blocks.size() > 2)
        throw Error(ErrorCode::InvalidArgument, "coloring needs a red block and an optional blue block");
    TwoColoring c{from_matrix(blocks[0])};
    if (!c.red.is_square()) throw Error(ErrorCode::NotSquare, "coloring must be n x n");
    if (blocks.size() == 2 && from_matrix(blocks[1]) != c.blue())
        throw Error(ErrorCode::InvalidArgument, "blue block is not the complement of the red block");
    return c;
}

}  // namespace bicliq
