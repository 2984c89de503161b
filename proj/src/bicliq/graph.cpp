#include "bicliq/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "bicliq/error.hpp"

namespace bicliq {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::RaggedInput: return "RaggedInput";
        case ErrorCode::BadChar: return "BadChar";
        case ErrorCode::BadJson: return "BadJson";
        case ErrorCode::PatternTooLarge: return "PatternTooLarge";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorCode::BadPattern: return "BadPattern";
        case ErrorCode::BadModulus: return "BadModulus";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::Timeout: return "Timeout";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

std::vector<std::size_t> to_indices(const VertexSet& set) {
    std::vector<std::size_t> out;
    out.reserve(set.count());
    for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) out.push_back(i);
    return out;
}

VertexSet from_indices(std::size_t universe, std::span<const std::size_t> indices) {
    VertexSet set(universe);
    for (auto i : indices) set.set(i);
    return set;
}

BipartiteGraph::BipartiteGraph(std::size_t n_top, std::size_t n_bottom)
    : n_bottom_(n_bottom), rows_(n_top, VertexSet(n_bottom)),
      columns_(n_bottom, VertexSet(n_top)) {}

BipartiteGraph::BipartiteGraph(std::size_t n_bottom, std::vector<VertexSet> rows)
    : n_bottom_(n_bottom), rows_(std::move(rows)),
      columns_(n_bottom, VertexSet(rows_.size())) {
    for (std::size_t u = 0; u < rows_.size(); ++u) {
        if (rows_[u].size() != n_bottom_)
            throw Error(ErrorCode::RaggedInput, "adjacency row has wrong width");
        for (auto v = rows_[u].find_first(); v != VertexSet::npos; v = rows_[u].find_next(v))
            columns_[v].set(u);
    }
}

std::size_t BipartiteGraph::edge_count() const noexcept {
    std::size_t m = 0;
    for (const auto& r : rows_) m += r.count();
    return m;
}

std::vector<std::string> BipartiteGraph::to_rows() const {
    std::vector<std::string> out;
    out.reserve(n_top());
    for (const auto& r : rows_) {
        std::string line(n_bottom_, '0');
        for (std::size_t v = 0; v < n_bottom_; ++v)
            if (r.test(v)) line[v] = '1';
        out.push_back(std::move(line));
    }
    return out;
}

std::string BipartiteGraph::to_matrix_text() const {
    std::string out;
    for (const auto& line : to_rows()) {
        out += line;
        out += '\n';
    }
    return out;
}

BipartiteGraph BipartiteGraph::induced(std::span<const std::size_t> tops,
                                       std::span<const std::size_t> bottoms) const {
    std::vector<VertexSet> rows;
    rows.reserve(tops.size());
    for (auto u : tops) {
        if (u >= n_top()) throw Error(ErrorCode::IndexOutOfRange, "top index out of range");
        VertexSet r(bottoms.size());
        for (std::size_t j = 0; j < bottoms.size(); ++j) {
            if (bottoms[j] >= n_bottom_)
                throw Error(ErrorCode::IndexOutOfRange, "bottom index out of range");
            if (rows_[u].test(bottoms[j])) r.set(j);
        }
        rows.push_back(std::move(r));
    }
    return BipartiteGraph(bottoms.size(), std::move(rows));
}

namespace {

BipartiteGraph build_from_rows(std::span<const std::string_view> rows) {
    const std::size_t width = rows.empty() ? 0 : rows.front().size();
    std::vector<VertexSet> adj;
    adj.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != width)
            throw Error(ErrorCode::RaggedInput,
                        "row " + std::to_string(i) + " has length " +
                            std::to_string(rows[i].size()) + ", expected " +
                            std::to_string(width));
        VertexSet r(width);
        for (std::size_t j = 0; j < width; ++j) {
            const char c = rows[i][j];
            if (c == '1')
                r.set(j);
            else if (c != '0')
                throw Error(ErrorCode::BadChar, "row " + std::to_string(i) +
                                                    " contains invalid character '" +
                                                    std::string(1, c) + "'");
        }
        adj.push_back(std::move(r));
    }
    return BipartiteGraph(width, std::move(adj));
}

}  // namespace

BipartiteGraph from_matrix(std::span<const std::string> rows) {
    std::vector<std::string_view> views(rows.begin(), rows.end());
    return build_from_rows(views);
}

BipartiteGraph from_matrix(std::initializer_list<std::string_view> rows) {
    std::vector<std::string_view> views(rows.begin(), rows.end());
    return build_from_rows(views);
}

BipartiteGraph parse_matrix_text(std::string_view text) {
    std::vector<std::string_view> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (!line.empty() && line.front() != '#') rows.push_back(line);
        pos = end + 1;
    }
    return build_from_rows(rows);
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
    std::vector<VertexSet> rows(g.rows().begin(), g.rows().end());
    for (auto& r : rows) r.flip();
    return BipartiteGraph(g.n_bottom(), std::move(rows));
}

BipartiteGraph transpose(const BipartiteGraph& g) {
    std::vector<VertexSet> rows;
    rows.reserve(g.n_bottom());
    for (std::size_t v = 0; v < g.n_bottom(); ++v) rows.push_back(g.column(v));
    return BipartiteGraph(g.n_top(), std::move(rows));
}

bool is_induced_embedding(const BipartiteGraph& host, const BipartiteGraph& pattern,
                          const Embedding& emb) {
    if (emb.top_map.size() != pattern.n_top() || emb.bottom_map.size() != pattern.n_bottom())
        return false;
    VertexSet used_top(host.n_top()), used_bottom(host.n_bottom());
    for (auto u : emb.top_map) {
        if (u >= host.n_top() || used_top.test(u)) return false;
        used_top.set(u);
    }
    for (auto v : emb.bottom_map) {
        if (v >= host.n_bottom() || used_bottom.test(v)) return false;
        used_bottom.set(v);
    }
    for (std::size_t i = 0; i < pattern.n_top(); ++i)
        for (std::size_t j = 0; j < pattern.n_bottom(); ++j)
            if (pattern.has_edge(i, j) != host.has_edge(emb.top_map[i], emb.bottom_map[j]))
                return false;
    return true;
}

namespace {

class CopySearch {
public:
    CopySearch(const BipartiteGraph& host, const BipartiteGraph& pattern,
               const std::function<bool(const Embedding&)>& visit,
               std::optional<CopyAnchor> anchor)
        : host_(host), pattern_(pattern), visit_(visit), anchor_(anchor) {
        const auto k = pattern.n_top();
        const auto l = pattern.n_bottom();
        order_.resize(k);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) {
            return pattern.degree(a) > pattern.degree(b);
        });
        if (anchor_) {
            auto it = std::find(order_.begin(), order_.end(), anchor_->pattern_top);
            std::rotate(order_.begin(), it, it + 1);
        }
        emb_.top_map.assign(k, 0);
        emb_.bottom_map.assign(l, 0);
        used_top_ = VertexSet(host.n_top());
        candidates_.assign(k + 1, std::vector<VertexSet>(l, VertexSet(host.n_bottom())));
        for (auto& c : candidates_[0]) c.set();
        if (anchor_) {
            // Pinning the bottom up front prunes top choices early.
            auto& pin = candidates_[0][anchor_->pattern_bottom];
            pin.reset();
            pin.set(anchor_->host_bottom);
        }
        host_degree_.resize(host.n_top());
        for (std::size_t u = 0; u < host.n_top(); ++u) host_degree_[u] = host.degree(u);
    }

    std::size_t run() {
        assign_top(0);
        return found_;
    }

private:
    // Pattern bottoms whose columns agree on the first `depth` ordered tops
    // form a class; the class needs that many distinct hosts in the union of
    // its candidate sets (the sets differ only through the anchor pin).
    bool classes_feasible(std::size_t depth) const {
        const auto l = pattern_.n_bottom();
        const auto& cand = candidates_[depth];
        for (std::size_t j = 0; j < l; ++j) {
            if (cand[j].none()) return false;
            std::size_t same = 0;
            VertexSet pool(host_.n_bottom());
            for (std::size_t j2 = 0; j2 < l; ++j2) {
                bool eq = true;
                for (std::size_t d = 0; d < depth && eq; ++d)
                    eq = pattern_.has_edge(order_[d], j) == pattern_.has_edge(order_[d], j2);
                if (!eq) continue;
                ++same;
                pool |= cand[j2];
            }
            if (same > pool.count()) return false;
        }
        return true;
    }

    void assign_top(std::size_t depth) {
        if (stop_) return;
        if (depth == pattern_.n_top()) {
            used_bottom_ = VertexSet(host_.n_bottom());
            bottom_order_.resize(pattern_.n_bottom());
            std::iota(bottom_order_.begin(), bottom_order_.end(), std::size_t{0});
            const auto& cand = candidates_[depth];
            std::stable_sort(bottom_order_.begin(), bottom_order_.end(),
                             [&](auto a, auto b) { return cand[a].count() < cand[b].count(); });
            if (anchor_) {
                auto it = std::find(bottom_order_.begin(), bottom_order_.end(),
                                    anchor_->pattern_bottom);
                std::rotate(bottom_order_.begin(), it, it + 1);
            }
            assign_bottom(0);
            return;
        }
        const auto p = order_[depth];
        const auto pdeg = pattern_.degree(p);
        const auto pnon = pattern_.n_bottom() - pdeg;
        const auto try_host = [&](std::size_t u) {
            if (used_top_.test(u)) return;
            if (host_degree_[u] < pdeg || host_.n_bottom() - host_degree_[u] < pnon) return;
            const auto& row = host_.row(u);
            auto& next = candidates_[depth + 1];
            const auto& cur = candidates_[depth];
            for (std::size_t j = 0; j < pattern_.n_bottom(); ++j) {
                next[j] = cur[j];
                if (pattern_.has_edge(p, j))
                    next[j] &= row;
                else
                    next[j] -= row;
            }
            if (!classes_feasible(depth + 1)) return;
            used_top_.set(u);
            emb_.top_map[p] = u;
            assign_top(depth + 1);
            used_top_.reset(u);
        };
        if (depth == 0 && anchor_) {
            try_host(anchor_->host_top);
            return;
        }
        for (std::size_t u = 0; u < host_.n_top() && !stop_; ++u) try_host(u);
    }

    void assign_bottom(std::size_t idx) {
        if (stop_) return;
        if (idx == bottom_order_.size()) {
            ++found_;
            if (!visit_(emb_)) stop_ = true;
            return;
        }
        const auto j = bottom_order_[idx];
        const auto& cand = candidates_[pattern_.n_top()][j];
        const auto place = [&](std::size_t v) {
            used_bottom_.set(v);
            emb_.bottom_map[j] = v;
            assign_bottom(idx + 1);
            used_bottom_.reset(v);
        };
        if (idx == 0 && anchor_) {
            const auto v = anchor_->host_bottom;
            if (cand.test(v)) place(v);
            return;
        }
        for (auto v = cand.find_first(); v != VertexSet::npos && !stop_; v = cand.find_next(v))
            if (!used_bottom_.test(v)) place(v);
    }

    const BipartiteGraph& host_;
    const BipartiteGraph& pattern_;
    const std::function<bool(const Embedding&)>& visit_;
    std::optional<CopyAnchor> anchor_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> bottom_order_;
    std::vector<std::size_t> host_degree_;
    std::vector<std::vector<VertexSet>> candidates_;
    VertexSet used_top_;
    VertexSet used_bottom_;
    Embedding emb_;
    std::size_t found_ = 0;
    bool stop_ = false;
};

void check_pattern_fits(const BipartiteGraph& host, const BipartiteGraph& pattern) {
    if (pattern.n_top() > host.n_top() || pattern.n_bottom() > host.n_bottom())
        throw Error(ErrorCode::PatternTooLarge,
                    "pattern parts (" + std::to_string(pattern.n_top()) + "," +
                        std::to_string(pattern.n_bottom()) + ") exceed host parts (" +
                        std::to_string(host.n_top()) + "," + std::to_string(host.n_bottom()) +
                        ")");
}

}  // namespace

std::size_t for_each_induced_copy(const BipartiteGraph& host, const BipartiteGraph& pattern,
                                  const std::function<bool(const Embedding&)>& visit,
                                  std::optional<CopyAnchor> anchor) {
    check_pattern_fits(host, pattern);
    if (anchor) {
        if (anchor->pattern_top >= pattern.n_top() || anchor->host_top >= host.n_top() ||
            anchor->pattern_bottom >= pattern.n_bottom() ||
            anchor->host_bottom >= host.n_bottom())
            throw Error(ErrorCode::IndexOutOfRange, "copy anchor out of range");
    }
    return CopySearch(host, pattern, visit, anchor).run();
}

std::optional<Embedding> find_induced_copy(const BipartiteGraph& host,
                                           const BipartiteGraph& pattern) {
    std::optional<Embedding> result;
    for_each_induced_copy(host, pattern, [&](const Embedding& e) {
        result = e;
        return false;
    });
    return result;
}

bool isomorphic(const BipartiteGraph& a, const BipartiteGraph& b) {
    if (a.n_top() != b.n_top() || a.n_bottom() != b.n_bottom()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    return find_induced_copy(b, a).has_value();
}

bool is_cycle(const BipartiteGraph& g, const CycleWitness& c) {
    const auto len = c.length();
    if (len < 4 || len % 2 != 0) return false;
    VertexSet tops(g.n_top()), bottoms(g.n_bottom());
    for (std::size_t i = 0; i < len; ++i) {
        const auto x = c.vertices[i];
        if (i % 2 == 0) {
            if (x >= g.n_top() || tops.test(x)) return false;
            tops.set(x);
        } else {
            if (x >= g.n_bottom() || bottoms.test(x)) return false;
            bottoms.set(x);
        }
    }
    for (std::size_t i = 0; i < len; ++i) {
        const auto a = c.vertices[i];
        const auto b = c.vertices[(i + 1) % len];
        const bool ok = (i % 2 == 0) ? g.has_edge(a, b) : g.has_edge(b, a);
        if (!ok) return false;
    }
    return true;
}

std::optional<CycleWitness> shortest_cycle(const BipartiteGraph& g) {
    // Vertices 0..k-1 are tops, k..k+l-1 bottoms.
    const auto k = g.n_top();
    const auto total = k + g.n_bottom();
    const auto neighbours = [&](std::size_t x) {
        return x < k ? g.row(x) : g.column(x - k);
    };
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);

    std::size_t best_len = unseen;
    std::vector<std::size_t> best;
    std::vector<std::size_t> dist(total), parent(total);
    for (std::size_t root = 0; root < total && best_len > 4; ++root) {
        std::fill(dist.begin(), dist.end(), unseen);
        dist[root] = 0;
        parent[root] = root;
        std::deque<std::size_t> queue{root};
        bool done = false;
        while (!queue.empty() && !done) {
            const auto x = queue.front();
            queue.pop_front();
            if (2 * dist[x] + 1 >= best_len) break;
            const auto& nb = neighbours(x);
            const std::size_t offset = x < k ? k : 0;
            for (auto i = nb.find_first(); i != VertexSet::npos; i = nb.find_next(i)) {
                const auto y = i + offset;
                if (dist[y] == unseen) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    const auto len = dist[x] + dist[y] + 1;
                    if (len < best_len) {
                        best_len = len;
                        std::vector<std::size_t> left, right;
                        for (auto z = x; z != root; z = parent[z]) left.push_back(z);
                        for (auto z = y; z != root; z = parent[z]) right.push_back(z);
                        best.clear();
                        best.push_back(root);
                        best.insert(best.end(), left.rbegin(), left.rend());
                        best.insert(best.end(), right.begin(), right.end());
                    }
                    done = true;
                    break;
                }
            }
        }
    }
    if (best.empty()) return std::nullopt;

    // Rotate to start at the smallest top; walk towards the smaller bottom.
    std::size_t start = 0;
    for (std::size_t i = 0; i < best.size(); ++i)
        if (best[i] < k && (best[start] >= k || best[i] < best[start])) start = i;
    std::rotate(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(start), best.end());
    if (best.size() > 2 && best.back() < best[1]) std::reverse(best.begin() + 1, best.end());
    CycleWitness w;
    for (std::size_t i = 0; i < best.size(); ++i)
        w.vertices.push_back(i % 2 == 0 ? best[i] : best[i] - k);
    return w;
}

}  // namespace bicliq
