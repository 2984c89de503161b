#include "bicliq/tree_split.hpp"

#include <algorithm>
#include <numeric>

#include "bicliq/error.hpp"
#include "bicliq/graph.hpp"

namespace bicliq {

namespace {

std::vector<std::vector<std::size_t>> children_of(const RootedTree& tree, std::size_t root) {
    std::vector<std::vector<std::size_t>> kids(tree.size());
    for (std::size_t v = 0; v < tree.size(); ++v)
        if (v != root) kids[tree.parent[v]].push_back(v);
    return kids;
}

// Preorder from the root; children visited in increasing index order.
std::vector<std::size_t> preorder(const std::vector<std::vector<std::size_t>>& kids,
                                  std::size_t root) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back(*it);
    }
    return order;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

std::size_t validate_tree(const RootedTree& tree) {
    const auto n = tree.size();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "tree has no vertices");
    std::size_t root = n;
    for (std::size_t v = 0; v < n; ++v) {
        if (tree.parent[v] >= n) throw Error(ErrorCode::IndexOutOfRange, "parent out of range");
        if (tree.parent[v] == v) {
            if (root != n) throw Error(ErrorCode::InvalidArgument, "tree has two roots");
            root = v;
        }
    }
    if (root == n) throw Error(ErrorCode::InvalidArgument, "tree has no root");
    const auto reached = preorder(children_of(tree, root), root).size();
    if (reached != n) throw Error(ErrorCode::InvalidArgument, "parent pointers contain a cycle");
    return root;
}

std::size_t TreeSplit::guaranteed() const noexcept {
    return is_path ? handle_path.size() : std::min(forest_a.size(), forest_b.size());
}

TreeSplit tree_split(const RootedTree& tree) {
    const auto root = validate_tree(tree);
    const auto n = tree.size();
    const auto kids = children_of(tree, root);
    const auto order = preorder(kids, root);
    std::vector<std::size_t> subtree(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != root) subtree[tree.parent[*it]] += subtree[*it];

    std::vector<std::size_t> path;
    std::vector<std::size_t> components;  // roots of collected subtrees
    std::size_t current = root;
    while (true) {
        auto v = current;
        path.push_back(v);
        while (kids[v].size() == 1) {
            v = kids[v].front();
            path.push_back(v);
        }
        const auto& hanging = kids[v];
        if (hanging.empty()) break;
        const auto largest = *std::max_element(
            hanging.begin(), hanging.end(),
            [&](auto a, auto b) { return subtree[a] < subtree[b]; });
        if (subtree[largest] == 1) {  // star: every leaf is a component
            components.insert(components.end(), hanging.begin(), hanging.end());
            break;
        }
        for (auto c : hanging)
            if (c != largest) components.push_back(c);
        current = largest;
    }

    TreeSplit out;
    if (path.size() >= ceil_div(n, 4)) {
        out.is_path = true;
        out.handle_path = std::move(path);
        return out;
    }

    // Subset sum: reachable[i] holds the sums achievable with the first i items.
    const auto total = std::accumulate(components.begin(), components.end(), std::size_t{0},
                                       [&](auto acc, auto c) { return acc + subtree[c]; });
    std::vector<VertexSet> reachable(components.size() + 1, VertexSet(total + 1));
    reachable[0].set(0);
    for (std::size_t i = 0; i < components.size(); ++i)
        reachable[i + 1] = reachable[i] | (reachable[i] << subtree[components[i]]);
    std::size_t target = total / 2;
    while (!reachable.back().test(target)) --target;

    std::vector<bool> in_small(components.size(), false);
    for (std::size_t i = components.size(), sum = target; i > 0; --i) {
        if (reachable[i - 1].test(sum)) continue;
        in_small[i - 1] = true;
        sum -= subtree[components[i - 1]];
    }
    for (std::size_t i = 0; i < components.size(); ++i) {
        auto& dest = in_small[i] ? out.forest_b : out.forest_a;
        const auto members = preorder(kids, components[i]);
        dest.insert(dest.end(), members.begin(), members.end());
    }
    std::sort(out.forest_a.begin(), out.forest_a.end());
    std::sort(out.forest_b.begin(), out.forest_b.end());
    return out;
}

AncestorIndex::AncestorIndex(const RootedTree& tree)
    : enter_(tree.size()), exit_(tree.size()) {
    const auto root = validate_tree(tree);
    const auto kids = children_of(tree, root);
    std::size_t clock = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    enter_[root] = clock++;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < kids[v].size()) {
            const auto c = kids[v][next++];
            enter_[c] = clock++;
            stack.emplace_back(c, 0);
        } else {
            exit_[v] = clock++;
            stack.pop_back();
        }
    }
}

bool verify_tree_split(const RootedTree& tree, const TreeSplit& split, std::size_t threshold) {
    const auto n = tree.size();
    AncestorIndex idx(tree);
    if (split.is_path) {
        const auto& p = split.handle_path;
        if (p.size() < threshold || p.empty()) return false;
        if (tree.parent[p.front()] != p.front()) return false;
        for (std::size_t i = 1; i < p.size(); ++i)
            if (p[i] >= n || tree.parent[p[i]] != p[i - 1]) return false;
        return true;
    }
    const auto& a = split.forest_a;
    const auto& b = split.forest_b;
    if (a.size() < threshold || b.size() < threshold) return false;
    std::vector<char> mark(n, 0);
    for (auto v : a) {
        if (v >= n || mark[v]) return false;
        mark[v] = 1;
    }
    for (auto v : b) {
        if (v >= n || mark[v]) return false;
        mark[v] = 2;
    }
    for (auto x : a)
        for (auto y : b)
            if (idx.is_ancestor(x, y) || idx.is_ancestor(y, x)) return false;
    return true;
}

}  // namespace bicliq
