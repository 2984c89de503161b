#pragma once

#include <cstddef>
#include <vector>

namespace bicliq {

/// Rooted tree given by parent pointers; parent[root] == root.
struct RootedTree {
    std::vector<std::size_t> parent;

    std::size_t size() const noexcept { return parent.size(); }
};

/// Throws InvalidArgument unless the parent array describes one rooted tree.
std::size_t validate_tree(const RootedTree& tree);

/// Outcome of tree_split: a long root-to-descendant path, or two vertex
/// sets A and B with no ancestor relation between them.
struct TreeSplit {
    bool is_path = false;
    std::vector<std::size_t> handle_path;  // root first
    std::vector<std::size_t> forest_a;     // sorted
    std::vector<std::size_t> forest_b;     // sorted

    std::size_t guaranteed() const noexcept;
};

/// Peels handles (maximal root paths whose inner vertices have exactly one
/// child), descends into the largest hanging subtree and collects the other
/// subtrees, stopping at a star. Returns the concatenated handles if they
/// cover at least ceil(n/4) vertices; otherwise splits the collected subtrees
/// into two groups with sums as balanced as possible (exact subset sum).
TreeSplit tree_split(const RootedTree& tree);

/// Ancestor queries by Euler tour.
class AncestorIndex {
public:
    explicit AncestorIndex(const RootedTree& tree);
    /// True if a is an ancestor of b or a == b.
    bool is_ancestor(std::size_t a, std::size_t b) const noexcept {
        return enter_[a] <= enter_[b] && exit_[b] <= exit_[a];
    }

private:
    std::vector<std::size_t> enter_;
    std::vector<std::size_t> exit_;
};

/// Checks the TreeSplit invariant with the given size threshold.
bool verify_tree_split(const RootedTree& tree, const TreeSplit& split, std::size_t threshold);

}  // namespace bicliq
