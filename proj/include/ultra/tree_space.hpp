#pragma once

#include "ultra/bignum.hpp"
#include "ultra/errors.hpp"
#include "ultra/valuation.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

// Finite ultrametric spaces presented as weighted rooted trees.
//
// Points are the leaves. The distance between two distinct leaves is the
// weight of their lowest common ancestor, and weights decrease strictly from
// the root toward the leaves, which forces the strong triangle inequality:
// the LCA of x and z is an ancestor of LCA(x,y) or of LCA(y,z), so its weight
// cannot exceed the larger of theirs. Everything here is exact rational
// arithmetic and small enough to enumerate, which is the point: these spaces
// are the brute-force oracle for the ball calculus.
//
// Text format: a group is "(weight item item ...)" where an item is a leaf
// name or a nested group, e.g. "(1 (1/5 a b) (1/5 c))". Leaf names start
// with a letter or underscore. Weights are positive rationals and every
// nested group's weight must be strictly smaller than its parent's.

namespace ultra {

// Parse tree for one node of the input format. Leaves have a name and no
// children; internal nodes have a weight and at least one child.
struct TreeNode {
    Rat weight = Rat(0);
    std::string name;
    std::vector<TreeNode> children;

    bool is_leaf() const { return children.empty(); }
};

class TreeSpace {
public:
    // Point and distance types consumed by the generic ball calculus.
    using Point = std::size_t;
    using Dist = Rat;
    // Finite point set; ball operations may fall back to enumeration.
    static constexpr bool enumerable = true;

    // Validates weights (positive, strictly decreasing downward), group
    // arity and leaf-name uniqueness, then precomputes all pair distances.
    explicit TreeSpace(TreeNode root);

    static TreeSpace parse(const std::string& text);

    std::size_t leaf_count() const { return names_.size(); }
    const std::string& leaf_name(std::size_t i) const;
    // Index of a named leaf; throws parse_error for unknown names.
    std::size_t leaf_index(const std::string& name) const;

    // Exact distance; zero iff a == b.
    const Rat& dist(std::size_t a, std::size_t b) const;
    bool dist_within(std::size_t a, std::size_t b, const Radius& r) const {
        return dist(a, b) <= r.value();
    }

    // Canonical text form; parses back to an identical space.
    std::string str() const;

private:
    void check_node(const TreeNode& node, const Rat* parent_weight);
    // Fills the distance matrix; returns the DFS leaf range of `node`.
    std::pair<std::size_t, std::size_t> fill(const TreeNode& node);

    TreeNode root_;
    std::vector<std::string> names_;
    std::vector<Rat> dmat_;
    std::size_t next_leaf_ = 0;
};

// Exact rational comparisons for the generic harness (NormValue spaces go
// through cmp_norms instead).
inline int dist_cmp(const Rat& a, const Rat& b) { return a < b ? -1 : (a == b ? 0 : 1); }

// Random space with roughly `target_leaves` leaves (at least 2 when asked
// for 2 or more), random branching and random strictly decreasing weights.
// Deterministic in the generator state.
TreeSpace random_tree(std::mt19937_64& rng, std::size_t target_leaves);

} // namespace ultra
