#include "ultra/tree_space.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ultra {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool weight_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'; }

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        if (i >= s.size()) throw parse_error("tree: unexpected end of input");
        return s[i];
    }
    void expect(char c) {
        if (peek() != c)
            throw parse_error(std::string("tree: expected '") + c + "' at offset " +
                              std::to_string(i));
        ++i;
    }
    std::string token(bool (*cls)(char), const char* what) {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && cls(s[i])) ++i;
        if (i == start)
            throw parse_error(std::string("tree: expected ") + what + " at offset " +
                              std::to_string(start));
        return s.substr(start, i - start);
    }
};

TreeNode parse_group(Cursor& cur) {
    cur.expect('(');
    TreeNode node;
    node.weight = parse_rat(cur.token(weight_char, "a weight"));
    while (cur.peek() != ')') {
        if (cur.peek() == '(') {
            node.children.push_back(parse_group(cur));
        } else if (name_start(cur.peek())) {
            TreeNode leaf;
            leaf.name = cur.token(name_char, "a leaf name");
            node.children.push_back(std::move(leaf));
        } else {
            throw parse_error(std::string("tree: unexpected character '") + cur.peek() +
                              "' at offset " + std::to_string(cur.i));
        }
    }
    cur.expect(')');
    return node;
}

void render(const TreeNode& node, std::ostringstream& out) {
    if (node.is_leaf()) {
        out << node.name;
        return;
    }
    out << '(' << rat_str(node.weight);
    for (const TreeNode& c : node.children) {
        out << ' ';
        render(c, out);
    }
    out << ')';
}

} // namespace

TreeSpace::TreeSpace(TreeNode root) : root_(std::move(root)) {
    if (root_.is_leaf())
        throw parse_error("tree: root must be a weighted group, not a bare leaf");
    check_node(root_, nullptr);
    std::vector<std::string> sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw parse_error("tree: duplicate leaf name '" + *dup + "'");
    dmat_.assign(names_.size() * names_.size(), Rat(0));
    next_leaf_ = 0;
    fill(root_);
}

void TreeSpace::check_node(const TreeNode& node, const Rat* parent_weight) {
    if (node.is_leaf()) {
        if (node.name.empty() || !name_start(node.name[0]))
            throw parse_error("tree: missing or malformed leaf name");
        for (char c : node.name)
            if (!name_char(c)) throw parse_error("tree: malformed leaf name '" + node.name + "'");
        names_.push_back(node.name);
        return;
    }
    if (node.weight <= 0)
        throw parse_error("tree: node weight must be positive, got " + rat_str(node.weight));
    if (parent_weight && !(node.weight < *parent_weight))
        throw parse_error("tree: weight " + rat_str(node.weight) +
                          " does not decrease below parent weight " + rat_str(*parent_weight));
    if (node.children.empty()) throw parse_error("tree: empty group");
    for (const TreeNode& c : node.children) check_node(c, &node.weight);
}

std::pair<std::size_t, std::size_t> TreeSpace::fill(const TreeNode& node) {
    if (node.is_leaf()) {
        std::size_t idx = next_leaf_++;
        return {idx, idx + 1};
    }
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    ranges.reserve(node.children.size());
    for (const TreeNode& c : node.children) ranges.push_back(fill(c));
    // Leaves drawn from different children meet exactly at this node.
    std::size_t n = names_.size();
    for (std::size_t ci = 0; ci + 1 < ranges.size(); ++ci)
        for (std::size_t cj = ci + 1; cj < ranges.size(); ++cj)
            for (std::size_t a = ranges[ci].first; a < ranges[ci].second; ++a)
                for (std::size_t b = ranges[cj].first; b < ranges[cj].second; ++b) {
                    dmat_[a * n + b] = node.weight;
                    dmat_[b * n + a] = node.weight;
                }
    return {ranges.front().first, ranges.back().second};
}

const std::string& TreeSpace::leaf_name(std::size_t i) const {
    if (i >= names_.size()) throw precondition_failed("tree: leaf index out of range");
    return names_[i];
}

std::size_t TreeSpace::leaf_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    throw parse_error("tree: no leaf named '" + name + "'");
}

const Rat& TreeSpace::dist(std::size_t a, std::size_t b) const {
    if (a >= names_.size() || b >= names_.size())
        throw precondition_failed("tree: leaf index out of range");
    return dmat_[a * names_.size() + b];
}

std::string TreeSpace::str() const {
    std::ostringstream out;
    render(root_, out);
    return out.str();
}

TreeSpace TreeSpace::parse(const std::string& text) {
    Cursor cur{text};
    if (cur.peek() != '(') throw parse_error("tree: input must start with '('");
    TreeNode root = parse_group(cur);
    if (!cur.done())
        throw parse_error("tree: trailing input at offset " + std::to_string(cur.i));
    return TreeSpace(std::move(root));
}

namespace {

TreeNode random_node(std::mt19937_64& rng, std::size_t leaves, const Rat& weight,
                     std::size_t& next_name) {
    if (leaves == 1) {
        TreeNode leaf;
        leaf.name = "L" + std::to_string(next_name++);
        return leaf;
    }
    TreeNode node;
    node.weight = weight;
    std::size_t max_arity = std::min<std::size_t>(leaves, 4);
    std::uniform_int_distribution<std::size_t> arity_d(2, max_arity);
    std::size_t arity = arity_d(rng);
    // Split the leaf budget into `arity` nonzero parts.
    std::vector<std::size_t> parts(arity, 1);
    for (std::size_t extra = leaves - arity; extra > 0; --extra)
        parts[std::uniform_int_distribution<std::size_t>(0, arity - 1)(rng)] += 1;
    for (std::size_t part : parts) {
        // Shrink by a random factor in [1/8, 4/5] so depth stays productive.
        std::uniform_int_distribution<int> num_d(1, 4), den_d(5, 8);
        Rat child_w = weight * Rat(num_d(rng), den_d(rng));
        node.children.push_back(random_node(rng, part, child_w, next_name));
    }
    return node;
}

} // namespace

TreeSpace random_tree(std::mt19937_64& rng, std::size_t target_leaves) {
    if (target_leaves < 2) target_leaves = 2;
    std::uniform_int_distribution<int> num_d(1, 6), den_d(1, 6);
    Rat root_w(std::max(num_d(rng), den_d(rng)), std::min(num_d(rng), den_d(rng)));
    std::size_t next_name = 0;
    return TreeSpace(random_node(rng, target_leaves, root_w, next_name));
}

} // namespace ultra
