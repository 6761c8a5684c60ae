#include <karytree/rooted_tree.hpp>

#include <karytree/errors.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

namespace karytree {

RootedTree::RootedTree(int universe, Vertex root, std::vector<Vertex> parent) :
    _root(root),
    _parent(std::move(parent))
{
    if (universe < 1 || static_cast<int>(_parent.size()) != universe)
        fail(ErrorCode::InvariantViolation, "parent array length " + std::to_string(_parent.size())
                + " does not match universe " + std::to_string(universe));
    if (root < 0 || root >= universe)
        fail(ErrorCode::VertexOutOfRange, "root " + std::to_string(root) + " outside [0, " + std::to_string(universe) + ")");
    if (_parent[root] != kRoot)
        fail(ErrorCode::InvariantViolation, "root entry must be -1");

    for (Vertex v = 0; v < universe; ++v) {
        auto p = _parent[v];
        if (p == kAbsent)
            continue;
        ++_size;
        if (v == root)
            continue;
        if (p == kRoot)
            fail(ErrorCode::InvariantViolation, "vertex " + std::to_string(v) + " is a second root");
        if (p < 0 || p >= universe)
            fail(ErrorCode::VertexOutOfRange, "parent " + std::to_string(p) + " of " + std::to_string(v) + " out of range");
        if (_parent[p] == kAbsent)
            fail(ErrorCode::InvariantViolation, "parent " + std::to_string(p) + " of " + std::to_string(v) + " is not in the tree");
    }
}

auto RootedTree::singleton(int universe, Vertex root) -> RootedTree
{
    std::vector<Vertex> parent(std::max(universe, 0), kAbsent);
    if (root >= 0 && root < universe)
        parent[root] = kRoot;
    return RootedTree(universe, root, std::move(parent));
}

auto RootedTree::members() const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    result.reserve(_size);
    for (Vertex v = 0; v < universe(); ++v)
        if (_parent[v] != kAbsent)
            result.push_back(v);
    return result;
}

auto RootedTree::child_counts() const -> std::vector<int>
{
    std::vector<int> result(universe(), 0);
    for (Vertex v = 0; v < universe(); ++v)
        if (_parent[v] >= 0)
            ++result[_parent[v]];
    return result;
}

auto RootedTree::children() const -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> result(universe());
    for (Vertex v = 0; v < universe(); ++v)
        if (_parent[v] >= 0)
            result[_parent[v]].push_back(v);
    return result;
}

auto RootedTree::is_acyclic() const -> bool
{
    // 0 unknown, 1 on the current walk, 2 known to reach the root
    std::vector<char> state(universe(), 0);
    state[_root] = 2;
    std::vector<Vertex> walk;
    for (Vertex v = 0; v < universe(); ++v) {
        if (_parent[v] == kAbsent || state[v] == 2)
            continue;
        walk.clear();
        Vertex x = v;
        while (state[x] == 0) {
            state[x] = 1;
            walk.push_back(x);
            x = _parent[x];
        }
        if (state[x] == 1)
            return false;
        for (auto w : walk)
            state[w] = 2;
    }
    return true;
}

auto to_string(KaryFailure failure) -> std::string_view
{
    switch (failure) {
        case KaryFailure::NonArcEdge: return "NonArcEdge";
        case KaryFailure::TwoDeficient: return "TwoDeficient";
        case KaryFailure::OverArity: return "OverArity";
        case KaryFailure::NotSpanning: return "NotSpanning";
        case KaryFailure::CyclicParent: return "CyclicParent";
    }
    return "Unknown";
}

namespace {

auto check_kary(const RootedTree & tree, const Tournament & t, int k, bool require_spanning) -> KaryReport
{
    if (tree.universe() != t.order())
        fail(ErrorCode::SizeMismatch, "tree has " + std::to_string(tree.universe()) + " labels, tournament has "
                + std::to_string(t.order()));
    if (k < 1)
        fail(ErrorCode::PreconditionViolated, "arity must be at least 1");

    KaryReport report;
    report.k = k;
    auto reject = [&](KaryFailure why, std::string detail) {
        report.valid = false;
        report.full = false;
        report.deficient_vertex.reset();
        report.failure = why;
        report.detail = std::move(detail);
        return report;
    };

    if (require_spanning && ! tree.spanning())
        return reject(KaryFailure::NotSpanning, "tree covers " + std::to_string(tree.size()) + " of "
                + std::to_string(t.order()) + " vertices");
    if (! tree.is_acyclic())
        return reject(KaryFailure::CyclicParent, "parent map contains a cycle");

    for (Vertex v = 0; v < tree.universe(); ++v) {
        auto p = tree.parent(v);
        if (p >= 0 && ! t.beats(p, v))
            return reject(KaryFailure::NonArcEdge, "tree edge " + std::to_string(p) + "->" + std::to_string(v)
                    + " is not an arc");
    }

    auto counts = tree.child_counts();
    std::optional<Vertex> deficient;
    for (Vertex v = 0; v < tree.universe(); ++v) {
        if (counts[v] > k)
            return reject(KaryFailure::OverArity, "vertex " + std::to_string(v) + " has " + std::to_string(counts[v])
                    + " children");
        if (counts[v] > 0 && counts[v] < k) {
            if (deficient)
                return reject(KaryFailure::TwoDeficient, "vertices " + std::to_string(*deficient) + " and "
                        + std::to_string(v) + " both have fewer than " + std::to_string(k) + " children");
            deficient = v;
        }
    }

    report.valid = true;
    report.full = ! deficient;
    report.deficient_vertex = deficient;
    return report;
}

}

auto validate_kary_spanning(const RootedTree & tree, const Tournament & t, int k) -> KaryReport
{
    return check_kary(tree, t, k, true);
}

auto validate_kary_tree(const RootedTree & tree, const Tournament & t, int k) -> KaryReport
{
    return check_kary(tree, t, k, false);
}

auto star(Vertex root, std::span<const Vertex> leaves, int universe) -> RootedTree
{
    if (leaves.empty())
        fail(ErrorCode::EmptyLeaves, "a star needs at least one leaf");
    if (std::find(leaves.begin(), leaves.end(), root) != leaves.end())
        fail(ErrorCode::RootInLeaves, "root " + std::to_string(root) + " listed as a leaf");

    if (universe == 0)
        universe = std::max(root, *std::max_element(leaves.begin(), leaves.end())) + 1;
    auto in_range = [&](Vertex v) { return v >= 0 && v < universe; };
    if (! in_range(root) || ! std::all_of(leaves.begin(), leaves.end(), in_range))
        fail(ErrorCode::VertexOutOfRange, "star vertex outside [0, " + std::to_string(universe) + ")");

    std::vector<Vertex> parent(universe, RootedTree::kAbsent);
    parent[root] = RootedTree::kRoot;
    for (auto leaf : leaves) {
        if (parent[leaf] != RootedTree::kAbsent)
            fail(ErrorCode::InvariantViolation, "leaf " + std::to_string(leaf) + " listed twice");
        parent[leaf] = root;
    }
    return RootedTree(universe, root, std::move(parent));
}

auto tree_stats(const RootedTree & tree) -> TreeStats
{
    TreeStats stats;
    auto counts = tree.child_counts();
    for (Vertex v = 0; v < tree.universe(); ++v) {
        if (! tree.contains(v))
            continue;
        if (counts[v] == 0)
            ++stats.leaves;
        else {
            ++stats.internal;
            stats.child_counts.push_back(counts[v]);
        }
    }
    std::sort(stats.child_counts.begin(), stats.child_counts.end(), std::greater<>());
    return stats;
}

auto serialize_tree(const RootedTree & tree) -> std::string
{
    if (! tree.spanning())
        fail(ErrorCode::PreconditionViolated, "only spanning trees can be serialised");
    std::string out = "tree " + std::to_string(tree.universe()) + " " + std::to_string(tree.root()) + "\n";
    for (Vertex v = 0; v < tree.universe(); ++v) {
        if (v > 0)
            out.push_back(' ');
        out += std::to_string(tree.parent(v));
    }
    out.push_back('\n');
    return out;
}

auto parse_tree(std::string_view text) -> RootedTree
{
    std::istringstream in{std::string(text)};
    auto read_int = [&](const char * what) {
        std::string token;
        if (! (in >> token))
            fail(ErrorCode::SyntaxError, std::string("unexpected end of input reading ") + what);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            fail(ErrorCode::SyntaxError, std::string("expected integer for ") + what + ", got '" + token + "'");
        return value;
    };

    std::string header;
    if (! (in >> header) || header != "tree")
        fail(ErrorCode::SyntaxError, "tree file must start with 'tree'");
    auto n = read_int("order");
    auto root = read_int("root");
    if (n < 1 || n > (1 << 20))
        fail(ErrorCode::SyntaxError, "order " + std::to_string(n) + " out of range");

    std::vector<Vertex> parent(n);
    for (auto & p : parent) {
        auto value = read_int("parent entry");
        if (value < -1 || value >= n)
            fail(ErrorCode::InvariantViolation, "parent entry " + std::to_string(value) + " out of range");
        p = static_cast<Vertex>(value);
    }
    std::string extra;
    if (in >> extra)
        fail(ErrorCode::SyntaxError, "trailing data after parent list: '" + extra + "'");
    if (root < 0 || root >= n)
        fail(ErrorCode::InvariantViolation, "root " + std::to_string(root) + " out of range");
    return RootedTree(static_cast<int>(n), static_cast<Vertex>(root), std::move(parent));
}

}
