#pragma once

#include <karytree/tournament.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace karytree {

/**
 * A rooted tree over a subset of the labels [0, universe). parent[root] is
 * kRoot, parent[v] is kAbsent for labels outside the tree, and every other
 * entry names the parent. Spanning trees use every label.
 *
 * The constructor only checks that entries are in range and that parents are
 * members; acyclicity is left to the validator so that malformed certificates
 * can still be loaded and diagnosed.
 */
class RootedTree
{
public:
    static constexpr Vertex kRoot = -1;
    static constexpr Vertex kAbsent = -2;

    RootedTree(int universe, Vertex root, std::vector<Vertex> parent);

    /// A single-vertex tree.
    static auto singleton(int universe, Vertex root) -> RootedTree;

    auto universe() const -> int { return static_cast<int>(_parent.size()); }
    auto root() const -> Vertex { return _root; }
    auto size() const -> int { return _size; }
    auto spanning() const -> bool { return _size == universe(); }

    auto contains(Vertex v) const -> bool { return v >= 0 && v < universe() && _parent[v] != kAbsent; }
    auto parent(Vertex v) const -> Vertex { return _parent[v]; }
    auto parents() const -> std::span<const Vertex> { return _parent; }

    auto members() const -> std::vector<Vertex>;
    auto child_counts() const -> std::vector<int>;
    auto children() const -> std::vector<std::vector<Vertex>>;

    /// True iff following parents from every member reaches the root.
    auto is_acyclic() const -> bool;

    friend auto operator==(const RootedTree &, const RootedTree &) -> bool = default;

private:
    Vertex _root;
    int _size = 0;
    std::vector<Vertex> _parent;
};

enum class KaryFailure {
    NonArcEdge,
    TwoDeficient,
    OverArity,
    NotSpanning,
    CyclicParent,
};

auto to_string(KaryFailure failure) -> std::string_view;

struct KaryReport
{
    bool valid = false;
    int k = 0;
    bool full = false;
    std::optional<Vertex> deficient_vertex;
    std::optional<KaryFailure> failure;
    std::string detail;
};

/// Is `tree` a k-ary spanning tree of t using only arcs of t? Throws
/// SizeMismatch if the label universes differ.
auto validate_kary_spanning(const RootedTree & tree, const Tournament & t, int k) -> KaryReport;

/// As validate_kary_spanning, but the tree may cover any subset of vertices.
auto validate_kary_tree(const RootedTree & tree, const Tournament & t, int k) -> KaryReport;

/// Depth-one tree. universe 0 means "largest label + 1".
auto star(Vertex root, std::span<const Vertex> leaves, int universe = 0) -> RootedTree;

struct TreeStats
{
    int leaves = 0;
    int internal = 0;
    /// Child counts of the internal vertices, sorted decreasing.
    std::vector<int> child_counts;
};

auto tree_stats(const RootedTree & tree) -> TreeStats;

/// "tree <n> <root>" then one line of n parent entries, root entry -1.
/// Only spanning trees have a text form.
auto serialize_tree(const RootedTree & tree) -> std::string;
auto parse_tree(std::string_view text) -> RootedTree;

/// Number of internal vertices of any k-ary tree on n vertices.
constexpr auto kary_internal_count(int n, int k) -> int { return (n - 1 + k - 1) / k; }

}
