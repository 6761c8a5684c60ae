#pragma once

#include <karytree/rooted_tree.hpp>
#include <karytree/tournament.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace karytree {

enum class Outcome {
    Found,
    ProvenNone,
    BudgetExceeded,
};

auto to_string(Outcome outcome) -> std::string_view;

struct SolveResult
{
    Outcome outcome = Outcome::BudgetExceeded;
    /// Present iff outcome is Found.
    std::optional<RootedTree> tree;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};

    auto found() const -> bool { return outcome == Outcome::Found; }
};

struct SolverOptions
{
    /// Cap on search-tree nodes; absent means unbounded.
    std::optional<std::uint64_t> budget;
    /// Run obstruction_check once before searching. Turned off when the
    /// search has to stand as independent evidence next to the witness.
    bool obstruction_precheck = true;
    /// Only try this root.
    std::optional<Vertex> root;
};

/**
 * Complete search for a k-ary spanning tree.
 *
 * Roots are tried in decreasing out-degree order (lowest label on ties).
 * For each root the tree is grown breadth first: the next unprocessed
 * vertex chooses its whole child set among its unplaced out-neighbours,
 * either k children, the single deficient count (n-1) - k(M-1) where
 * M = ceil((n-1)/k), or none. Every k-ary spanning tree is reachable this
 * way, so exhausting all roots proves nonexistence. Nodes are pruned when
 *  - some unplaced vertex cannot be reached from the open vertices through
 *    unplaced vertices,
 *  - the open and unplaced vertices cannot offer enough child slots, or
 *  - fewer vertices have k unplaced out-neighbours than full internal
 *    vertices are still required.
 */
auto find_kary_spanning_tree(const Tournament & t, int k, const SolverOptions & options = {}) -> SolveResult;

auto find_kary_spanning_tree(const Tournament & t, int k, std::optional<std::uint64_t> budget) -> SolveResult;

/// A Hamiltonian path by binary insertion, as a 1-ary spanning tree rooted
/// at the first path vertex.
auto hamiltonian_path(const Tournament & t) -> RootedTree;

/// Vertices along a path tree, root first.
auto path_order(const RootedTree & path) -> std::vector<Vertex>;

struct ObstructionWitness
{
    int k = 0;
    /// Vertices of out-degree at least k.
    std::vector<Vertex> t_geq_k;
    /// max over pairs u != v in t_geq_k of |(N+(u) | N+(v)) \ {u, v}|;
    /// 0 when t_geq_k has fewer than two vertices.
    int max_pair_union = 0;
    std::optional<std::pair<Vertex, Vertex>> attaining_pair;
};

/// Pairwise out-neighbourhood test: a returned witness proves that t has no
/// k-ary spanning tree. Absent when n < 2k + 1 or some pair of vertices in
/// t_geq_k jointly beats more than 2k - 2 others.
auto obstruction_check(const Tournament & t, int k) -> std::optional<ObstructionWitness>;

/// True iff n > 1 and ceil((n-1)/k) < mu. mu must be a lower bound on the domination
/// number; the non-leaf vertices of a k-ary spanning tree dominate V, and
/// there are exactly ceil((n-1)/k) of them.
auto domination_bound_check(const Tournament & t, int k, int mu) -> bool;

}
