#pragma once

#include <karytree/rooted_tree.hpp>
#include <karytree/tournament.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace karytree {

/// One order-reduction step: `root` and its three lowest-labelled remaining
/// out-neighbours `removed` leave the tournament; `retained` is the fourth
/// out-neighbour, which stays behind and later anchors the star.
struct ReductionStep
{
    Vertex root = 0;
    std::array<Vertex, 3> removed{};
    Vertex retained = 0;

    friend auto operator==(const ReductionStep &, const ReductionStep &) -> bool = default;
};

struct ReductionTrace
{
    std::vector<ReductionStep> steps;
    int base_order = 0;
    /// 4-ary spanning tree of the base subtournament, in original labels.
    RootedTree base_tree = RootedTree::singleton(1, 0);
};

struct ConstructiveResult
{
    RootedTree tree;
    ReductionTrace trace;
};

/**
 * 4-ary spanning tree for any tournament of order >= 10. While at least 14
 * vertices remain, a maximum out-degree vertex v (lowest label on ties) and
 * three of its out-neighbours are set aside; the remaining 10..13 vertices
 * are solved directly (the in-neighbour pivot construction when it applies,
 * exact search otherwise); the stars are then reattached in LIFO order with
 * extend_with_star. Throws OrderTooSmall for n <= 9.
 */
auto solve_k4_constructive(const Tournament & t) -> ConstructiveResult;

/// Trees after each reattachment, base tree first. Replays the trace.
auto replay_trace(const Tournament & t, const ReductionTrace & trace) -> std::vector<RootedTree>;

/// One "step v a b c d" line per reduction step.
auto serialize_trace(const ReductionTrace & trace) -> std::string;

enum class ExtendRoute {
    /// The star root replaced the first vertex it beats on a root path.
    Splice,
    /// Splice followed by re-homing one child into a free slot.
    Rehome,
    /// Exact search on the union of both vertex sets.
    ExactFallback,
};

auto to_string(ExtendRoute route) -> std::string_view;

struct ExtendResult
{
    RootedTree tree;
    ExtendRoute route;
};

/**
 * Merges a k-ary tree `tree` of t with a vertex-disjoint star `star` of t
 * whose root u beats some vertex of `tree`, giving a k-ary tree on the union.
 *
 * Let v be the tree's root and x a vertex u beats. Walking from v to x, take
 * the first vertex y that u beats: u takes y's place under y's parent and
 * adopts y, or becomes the new root above v when y = v. With k - 1 leaves
 * that makes u full and keeps the rest of the tree intact, so the result is
 * always k-ary; if v beats u the splice never reaches v and the root stays v.
 * Other star sizes may overload u or add a second deficient vertex; then one
 * child of u is re-homed under a vertex with a free slot, and failing that
 * the union is solved by exact search (root v tried first when v beats u).
 *
 * Throws PreconditionViolated when the inputs overlap, are not a k-ary tree
 * and a star of t, the star has more than k leaves, u beats nothing in the
 * tree, or (fallback only) no k-ary tree exists on the union.
 */
auto extend_with_star(const Tournament & t, const RootedTree & tree, const RootedTree & star, int k) -> ExtendResult;

/**
 * Direct 4-ary tree for 10 <= n <= 13 via an in-neighbour pivot. With u the
 * maximum out-degree vertex and 1 <= d-(u) <= 4, look for v in N-(u) that
 * beats every other in-neighbour of u and at least 4 - d-(u) out-neighbours
 * of u. Then v adopts N-(u) \ {v}, 4 - d-(u) of those out-neighbours, and u;
 * among the n - 5 other out-neighbours of u some w beats n - 9 of the rest
 * (max out-degree inside them is at least ceil((n-6)/2) >= n - 9); w adopts
 * those and u adopts w plus the remaining three.
 *
 * Returns nullopt if no such v exists. Throws PreconditionViolated outside
 * 10 <= n <= 13 or when d-(u) is not in [1, 4].
 */
auto in_neighbor_pivot_construct(const Tournament & t) -> std::optional<RootedTree>;

}
