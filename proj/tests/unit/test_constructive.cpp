#include <karytree/catalog.hpp>
#include <karytree/constructive.hpp>
#include <karytree/solver.hpp>

#include "reference.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

using namespace karytree;
using karytree::testing::error_code_of;

namespace {

// A random instance for extend_with_star: a k-ary tree on a random subset,
// and a star of `leaves` leaves outside it whose root beats a tree vertex.
struct ExtendCase
{
    Tournament t;
    RootedTree tree;
    RootedTree star;
};

auto make_extend_case(std::uint64_t index, int k, int leaves) -> std::optional<ExtendCase>
{
    SplitMix64 rng(SeedSpec{606, index});
    int n = 2 * k + 4 + static_cast<int>(rng.below(8));
    auto t = random_tournament(n, SeedSpec{607, index});
    int outside = leaves + 1;
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v)
        order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Vertex> inside(order.begin(), order.end() - outside);
    std::sort(inside.begin(), inside.end());
    Vertex u = order[n - outside];
    std::vector<Vertex> star_leaves;
    for (int i = n - outside + 1; i < n; ++i) {
        if (! t.beats(u, order[i]))
            return std::nullopt;
        star_leaves.push_back(order[i]);
    }
    if (std::none_of(inside.begin(), inside.end(), [&](Vertex x) { return t.beats(u, x); }))
        return std::nullopt;

    auto sub = induced(t, inside);
    auto r = find_kary_spanning_tree(sub.tournament, k);
    if (! r.found())
        return std::nullopt;
    std::vector<Vertex> parent(n, RootedTree::kAbsent);
    for (Vertex v = 0; v < sub.tournament.order(); ++v) {
        auto p = r.tree->parent(v);
        parent[sub.to_old[v]] = p >= 0 ? sub.to_old[p] : p;
    }
    RootedTree tree(n, sub.to_old[r.tree->root()], parent);
    return ExtendCase{t, tree, star(u, star_leaves, n)};
}

auto member_set(const RootedTree & tree) -> std::set<Vertex>
{
    auto m = tree.members();
    return {m.begin(), m.end()};
}

}

TEST_CASE("solve_k4_constructive examples")
{
    auto t14 = transitive_tournament(14);
    auto r = solve_k4_constructive(t14);
    CHECK(validate_kary_spanning(r.tree, t14, 4).valid);
    REQUIRE(r.trace.steps.size() == 1);
    CHECK(r.trace.base_order == 10);
    CHECK(r.trace.steps[0] == ReductionStep{0, {1, 2, 3}, 4});
    CHECK(serialize_trace(r.trace) == "step 0 1 2 3 4\n");

    auto t50 = random_tournament(50, SeedSpec{50, 0});
    auto r50 = solve_k4_constructive(t50);
    CHECK(validate_kary_spanning(r50.tree, t50, 4).valid);
    CHECK(r50.trace.base_order == 50 - 4 * static_cast<int>(r50.trace.steps.size()));
    auto replayed = replay_trace(t50, r50.trace);
    CHECK(replayed.back() == r50.tree);

    CHECK(error_code_of([] { solve_k4_constructive(t9()); }) == ErrorCode::OrderTooSmall);
    CHECK(error_code_of([] { solve_k4_constructive(transitive_tournament(3)); }) == ErrorCode::OrderTooSmall);
}

TEST_CASE("constructive output validates on random tournaments")
{
    for (int trial = 0; trial < 200; ++trial) {
        SplitMix64 rng(SeedSpec{7000, static_cast<std::uint64_t>(trial)});
        int n = 10 + static_cast<int>(rng.below(191));
        auto t = random_tournament(n, SeedSpec{7001, static_cast<std::uint64_t>(trial)});
        auto r = solve_k4_constructive(t);
        INFO("n=" << n << " trial=" << trial);
        REQUIRE(validate_kary_spanning(r.tree, t, 4).valid);
        REQUIRE(tree_stats(r.tree).internal == kary_internal_count(n, 4));
        REQUIRE(r.trace.base_order >= 10);
        REQUIRE(r.trace.base_order <= 13);
    }
}

TEST_CASE("trace soundness")
{
    for (int trial = 0; trial < 40; ++trial) {
        int n = 14 + trial * 3;
        auto t = random_tournament(n, SeedSpec{8080, static_cast<std::uint64_t>(trial)});
        auto r = solve_k4_constructive(t);
        REQUIRE(r.trace.base_order == n - 4 * static_cast<int>(r.trace.steps.size()));

        // each step's root still had four out-neighbours when it was removed,
        // and it removed the three lowest of them
        std::vector<bool> alive(n, true);
        for (auto & step : r.trace.steps) {
            std::vector<Vertex> out;
            for (Vertex x = 0; x < n; ++x)
                if (alive[x] && t.beats(step.root, x))
                    out.push_back(x);
            REQUIRE(alive[step.root]);
            REQUIRE(out.size() >= 4);
            REQUIRE(std::array<Vertex, 3>{out[0], out[1], out[2]} == step.removed);
            REQUIRE(step.retained == out[3]);
            alive[step.root] = false;
            for (auto x : step.removed)
                alive[x] = false;
        }

        auto trees = replay_trace(t, r.trace);
        REQUIRE(trees.size() == r.trace.steps.size() + 1);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            REQUIRE(validate_kary_tree(trees[i], t, 4).valid);
            REQUIRE(trees[i].size() == r.trace.base_order + 4 * static_cast<int>(i));
        }
        REQUIRE(trees.back().spanning());
    }
}

TEST_CASE("constructive and exact search agree for n in 10..13")
{
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 10 + trial % 4;
        auto t = random_tournament(n, SeedSpec{1313, static_cast<std::uint64_t>(trial)});
        auto r = solve_k4_constructive(t);
        REQUIRE(validate_kary_spanning(r.tree, t, 4).valid);
        REQUIRE(find_kary_spanning_tree(t, 4).found());
    }
}

TEST_CASE("extend_with_star")
{
    SUBCASE("four-leaf star onto a star in transitive_10")
    {
        auto t = transitive_tournament(10);
        auto tree = star(5, std::array<Vertex, 4>{6, 7, 8, 9}, 10);
        auto s = star(0, std::array<Vertex, 4>{1, 2, 3, 4}, 10);
        auto merged = extend_with_star(t, tree, s, 4);
        CHECK(validate_kary_spanning(merged.tree, t, 4).valid);
        CHECK(merged.tree.size() == 10);
    }
    SUBCASE("splice over the root")
    {
        auto t = transitive_tournament(8);
        auto tree = star(4, std::array<Vertex, 3>{5, 6, 7}, 8);
        auto s = star(0, std::array<Vertex, 2>{1, 2}, 8);
        auto merged = extend_with_star(t, tree, s, 3);
        CHECK(merged.route == ExtendRoute::Splice);
        CHECK(merged.tree.root() == 0);
        CHECK(merged.tree.parent(4) == 0);
        CHECK(validate_kary_tree(merged.tree, t, 3).valid);
    }
    SUBCASE("precondition errors")
    {
        auto t = transitive_tournament(10);
        auto tree = star(5, std::array<Vertex, 4>{6, 7, 8, 9}, 10);
        auto overlap = star(0, std::array<Vertex, 2>{1, 5}, 10);
        CHECK(error_code_of([&] { extend_with_star(t, tree, overlap, 4); }) == ErrorCode::PreconditionViolated);

        auto low = star(5, std::array<Vertex, 4>{6, 7, 8, 9}, 10);
        auto beaten = star(0, std::array<Vertex, 4>{1, 2, 3, 4}, 10);
        // 5 beats nothing among {0, ..., 4}
        CHECK(error_code_of([&] { extend_with_star(t, beaten, low, 4); }) == ErrorCode::PreconditionViolated);

        auto wide = star(0, std::array<Vertex, 4>{1, 2, 3, 4}, 10);
        CHECK(error_code_of([&] { extend_with_star(t, tree, wide, 3); }) == ErrorCode::PreconditionViolated);

        auto backwards = star(4, std::array<Vertex, 1>{3}, 10);
        CHECK(error_code_of([&] { extend_with_star(t, tree, backwards, 4); }) == ErrorCode::PreconditionViolated);

        auto small = star(0, std::array<Vertex, 1>{1}, 9);
        CHECK(error_code_of([&] { extend_with_star(t, tree, small, 4); }) == ErrorCode::SizeMismatch);
    }
    SUBCASE("random instances with k - 1 leaves always splice")
    {
        int seen = 0, rooted = 0;
        for (std::uint64_t i = 0; seen < 400 && i < 20000; ++i) {
            int k = 2 + static_cast<int>(i % 4);
            auto c = make_extend_case(i, k, k - 1);
            if (! c)
                continue;
            ++seen;
            auto merged = extend_with_star(c->t, c->tree, c->star, k);
            REQUIRE(merged.route == ExtendRoute::Splice);
            REQUIRE(validate_kary_tree(merged.tree, c->t, k).valid);
            auto expect = member_set(c->tree);
            for (auto x : c->star.members())
                expect.insert(x);
            REQUIRE(member_set(merged.tree) == expect);
            if (c->t.beats(c->tree.root(), c->star.root())) {
                ++rooted;
                REQUIRE(merged.tree.root() == c->tree.root());
            }
        }
        CHECK(seen == 400);
        CHECK(rooted > 0);
    }
    SUBCASE("random instances with other star sizes")
    {
        int seen = 0, rooted = 0;
        for (std::uint64_t i = 0; seen < 300 && i < 50000; ++i) {
            int k = 2 + static_cast<int>(i % 3);
            int leaves = 1 + static_cast<int>((i / 3) % k);
            auto c = make_extend_case(i + 100000, k, leaves);
            if (! c)
                continue;
            ++seen;
            auto merged = extend_with_star(c->t, c->tree, c->star, k);
            REQUIRE(validate_kary_tree(merged.tree, c->t, k).valid);
            auto expect = member_set(c->tree);
            for (auto x : c->star.members())
                expect.insert(x);
            REQUIRE(member_set(merged.tree) == expect);
            if (c->t.beats(c->tree.root(), c->star.root())) {
                ++rooted;
                REQUIRE(merged.tree.root() == c->tree.root());
            }
        }
        CHECK(seen == 300);
        CHECK(rooted > 0);
    }
}

TEST_CASE("in_neighbor_pivot_construct")
{
    CHECK(error_code_of([] { in_neighbor_pivot_construct(transitive_tournament(10)); })
            == ErrorCode::PreconditionViolated);
    CHECK(error_code_of([] { in_neighbor_pivot_construct(random_tournament(14, SeedSpec{1, 1})); })
            == ErrorCode::PreconditionViolated);
    CHECK(error_code_of([] { in_neighbor_pivot_construct(t9()); }) == ErrorCode::PreconditionViolated);

    int fired = 0;
    for (std::uint64_t i = 0; i < 4000; ++i) {
        int n = 10 + static_cast<int>(i % 4);
        auto t = random_tournament(n, SeedSpec{1010, i});

        // evaluate the hypothesis directly
        int best = 0;
        Vertex u = 0;
        for (Vertex x = 0; x < n; ++x)
            if (t.out_degree(x) > best) {
                best = t.out_degree(x);
                u = x;
            }
        int d = t.in_degree(u);
        if (d < 1 || d > 4) {
            REQUIRE(error_code_of([&] { in_neighbor_pivot_construct(t); }) == ErrorCode::PreconditionViolated);
            continue;
        }
        bool hypothesis = false;
        for (auto v : t.in_neighbors(u)) {
            bool beats_in = true;
            for (auto x : t.in_neighbors(u))
                beats_in = beats_in && (x == v || t.beats(v, x));
            int outs = 0;
            for (auto x : t.out_neighbors(u))
                outs += t.beats(v, x);
            hypothesis = hypothesis || (beats_in && outs >= 4 - d);
        }

        auto tree = in_neighbor_pivot_construct(t);
        REQUIRE(tree.has_value() == hypothesis);
        if (! tree)
            continue;
        ++fired;
        REQUIRE(validate_kary_spanning(*tree, t, 4).valid);

        // shape: root v -> {..., u}, u -> {..., w}, w -> the remaining n - 9
        auto kids = tree->children();
        REQUIRE(tree->parent(u) == tree->root());
        REQUIRE(t.beats(tree->root(), u));
        REQUIRE(kids[u].size() == 4);
        REQUIRE(kids[tree->root()].size() == 4);
        int parents_of_leaves = 0;
        Vertex w = -1;
        for (auto c : kids[u])
            if (! kids[c].empty()) {
                w = c;
                ++parents_of_leaves;
            }
        REQUIRE(parents_of_leaves == 1);
        REQUIRE(static_cast<int>(kids[w].size()) == n - 9);
        for (auto y : kids[w])
            REQUIRE(kids[y].empty());
    }
    CHECK(fired > 50);
}
