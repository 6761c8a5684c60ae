#include <karytree/constructive.hpp>

#include <karytree/errors.hpp>
#include <karytree/solver.hpp>

#include <algorithm>

namespace karytree {

namespace {

constexpr int kArity = 4;
constexpr int kBaseMin = 10;
constexpr int kBaseMax = 13;

auto check_star(const Tournament & t, const RootedTree & star, int k) -> std::vector<Vertex>
{
    std::vector<Vertex> leaves;
    for (auto x : star.members()) {
        if (x == star.root())
            continue;
        if (star.parent(x) != star.root())
            fail(ErrorCode::PreconditionViolated, "star has depth greater than one");
        if (! t.beats(star.root(), x))
            fail(ErrorCode::PreconditionViolated, "star edge " + std::to_string(star.root()) + "->" + std::to_string(x)
                    + " is not an arc");
        leaves.push_back(x);
    }
    if (leaves.empty() || static_cast<int>(leaves.size()) > k)
        fail(ErrorCode::PreconditionViolated, "star has " + std::to_string(leaves.size()) + " leaves, need 1.."
                + std::to_string(k));
    return leaves;
}

auto try_tree(const Tournament & t, int k, Vertex root, const std::vector<Vertex> & parent) -> std::optional<RootedTree>
{
    RootedTree candidate(t.order(), root, parent);
    if (validate_kary_tree(candidate, t, k).valid)
        return candidate;
    return std::nullopt;
}

// Moves a single vertex to a different parent that beats it. Children of
// `first` are tried before everything else.
auto rehome_one(const Tournament & t, int k, Vertex root, std::vector<Vertex> parent, Vertex first)
        -> std::optional<RootedTree>
{
    std::vector<Vertex> movable;
    for (Vertex c = 0; c < t.order(); ++c)
        if (parent[c] == first)
            movable.push_back(c);
    for (Vertex c = 0; c < t.order(); ++c)
        if (parent[c] >= 0 && parent[c] != first)
            movable.push_back(c);

    for (auto c : movable) {
        auto original = parent[c];
        for (Vertex z = 0; z < t.order(); ++z) {
            if (z == c || z == original || parent[z] == RootedTree::kAbsent || ! t.beats(z, c))
                continue;
            parent[c] = z;
            if (auto tree = try_tree(t, k, root, parent))
                return tree;
        }
        parent[c] = original;
    }
    return std::nullopt;
}

auto lift(const InducedTournament & sub, const RootedTree & tree, int universe) -> RootedTree
{
    std::vector<Vertex> parent(universe, RootedTree::kAbsent);
    for (Vertex v = 0; v < tree.universe(); ++v) {
        auto p = tree.parent(v);
        parent[sub.to_old[v]] = p >= 0 ? sub.to_old[p] : p;
    }
    return RootedTree(universe, sub.to_old[tree.root()], std::move(parent));
}

}

auto to_string(ExtendRoute route) -> std::string_view
{
    switch (route) {
        case ExtendRoute::Splice: return "splice";
        case ExtendRoute::Rehome: return "rehome";
        case ExtendRoute::ExactFallback: return "exact-fallback";
    }
    return "unknown";
}

auto extend_with_star(const Tournament & t, const RootedTree & tree, const RootedTree & star, int k) -> ExtendResult
{
    int n = t.order();
    if (tree.universe() != n || star.universe() != n)
        fail(ErrorCode::SizeMismatch, "tree, star and tournament must share one label universe");
    if (k < 1)
        fail(ErrorCode::PreconditionViolated, "arity must be at least 1");
    if (auto report = validate_kary_tree(tree, t, k); ! report.valid)
        fail(ErrorCode::PreconditionViolated, "tree is not a " + std::to_string(k) + "-ary tree of the tournament: "
                + report.detail);
    auto leaves = check_star(t, star, k);
    Vertex u = star.root();
    for (auto x : star.members())
        if (tree.contains(x))
            fail(ErrorCode::PreconditionViolated, "vertex " + std::to_string(x) + " is in both the tree and the star");

    Vertex target = -1;
    for (auto x : tree.members())
        if (t.beats(u, x)) {
            target = x;
            break;
        }
    if (target < 0)
        fail(ErrorCode::PreconditionViolated, "star root " + std::to_string(u) + " beats no vertex of the tree");

    std::vector<Vertex> path{target};
    while (path.back() != tree.root())
        path.push_back(tree.parent(path.back()));
    std::reverse(path.begin(), path.end());
    auto first = std::find_if(path.begin(), path.end(), [&](Vertex y) { return t.beats(u, y); });

    std::vector<Vertex> parent(tree.parents().begin(), tree.parents().end());
    for (auto leaf : leaves)
        parent[leaf] = u;
    Vertex root = tree.root();
    if (first == path.begin()) {
        parent[u] = RootedTree::kRoot;
        parent[tree.root()] = u;
        root = u;
    }
    else {
        parent[u] = *(first - 1);
        parent[*first] = u;
    }

    if (auto merged = try_tree(t, k, root, parent))
        return {*merged, ExtendRoute::Splice};
    if (auto merged = rehome_one(t, k, root, parent, u))
        return {*merged, ExtendRoute::Rehome};

    std::vector<Vertex> vertices = tree.members();
    for (auto x : star.members())
        vertices.push_back(x);
    auto sub = induced(t, vertices);
    SolverOptions options;
    if (t.beats(tree.root(), u))
        options.root = sub.to_new[tree.root()];
    auto result = find_kary_spanning_tree(sub.tournament, k, options);
    if (! result.found() && options.root) {
        options.root.reset();
        result = find_kary_spanning_tree(sub.tournament, k, options);
    }
    if (! result.found())
        fail(ErrorCode::PreconditionViolated, "no " + std::to_string(k) + "-ary tree spans the union");
    return {lift(sub, *result.tree, n), ExtendRoute::ExactFallback};
}

auto in_neighbor_pivot_construct(const Tournament & t) -> std::optional<RootedTree>
{
    int n = t.order();
    if (n < kBaseMin || n > kBaseMax)
        fail(ErrorCode::PreconditionViolated, "pivot construction needs 10 <= n <= 13, got " + std::to_string(n));

    std::vector<Vertex> everyone(n);
    for (Vertex v = 0; v < n; ++v)
        everyone[v] = v;
    Vertex u = max_outdegree_in(t, everyone).vertex;
    auto in_u = t.in_neighbors(u);
    auto out_u = t.out_neighbors(u);
    int in_degree = static_cast<int>(in_u.size());
    if (in_degree < 1 || in_degree > kArity)
        fail(ErrorCode::PreconditionViolated, "in-degree of the maximum out-degree vertex is "
                + std::to_string(in_degree) + ", need 1..4");

    int extra = kArity - in_degree;
    for (auto v : in_u) {
        bool beats_in = std::all_of(in_u.begin(), in_u.end(), [&](Vertex x) { return x == v || t.beats(v, x); });
        if (! beats_in)
            continue;
        std::vector<Vertex> borrowed;
        for (auto x : out_u)
            if (static_cast<int>(borrowed.size()) < extra && t.beats(v, x))
                borrowed.push_back(x);
        if (static_cast<int>(borrowed.size()) < extra)
            continue;

        std::vector<Vertex> parent(n, RootedTree::kAbsent);
        parent[v] = RootedTree::kRoot;
        for (auto x : in_u)
            if (x != v)
                parent[x] = v;
        for (auto x : borrowed)
            parent[x] = v;
        parent[u] = v;

        std::vector<Vertex> rest;
        for (auto x : out_u)
            if (std::find(borrowed.begin(), borrowed.end(), x) == borrowed.end())
                rest.push_back(x);

        int needed = n - 9;
        Vertex w = -1;
        for (auto x : rest) {
            int d = 0;
            for (auto y : rest)
                d += t.beats(x, y);
            if (d >= needed) {
                w = x;
                break;
            }
        }
        if (w < 0)
            fail(ErrorCode::InvariantViolation, "no vertex of the remaining out-neighbourhood beats n - 9 others");

        int adopted = 0;
        for (auto y : rest)
            if (adopted < needed && t.beats(w, y)) {
                parent[y] = w;
                ++adopted;
            }
        parent[w] = u;
        for (auto y : rest)
            if (parent[y] == RootedTree::kAbsent)
                parent[y] = u;
        return RootedTree(n, v, std::move(parent));
    }
    return std::nullopt;
}

auto solve_k4_constructive(const Tournament & t) -> ConstructiveResult
{
    int n = t.order();
    if (n < kBaseMin)
        fail(ErrorCode::OrderTooSmall, "constructive solver needs n >= 10, got " + std::to_string(n));

    std::vector<Vertex> alive(n);
    for (Vertex v = 0; v < n; ++v)
        alive[v] = v;

    ReductionTrace trace;
    while (static_cast<int>(alive.size()) > kBaseMax) {
        auto [v, degree] = max_outdegree_in(t, alive);
        std::vector<Vertex> out;
        for (auto x : alive)
            if (t.beats(v, x))
                out.push_back(x);
        ReductionStep step{v, {out[0], out[1], out[2]}, out[3]};
        std::erase_if(alive, [&](Vertex x) {
            return x == v || x == step.removed[0] || x == step.removed[1] || x == step.removed[2];
        });
        trace.steps.push_back(step);
    }

    auto base = induced(t, alive);
    std::optional<RootedTree> base_tree;
    try {
        base_tree = in_neighbor_pivot_construct(base.tournament);
    }
    catch (const KaryError & e) {
        if (e.code() != ErrorCode::PreconditionViolated)
            throw;
    }
    if (! base_tree) {
        auto result = find_kary_spanning_tree(base.tournament, kArity);
        if (! result.found())
            fail(ErrorCode::VerificationFailed, "base tournament of order " + std::to_string(base.tournament.order())
                    + " has no 4-ary spanning tree");
        base_tree = std::move(result.tree);
    }
    trace.base_order = base.tournament.order();
    trace.base_tree = lift(base, *base_tree, n);

    auto trees = replay_trace(t, trace);
    return ConstructiveResult{std::move(trees.back()), std::move(trace)};
}

auto replay_trace(const Tournament & t, const ReductionTrace & trace) -> std::vector<RootedTree>
{
    std::vector<RootedTree> trees{trace.base_tree};
    for (auto step = trace.steps.rbegin(); step != trace.steps.rend(); ++step) {
        auto s = star(step->root, step->removed, t.order());
        auto extended = extend_with_star(t, trees.back(), s, kArity);
        if (extended.route != ExtendRoute::Splice)
            fail(ErrorCode::InvariantViolation, "reattaching " + std::to_string(step->root) + " needed route "
                    + std::string(to_string(extended.route)));
        trees.push_back(std::move(extended.tree));
    }
    return trees;
}

auto serialize_trace(const ReductionTrace & trace) -> std::string
{
    std::string out;
    for (auto & step : trace.steps)
        out += "step " + std::to_string(step.root) + " " + std::to_string(step.removed[0]) + " "
            + std::to_string(step.removed[1]) + " " + std::to_string(step.removed[2]) + " "
            + std::to_string(step.retained) + "\n";
    return out;
}

}
