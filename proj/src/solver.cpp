#include <karytree/solver.hpp>

#include <karytree/bits.hpp>
#include <karytree/errors.hpp>

#include <algorithm>
#include <numeric>

namespace karytree {

auto to_string(Outcome outcome) -> std::string_view
{
    switch (outcome) {
        case Outcome::Found: return "Found";
        case Outcome::ProvenNone: return "ProvenNone";
        case Outcome::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

namespace {

// Beyond this order k = 1 is answered by path insertion instead of search.
constexpr int kPathSearchLimit = 64;

template <unsigned n_words_>
class Searcher
{
    using Bits = FixedBits<n_words_>;

public:
    Searcher(const Tournament & t, int k, std::optional<std::uint64_t> budget) :
        _n(t.order()),
        _k(k),
        _budget(budget),
        _out(t.order()),
        _in(t.order())
    {
        for (Vertex v = 0; v < _n; ++v) {
            _out[v] = Bits::from_words(t.row(v));
            for (Vertex u = 0; u < _n; ++u)
                if (t.beats(u, v))
                    _in[v].set(u);
        }
        int internal = kary_internal_count(_n, _k);
        int remainder = (_n - 1) - _k * (internal - 1);
        if (remainder == _k) {
            _full_needed = internal;
            _deficient_size = 0;
        }
        else {
            _full_needed = internal - 1;
            _deficient_size = remainder;
        }
    }

    auto run(std::span<const Vertex> roots) -> std::optional<RootedTree>
    {
        for (auto root : roots) {
            _unplaced = Bits::prefix(_n);
            _unplaced.reset(root);
            _order.assign(1, root);
            _parent.assign(_n, RootedTree::kAbsent);
            _parent[root] = RootedTree::kRoot;
            _full_left = _full_needed;
            _deficient_left = _deficient_size > 0 ? 1 : 0;

            if (search(0))
                return RootedTree(_n, root, _parent);
            if (_aborted)
                return std::nullopt;
        }
        return std::nullopt;
    }

    auto nodes() const -> std::uint64_t { return _nodes; }
    auto aborted() const -> bool { return _aborted; }

private:
    auto search(std::size_t head) -> bool
    {
        if (_budget && _nodes >= *_budget) {
            _aborted = true;
            return false;
        }
        ++_nodes;

        if (_unplaced.empty())
            return true;
        if (head == _order.size())
            return false;

        Bits open;
        for (auto i = head; i < _order.size(); ++i)
            open.set(_order[i]);

        if (! feasible(open))
            return false;

        Vertex q = _order[head];
        auto candidates = ordered_candidates(q, open);
        int available = static_cast<int>(candidates.size());

        if (_full_left > 0 && available >= _k) {
            --_full_left;
            bool ok = branch_children(head, q, candidates, _k);
            ++_full_left;
            if (ok || _aborted)
                return ok;
        }
        if (_deficient_left > 0 && available >= _deficient_size) {
            --_deficient_left;
            bool ok = branch_children(head, q, candidates, _deficient_size);
            ++_deficient_left;
            if (ok || _aborted)
                return ok;
        }
        return search(head + 1);
    }

    // Reachability, slot capacity and full-vertex counting for the residual
    // instance. All three are necessary conditions for completing the tree.
    auto feasible(const Bits & open) -> bool
    {
        Bits reached;
        Bits frontier = open;
        while (true) {
            Bits next;
            frontier.for_each([&](int x) { next |= _out[x]; });
            next &= _unplaced;
            next.subtract(reached);
            if (next.empty())
                break;
            reached |= next;
            frontier = next;
        }
        if (! (reached == _unplaced))
            return false;

        int unplaced_count = _unplaced.count();
        int capacity = 0;
        int can_be_full = 0;
        (open | _unplaced).for_each([&](int x) {
            int d = _out[x].intersection_count(_unplaced);
            capacity += std::min(_k, d);
            if (d >= _k)
                ++can_be_full;
        });
        return capacity >= unplaced_count && can_be_full >= _full_left;
    }

    // Unplaced out-neighbours of q, those with the fewest possible parents
    // first.
    auto ordered_candidates(Vertex q, const Bits & open) const -> std::vector<Vertex>
    {
        Bits avail = open | _unplaced;
        std::vector<std::pair<int, Vertex>> keyed;
        (_out[q] & _unplaced).for_each([&](int x) { keyed.emplace_back(_in[x].intersection_count(avail), x); });
        std::sort(keyed.begin(), keyed.end());
        std::vector<Vertex> result;
        result.reserve(keyed.size());
        for (auto & [key, x] : keyed)
            result.push_back(x);
        return result;
    }

    auto branch_children(std::size_t head, Vertex q, const std::vector<Vertex> & candidates, int size) -> bool
    {
        int m = static_cast<int>(candidates.size());
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            for (auto i : pick) {
                auto c = candidates[i];
                _parent[c] = q;
                _unplaced.reset(c);
                _order.push_back(c);
            }
            if (search(head + 1))
                return true;
            for (auto i : pick) {
                auto c = candidates[i];
                _parent[c] = RootedTree::kAbsent;
                _unplaced.set(c);
                _order.pop_back();
            }
            if (_aborted)
                return false;

            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i)
                --i;
            if (i < 0)
                return false;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }

    int _n;
    int _k;
    std::optional<std::uint64_t> _budget;
    std::vector<Bits> _out;
    std::vector<Bits> _in;
    int _full_needed = 0;
    int _deficient_size = 0;

    Bits _unplaced;
    std::vector<Vertex> _order;
    std::vector<Vertex> _parent;
    int _full_left = 0;
    int _deficient_left = 0;

    std::uint64_t _nodes = 0;
    bool _aborted = false;
};

auto roots_by_out_degree(const Tournament & t) -> std::vector<Vertex>
{
    std::vector<Vertex> roots(t.order());
    std::iota(roots.begin(), roots.end(), 0);
    std::stable_sort(roots.begin(), roots.end(), [&](Vertex a, Vertex b) { return t.out_degree(a) > t.out_degree(b); });
    return roots;
}

}

auto find_kary_spanning_tree(const Tournament & t, int k, const SolverOptions & options) -> SolveResult
{
    if (k < 1)
        fail(ErrorCode::PreconditionViolated, "arity must be at least 1");

    auto start = std::chrono::steady_clock::now();
    SolveResult result;
    auto finish = [&]() {
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    };

    int n = t.order();
    if (n == 1) {
        result.outcome = Outcome::Found;
        result.tree = RootedTree::singleton(1, 0);
        return finish();
    }
    if (k == 1 && n > kPathSearchLimit && ! options.root) {
        result.outcome = Outcome::Found;
        result.tree = hamiltonian_path(t);
        return finish();
    }
    if (options.obstruction_precheck && obstruction_check(t, k)) {
        result.outcome = Outcome::ProvenNone;
        return finish();
    }

    auto roots = roots_by_out_degree(t);
    if (options.root) {
        if (*options.root < 0 || *options.root >= n)
            fail(ErrorCode::VertexOutOfRange, "root " + std::to_string(*options.root) + " out of range");
        roots.assign(1, *options.root);
    }
    bool dispatched = dispatch_words(n, [&](auto words) {
        Searcher<decltype(words)::value> searcher(t, k, options.budget);
        result.tree = searcher.run(roots);
        result.nodes_explored = searcher.nodes();
        if (result.tree)
            result.outcome = Outcome::Found;
        else if (searcher.aborted())
            result.outcome = Outcome::BudgetExceeded;
        else
            result.outcome = Outcome::ProvenNone;
    });
    if (! dispatched)
        fail(ErrorCode::OrderTooLarge, "exact search supports at most 2048 vertices");
    return finish();
}

auto find_kary_spanning_tree(const Tournament & t, int k, std::optional<std::uint64_t> budget) -> SolveResult
{
    SolverOptions options;
    options.budget = budget;
    return find_kary_spanning_tree(t, k, options);
}

auto hamiltonian_path(const Tournament & t) -> RootedTree
{
    int n = t.order();
    std::vector<Vertex> path;
    path.reserve(n);
    path.push_back(0);
    for (Vertex x = 1; x < n; ++x) {
        if (t.beats(x, path.front())) {
            path.insert(path.begin(), x);
            continue;
        }
        if (t.beats(path.back(), x)) {
            path.push_back(x);
            continue;
        }
        // path[lo] beats x, x beats path[hi]
        std::size_t lo = 0, hi = path.size() - 1;
        while (hi - lo > 1) {
            auto mid = lo + (hi - lo) / 2;
            if (t.beats(path[mid], x))
                lo = mid;
            else
                hi = mid;
        }
        path.insert(path.begin() + static_cast<std::ptrdiff_t>(hi), x);
    }

    std::vector<Vertex> parent(n);
    parent[path.front()] = RootedTree::kRoot;
    for (std::size_t i = 1; i < path.size(); ++i)
        parent[path[i]] = path[i - 1];
    return RootedTree(n, path.front(), std::move(parent));
}

auto path_order(const RootedTree & path) -> std::vector<Vertex>
{
    auto children = path.children();
    std::vector<Vertex> result{path.root()};
    while (! children[result.back()].empty())
        result.push_back(children[result.back()].front());
    return result;
}

auto obstruction_check(const Tournament & t, int k) -> std::optional<ObstructionWitness>
{
    int n = t.order();
    if (k < 1 || n < 2 * k + 1)
        return std::nullopt;

    ObstructionWitness witness;
    witness.k = k;
    for (Vertex v = 0; v < n; ++v)
        if (t.out_degree(v) >= k)
            witness.t_geq_k.push_back(v);

    // With n >= 2k+1 any k-ary spanning tree has at least ceil(2k/k) = 2
    // internal vertices, at most one of them deficient; when n = 2k+1 both
    // are full, and for larger n at least ceil((n-1)/k) - 1 >= 2 are full.
    // A full internal vertex has out-degree >= k, so fewer than two such
    // vertices already rules the tree out and the pairwise condition may be
    // taken as (vacuously) satisfied.
    if (witness.t_geq_k.size() < 2)
        return witness;

    int words = t.words_per_row();
    std::vector<std::uint64_t> joint(words);
    for (std::size_t i = 0; i < witness.t_geq_k.size(); ++i)
        for (std::size_t j = i + 1; j < witness.t_geq_k.size(); ++j) {
            Vertex u = witness.t_geq_k[i], v = witness.t_geq_k[j];
            auto ru = t.row(u), rv = t.row(v);
            for (int w = 0; w < words; ++w)
                joint[w] = ru[w] | rv[w];
            joint[u / 64] &= ~(std::uint64_t{1} << (u % 64));
            joint[v / 64] &= ~(std::uint64_t{1} << (v % 64));
            int size = 0;
            for (auto w : joint)
                size += std::popcount(w);
            if (! witness.attaining_pair || size > witness.max_pair_union) {
                witness.max_pair_union = size;
                witness.attaining_pair = std::pair{u, v};
            }
        }

    if (witness.max_pair_union > 2 * k - 2)
        return std::nullopt;
    return witness;
}

auto domination_bound_check(const Tournament & t, int k, int mu) -> bool
{
    if (k < 1)
        fail(ErrorCode::PreconditionViolated, "arity must be at least 1");
    // a single vertex is its own tree with no internal vertex
    if (t.order() == 1)
        return false;
    return kary_internal_count(t.order(), k) < mu;
}

}
