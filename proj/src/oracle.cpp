#include <karytree/oracle.hpp>

#include <karytree/errors.hpp>

#include <algorithm>
#include <array>
#include <vector>

namespace karytree {

namespace {

struct Enumerator
{
    const Tournament & t;
    int n;
    int k;
    int root;
    std::array<int, kOracleMaxOrder> parent{};
    std::array<int, kOracleMaxOrder> child_count{};

    // Does v's parent chain reach the root without revisiting a vertex?
    auto reaches_root(int v) const -> bool
    {
        for (int steps = 0; steps < n; ++steps) {
            if (v == root)
                return true;
            v = parent[v];
        }
        return false;
    }

    auto complete() const -> bool
    {
        for (int v = 0; v < n; ++v)
            if (! reaches_root(v))
                return false;
        int deficient = 0;
        for (int v = 0; v < n; ++v)
            if (child_count[v] > 0 && child_count[v] < k)
                ++deficient;
        return deficient <= 1;
    }

    // Would making p the parent of v close a cycle among assigned vertices?
    auto closes_cycle(int v, int p) const -> bool
    {
        for (int steps = 0; p >= 0 && p != root && steps < n; ++steps) {
            if (p == v)
                return true;
            p = parent[p];
        }
        return false;
    }

    // Every partially filled vertex but one must still be topped up to k by
    // the vertices not yet assigned.
    auto deficit_fits(int unassigned) const -> bool
    {
        int total = 0, largest = 0;
        for (int x = 0; x < n; ++x)
            if (child_count[x] > 0 && child_count[x] < k) {
                total += k - child_count[x];
                largest = std::max(largest, k - child_count[x]);
            }
        return total - largest <= unassigned;
    }

    auto assign(int v) -> bool
    {
        if (v == n)
            return complete();
        if (v == root)
            return assign(v + 1);
        int unassigned = n - v - 1 - (root > v ? 1 : 0);
        for (int p = 0; p < n; ++p) {
            if (p == v || ! t.beats(p, v) || child_count[p] == k || closes_cycle(v, p))
                continue;
            parent[v] = p;
            ++child_count[p];
            bool ok = deficit_fits(unassigned) && assign(v + 1);
            --child_count[p];
            parent[v] = -1;
            if (ok)
                return true;
        }
        return false;
    }
};

}

auto brute_force_oracle(const Tournament & t, int k) -> bool
{
    int n = t.order();
    if (n > kOracleMaxOrder)
        fail(ErrorCode::OrderTooLarge, "oracle handles at most " + std::to_string(kOracleMaxOrder) + " vertices");
    if (k < 1)
        fail(ErrorCode::PreconditionViolated, "arity must be at least 1");

    for (int root = 0; root < n; ++root) {
        Enumerator e{t, n, k, root};
        e.parent.fill(-1);
        if (e.assign(0))
            return true;
    }
    return false;
}

}
