#pragma once

#include <karytree/tournament.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace karytree {

enum class DominationMethod {
    Exact,
    GreedyUpperBound,
};

auto to_string(DominationMethod method) -> std::string_view;

struct DominationReport
{
    int mu = 0;
    std::vector<Vertex> witness;
    DominationMethod method = DominationMethod::Exact;
};

/// X dominates V(t) when every vertex outside X is beaten by a member of X.
/// Members of X need no dominator.
auto dominates(const Tournament & t, std::span<const Vertex> set) -> bool;

/// Exact domination number by iterative deepening branch and bound, seeded
/// with the greedy bound. Branches on the undominated vertex with the fewest
/// possible dominators (its in-neighbours and itself).
auto domination_number(const Tournament & t) -> DominationReport;

/// Does some set of at most `size` vertices dominate V(t)? Same search as
/// domination_number, run at a single depth.
auto has_dominating_set_of_size(const Tournament & t, int size) -> std::optional<std::vector<Vertex>>;

/// Repeatedly picks the vertex covering the most undominated vertices
/// (itself included), lowest label on ties.
auto greedy_dominating_set(const Tournament & t) -> DominationReport;

struct GrowthRow
{
    int n = 0;
    int samples = 0;
    int mu_min = 0;
    double mu_mean = 0.0;
    int mu_max = 0;
    std::uint64_t master_seed = 0;
    DominationMethod method = DominationMethod::Exact;
};

struct GrowthOptions
{
    int jobs = 1;
    /// Orders above this use the greedy bound if allowed, else throw
    /// OrderTooLargeForExact.
    int max_exact_order = 128;
    bool allow_greedy = false;
};

/// Domination statistics of `samples` uniform random tournaments per order.
/// Sample i of order n uses derive_seed(seed, n, i), so the table does not
/// depend on options.jobs.
auto domination_growth_experiment(std::span<const int> orders, int samples, std::uint64_t seed,
        const GrowthOptions & options = {}) -> std::vector<GrowthRow>;

/// "n samples mu_min mu_mean mu_max seed", tab separated, mean to 6 places.
auto format_growth_row(const GrowthRow & row) -> std::string;

/// Looks for a tournament of order <= n_max with domination number > k:
/// Paley tournaments on primes p = 3 (mod 4) up to n_max first (largest
/// first), then `trials` random tournaments of order n_max.
auto erdos_probe(int k, int n_max, std::uint64_t trials, std::uint64_t seed) -> std::optional<Tournament>;

/// Quadratic-residue tournament on a prime p = 3 (mod 4).
auto paley_tournament(int p) -> Tournament;

}
