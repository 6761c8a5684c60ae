#pragma once

// Cross-module consistency checks applied wherever a test has a solver
// outcome in hand. Each returns an empty string on success and a diagnostic
// otherwise, so both doctest and the acceptance binary can use them.

#include <karytree/domination.hpp>
#include <karytree/solver.hpp>

#include <string>

namespace karytree::testing {

struct CouplingTally
{
    long long witnesses = 0;
    long long bound_triggers = 0;
    long long found_with_mu = 0;
    long long violations = 0;
};

/// An obstruction witness or a triggered domination bound must coincide
/// with ProvenNone, and Found must satisfy ceil((n-1)/k) >= mu. mu is only
/// computed when n <= mu_limit. The inequality needs n >= 2: a lone vertex
/// is a tree with no internal vertex, yet mu = 1.
inline auto check_couplings(const Tournament & t, int k, const SolveResult & result, CouplingTally & tally,
        int mu_limit = 64) -> std::string
{
    int n = t.order();
    std::string problem;
    if (result.outcome == Outcome::BudgetExceeded)
        return problem;
    if (obstruction_check(t, k)) {
        ++tally.witnesses;
        if (result.outcome != Outcome::ProvenNone)
            problem = "obstruction witness but solver outcome " + std::string(to_string(result.outcome));
    }
    if (n <= mu_limit) {
        int mu = domination_number(t).mu;
        if (domination_bound_check(t, k, mu)) {
            ++tally.bound_triggers;
            if (result.outcome != Outcome::ProvenNone)
                problem = "domination bound triggered but solver outcome " + std::string(to_string(result.outcome));
        }
        if (result.found() && n >= 2) {
            ++tally.found_with_mu;
            if (kary_internal_count(n, k) < mu)
                problem = "Found a tree with ceil((n-1)/k) = " + std::to_string(kary_internal_count(n, k))
                    + " < mu = " + std::to_string(mu);
        }
    }
    if (! problem.empty())
        ++tally.violations;
    return problem;
}

}
