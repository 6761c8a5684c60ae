#pragma once

#include <karytree/random.hpp>
#include <karytree/tournament.hpp>

#include <cstdint>
#include <optional>
#include <variant>

namespace karytree {

struct ExhaustiveMode
{
};

struct RandomMode
{
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
};

using ProbeMode = std::variant<ExhaustiveMode, RandomMode>;

struct ProbeOptions
{
    /// Lift the C(n,2) <= 28 cap on exhaustive enumeration (hard cap 63).
    bool allow_large = false;
    /// Stop at the first counterexample instead of counting all of them.
    bool stop_at_first = true;
    int jobs = 1;
};

struct ProbeReport
{
    /// Counterexample with the smallest enumeration index (Gray-code step for
    /// exhaustive mode, trial number for random mode).
    std::optional<Tournament> counterexample;
    std::optional<std::uint64_t> index;
    /// Instances checked, in canonical order; with stop_at_first this stops at
    /// the reported counterexample.
    std::uint64_t examined = 0;
    std::uint64_t counterexamples = 0;
};

/// Pair mask of the i-th labelled tournament in enumeration order (the
/// binary-reflected Gray code, so consecutive instances differ in one arc).
constexpr auto gray_code(std::uint64_t i) -> std::uint64_t { return i ^ (i >> 1); }

/// Searches order-n tournaments for one with no k-ary spanning tree, each
/// candidate settled by find_kary_spanning_tree. An exhaustive run that
/// reports nothing proves that every labelled n-tournament has one. Results
/// do not depend on options.jobs. Throws ExhaustiveTooLarge for exhaustive
/// runs beyond 28 pairs without allow_large.
auto probe_counterexample(int n, int k, const ProbeMode & mode, const ProbeOptions & options = {}) -> ProbeReport;

}
