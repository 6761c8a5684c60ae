#pragma once

#include <karytree/tournament.hpp>

namespace karytree {

/// Largest order the brute-force oracle accepts.
constexpr int kOracleMaxOrder = 10;

/// Naive reference decision procedure for k-ary spanning tree existence.
/// Enumerates, for every root, every assignment of an in-neighbour parent to
/// each other vertex (capping each parent at k children) and tests the
/// finished assignment directly against the definition (assignments that
/// close a parent cycle or leave more than one vertex short are cut early).
/// Shares no code with find_kary_spanning_tree. Throws OrderTooLarge above
/// kOracleMaxOrder.
auto brute_force_oracle(const Tournament & t, int k) -> bool;

}
