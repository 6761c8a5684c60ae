#pragma once

#include <karytree/solver.hpp>
#include <karytree/tournament.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace karytree {

struct CatalogEntry
{
    std::string name;
    Tournament tournament;
    /// The arity for which the tournament has no spanning tree.
    int claimed_k;
    std::string source;
};

/// Circulant 9-tournament, i beats j iff (i - j) mod 9 is 1, 2, 3 or 5.
/// 4-regular; has no 4-ary spanning tree.
auto t9() -> Tournament;

/// The 12-tournament given by its literal 66-arc list; has no 5-ary
/// spanning tree.
auto t12() -> Tournament;

/// Circulant(7, {1, 2, 4}), the quadratic-residue tournament on 7 vertices.
auto paley7() -> Tournament;

/// The entries checked by verify_catalog: t9 with k = 4, t12 with k = 5.
auto catalog_entries() -> std::vector<CatalogEntry>;

/// Names accepted by catalog_tournament: "t9", "t12", "paley7".
auto catalog_names() -> std::vector<std::string>;

/// Throws PreconditionViolated for unknown names.
auto catalog_tournament(const std::string & name) -> Tournament;

struct EntryVerification
{
    std::string name;
    int n = 0;
    int k = 0;
    std::optional<ObstructionWitness> witness;
    SolveResult search;

    /// Both certificates agree with the claim.
    auto confirmed() const -> bool { return witness.has_value() && search.outcome == Outcome::ProvenNone; }
    /// The lower bound h(k) >= n + 1 this entry establishes when confirmed.
    auto implied_bound() const -> int { return n + 1; }
};

struct CatalogReport
{
    std::vector<EntryVerification> entries;

    auto ok() const -> bool;
};

/// Confirms each entry twice, independently: by the pairwise obstruction
/// witness and by exhaustive search with the obstruction precheck off.
auto verify_catalog(std::span<const CatalogEntry> entries) -> CatalogReport;
auto verify_catalog() -> CatalogReport;

/// One line per entry plus the implied bounds.
auto format_catalog_report(const CatalogReport & report) -> std::string;

}
