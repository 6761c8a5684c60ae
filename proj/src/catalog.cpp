#include <karytree/catalog.hpp>

#include <karytree/errors.hpp>

#include <algorithm>
#include <array>

namespace karytree {

namespace {

// Transcribed verbatim; from_arc_list rejects any pair that is missing or
// doubled.
constexpr std::array<Arc, 66> kT12Arcs{{
    {0, 3}, {0, 5}, {0, 9}, {0, 10}, {0, 11},
    {1, 0}, {1, 4}, {1, 6}, {1, 8}, {1, 9}, {1, 11},
    {2, 0}, {2, 1}, {2, 7}, {2, 8}, {2, 10}, {2, 11},
    {3, 1}, {3, 2}, {3, 6}, {3, 9}, {3, 10},
    {4, 0}, {4, 2}, {4, 3}, {4, 7}, {4, 9},
    {5, 1}, {5, 2}, {5, 3}, {5, 4}, {5, 8}, {5, 11},
    {6, 0}, {6, 2}, {6, 4}, {6, 5}, {6, 10},
    {7, 0}, {7, 1}, {7, 3}, {7, 5}, {7, 6},
    {8, 0}, {8, 3}, {8, 4}, {8, 6}, {8, 7},
    {9, 2}, {9, 5}, {9, 6}, {9, 7}, {9, 8}, {9, 11},
    {10, 1}, {10, 4}, {10, 5}, {10, 7}, {10, 8}, {10, 9},
    {11, 3}, {11, 4}, {11, 6}, {11, 7}, {11, 8}, {11, 10},
}};

}

auto t9() -> Tournament
{
    constexpr std::array diffs{1, 2, 3, 5};
    return circulant_tournament(9, diffs);
}

auto t12() -> Tournament
{
    return from_arc_list(12, kT12Arcs);
}

auto paley7() -> Tournament
{
    constexpr std::array diffs{1, 2, 4};
    return circulant_tournament(7, diffs);
}

auto catalog_entries() -> std::vector<CatalogEntry>
{
    std::vector<CatalogEntry> entries;
    entries.push_back({"t9", t9(), 4, "circulant 9-tournament, differences {1,2,3,5} mod 9"});
    entries.push_back({"t12", t12(), 5, "12-tournament, explicit 66-arc list"});
    return entries;
}

auto catalog_names() -> std::vector<std::string>
{
    return {"t9", "t12", "paley7"};
}

auto catalog_tournament(const std::string & name) -> Tournament
{
    if (name == "t9")
        return t9();
    if (name == "t12")
        return t12();
    if (name == "paley7")
        return paley7();
    fail(ErrorCode::PreconditionViolated, "unknown catalog tournament '" + name + "'");
}

auto CatalogReport::ok() const -> bool
{
    return ! entries.empty() && std::all_of(entries.begin(), entries.end(), [](auto & e) { return e.confirmed(); });
}

auto verify_catalog(std::span<const CatalogEntry> entries) -> CatalogReport
{
    CatalogReport report;
    for (auto & entry : entries) {
        EntryVerification v;
        v.name = entry.name;
        v.n = entry.tournament.order();
        v.k = entry.claimed_k;
        v.witness = obstruction_check(entry.tournament, entry.claimed_k);
        SolverOptions options;
        options.obstruction_precheck = false;
        v.search = find_kary_spanning_tree(entry.tournament, entry.claimed_k, options);
        report.entries.push_back(std::move(v));
    }
    return report;
}

auto verify_catalog() -> CatalogReport
{
    auto entries = catalog_entries();
    return verify_catalog(entries);
}

auto format_catalog_report(const CatalogReport & report) -> std::string
{
    std::string out;
    for (auto & e : report.entries) {
        out += e.name + " n=" + std::to_string(e.n) + " k=" + std::to_string(e.k) + " witness=";
        if (e.witness)
            out += "yes(max_pair_union=" + std::to_string(e.witness->max_pair_union) + "<="
                + std::to_string(2 * e.k - 2) + ")";
        else
            out += "no";
        out += " search=" + std::string(to_string(e.search.outcome)) + "(nodes="
            + std::to_string(e.search.nodes_explored) + ")";
        out += e.confirmed() ? " confirmed\n" : " MISMATCH\n";
    }
    for (auto & e : report.entries)
        if (e.confirmed())
            out += "h(" + std::to_string(e.k) + ") >= " + std::to_string(e.implied_bound())
                + " [obstruction witness + exhaustive search]\n";
    out += report.ok() ? "verify-catalog: OK\n" : "verify-catalog: FAILED\n";
    return out;
}

}
