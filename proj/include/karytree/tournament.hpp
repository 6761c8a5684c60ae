#pragma once

#include <karytree/random.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace karytree {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

/**
 * A tournament on vertices [0, n): every pair of distinct vertices carries
 * exactly one arc. Stored as one bit row per vertex (bit j of row i set iff
 * i beats j). Immutable once built; every constructor checks the invariants.
 */
class Tournament
{
public:
    /// Builds from an n x n matrix, throwing InvariantViolation unless the
    /// matrix is irreflexive, complete and antisymmetric.
    static auto from_matrix(const std::vector<std::vector<bool>> & beats) -> Tournament;

    auto order() const -> int { return _n; }
    auto words_per_row() const -> int { return _words; }

    auto beats(Vertex u, Vertex v) const -> bool
    {
        return (_rows[static_cast<std::size_t>(u) * _words + v / 64] >> (v % 64)) & 1;
    }

    /// Bit row of out-neighbours of u.
    auto row(Vertex u) const -> std::span<const std::uint64_t>
    {
        return {_rows.data() + static_cast<std::size_t>(u) * _words, static_cast<std::size_t>(_words)};
    }

    auto out_degree(Vertex u) const -> int { return _out_degree[u]; }
    auto in_degree(Vertex u) const -> int { return _n - 1 - _out_degree[u]; }
    auto out_degrees() const -> const std::vector<int> & { return _out_degree; }

    auto out_neighbors(Vertex u) const -> std::vector<Vertex>;
    auto in_neighbors(Vertex u) const -> std::vector<Vertex>;

    /// Every arc (u, v) with u beating v, sorted.
    auto arcs() const -> std::vector<Arc>;

    auto is_regular() const -> bool;

    friend auto operator==(const Tournament & a, const Tournament & b) -> bool
    {
        return a._n == b._n && a._rows == b._rows;
    }

private:
    friend class TournamentBuilder;

    Tournament(int n, std::vector<std::uint64_t> rows);

    int _n = 0;
    int _words = 0;
    std::vector<std::uint64_t> _rows;
    std::vector<int> _out_degree;
};

/// Mutable bit matrix for generators. finish() checks the tournament
/// invariants and throws InvariantViolation if they fail.
class TournamentBuilder
{
public:
    explicit TournamentBuilder(int n);

    auto order() const -> int { return _n; }
    auto set_arc(Vertex from, Vertex to) -> void;
    auto has_arc(Vertex from, Vertex to) const -> bool;
    auto finish() && -> Tournament;
    auto finish() const & -> Tournament;

private:
    int _n;
    int _words;
    std::vector<std::uint64_t> _rows;
};

auto from_arc_list(int n, std::span<const Arc> arcs) -> Tournament;

/// Uniform random tournament: each pair u < v, visited in lexicographic order,
/// is oriented u -> v iff the next bit (LSB first) of the SplitMix64 stream
/// for `seed` is 0.
auto random_tournament(int n, const SeedSpec & seed) -> Tournament;

/// i beats j iff (i - j) mod n is in diffs.
auto circulant_tournament(int n, std::span<const int> diffs) -> Tournament;

/// i beats j iff i < j.
auto transitive_tournament(int n) -> Tournament;

/// Tournament from the pair-orientation mask used by exhaustive enumeration:
/// pair index p runs over u < v lexicographically; bit p clear means u -> v.
auto tournament_from_pair_mask(int n, std::uint64_t mask) -> Tournament;

struct InducedTournament
{
    Tournament tournament;
    /// new label -> old label, increasing.
    std::vector<Vertex> to_old;
    /// old label -> new label, or -1 if not in the subset.
    std::vector<Vertex> to_new;
};

/// T[X]. Labels keep their relative order.
auto induced(const Tournament & t, std::span<const Vertex> subset) -> InducedTournament;

struct MaxOutDegree
{
    Vertex vertex;
    int degree;
};

/// Vertex of X with the most out-neighbours inside X, lowest label on ties.
auto max_outdegree_in(const Tournament & t, std::span<const Vertex> subset) -> MaxOutDegree;

/// Canonical text form: "tournament <n>" then n rows of '0'/'1'.
auto serialize_tournament(const Tournament & t) -> std::string;

/// Accepts the canonical matrix form and the "arcs <n> <m>" list form.
auto parse_tournament(std::string_view text) -> Tournament;

}
