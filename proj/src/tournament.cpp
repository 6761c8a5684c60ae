#include <karytree/tournament.hpp>

#include <karytree/errors.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace karytree {

namespace {

auto words_for(int n) -> int { return (n + 63) / 64; }

auto check_order(int n) -> void
{
    if (n < 1)
        fail(ErrorCode::InvariantViolation, "tournament order must be at least 1, got " + std::to_string(n));
}

auto check_subset(int n, std::span<const Vertex> subset) -> void
{
    if (subset.empty())
        fail(ErrorCode::EmptySubset, "vertex subset is empty");
    for (auto v : subset)
        if (v < 0 || v >= n)
            fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
}

}

Tournament::Tournament(int n, std::vector<std::uint64_t> rows) :
    _n(n),
    _words(words_for(n)),
    _rows(std::move(rows)),
    _out_degree(n, 0)
{
    for (int u = 0; u < _n; ++u)
        for (auto w : row(u))
            _out_degree[u] += std::popcount(w);
}

auto Tournament::from_matrix(const std::vector<std::vector<bool>> & beats) -> Tournament
{
    int n = static_cast<int>(beats.size());
    TournamentBuilder builder(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(beats[i].size()) != n)
            fail(ErrorCode::InvariantViolation, "matrix row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j)
            if (beats[i][j])
                builder.set_arc(i, j);
    }
    return std::move(builder).finish();
}

auto Tournament::out_neighbors(Vertex u) const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    result.reserve(_out_degree[u]);
    for (Vertex v = 0; v < _n; ++v)
        if (beats(u, v))
            result.push_back(v);
    return result;
}

auto Tournament::in_neighbors(Vertex u) const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (Vertex v = 0; v < _n; ++v)
        if (v != u && beats(v, u))
            result.push_back(v);
    return result;
}

auto Tournament::arcs() const -> std::vector<Arc>
{
    std::vector<Arc> result;
    result.reserve(static_cast<std::size_t>(_n) * (_n - 1) / 2);
    for (Vertex u = 0; u < _n; ++u)
        for (Vertex v = 0; v < _n; ++v)
            if (beats(u, v))
                result.emplace_back(u, v);
    return result;
}

auto Tournament::is_regular() const -> bool
{
    return std::all_of(_out_degree.begin(), _out_degree.end(), [&](int d) { return d == _out_degree.front(); });
}

TournamentBuilder::TournamentBuilder(int n) :
    _n(n),
    _words(words_for(std::max(n, 1))),
    _rows(static_cast<std::size_t>(std::max(n, 0)) * _words, 0)
{
    check_order(n);
}

auto TournamentBuilder::set_arc(Vertex from, Vertex to) -> void
{
    _rows[static_cast<std::size_t>(from) * _words + to / 64] |= std::uint64_t{1} << (to % 64);
}

auto TournamentBuilder::has_arc(Vertex from, Vertex to) const -> bool
{
    return (_rows[static_cast<std::size_t>(from) * _words + to / 64] >> (to % 64)) & 1;
}

auto TournamentBuilder::finish() const & -> Tournament
{
    return TournamentBuilder(*this).finish();
}

auto TournamentBuilder::finish() && -> Tournament
{
    for (int u = 0; u < _n; ++u) {
        if (has_arc(u, u))
            fail(ErrorCode::InvariantViolation, "vertex " + std::to_string(u) + " beats itself");
        for (int v = u + 1; v < _n; ++v)
            if (has_arc(u, v) == has_arc(v, u))
                fail(ErrorCode::InvariantViolation, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} "
                        + (has_arc(u, v) ? "has both arcs" : "has no arc"));
    }
    return Tournament(_n, std::move(_rows));
}

auto from_arc_list(int n, std::span<const Arc> arcs) -> Tournament
{
    check_order(n);
    TournamentBuilder builder(n);
    for (auto [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(ErrorCode::LabelOutOfRange, "arc (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0, "
                    + std::to_string(n) + ")");
        if (u == v)
            fail(ErrorCode::SelfLoop, "arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (builder.has_arc(u, v) || builder.has_arc(v, u))
            fail(ErrorCode::ConflictingPair, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} given twice");
        builder.set_arc(u, v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (! builder.has_arc(u, v) && ! builder.has_arc(v, u))
                fail(ErrorCode::MissingPair, "pair {" + std::to_string(u) + "," + std::to_string(v) + "} has no arc");
    return std::move(builder).finish();
}

auto random_tournament(int n, const SeedSpec & seed) -> Tournament
{
    check_order(n);
    SplitMix64 rng(seed);
    TournamentBuilder builder(n);
    std::uint64_t word = 0;
    int remaining = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (remaining == 0) {
                word = rng();
                remaining = 64;
            }
            bool flip = word & 1;
            word >>= 1;
            --remaining;
            if (flip)
                builder.set_arc(v, u);
            else
                builder.set_arc(u, v);
        }
    return std::move(builder).finish();
}

auto circulant_tournament(int n, std::span<const int> diffs) -> Tournament
{
    check_order(n);
    if (n % 2 == 0)
        fail(ErrorCode::EvenOrder, "circulant tournaments need odd order, got " + std::to_string(n));

    std::vector<bool> in_set(n, false);
    for (auto d : diffs)
        in_set[((d % n) + n) % n] = true;
    if (in_set[0])
        fail(ErrorCode::InvalidDifferenceSet, "difference set contains 0 mod " + std::to_string(n));
    for (int d = 1; d <= (n - 1) / 2; ++d)
        if (in_set[d] == in_set[n - d])
            fail(ErrorCode::InvalidDifferenceSet, "residues " + std::to_string(d) + " and " + std::to_string(n - d)
                    + (in_set[d] ? " are both present" : " are both missing"));

    TournamentBuilder builder(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && in_set[((i - j) % n + n) % n])
                builder.set_arc(i, j);
    return std::move(builder).finish();
}

auto transitive_tournament(int n) -> Tournament
{
    check_order(n);
    TournamentBuilder builder(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            builder.set_arc(i, j);
    return std::move(builder).finish();
}

auto tournament_from_pair_mask(int n, std::uint64_t mask) -> Tournament
{
    check_order(n);
    if (n * (n - 1) / 2 > 64)
        fail(ErrorCode::OrderTooLarge, "pair mask holds at most 64 pairs");
    TournamentBuilder builder(n);
    int p = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++p)
            if ((mask >> p) & 1)
                builder.set_arc(v, u);
            else
                builder.set_arc(u, v);
    return std::move(builder).finish();
}

auto induced(const Tournament & t, std::span<const Vertex> subset) -> InducedTournament
{
    check_subset(t.order(), subset);
    std::vector<Vertex> to_old(subset.begin(), subset.end());
    std::sort(to_old.begin(), to_old.end());
    to_old.erase(std::unique(to_old.begin(), to_old.end()), to_old.end());

    std::vector<Vertex> to_new(t.order(), -1);
    for (std::size_t i = 0; i < to_old.size(); ++i)
        to_new[to_old[i]] = static_cast<Vertex>(i);

    int m = static_cast<int>(to_old.size());
    TournamentBuilder builder(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && t.beats(to_old[i], to_old[j]))
                builder.set_arc(i, j);
    return InducedTournament{std::move(builder).finish(), std::move(to_old), std::move(to_new)};
}

auto max_outdegree_in(const Tournament & t, std::span<const Vertex> subset) -> MaxOutDegree
{
    check_subset(t.order(), subset);
    std::vector<std::uint64_t> mask(t.words_per_row(), 0);
    for (auto v : subset)
        mask[v / 64] |= std::uint64_t{1} << (v % 64);

    MaxOutDegree best{-1, -1};
    for (auto v : subset) {
        int d = 0;
        auto r = t.row(v);
        for (std::size_t w = 0; w < mask.size(); ++w)
            d += std::popcount(r[w] & mask[w]);
        if (d > best.degree || (d == best.degree && v < best.vertex))
            best = MaxOutDegree{v, d};
    }
    return best;
}

auto serialize_tournament(const Tournament & t) -> std::string
{
    std::string out = "tournament " + std::to_string(t.order()) + "\n";
    out.reserve(out.size() + static_cast<std::size_t>(t.order()) * (t.order() + 1));
    for (int i = 0; i < t.order(); ++i) {
        for (int j = 0; j < t.order(); ++j)
            out.push_back(t.beats(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

namespace {

auto parse_int(const std::string & token, const char * what) -> long long
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        fail(ErrorCode::SyntaxError, std::string("expected integer for ") + what + ", got '" + token + "'");
    return value;
}

auto next_token(std::istringstream & in, const char * what) -> std::string
{
    std::string token;
    if (! (in >> token))
        fail(ErrorCode::SyntaxError, std::string("unexpected end of input reading ") + what);
    return token;
}

}

auto parse_tournament(std::string_view text) -> Tournament
{
    std::istringstream in{std::string(text)};
    auto kind = next_token(in, "header");
    auto n = parse_int(next_token(in, "order"), "order");
    if (n < 1 || n > (1 << 20))
        fail(ErrorCode::SyntaxError, "order " + std::to_string(n) + " out of range");

    if (kind == "tournament") {
        TournamentBuilder builder(static_cast<int>(n));
        for (int i = 0; i < n; ++i) {
            auto row = next_token(in, "matrix row");
            if (static_cast<long long>(row.size()) != n)
                fail(ErrorCode::SyntaxError, "row " + std::to_string(i) + " has " + std::to_string(row.size())
                        + " characters, expected " + std::to_string(n));
            for (int j = 0; j < n; ++j) {
                if (row[j] == '1')
                    builder.set_arc(i, j);
                else if (row[j] != '0')
                    fail(ErrorCode::SyntaxError, "row " + std::to_string(i) + " contains '" + row[j] + "'");
            }
        }
        std::string extra;
        if (in >> extra)
            fail(ErrorCode::SyntaxError, "trailing data after matrix: '" + extra + "'");
        return std::move(builder).finish();
    }

    if (kind == "arcs") {
        auto m = parse_int(next_token(in, "arc count"), "arc count");
        if (m < 0)
            fail(ErrorCode::SyntaxError, "negative arc count");
        std::vector<Arc> arcs;
        for (long long e = 0; e < m; ++e) {
            auto u = parse_int(next_token(in, "arc tail"), "arc tail");
            auto v = parse_int(next_token(in, "arc head"), "arc head");
            arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        std::string extra;
        if (in >> extra)
            fail(ErrorCode::SyntaxError, "trailing data after arc list: '" + extra + "'");
        try {
            return from_arc_list(static_cast<int>(n), arcs);
        }
        catch (const KaryError & e) {
            fail(ErrorCode::InvariantViolation, e.what());
        }
    }

    fail(ErrorCode::SyntaxError, "unknown header '" + kind + "'");
}

}
