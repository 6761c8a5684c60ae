#include <karytree/domination.hpp>

#include <karytree/bits.hpp>
#include <karytree/errors.hpp>

#include <algorithm>
#include <cstdio>
#include <thread>

namespace karytree {

auto to_string(DominationMethod method) -> std::string_view
{
    switch (method) {
        case DominationMethod::Exact: return "exact";
        case DominationMethod::GreedyUpperBound: return "greedy-upper-bound";
    }
    return "unknown";
}

auto dominates(const Tournament & t, std::span<const Vertex> set) -> bool
{
    std::vector<bool> covered(t.order(), false);
    for (auto x : set) {
        if (x < 0 || x >= t.order())
            fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(x) + " out of range");
        covered[x] = true;
        for (Vertex v = 0; v < t.order(); ++v)
            if (t.beats(x, v))
                covered[v] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

namespace {

template <unsigned n_words_>
class DominationSearch
{
    using Bits = FixedBits<n_words_>;

public:
    explicit DominationSearch(const Tournament & t) :
        _n(t.order()),
        _closed_out(t.order()),
        _closed_in(t.order())
    {
        for (Vertex v = 0; v < _n; ++v) {
            _closed_out[v] = Bits::from_words(t.row(v));
            _closed_out[v].set(v);
        }
        for (Vertex v = 0; v < _n; ++v)
            _closed_out[v].for_each([&](int w) { _closed_in[w].set(v); });
    }

    auto greedy() const -> std::vector<Vertex>
    {
        std::vector<Vertex> chosen;
        auto undominated = Bits::prefix(_n);
        while (undominated.any()) {
            Vertex best = -1;
            int best_cover = -1;
            for (Vertex v = 0; v < _n; ++v) {
                int cover = _closed_out[v].intersection_count(undominated);
                if (cover > best_cover) {
                    best = v;
                    best_cover = cover;
                }
            }
            chosen.push_back(best);
            undominated.subtract(_closed_out[best]);
        }
        return chosen;
    }

    /// A dominating set of at most `limit` vertices, if one exists.
    auto within(int limit) -> std::optional<std::vector<Vertex>>
    {
        _chosen.clear();
        if (extend(Bits::prefix(_n), limit))
            return _chosen;
        return std::nullopt;
    }

private:
    auto extend(const Bits & undominated, int limit) -> bool
    {
        if (undominated.empty())
            return true;
        int left = limit - static_cast<int>(_chosen.size());
        if (left <= 0)
            return false;

        int remaining = undominated.count();
        int best_cover = 0;
        Vertex pivot = -1;
        int pivot_options = _n + 1;
        for (Vertex v = 0; v < _n; ++v) {
            best_cover = std::max(best_cover, _closed_out[v].intersection_count(undominated));
            if (undominated.test(v)) {
                int options = _closed_in[v].count();
                if (options < pivot_options) {
                    pivot = v;
                    pivot_options = options;
                }
            }
        }
        if ((remaining + best_cover - 1) / best_cover > left)
            return false;

        // some dominator of the pivot must be chosen
        std::vector<std::pair<int, Vertex>> options;
        _closed_in[pivot].for_each([&](int x) { options.emplace_back(-_closed_out[x].intersection_count(undominated), x); });
        std::sort(options.begin(), options.end());
        for (auto & [neg_cover, x] : options) {
            _chosen.push_back(x);
            if (extend(undominated - _closed_out[x], limit))
                return true;
            _chosen.pop_back();
        }
        return false;
    }

    int _n;
    std::vector<Bits> _closed_out;
    std::vector<Bits> _closed_in;
    std::vector<Vertex> _chosen;
};

template <typename F>
auto with_search(const Tournament & t, F && f)
{
    bool ok = dispatch_words(t.order(), [&](auto words) {
        DominationSearch<decltype(words)::value> search(t);
        f(search);
    });
    if (! ok)
        fail(ErrorCode::OrderTooLarge, "domination search supports at most 2048 vertices");
}

}

auto greedy_dominating_set(const Tournament & t) -> DominationReport
{
    DominationReport report;
    report.method = DominationMethod::GreedyUpperBound;
    with_search(t, [&](auto & search) { report.witness = search.greedy(); });
    std::sort(report.witness.begin(), report.witness.end());
    report.mu = static_cast<int>(report.witness.size());
    return report;
}

auto domination_number(const Tournament & t) -> DominationReport
{
    DominationReport report;
    report.method = DominationMethod::Exact;
    with_search(t, [&](auto & search) {
        auto best = search.greedy();
        for (int size = 1; size < static_cast<int>(best.size()); ++size)
            if (auto found = search.within(size)) {
                best = *found;
                break;
            }
        report.witness = std::move(best);
    });
    std::sort(report.witness.begin(), report.witness.end());
    report.mu = static_cast<int>(report.witness.size());
    return report;
}

auto has_dominating_set_of_size(const Tournament & t, int size) -> std::optional<std::vector<Vertex>>
{
    std::optional<std::vector<Vertex>> result;
    with_search(t, [&](auto & search) { result = search.within(size); });
    if (result)
        std::sort(result->begin(), result->end());
    return result;
}

auto domination_growth_experiment(std::span<const int> orders, int samples, std::uint64_t seed,
        const GrowthOptions & options) -> std::vector<GrowthRow>
{
    if (samples < 1)
        fail(ErrorCode::PreconditionViolated, "need at least one sample per order");
    for (auto n : orders) {
        if (n < 1)
            fail(ErrorCode::PreconditionViolated, "orders must be positive");
        if (n > options.max_exact_order && ! options.allow_greedy)
            fail(ErrorCode::OrderTooLargeForExact, "order " + std::to_string(n) + " exceeds exact limit "
                    + std::to_string(options.max_exact_order));
    }

    std::vector<GrowthRow> rows;
    for (auto n : orders) {
        bool exact = n <= options.max_exact_order;
        std::vector<int> mus(samples);
        auto evaluate = [&](int i) {
            auto t = random_tournament(n, derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i)));
            mus[i] = exact ? domination_number(t).mu : greedy_dominating_set(t).mu;
        };

        int jobs = std::clamp(options.jobs, 1, samples);
        if (jobs == 1)
            for (int i = 0; i < samples; ++i)
                evaluate(i);
        else {
            std::vector<std::jthread> threads;
            for (int j = 0; j < jobs; ++j)
                threads.emplace_back([&, j]() {
                    for (int i = j; i < samples; i += jobs)
                        evaluate(i);
                });
        }

        GrowthRow row;
        row.n = n;
        row.samples = samples;
        row.master_seed = seed;
        row.method = exact ? DominationMethod::Exact : DominationMethod::GreedyUpperBound;
        row.mu_min = *std::min_element(mus.begin(), mus.end());
        row.mu_max = *std::max_element(mus.begin(), mus.end());
        long long sum = 0;
        for (auto m : mus)
            sum += m;
        row.mu_mean = static_cast<double>(sum) / samples;
        rows.push_back(row);
    }
    return rows;
}

auto format_growth_row(const GrowthRow & row) -> std::string
{
    char mean[64];
    std::snprintf(mean, sizeof(mean), "%.6f", row.mu_mean);
    return std::to_string(row.n) + "\t" + std::to_string(row.samples) + "\t" + std::to_string(row.mu_min) + "\t" + mean
        + "\t" + std::to_string(row.mu_max) + "\t" + std::to_string(row.master_seed);
}

auto paley_tournament(int p) -> Tournament
{
    auto is_prime = [](int x) {
        if (x < 2)
            return false;
        for (int d = 2; d * d <= x; ++d)
            if (x % d == 0)
                return false;
        return true;
    };
    if (! is_prime(p) || p % 4 != 3)
        fail(ErrorCode::PreconditionViolated, "Paley tournaments need a prime p = 3 (mod 4), got " + std::to_string(p));
    std::vector<int> residues;
    for (int x = 1; x <= (p - 1) / 2; ++x)
        residues.push_back(x * x % p);
    return circulant_tournament(p, residues);
}

auto erdos_probe(int k, int n_max, std::uint64_t trials, std::uint64_t seed) -> std::optional<Tournament>
{
    if (k < 1 || n_max < 1)
        fail(ErrorCode::PreconditionViolated, "k and n_max must be positive");

    for (int p = n_max; p >= 3; --p) {
        if (p % 4 != 3)
            continue;
        bool prime = true;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0)
                prime = false;
        if (! prime)
            continue;
        auto t = paley_tournament(p);
        if (! has_dominating_set_of_size(t, k))
            return t;
    }

    for (std::uint64_t i = 0; i < trials; ++i) {
        auto t = random_tournament(n_max, SeedSpec{seed, i});
        if (! has_dominating_set_of_size(t, k))
            return t;
    }
    return std::nullopt;
}

}
