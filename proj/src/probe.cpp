#include <karytree/probe.hpp>

#include <karytree/errors.hpp>
#include <karytree/solver.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace karytree {

namespace {

constexpr std::uint64_t kChunk = 4096;
constexpr int kDefaultPairCap = 28;

struct ChunkResult
{
    std::uint64_t count = 0;
    std::optional<std::uint64_t> first;
};

template <typename MakeInstance>
auto run_probe(std::uint64_t total, int k, const ProbeOptions & options, MakeInstance && make) -> ProbeReport
{
    std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<ChunkResult> results(chunks);
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};

    auto worker = [&]() {
        while (true) {
            auto c = next_chunk.fetch_add(1);
            if (c >= chunks)
                return;
            auto begin = c * kChunk, end = std::min(total, begin + kChunk);
            if (options.stop_at_first && best.load() < begin)
                continue;
            auto & out = results[c];
            for (auto i = begin; i < end; ++i) {
                auto t = make(i);
                if (find_kary_spanning_tree(t, k).outcome != Outcome::ProvenNone)
                    continue;
                ++out.count;
                if (! out.first)
                    out.first = i;
                if (options.stop_at_first) {
                    auto seen = best.load();
                    while (i < seen && ! best.compare_exchange_weak(seen, i)) {
                    }
                    break;
                }
            }
        }
    };

    int jobs = std::max(1, options.jobs);
    if (jobs == 1)
        worker();
    else {
        std::vector<std::jthread> threads;
        for (int j = 0; j < jobs; ++j)
            threads.emplace_back(worker);
    }

    ProbeReport report;
    for (auto & r : results) {
        if (r.first && ! report.index)
            report.index = r.first;
        report.counterexamples += r.count;
        if (options.stop_at_first && report.index)
            break;
    }
    if (options.stop_at_first && report.index) {
        report.counterexamples = 1;
        report.examined = *report.index + 1;
    }
    else
        report.examined = total;
    if (report.index)
        report.counterexample = make(*report.index);
    return report;
}

}

auto probe_counterexample(int n, int k, const ProbeMode & mode, const ProbeOptions & options) -> ProbeReport
{
    if (n < 1)
        fail(ErrorCode::PreconditionViolated, "order must be at least 1");
    if (k < 1)
        fail(ErrorCode::PreconditionViolated, "arity must be at least 1");

    if (std::holds_alternative<ExhaustiveMode>(mode)) {
        int pairs = n * (n - 1) / 2;
        if (pairs > 63)
            fail(ErrorCode::ExhaustiveTooLarge, "exhaustive enumeration limited to 63 pairs");
        if (pairs > kDefaultPairCap && ! options.allow_large)
            fail(ErrorCode::ExhaustiveTooLarge, std::to_string(pairs) + " pairs exceeds the default cap of "
                    + std::to_string(kDefaultPairCap) + " (pass allow_large to override)");
        std::uint64_t total = std::uint64_t{1} << pairs;
        return run_probe(total, k, options, [n](std::uint64_t i) { return tournament_from_pair_mask(n, gray_code(i)); });
    }

    auto random = std::get<RandomMode>(mode);
    return run_probe(random.trials, k, options,
            [n, seed = random.seed](std::uint64_t i) { return random_tournament(n, SeedSpec{seed, i}); });
}

}
