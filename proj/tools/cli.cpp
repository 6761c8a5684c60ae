#include "cli.hpp"

#include <karytree/catalog.hpp>
#include <karytree/constructive.hpp>
#include <karytree/domination.hpp>
#include <karytree/errors.hpp>
#include <karytree/probe.hpp>
#include <karytree/rooted_tree.hpp>
#include <karytree/solver.hpp>
#include <karytree/tournament.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace karytree::cli {

namespace {

struct DataError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw DataError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto emit(const std::string & text, const std::string & path, std::ostream & out) -> void
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (! file)
        throw DataError("cannot write '" + path + "'");
    file << text;
}

auto join(const std::vector<Vertex> & xs, char sep = ',') -> std::string
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s.push_back(sep);
        s += std::to_string(xs[i]);
    }
    return s;
}

struct Common
{
    std::string in;
    std::string out;
    int k = 0;
    bool machine = false;
};

}

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Decide, construct and refute k-ary spanning trees in tournaments", "karytree"};
    app.require_subcommand(1);

    Common c;
    auto add_machine = [&](CLI::App * sub) { sub->add_flag("--machine", c.machine, "Stable line-oriented output"); };
    auto add_k = [&](CLI::App * sub) { sub->add_option("--k", c.k, "Arity")->required()->check(CLI::PositiveNumber); };
    auto add_in = [&](CLI::App * sub) { sub->add_option("--in", c.in, "Tournament file")->required(); };
    auto add_out = [&](CLI::App * sub) { sub->add_option("--out", c.out, "Output file (default stdout)"); };

    // gen
    auto gen = app.add_subcommand("gen", "Generate a tournament");
    gen->require_subcommand(1);
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::uint64_t gen_stream = 0;
    std::vector<int> gen_diffs;
    std::string gen_name;
    auto gen_random = gen->add_subcommand("random", "Uniform random tournament");
    gen_random->add_option("--n", gen_n, "Order")->required()->check(CLI::PositiveNumber);
    gen_random->add_option("--seed", gen_seed, "Master seed")->required();
    gen_random->add_option("--stream", gen_stream, "Stream index");
    add_out(gen_random);
    auto gen_circulant = gen->add_subcommand("circulant", "Circulant tournament");
    gen_circulant->add_option("--n", gen_n, "Order (odd)")->required()->check(CLI::PositiveNumber);
    gen_circulant->add_option("--diffs", gen_diffs, "Difference set, comma separated")->required()->delimiter(',');
    add_out(gen_circulant);
    auto gen_transitive = gen->add_subcommand("transitive", "Transitive tournament");
    gen_transitive->add_option("--n", gen_n, "Order")->required()->check(CLI::PositiveNumber);
    add_out(gen_transitive);
    auto gen_catalog = gen->add_subcommand("catalog", "Named catalog tournament");
    gen_catalog->add_option("name", gen_name, "t9, t12 or paley7")->required();
    add_out(gen_catalog);

    // catalog export
    auto catalog = app.add_subcommand("catalog", "Catalog tournaments");
    catalog->require_subcommand(1);
    auto catalog_export = catalog->add_subcommand("export", "Write a catalog tournament");
    catalog_export->add_option("name", gen_name, "t9, t12 or paley7")->required();
    add_out(catalog_export);
    auto catalog_list = catalog->add_subcommand("list", "List catalog names");

    // solve
    auto solve = app.add_subcommand("solve", "Exact search for a k-ary spanning tree");
    add_k(solve);
    add_in(solve);
    add_out(solve);
    add_machine(solve);
    std::uint64_t budget = 0;
    bool no_obstruction = false;
    solve->add_option("--budget", budget, "Search node cap");
    solve->add_flag("--no-obstruction", no_obstruction, "Skip the obstruction precheck");

    // validate
    auto validate = app.add_subcommand("validate", "Check a tree file against a tournament");
    add_k(validate);
    add_in(validate);
    add_machine(validate);
    std::string tree_path;
    validate->add_option("--tree", tree_path, "Tree file")->required();

    // obstruction
    auto obstruction = app.add_subcommand("obstruction", "Pairwise out-neighbourhood nonexistence test");
    add_k(obstruction);
    add_in(obstruction);
    add_machine(obstruction);

    // domination
    auto domination = app.add_subcommand("domination", "Domination number");
    add_in(domination);
    add_machine(domination);
    bool greedy = false;
    domination->add_flag("--greedy", greedy, "Greedy upper bound instead of the exact value");

    // hampath
    auto hampath = app.add_subcommand("hampath", "Hamiltonian path as a 1-ary tree");
    add_in(hampath);
    add_out(hampath);

    // probe
    auto probe = app.add_subcommand("probe", "Search for a tournament with no k-ary spanning tree");
    add_k(probe);
    add_machine(probe);
    add_out(probe);
    int probe_n = 0;
    bool exhaustive = false, allow_large = false, count_all = false;
    std::uint64_t trials = 0, seed = 0;
    int jobs = 1;
    probe->add_option("--n", probe_n, "Order")->required()->check(CLI::PositiveNumber);
    probe->add_flag("--exhaustive", exhaustive, "Enumerate every labelled tournament");
    probe->add_flag("--allow-large", allow_large, "Lift the exhaustive size cap");
    probe->add_flag("--all", count_all, "Count every counterexample instead of stopping at the first");
    auto probe_trials = probe->add_option("--trials", trials, "Random trials");
    auto probe_seed = probe->add_option("--seed", seed, "Master seed");
    probe->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    // construct-k4
    auto construct = app.add_subcommand("construct-k4", "Constructive 4-ary spanning tree (n >= 10)");
    add_in(construct);
    add_out(construct);
    std::string trace_path;
    construct->add_option("--trace", trace_path, "Write the reduction trace here");

    // experiment-domination
    auto experiment = app.add_subcommand("experiment-domination", "Domination number growth table");
    add_machine(experiment);
    std::vector<int> orders;
    int samples = 0;
    bool allow_greedy = false;
    experiment->add_option("--orders", orders, "Orders, comma separated")->required()->delimiter(',');
    experiment->add_option("--samples", samples, "Samples per order")->required()->check(CLI::PositiveNumber);
    experiment->add_option("--seed", seed, "Master seed")->required();
    experiment->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    experiment->add_flag("--allow-greedy", allow_greedy, "Use the greedy bound above order 128");

    // erdos-probe
    auto erdos = app.add_subcommand("erdos-probe", "Search for a tournament with domination number > k");
    add_k(erdos);
    add_out(erdos);
    int n_max = 0;
    erdos->add_option("--n-max", n_max, "Largest order")->required()->check(CLI::PositiveNumber);
    erdos->add_option("--trials", trials, "Random trials");
    erdos->add_option("--seed", seed, "Master seed")->required();

    // verify-catalog
    auto verify = app.add_subcommand("verify-catalog", "Reproduce the catalog nonexistence results");
    add_machine(verify);

    std::vector<const char *> argv{"karytree"};
    for (auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (probe->parsed()) {
            if (exhaustive && (probe_trials->count() || probe_seed->count()))
                throw CLI::ValidationError("--exhaustive excludes --trials/--seed");
            if (! exhaustive && (! probe_trials->count() || ! probe_seed->count()))
                throw CLI::ValidationError("random probing needs --trials and --seed");
        }
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kAffirmative : kUsageError;
    }

    try {
        if (gen->parsed()) {
            Tournament t = transitive_tournament(1);
            if (gen_random->parsed())
                t = random_tournament(gen_n, SeedSpec{gen_seed, gen_stream});
            else if (gen_circulant->parsed())
                t = circulant_tournament(gen_n, gen_diffs);
            else if (gen_transitive->parsed())
                t = transitive_tournament(gen_n);
            else
                t = catalog_tournament(gen_name);
            emit(serialize_tournament(t), c.out, out);
            return kAffirmative;
        }

        if (catalog->parsed()) {
            if (catalog_list->parsed()) {
                for (auto & name : catalog_names())
                    out << name << "\n";
                return kAffirmative;
            }
            emit(serialize_tournament(catalog_tournament(gen_name)), c.out, out);
            return kAffirmative;
        }

        if (solve->parsed()) {
            auto t = parse_tournament(read_file(c.in));
            SolverOptions options;
            if (budget > 0)
                options.budget = budget;
            options.obstruction_precheck = ! no_obstruction;
            auto result = find_kary_spanning_tree(t, c.k, options);
            out << to_string(result.outcome) << " nodes=" << result.nodes_explored << "\n";
            if (! c.machine)
                err << "n=" << t.order() << " k=" << c.k << " elapsed="
                    << std::chrono::duration_cast<std::chrono::microseconds>(result.elapsed).count() << "us\n";
            if (result.found()) {
                emit(serialize_tree(*result.tree), c.out, out);
                return kAffirmative;
            }
            return result.outcome == Outcome::ProvenNone ? kProvenNegative : kIndeterminate;
        }

        if (validate->parsed()) {
            auto t = parse_tournament(read_file(c.in));
            auto tree = parse_tree(read_file(tree_path));
            auto report = validate_kary_spanning(tree, t, c.k);
            if (report.valid) {
                out << "valid k=" << c.k << " full=" << (report.full ? 1 : 0) << " deficient="
                    << (report.deficient_vertex ? std::to_string(*report.deficient_vertex) : "-") << "\n";
                return kAffirmative;
            }
            out << "invalid k=" << c.k << " reason=" << to_string(*report.failure);
            if (! c.machine)
                out << " (" << report.detail << ")";
            out << "\n";
            return kProvenNegative;
        }

        if (obstruction->parsed()) {
            auto t = parse_tournament(read_file(c.in));
            auto witness = obstruction_check(t, c.k);
            if (! witness) {
                out << "no-witness k=" << c.k << "\n";
                return kIndeterminate;
            }
            out << "witness k=" << c.k << " t_geq_k=" << join(witness->t_geq_k)
                << " max_pair_union=" << witness->max_pair_union;
            if (witness->attaining_pair)
                out << " pair=" << witness->attaining_pair->first << "," << witness->attaining_pair->second;
            out << "\n";
            if (! c.machine)
                out << "no " << c.k << "-ary spanning tree exists\n";
            return kAffirmative;
        }

        if (domination->parsed()) {
            auto t = parse_tournament(read_file(c.in));
            auto report = greedy ? greedy_dominating_set(t) : domination_number(t);
            out << "mu=" << report.mu << " witness=" << join(report.witness) << " method=" << to_string(report.method)
                << "\n";
            return kAffirmative;
        }

        if (hampath->parsed()) {
            auto t = parse_tournament(read_file(c.in));
            emit(serialize_tree(hamiltonian_path(t)), c.out, out);
            return kAffirmative;
        }

        if (probe->parsed()) {
            ProbeMode mode = ExhaustiveMode{};
            if (! exhaustive)
                mode = RandomMode{seed, trials};
            ProbeOptions options;
            options.allow_large = allow_large;
            options.stop_at_first = ! count_all;
            options.jobs = jobs;
            auto report = probe_counterexample(probe_n, c.k, mode, options);
            out << (report.counterexample ? "counterexample" : "none") << " n=" << probe_n << " k=" << c.k
                << " examined=" << report.examined << " counterexamples=" << report.counterexamples;
            if (report.index)
                out << " index=" << *report.index;
            out << "\n";
            if (report.counterexample) {
                emit(serialize_tournament(*report.counterexample), c.out, out);
                return kAffirmative;
            }
            return exhaustive ? kProvenNegative : kIndeterminate;
        }

        if (construct->parsed()) {
            auto t = parse_tournament(read_file(c.in));
            auto result = solve_k4_constructive(t);
            emit(serialize_tree(result.tree), c.out, out);
            if (! trace_path.empty())
                emit(serialize_trace(result.trace), trace_path, out);
            return kAffirmative;
        }

        if (experiment->parsed()) {
            GrowthOptions options;
            options.jobs = jobs;
            options.allow_greedy = allow_greedy;
            auto rows = domination_growth_experiment(orders, samples, seed, options);
            if (! c.machine)
                out << "# n\tsamples\tmu_min\tmu_mean\tmu_max\tseed\n";
            for (auto & row : rows) {
                out << format_growth_row(row);
                if (! c.machine && row.method != DominationMethod::Exact)
                    out << "\t# " << to_string(row.method);
                out << "\n";
            }
            return kAffirmative;
        }

        if (erdos->parsed()) {
            auto t = erdos_probe(c.k, n_max, trials, seed);
            if (! t) {
                out << "none k=" << c.k << " n_max=" << n_max << "\n";
                return kIndeterminate;
            }
            out << "found n=" << t->order() << " mu=" << domination_number(*t).mu << "\n";
            emit(serialize_tournament(*t), c.out, out);
            return kAffirmative;
        }

        if (verify->parsed()) {
            auto report = verify_catalog();
            out << format_catalog_report(report);
            return report.ok() ? kAffirmative : kProvenNegative;
        }
    }
    catch (const KaryError & e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    catch (const DataError & e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    err << "error: no subcommand handled\n";
    return kUsageError;
}

}
