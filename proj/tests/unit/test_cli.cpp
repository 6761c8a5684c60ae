#include "cli.hpp"

#include <karytree/catalog.hpp>
#include <karytree/rooted_tree.hpp>
#include <karytree/tournament.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace karytree;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

auto run(std::vector<std::string> args) -> Outcome
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

auto data(const std::string & name) -> std::string
{
    return std::string(KARYTREE_TEST_DATA) + "/" + name;
}

auto temp_path(const std::string & name) -> std::string
{
    auto dir = std::filesystem::temp_directory_path() / "karytree-cli-test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

auto write(const std::string & path, const std::string & text) -> void
{
    std::ofstream(path, std::ios::binary) << text;
}

auto slurp(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}

TEST_CASE("solve exit codes")
{
    auto t9 = run({"solve", "--k", "4", "--in", data("t9.txt"), "--machine"});
    CHECK(t9.code == cli::kProvenNegative);
    CHECK(t9.out.rfind("ProvenNone nodes=", 0) == 0);

    auto path = temp_path("random20.txt");
    write(path, serialize_tournament(random_tournament(20, SeedSpec{20, 0})));
    auto tree_path = temp_path("random20.tree");
    auto k1 = run({"solve", "--k", "1", "--in", path, "--out", tree_path});
    CHECK(k1.code == cli::kAffirmative);
    CHECK(k1.out.rfind("Found nodes=", 0) == 0);
    auto check = run({"validate", "--k", "1", "--in", path, "--tree", tree_path});
    CHECK(check.code == cli::kAffirmative);
    CHECK(check.out.rfind("valid k=1", 0) == 0);
    auto wrong_k = run({"validate", "--k", "2", "--in", path, "--tree", tree_path});
    CHECK(wrong_k.code == cli::kProvenNegative);

    auto budget = run({"solve", "--k", "4", "--in", data("t9.txt"), "--budget", "1", "--no-obstruction"});
    CHECK(budget.code == cli::kIndeterminate);
    CHECK(budget.out.rfind("BudgetExceeded", 0) == 0);
}

TEST_CASE("every exit-0 solve writes a tree that validate accepts")
{
    for (int i = 0; i < 30; ++i) {
        int n = 5 + i % 9, k = 1 + i % 4;
        auto path = temp_path("solve" + std::to_string(i) + ".txt");
        auto tree_path = temp_path("solve" + std::to_string(i) + ".tree");
        write(path, serialize_tournament(random_tournament(n, SeedSpec{31, static_cast<std::uint64_t>(i)})));
        auto r = run({"solve", "--k", std::to_string(k), "--in", path, "--out", tree_path, "--machine"});
        if (r.code != cli::kAffirmative)
            continue;
        auto v = run({"validate", "--k", std::to_string(k), "--in", path, "--tree", tree_path, "--machine"});
        REQUIRE(v.code == cli::kAffirmative);
    }
}

TEST_CASE("gen and catalog")
{
    auto g = run({"gen", "random", "--n", "6", "--seed", "42"});
    CHECK(g.code == 0);
    CHECK(g.out == "tournament 6\n011011\n000001\n010000\n111000\n011100\n001110\n");
    CHECK(run({"gen", "random", "--n", "6", "--seed", "42"}).out == g.out);

    auto t9 = run({"gen", "catalog", "t9"});
    std::ifstream golden(data("t9.txt"));
    std::ostringstream s;
    s << golden.rdbuf();
    CHECK(t9.out == s.str());
    CHECK(run({"catalog", "export", "t12"}).out == serialize_tournament(t12()));
    CHECK(run({"gen", "circulant", "--n", "9", "--diffs", "1,2,3,5"}).out == t9.out);
    CHECK(run({"gen", "transitive", "--n", "3"}).out == "tournament 3\n011\n001\n000\n");
    CHECK(run({"catalog", "list"}).out == "t9\nt12\npaley7\n");
    CHECK(run({"gen", "circulant", "--n", "9", "--diffs", "1,2"}).code == cli::kUsageError);
    CHECK(run({"gen", "catalog", "nope"}).code == cli::kUsageError);
}

TEST_CASE("usage and data errors exit 3")
{
    auto none = run({});
    CHECK(none.code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"solve", "--in", data("t9.txt")}).code == cli::kUsageError);
    auto missing = run({"solve", "--k", "2", "--in", temp_path("does-not-exist.txt")});
    CHECK(missing.code == cli::kUsageError);
    CHECK_FALSE(missing.err.empty());

    auto bad = temp_path("bad.txt");
    write(bad, "tournament 2\n11\n00\n");
    auto parsed = run({"solve", "--k", "1", "--in", bad});
    CHECK(parsed.code == cli::kUsageError);
    CHECK(parsed.err.find("error:") != std::string::npos);

    CHECK(run({"probe", "--n", "4", "--k", "2"}).code == cli::kUsageError);
    CHECK(run({"probe", "--n", "4", "--k", "2", "--exhaustive", "--seed", "1"}).code == cli::kUsageError);
    CHECK(run({"probe", "--n", "9", "--k", "3", "--exhaustive"}).code == cli::kUsageError);
    CHECK(run({"experiment-domination", "--orders", "8", "--samples", "1"}).code == cli::kUsageError);
    CHECK(run({"construct-k4", "--in", data("t9.txt")}).code == cli::kUsageError);
}

TEST_CASE("obstruction, domination, hampath")
{
    auto w = run({"obstruction", "--k", "4", "--in", data("t9.txt"), "--machine"});
    CHECK(w.code == cli::kAffirmative);
    CHECK(w.out.rfind("witness k=4", 0) == 0);
    auto tr = temp_path("tr9.txt");
    write(tr, serialize_tournament(transitive_tournament(9)));
    CHECK(run({"obstruction", "--k", "4", "--in", tr}).code == cli::kIndeterminate);

    auto d = run({"domination", "--in", data("paley7.txt")});
    CHECK(d.code == 0);
    CHECK(d.out.rfind("mu=3 ", 0) == 0);
    CHECK(d.out.find("method=exact") != std::string::npos);
    auto g = run({"domination", "--in", data("paley7.txt"), "--greedy"});
    CHECK(g.out.find("method=greedy-upper-bound") != std::string::npos);

    auto h = run({"hampath", "--in", data("t12.txt")});
    CHECK(h.code == 0);
    CHECK(validate_kary_spanning(parse_tree(h.out), t12(), 1).valid);
}

TEST_CASE("probe and construct-k4")
{
    auto p3 = run({"probe", "--n", "3", "--k", "2", "--exhaustive", "--all"});
    CHECK(p3.code == cli::kAffirmative);
    CHECK(p3.out.find("counterexamples=2") != std::string::npos);
    auto p4 = run({"probe", "--n", "4", "--k", "2", "--exhaustive"});
    CHECK(p4.code == cli::kProvenNegative);
    CHECK(p4.out.rfind("none n=4 k=2 examined=64", 0) == 0);
    auto rnd = run({"probe", "--n", "8", "--k", "3", "--trials", "50", "--seed", "3"});
    CHECK(rnd.code == cli::kIndeterminate);

    auto big = temp_path("big.txt");
    write(big, serialize_tournament(random_tournament(60, SeedSpec{60, 1})));
    auto trace = temp_path("big.trace");
    auto c = run({"construct-k4", "--in", big, "--trace", trace});
    CHECK(c.code == 0);
    CHECK(validate_kary_spanning(parse_tree(c.out), random_tournament(60, SeedSpec{60, 1}), 4).valid);
    auto text = slurp(trace);
    CHECK(text.rfind("step ", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 12);
}

TEST_CASE("machine output is byte-identical across runs and jobs")
{
    std::vector<std::string> base{"experiment-domination", "--orders", "8,12", "--samples", "30", "--seed", "9",
            "--machine"};
    auto a = run(base);
    auto b = run(base);
    auto with_jobs = base;
    with_jobs.insert(with_jobs.end(), {"--jobs", "4"});
    auto c = run(with_jobs);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 2);

    std::vector<std::string> probe{"probe", "--n", "7", "--k", "4", "--trials", "300", "--seed", "5", "--machine"};
    auto p1 = run(probe);
    probe.insert(probe.end(), {"--jobs", "3"});
    auto p2 = run(probe);
    CHECK(p1.out == p2.out);
    CHECK(p1.code == p2.code);
}

TEST_CASE("verify-catalog and erdos-probe")
{
    auto v = run({"verify-catalog"});
    CHECK(v.code == 0);
    CHECK(v.out.find("h(4) >= 10") != std::string::npos);
    CHECK(v.out.find("h(5) >= 13") != std::string::npos);

    auto e = run({"erdos-probe", "--k", "2", "--n-max", "7", "--seed", "1"});
    CHECK(e.code == 0);
    CHECK(e.out.rfind("found n=7 mu=3", 0) == 0);
}
