#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "naeflow/flows.hpp"
#include "naeflow/graph_io.hpp"
#include "naeflow/reductions.hpp"
#include "naeflow/witness_io.hpp"

using namespace naeflow;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    json report;
};

const std::string data_dir = NAEFLOW_DATA_DIR;

std::string data(const std::string& name) { return data_dir + "/" + name; }

fs::path scratch()
{
    static fs::path dir = [] {
        auto p = fs::temp_directory_path() / ("naeflow_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string tmp(const std::string& name) { return (scratch() / name).string(); }

Result run(const std::string& args)
{
    std::string cmd = std::string(NAEFLOW_CLI) + " " + args + " 2>/dev/null";
    FILE* p = ::popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p))
        out.append(buf.data(), n);
    int status = ::pclose(p);
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.report = json::parse(out); // every invocation must print a valid report
    return r;
}

void expect_report_shape(const json& j)
{
    for (const char* key : {"command", "input_digest", "status", "witness", "wall_time_s", "stats", "seed", "detail"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_TRUE(j["stats"].contains("nodes"));
    EXPECT_TRUE(j["stats"].contains("propagations"));
    // status agrees with the presence of a witness
    const auto status = j["status"].get<std::string>();
    if (status == "error" || status == "infeasible") {
        EXPECT_TRUE(j["witness"].is_null());
    }
}

} // namespace

TEST(Cli, SolveOneInDegreeOnC4)
{
    auto r = run("solve one-in-degree " + data("c4.json") + " -o " + tmp("a.json"));
    EXPECT_EQ(r.code, 0);
    expect_report_shape(r.report);
    EXPECT_EQ(r.report["status"], "found");
    auto g = load_graph(data("c4.json")).graph;
    EXPECT_TRUE(verify_one_in_degree(g, decomposition_from_json(parse_json_text(read_text_file(tmp("a.json"))))));
}

TEST(Cli, ZeroSumOnC5HasNone)
{
    auto r = run("solve zero-sum-flow --k 3 " + data("c5.json") + " -o " + tmp("none.json"));
    EXPECT_EQ(r.code, 1);
    expect_report_shape(r.report);
    EXPECT_EQ(r.report["status"], "none");
    EXPECT_TRUE(r.report["witness"].is_null());
    EXPECT_FALSE(fs::exists(tmp("none.json")));
}

TEST(Cli, ParseErrorsExitTwoWithReport)
{
    for (const std::string& args : {"solve nae " + data("broken.json"), std::string("solve nae /no/such/file.json"),
                                   std::string("solve bogus"), std::string("frobnicate"),
                                   "solve zero-sum-flow --k 1 " + data("c4.json")}) {
        auto r = run(args);
        EXPECT_EQ(r.code, 2) << args;
        expect_report_shape(r.report);
        EXPECT_EQ(r.report["status"], "error") << args;
        EXPECT_TRUE(r.report.contains("message"));
    }
}

TEST(Cli, InfeasibleShortCircuits)
{
    auto r = run("solve perfect-matching " + data("c5.json"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.report["status"], "infeasible");
    json path = {{"n", 3}, {"edges", {{0, 1}, {1, 2}}}};
    write_text_file(tmp("p3.json"), path.dump());
    r = run("solve nae-edge " + tmp("p3.json"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.report["status"], "infeasible");
}

TEST(Cli, ChecksWithEvidence)
{
    auto r = run("check cycle-mod4 " + data("c6.json") + " -o " + tmp("cyc.json"));
    EXPECT_EQ(r.code, 0);
    auto cyc = parse_json_text(read_text_file(tmp("cyc.json")))["cycle"];
    EXPECT_EQ(cyc.size() % 4, 2u);

    r = run("check planar " + data("k33.json") + " -o " + tmp("kur.json"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.report["evidence"], tmp("kur.json"));
    EXPECT_EQ(parse_json_text(read_text_file(tmp("kur.json")))["kuratowski_edges"].size(), 9u);

    EXPECT_EQ(run("check regular --r 3 " + data("k4.json")).code, 0);
    EXPECT_EQ(run("check regular --r 4 " + data("k4.json")).code, 1);
    EXPECT_EQ(run("check semiregular " + data("c5.json")).code, 0);
    EXPECT_EQ(run("check planar " + data("cube.json")).code, 0);
    EXPECT_EQ(run("check bipartite " + data("heawood.json")).code, 0);

    r = run("check bipartite " + data("c5.json") + " -o " + tmp("odd.json"));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(parse_json_text(read_text_file(tmp("odd.json")))["odd_cycle"].size(), 5u);

    // a cap too small to finish is an error, not a "no"
    EXPECT_EQ(run("check cycle-mod4 --cycle-cap 1 " + data("cube.json")).code, 2);
}

TEST(Cli, GenThreePartition)
{
    auto r = run("gen three-partition --a 1,1,1 --k 3 -o " + tmp("tp.json"));
    EXPECT_EQ(r.code, 0);
    auto gi = gadget_from_json(parse_json_text(read_text_file(tmp("tp.json"))));
    EXPECT_EQ(gi.graph.order(), 20);
    ASSERT_TRUE(gi.weights.has_value());
    ASSERT_EQ(run("gen three-partition --a 1,1,1 --k 3 -o " + tmp("tp2.json") + " --dot " + tmp("tp.dot")).code, 0);
    EXPECT_EQ(read_text_file(tmp("tp.dot")).rfind("graph G {", 0), 0u);
    EXPECT_EQ(run("gen three-partition --a 1,1,1 --k 4").code, 2);
}

TEST(Cli, GenRegularBipartiteFromPaddedFormula)
{
    auto r = run("gen regular-bipartite --r 3 " + data("padded.json") + " -o " + tmp("rb.json"));
    EXPECT_EQ(r.code, 0);
    auto gi = gadget_from_json(parse_json_text(read_text_file(tmp("rb.json"))));
    EXPECT_EQ(gi.graph.order(), 720);
    EXPECT_EQ(degree_profile(gi.graph).regular, 3);
    // the unpadded formula is padded on the way in
    r = run("gen regular-bipartite --r 3 " + data("k4_formula.json") + " -o " + tmp("rb2.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.report["detail"]["n"], 240);
    EXPECT_EQ(r.report["detail"]["padded"], false);
}

TEST(Cli, GenTreeLikeRejectsNonplanar)
{
    auto r = run("gen tree-like " + data("fano_formula.json") + " -o " + tmp("fano_t.json"));
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(fs::exists(tmp("fano_t.json")));
}

TEST(Cli, GenZeroSumFromTreeLikeFile)
{
    ASSERT_EQ(run("gen tree-like " + data("k4_formula.json") + " -o " + tmp("t.json")).code, 0);
    auto r = run("gen zero-sum " + tmp("t.json") + " -o " + tmp("z.json"));
    EXPECT_EQ(r.code, 0);
    auto gi = gadget_from_json(parse_json_text(read_text_file(tmp("z.json"))));
    EXPECT_EQ(gi.graph.order(), r.report["detail"]["n"].get<int>());
    auto prof = degree_profile(gi.graph);
    EXPECT_EQ(prof.min_degree, 3);
    EXPECT_EQ(prof.max_degree, 4);
}

TEST(Cli, VerifyAcceptsSolverWitnessesAndRejectsTampered)
{
    ASSERT_EQ(run("solve one-in-degree " + data("c4.json") + " -o " + tmp("a.json")).code, 0);
    EXPECT_EQ(run("verify one-in-degree " + data("c4.json") + " " + tmp("a.json")).code, 0);

    ASSERT_EQ(run("solve zero-sum-flow --k 3 " + data("k4.json") + " -o " + tmp("lab.json")).code, 0);
    EXPECT_EQ(run("verify zero-sum-flow --k 3 " + data("k4.json") + " " + tmp("lab.json")).code, 0);

    auto lab = labels_from_json(parse_json_text(read_text_file(tmp("lab.json"))));
    lab[0] = -lab[0];
    write_text_file(tmp("lab_bad.json"), labels_to_json(lab).dump());
    EXPECT_EQ(run("verify zero-sum-flow --k 3 " + data("k4.json") + " " + tmp("lab_bad.json")).code, 1);

    write_text_file(tmp("a_bad.json"), R"({"A": [0, 2]})");
    auto r = run("verify one-in-degree " + data("c4.json") + " -w " + tmp("a_bad.json"));
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.report["witness"].is_null());

    write_text_file(tmp("a_out.json"), R"({"A": [0, 9]})");
    EXPECT_EQ(run("verify one-in-degree " + data("c4.json") + " " + tmp("a_out.json")).code, 1);
    write_text_file(tmp("a_shape.json"), R"({"B": [0]})");
    EXPECT_EQ(run("verify one-in-degree " + data("c4.json") + " " + tmp("a_shape.json")).code, 2);
}

TEST(Cli, SolveVerifyRoundTripForEveryKind)
{
    const std::pair<const char*, const char*> cases[] = {
        {"nae", "cube.json"},      {"one-in-degree", "k33.json"},      {"vertex-flow", "k33.json"},
        {"nae-edge", "cube.json"}, {"perfect-matching", "heawood.json"}, {"zero-sum-flow", "heawood.json"},
    };
    for (auto [kind, file] : cases) {
        std::string w = tmp(std::string("rt_") + kind + ".json");
        ASSERT_EQ(run(std::string("solve ") + kind + " " + data(file) + " -o " + w).code, 0) << kind;
        EXPECT_EQ(run(std::string("verify ") + kind + " " + data(file) + " " + w).code, 0) << kind;
    }
    ASSERT_EQ(run("gen three-partition --a 1,1,1 --k 3 -o " + tmp("tpw.json")).code, 0);
    ASSERT_EQ(run("solve one-in-degree-weighted " + tmp("tpw.json") + " -o " + tmp("tpw_a.json")).code, 0);
    EXPECT_EQ(run("verify one-in-degree-weighted " + tmp("tpw.json") + " " + tmp("tpw_a.json")).code, 0);
}

TEST(Cli, MinEdgeDeletionMatchesClauseCountOnGadget)
{
    ASSERT_EQ(run("gen bipartition " + data("xyz3.json") + " -o " + tmp("bp.json")).code, 0);
    auto r = run("solve min-edge-deletion " + tmp("bp.json") + " -o " + tmp("del.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.report["detail"]["count"], 3);
    auto del = parse_json_text(read_text_file(tmp("del.json")));
    EXPECT_EQ(del["deleted"].size(), 3u);
}

TEST(Cli, SweepCubicBipartite)
{
    auto r = run("sweep cubic-bipartite-nae --max-n 10");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.report["detail"]["counterexamples"], 0);
    int total = 0;
    for (const auto& row : r.report["detail"]["per_n"])
        total += row["graphs"].get<int>();
    EXPECT_EQ(total, 4); // K3,3, the cube, and two on 10 vertices
    EXPECT_EQ(run("sweep cubic-bipartite-nae --max-n 4").code, 0);
    EXPECT_EQ(run("sweep cubic-bipartite-nae --max-n 1000").code, 2);
}

TEST(Cli, DeterministicOutputs)
{
    for (int i = 0; i < 2; ++i) {
        ASSERT_EQ(run("gen zero-sum " + data("k4_formula.json") + " -o " + tmp("det" + std::to_string(i) + ".json")).code, 0);
        ASSERT_EQ(run("solve nae " + data("heawood.json") + " -o " + tmp("detw" + std::to_string(i) + ".json")).code, 1);
        ASSERT_EQ(run("solve nae-edge " + data("heawood.json") + " --format dot -o " + tmp("detd" + std::to_string(i) + ".dot")).code, 0);
    }
    EXPECT_EQ(read_text_file(tmp("det0.json")), read_text_file(tmp("det1.json")));
    EXPECT_EQ(read_text_file(tmp("detd0.dot")), read_text_file(tmp("detd1.dot")));
}

TEST(Cli, HelpExitsZero)
{
    int status = std::system((std::string(NAEFLOW_CLI) + " --help >/dev/null 2>&1").c_str());
    EXPECT_TRUE(WIFEXITED(status));
    EXPECT_EQ(WEXITSTATUS(status), 0);
}

TEST(Cli, FlagsAfterVerbAndDigestStable)
{
    auto a = run("--seed 7 solve nae " + data("cube.json"));
    auto b = run("solve nae -i " + data("cube.json") + " --seed 7");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.report["seed"], 7);
    EXPECT_EQ(a.report["input_digest"], b.report["input_digest"]);
}
