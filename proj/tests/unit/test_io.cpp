#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "scoreplus/bench.hpp"
#include "scoreplus/datasets.hpp"
#include "scoreplus/manifest.hpp"

using namespace scoreplus;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("scoreplus_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args, const fs::path& log) {
    const std::string cmd = std::string("\"") + SCOREPLUS_CLI + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
#ifdef WEXITSTATUS
    return WEXITSTATUS(status);
#else
    return status;
#endif
}

}  // namespace

TEST_SUITE("manifest") {

TEST_CASE("SHA-256 digests") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("serialize and parse round trip") {
    RunManifest m;
    m.set("method", std::string("score+"));
    m.set("delta", 0.1);
    m.set("restarts", 100LL);
    m.set("empty", std::string(""));
    const RunManifest back = RunManifest::parse(m.serialize());
    CHECK(back.entries() == m.entries());
    CHECK(std::stod(back.get("delta")) == 0.1);
    CHECK_THROWS_AS(m.set("bad key", std::string("x")), std::invalid_argument);
    CHECK_THROWS_AS(RunManifest::parse("no separator here\n"), ParseError);
    CHECK_THROWS_AS(back.get("missing"), std::out_of_range);
}

}

TEST_SUITE("datasets") {

TEST_CASE("registry") {
    CHECK(benchmark_datasets().size() == 8);
    CHECK(find_dataset("karate").k == 2);
    CHECK(find_dataset("caltech").k == 8);
    CHECK(find_dataset("simmons").error_tolerance == 10);
    CHECK_THROWS(find_dataset("nope"));
}

TEST_CASE("missing files are reported as absent") {
    CHECK_FALSE(load_dataset(find_dataset("dolphins"), scratch("empty")).has_value());
}

TEST_CASE("preprocessing: label filter then largest component") {
    const fs::path dir = scratch("football");
    std::ofstream(dir / "football.gml") << R"(graph [
  node [ id 0 value 0 ] node [ id 1 value 0 ] node [ id 2 value 5 ]
  node [ id 3 value 1 ] node [ id 4 value 1 ] node [ id 5 value 2 ]
  edge [ source 0 target 1 ] edge [ source 1 target 2 ] edge [ source 2 target 3 ]
  edge [ source 3 target 4 ] edge [ source 4 target 0 ] edge [ source 2 target 5 ]
])";
    const auto ds = load_dataset(find_dataset("football"), dir);
    REQUIRE(ds.has_value());
    CHECK(ds->graph.num_nodes() == 4);  // node 2 excluded, node 5 then isolated
}

TEST_CASE("karate loads from the fixture directory") {
    const auto ds = load_dataset(find_dataset("karate"), SCOREPLUS_TEST_DATA);
    REQUIRE(ds.has_value());
    CHECK(ds->graph.num_nodes() == 34);
}

TEST_CASE("bench table formatting and missing-data accounting") {
    BenchOptions opt;
    opt.data_dir = scratch("nodata");
    opt.datasets = {"dolphins"};
    const BenchTable t = bench_realdata(opt);
    CHECK(t.rows.empty());
    CHECK(t.missing_datasets == std::vector<std::string>{"dolphins"});
    CHECK_FALSE(t.complete_and_passing());
    CHECK(t.to_tsv().find("missing dataset: dolphins") != std::string::npos);
}

TEST_CASE("published simulation table") {
    CHECK(published_simulation_error(2, 1000)->second == doctest::Approx(0.07));
    CHECK(published_simulation_error(2, 2000)->second == doctest::Approx(0.05));
    CHECK_FALSE(published_simulation_error(3, 1000).has_value());
}

}

TEST_SUITE("cli") {

TEST_CASE("detect writes labels and a manifest") {
    const fs::path out = scratch("detect");
    const std::string data = SCOREPLUS_TEST_DATA;
    REQUIRE(run_cli("detect " + data + "/karate.edges --labels " + data + "/karate.labels --out " + out.string(),
                    out / "log") == 0);
    const RunManifest m = RunManifest::parse(read_file((out / "manifest.txt").string()));
    CHECK(m.get("method") == "score+");
    CHECK(m.get("errors") == "1");
    CHECK(m.get("input.graph.sha256") == sha256_file(data + "/karate.edges"));
    CHECK(m.contains("eigenvalue.3"));
    const Graph labels = parse_edge_list(read_file(data + "/karate.edges"),
                                         std::string_view(read_file((out / "labels.tsv").string())));
    CHECK(labels.num_labels() == 2);
}

TEST_CASE("detect refuses a disconnected graph and suggests the fix") {
    const fs::path out = scratch("split");
    std::ofstream(out / "g.edges") << "a b\nb c\nc a\nd e\ne f\nf d\nd g\n";
    CHECK(run_cli("detect " + (out / "g.edges").string() + " --out " + (out / "r").string(), out / "log") != 0);
    CHECK(read_file((out / "log").string()).find("--largest-component") != std::string::npos);
    CHECK(run_cli("detect " + (out / "g.edges").string() + " --largest-component --restarts 5 --out " +
                      (out / "r").string(),
                  out / "log") == 0);
}

TEST_CASE("simulate then detect round trip") {
    const fs::path out = scratch("simulate");
    REQUIRE(run_cli("simulate --n 400 --experiment 1 --seed 2 --out " + (out / "sim").string(), out / "log") == 0);
    const RunManifest sim = RunManifest::parse(read_file((out / "sim" / "manifest.txt").string()));
    CHECK(sim.get("output.graph.sha256") == sha256_file((out / "sim" / "graph.edges").string()));
    REQUIRE(run_cli("detect " + (out / "sim" / "graph.edges").string() + " --labels " +
                        (out / "sim" / "graph.labels").string() + " --k 4 --largest-component --restarts 10 --out " +
                        (out / "det").string(),
                    out / "log") == 0);
    const RunManifest det = RunManifest::parse(read_file((out / "det" / "manifest.txt").string()));
    CHECK(det.contains("error_rate"));
}

TEST_CASE("simulate rejects n = 0") {
    const fs::path out = scratch("simulate0");
    CHECK(run_cli("simulate --n 0 --out " + out.string(), out / "log") != 0);
}

TEST_CASE("bad edge list reports the line") {
    const fs::path out = scratch("badedges");
    std::ofstream(out / "g.edges") << "a b\nb\n";
    CHECK(run_cli("detect " + (out / "g.edges").string(), out / "log") != 0);
    CHECK(read_file((out / "log").string()).find("line 2") != std::string::npos);
}

TEST_CASE("report prints scree data") {
    const fs::path out = scratch("report");
    const std::string data = SCOREPLUS_TEST_DATA;
    REQUIRE(run_cli("report " + data + "/karate.edges --labels " + data + "/karate.labels --depth 5 --out " +
                        (out / "scree.tsv").string(),
                    out / "log") == 0);
    const std::string tsv = read_file((out / "scree.tsv").string());
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 6);
}

}
