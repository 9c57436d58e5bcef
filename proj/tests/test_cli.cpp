#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainmod/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct CliRun {
    int exit_code;
    std::string output;
};

CliRun run_cli(const std::string& args) {
    std::string command = std::string(CHAINMOD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe))
        output.append(buffer, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("chainmod_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("gen fixtures are byte-identical across runs") {
    TempDir dir;
    auto a = dir.file("a.json");
    auto b = dir.file("b.json");
    REQUIRE(run_cli("gen random-1chain --seed 1 --out " + a).exit_code == 0);
    REQUIRE(run_cli("gen random-1chain --seed 1 --out " + b).exit_code == 0);
    CHECK(chainmod::read_file(a) == chainmod::read_file(b));

    auto different = dir.file("c.json");
    REQUIRE(run_cli("gen random-1chain --seed 2 --out " + different).exit_code == 0);
    CHECK(chainmod::read_file(a) != chainmod::read_file(different));
}

TEST_CASE("repair on the parallel-bundle fixture and independent verify") {
    TempDir dir;
    auto fixture = dir.file("bundle.json");
    auto repaired = dir.file("repaired.json");
    auto cert = dir.file("cert.json");
    REQUIRE(run_cli("gen parallel-bundle --k 2 --out " + fixture).exit_code == 0);

    CliRun r = run_cli("repair --p 2 --in " + fixture + " --out " + repaired +
                       " --cert " + cert);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"iterations\": 1") != std::string::npos);

    CliRun v = run_cli("verify --p 2 " + fixture + " " + repaired + " " + cert);
    INFO(v.output);
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("\"all_pass\": true") != std::string::npos);

    // A tampered certificate must fail verification with exit 1.
    std::string tampered = chainmod::read_file(cert);
    auto pos = tampered.find("\"coeffs\": {");
    REQUIRE(pos != std::string::npos);
    write(dir.file("bad_cert.json"),
          tampered.replace(pos, 11, "\"coeffs\": {\"1\": 5, "));
    CliRun bad = run_cli("verify --p 2 " + fixture + " " + repaired + " " +
                         dir.file("bad_cert.json"));
    CHECK(bad.exit_code == 1);
}

TEST_CASE("equiv exit codes and certificate") {
    TempDir dir;
    write(dir.file("a.json"), R"({"version": 1, "ambient_dim": 1,
        "vertices": [[0], [1]], "edges": [[0, 1]],
        "chains": {"T": {"degree": 1, "coeffs": {"0": 4}}}})");
    write(dir.file("b.json"), R"({"version": 1, "ambient_dim": 1,
        "vertices": [[0], [1]], "edges": [[0, 1]],
        "chains": {"T": {"degree": 1, "coeffs": {"0": 1}}}})");

    CliRun yes = run_cli("equiv --p 3 " + dir.file("a.json") + " " + dir.file("b.json"));
    CHECK(yes.exit_code == 0);
    CHECK(yes.output.find("\"equivalent\": true") != std::string::npos);
    CHECK(yes.output.find("\"quotient\"") != std::string::npos);

    CliRun no = run_cli("equiv --p 2 " + dir.file("a.json") + " " + dir.file("b.json"));
    CHECK(no.exit_code == 1);

    CliRun err = run_cli("equiv --p 3 " + dir.file("a.json") + " missing.json");
    CHECK(err.exit_code == 2);
}

TEST_CASE("flatnorm on the single-edge fixture") {
    TempDir dir;
    write(dir.file("edge.json"), R"({"version": 1, "ambient_dim": 1,
        "vertices": [[0], [3]], "edges": [[0, 1]],
        "chains": {"T": {"degree": 0, "coeffs": {"0": -1, "1": 1}}}})");
    CliRun r = run_cli("flatnorm --p 2 --bound 3 --in " + dir.file("edge.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"exact\": \"2\"") != std::string::npos);
}

TEST_CASE("select and pmass") {
    TempDir dir;
    write(dir.file("c.json"), R"({"version": 1, "ambient_dim": 1,
        "vertices": [[0], [1]], "edges": [[0, 1]],
        "chains": {"T": {"degree": 1, "coeffs": {"0": 5}}}})");
    CliRun sel = run_cli("select --p 3 --in " + dir.file("c.json"));
    CHECK(sel.exit_code == 0);
    CHECK(sel.output.find("\"0\": -1") != std::string::npos);

    CliRun pm = run_cli("pmass --p 3 --in " + dir.file("c.json"));
    CHECK(pm.exit_code == 0);
    CHECK(pm.output.find("\"exact\": \"1\"") != std::string::npos);
}

TEST_CASE("grid-check reports the hand-traced 6 vs 8") {
    TempDir dir;
    write(dir.file("g.json"),
          R"({"version": 1, "dims": [3], "theta": [1, 2, 1], "cell_edge": 1})");
    CliRun r = run_cli("grid-check --p 3 --dims 3 --theta " + dir.file("g.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"lhs\": \"6\"") != std::string::npos);
    CHECK(r.output.find("\"rhs\": \"8\"") != std::string::npos);

    CliRun mismatch =
        run_cli("grid-check --p 3 --dims 4 --theta " + dir.file("g.json"));
    CHECK(mismatch.exit_code == 2);
}

TEST_CASE("grid-random sweep is reproducible and reports max ratio") {
    CliRun a = run_cli("grid-random --p 3 --dims 4,4 --range 9 --seed 7 --count 5");
    CliRun b = run_cli("grid-random --p 3 --dims 4,4 --range 9 --seed 7 --count 5");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("max_mass_ratio") != std::string::npos);
}

TEST_CASE("zerosum and cone") {
    TempDir dir;
    write(dir.file("r.json"), R"({"version": 1, "ambient_dim": 1,
        "vertices": [[0], [1]], "edges": [[0, 1]],
        "chains": {"R": {"degree": 0, "coeffs": {"0": -1, "1": 1}}}})");
    CHECK(run_cli("zerosum --p 2 --in " + dir.file("r.json")).exit_code == 0);

    write(dir.file("bad.json"), R"({"version": 1, "ambient_dim": 1,
        "vertices": [[0], [1]], "edges": [[0, 1]],
        "chains": {"R": {"degree": 0, "coeffs": {"0": 1}}}})");
    CHECK(run_cli("zerosum --p 2 --in " + dir.file("bad.json")).exit_code == 1);

    CliRun c = run_cli("cone --in " + dir.file("r.json") + " --apex 5 --out " +
                       dir.file("coned.json"));
    CHECK(c.exit_code == 0);
    auto doc = chainmod::load_chain_document(dir.file("coned.json"));
    CHECK(doc.complex->edge_count() == 3);
    CHECK(doc.chains.count("C") == 1);
}

TEST_CASE("malformed JSON yields exit 2 with a location") {
    TempDir dir;
    write(dir.file("broken.json"), "{\n  \"version\": 1,\n  nope\n}");
    CliRun r = run_cli("pmass --p 2 --in " + dir.file("broken.json"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 3") != std::string::npos);
}

TEST_CASE("manifest batch mode") {
    TempDir dir;
    write(dir.file("r.json"), R"({"version": 1, "ambient_dim": 1,
        "vertices": [[0], [1]], "edges": [[0, 1]],
        "chains": {"R": {"degree": 0, "coeffs": {"0": -1, "1": 1}}}})");
    write(dir.file("runs.json"),
          std::string(R"({"version": 1, "runs": [)") + R"({"args": ["zerosum",)" +
              R"( "--p", "2", "--in", ")" + dir.file("r.json") + R"("]}]})");
    CliRun r = run_cli("--manifest " + dir.file("runs.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"exit\": 0") != std::string::npos);
}

TEST_CASE("gen random-grid emits a valid grid document") {
    TempDir dir;
    auto path = dir.file("g.json");
    REQUIRE(run_cli("gen random-grid --dims 3,3 --range 10 --seed 7 --out " + path)
                .exit_code == 0);
    auto grid = chainmod::load_grid_document(path);
    CHECK(grid.dims == std::vector<int>{3, 3});
    CHECK(grid.theta.size() == 9);
    CHECK(run_cli("grid-check --p 2 --theta " + path).exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("select --in nowhere.json").exit_code == 2); // missing --p
    CHECK(run_cli("frobnicate").exit_code == 2);
}
