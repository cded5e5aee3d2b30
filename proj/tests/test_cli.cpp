#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
    const char* env = std::getenv("TEMPERLEY_CLI");
    REQUIRE_MESSAGE(env != nullptr, "TEMPERLEY_CLI must point at the built binary");
    return env;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string command = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

fs::path write_temp(const std::string& name, const std::string& body) {
    fs::path dir = fs::temp_directory_path() / "temperley-cli-tests";
    fs::create_directories(dir);
    fs::path file = dir / name;
    std::ofstream out(file);
    out << body;
    return file;
}

} // namespace

TEST_CASE("info reports the K3 pipeline numbers") {
    auto file = write_temp("k3.json", fixtures::k3());
    RunResult r = run("info --input " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("trees: 3") != std::string::npos);
    CHECK(r.output.find("matchings: 3") != std::string::npos);
    CHECK(r.output.find("jacobian: [3]") != std::string::npos);
    CHECK(r.output.find("kasteleyn_cokernel: [3]") != std::string::npos);
}

TEST_CASE("canon is idempotent") {
    auto file = write_temp("theta.json", fixtures::theta());
    RunResult first = run("canon --input " + file.string());
    CHECK(first.exit_code == 0);
    auto canon_file = write_temp("theta-canon.json", first.output);
    RunResult second = run("canon --input " + canon_file.string());
    CHECK(second.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("verify exits 0 and is byte-deterministic") {
    for (const std::string& text :
         {fixtures::k3(), fixtures::c4(), fixtures::theta()}) {
        auto g = fixtures::graph(text);
        auto file = write_temp(g.name() + ".json", text);
        RunResult a = run("verify --input " + file.string());
        RunResult b = run("verify --input " + file.string());
        CAPTURE(g.name());
        CHECK(a.exit_code == 0);
        CHECK(a.output == b.output);
        CHECK(a.output.find("result: pass") != std::string::npos);
        RunResult structured = run("verify --format structured --input " + file.string());
        CHECK(structured.exit_code == 0);
        CHECK(structured.output.find("\"pass\": true") != std::string::npos);
    }
}

TEST_CASE("input errors exit with code 2 and name the error") {
    auto bad = write_temp("bad.json", "{ not json");
    RunResult r = run("verify --input " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("BadDocument") != std::string::npos);

    auto bridge = write_temp("bridge.json", R"({"name":"x","vertices":[
        {"id":"0","x":0,"y":0},{"id":"1","x":2,"y":0},{"id":"2","x":1,"y":1},
        {"id":"3","x":5,"y":0},{"id":"4","x":7,"y":0},{"id":"5","x":6,"y":1}],
      "edges":[{"id":"a1","u":"0","v":"1"},{"id":"a2","u":"1","v":"2"},{"id":"a3","u":"2","v":"0"},
               {"id":"b1","u":"3","v":"4"},{"id":"b2","u":"4","v":"5"},{"id":"b3","u":"5","v":"3"},
               {"id":"br","u":"1","v":"3"}],
      "root":"0"})");
    RunResult rb = run("info --input " + bridge.string());
    CHECK(rb.exit_code == 2);
    CHECK(rb.output.find("HasBridge") != std::string::npos);

    RunResult missing = run("info --input /nonexistent/nope.json");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("fuzz is deterministic for a fixed seed and exits 0") {
    RunResult a = run("fuzz --count 8 --max-edges 8 --seed 11");
    RunResult b = run("fuzz --count 8 --max-edges 8 --seed 11");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("8/8 passed") != std::string::npos);
    RunResult c = run("fuzz --count 4 --max-edges 8 --seed 12");
    CHECK(c.output != a.output);
}

TEST_CASE("gplus emits a parseable document with provenance") {
    auto file = write_temp("k3.json", fixtures::k3());
    RunResult r = run("gplus --input " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"provenance\"") != std::string::npos);
    CHECK(r.output.find("w(e1)") != std::string::npos);
    CHECK(r.output.find("\"halves\"") != std::string::npos);

    // The emitted G+ is a valid graph document in its own right (ids with
    // colons included) and runs through the whole pipeline.
    auto gplus_file = write_temp("k3plus.json", r.output);
    RunResult info = run("info --input " + gplus_file.string());
    CHECK(info.exit_code == 0);
    CHECK(info.output.find("trees: 15") != std::string::npos);
    CHECK(info.output.find("matchings: 15") != std::string::npos);
}

TEST_CASE("render writes DOT and SVG files") {
    auto file = write_temp("c4.json", fixtures::c4());
    fs::path out = fs::temp_directory_path() / "temperley-cli-tests" / "render";
    fs::remove_all(out);
    RunResult r = run("render --input " + file.string() + " --out " + out.string() +
                      " --tree 0 --orientation");
    CHECK(r.exit_code == 0);
    for (const char* name : {"g.dot", "overlay.dot", "gplus.dot", "g.svg", "overlay.svg",
                             "gplus.svg"})
        CHECK(fs::exists(out / name));
}

TEST_CASE("trees, matchings, action and friends run clean on theta") {
    auto file = write_temp("theta.json", fixtures::theta());
    for (const std::string& cmd :
         {std::string("trees"), std::string("matchings"), std::string("jacobian"),
          std::string("kasteleyn"), std::string("bernardi"), std::string("temperley"),
          std::string("action")}) {
        RunResult r = run(cmd + " --input " + file.string());
        CAPTURE(cmd);
        CHECK(r.exit_code == 0);
        CHECK(!r.output.empty());
    }
}
