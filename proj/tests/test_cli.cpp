#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "spheretri/census.hpp"
#include "spheretri/cli.hpp"
#include "spheretri/generate.hpp"
#include "spheretri/graph6.hpp"
#include "spheretri/planar_code.hpp"
#include "spheretri/report_json.hpp"
#include "test_util.hpp"

using namespace spheretri;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// RAII temp file seeded with the given bytes.
class TempFile {
public:
    explicit TempFile(const std::string& bytes, const char* suffix = ".bin") {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("spheretri_test_" + std::to_string(counter++) + suffix))
                    .string();
        std::ofstream f(path_, std::ios::binary);
        f << bytes;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("usage errors exit with 2, help with 0") {
    CHECK(run({}).code == 2);                        // a subcommand is required
    CHECK(run({"frobnicate"}).code == 2);            // unknown subcommand
    CHECK(run({"gen"}).code == 2);                   // -n missing
    CHECK(run({"gen", "-n", "3"}).code == 2);        // below range
    CHECK(run({"verify", "bogus"}).code == 2);       // unknown claim group
    CHECK(run({"verify", "theorem1", "--max-n", "15"}).code == 2);
    CHECK(run({"census", "-i", "/nonexistent/file"}).code == 2);
    const CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
    const CliResult sub_help = run({"gen", "--help"});
    CHECK(sub_help.code == 0);
    CHECK(sub_help.out.find("--format") != std::string::npos);
}

TEST_CASE("min-c4 text output") {
    const CliResult r = run({"min-c4", "-n", "6"});
    REQUIRE(r.code == 0);
    const std::string expected = "n=6 g=15 minimizers=1\n" +
                                 canonical_code(test::octahedron()).hex() +
                                 "\n";
    CHECK(r.out == expected);
}

TEST_CASE("min-c4 json is deterministic across worker counts") {
    const CliResult a = run({"--threads", "1", "min-c4", "-n", "9", "--json"});
    const CliResult b = run({"--threads", "4", "min-c4", "-n", "9", "--json"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["n"] == 9);
    CHECK(j["g_value"] == 24);
    CHECK(j["minimizer_count"] ==
          static_cast<std::int64_t>(j["minimizers"].size()));
    for (const auto& m : j["minimizers"]) CHECK(m["code"] == m["planar_code"]);
}

TEST_CASE("gen writes planar_code with header by default") {
    const CliResult r = run({"gen", "-n", "6"});
    REQUIRE(r.code == 0);
    const auto graphs = decode_planar_code(r.out);
    CHECK(graphs.size() == 2);
    CHECK(r.err.find("2 of 2 classes written") != std::string::npos);
}

TEST_CASE("gen filters") {
    const CliResult min4 = run({"gen", "-n", "7", "--min-degree", "4"});
    REQUIRE(min4.code == 0);
    const auto graphs = decode_planar_code(min4.out);
    REQUIRE(graphs.size() == 1);
    CHECK(graphs.front().min_degree() == 4);

    const CliResult none = run({"gen", "-n", "8", "--connectivity", "5"});
    REQUIRE(none.code == 0); // empty result is not an error
    CHECK(decode_planar_code(none.out).empty());
    CHECK(none.err.find("0 of 14 classes written") != std::string::npos);
}

TEST_CASE("gen graph6 format and output file") {
    TempFile out_file("", ".g6");
    const CliResult r = run({"gen", "-n", "6", "--format", "graph6", "-o",
                             out_file.path()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty()); // everything went to the file
    std::istringstream lines(slurp(out_file.path()));
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(line.size() == 4); // graph6 line for n=6
        ++count;
    }
    CHECK(count == 2);
}

TEST_CASE("census table output") {
    const Triangulation graphs[] = {k4(), test::octahedron()};
    TempFile input(encode_planar_code(graphs, true), ".plc");
    const CliResult r = run({"census", "-i", input.path()});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "index   n    c3    c4  diamond  separating\n"
          "    0   4     4     3        3           0\n"
          "    1   6     8    15       12           3\n");

    const CliResult pv = run({"census", "-i", input.path(), "--per-vertex"});
    REQUIRE(pv.code == 0);
    CHECK(pv.out.find("per-vertex: 3 3 3 3\n") != std::string::npos);
    CHECK(pv.out.find("per-vertex: 10 10 10 10 10 10\n") != std::string::npos);
}

TEST_CASE("census json output") {
    const Triangulation graphs[] = {k4()};
    TempFile input(encode_planar_code(graphs, true), ".plc");
    const CliResult r = run({"census", "-i", input.path(), "--json"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "[{\"c3\":4,\"c4\":3,\"c4_diamond\":3,\"c4_separating\":0,"
          "\"index\":0,\"n\":4,\"per_vertex_c4\":[3,3,3,3]}]\n");
}

TEST_CASE("census rejects corrupt input with exit 1") {
    TempFile input(std::string(">>planar_code<<") + std::string(1, char(4)),
                   ".plc");
    const CliResult r = run({"census", "-i", input.path()});
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("verify text output") {
    const CliResult r = run({"verify", "theorem1", "--max-n", "7"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "[PASS] theorem1 n=4..7 counterexamples=0\n");

    const CliResult lemmas = run({"verify", "lemmas", "--max-n", "7"});
    REQUIRE(lemmas.code == 0);
    CHECK(lemmas.out.find("[PASS] lemma.1") != std::string::npos);
    CHECK(lemmas.out.find("[PASS] lemma.2") != std::string::npos);
    CHECK(lemmas.out.find("[PASS] lemma.3") != std::string::npos);

    const CliResult claims = run({"verify", "claims", "--max-n", "8"});
    REQUIRE(claims.code == 0);
    CHECK(claims.out.find("[PASS] structural.a") != std::string::npos);
    CHECK(claims.out.find("structural.c") == std::string::npos); // needs n=11

    const CliResult none = run({"verify", "identities", "--max-n", "8"});
    CHECK(none.code == 0);
    CHECK(none.out.empty());
    CHECK(none.err.find("no identities checks apply") != std::string::npos);
}

TEST_CASE("verify json validates against the report shape") {
    const CliResult r = run({"verify", "oracle", "--max-n", "6", "--json"});
    REQUIRE(r.code == 0);
    const auto reports = nlohmann::json::parse(r.out);
    REQUIRE(reports.is_array());
    REQUIRE(reports.size() == 3);
    for (const auto& j : reports) {
        CHECK(j["status"] == "pass");
        CHECK(j["counterexamples"].is_array());
        CHECK(j["n_range"]["lo"].is_number_integer());
        CHECK(j["n_range"]["hi"].is_number_integer());
        CHECK(j["statistics"].is_array());
    }
    CHECK(reports[0]["claim_id"] == "oracle.generation");
}

TEST_CASE("config file feeds limits and flags override") {
    TempFile config("{\"max_n\": 6, \"threads\": 2}", ".json");
    CHECK(run({"--config", config.path(), "min-c4", "-n", "6"}).code == 0);
    // -n above the configured cap still runs: explicit flags win
    CHECK(run({"--config", config.path(), "min-c4", "-n", "7"}).code == 0);
    // verify default max-n drops to the configured cap
    const CliResult v =
        run({"--config", config.path(), "verify", "theorem1"});
    CHECK(v.code == 0);
    CHECK(v.out == "[PASS] theorem1 n=4..6 counterexamples=0\n");

    TempFile big("{\"max_n\": 15}", ".json");
    const CliResult warned =
        run({"--config", big.path(), "min-c4", "-n", "5"});
    CHECK(warned.code == 0);
    CHECK(warned.err.find("warning:") != std::string::npos);

    TempFile broken("{\"max_n\": ", ".json");
    CHECK(run({"--config", broken.path(), "min-c4", "-n", "5"}).code == 2);
    TempFile zero_threads("{\"threads\": 0}", ".json");
    CHECK(run({"--config", zero_threads.path(), "min-c4", "-n", "5"}).code ==
          2);
    TempFile tiny("{\"class_budget\": 4}", ".json");
    CHECK(run({"--config", tiny.path(), "gen", "-n", "8"}).code == 2);
}

TEST_CASE("convert transcodes bit-exactly and to graph6") {
    const auto level = enumerate(5);
    TempFile input(encode_planar_code(level, true), ".plc");
    const CliResult same = run({"convert", "-i", input.path(), "--to",
                                "planar_code"});
    REQUIRE(same.code == 0);
    CHECK(same.out == slurp(input.path()));

    const CliResult g6 = run({"convert", "-i", input.path(), "--to", "graph6"});
    REQUIRE(g6.code == 0);
    CHECK(g6.out == encode_graph6(level.front()) + "\n");
    CHECK(run({"convert", "-i", input.path()}).code == 2); // --to is required
}

TEST_CASE("json rendering goldens") {
    VerificationReport r;
    r.claim_id = "x";
    r.n_lo = 4;
    r.n_hi = 5;
    r.pass = true;
    CHECK(report_to_json(r) ==
          "{\"claim_id\":\"x\",\"counterexamples\":[],\"n_range\":{\"hi\":5,"
          "\"lo\":4},\"note\":\"\",\"statistics\":[],\"status\":\"pass\"}");
    r.pass = false;
    r.counterexamples.push_back(canonical_code(k4()));
    r.statistics.push_back({4, 1, -1, -1});
    const auto j = nlohmann::json::parse(report_to_json(r));
    CHECK(j["status"] == "fail");
    CHECK(j["counterexamples"][0] == canonical_code(k4()).hex());
    CHECK(j["statistics"][0]["g_value"].is_null());
    CHECK(j["statistics"][0]["catalog_size"] == 1);

    CHECK(census_to_json(census(k4()), 0) ==
          "{\"c3\":4,\"c4\":3,\"c4_diamond\":3,\"c4_separating\":0,"
          "\"index\":0,\"n\":4,\"per_vertex_c4\":[3,3,3,3]}");
}
