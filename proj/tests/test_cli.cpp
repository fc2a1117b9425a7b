// End-to-end tests of the command-line front end: exit codes, JSON shapes,
// CSV byte stability, and the negative-order gating. The binary under test is
// passed as the first program argument.
#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using json = nlohmann::json;

namespace {

std::string g_cli;
std::string g_tmp;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    RunResult r;
    std::string cmd = g_cli + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.out.append(buf, n);
    int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct CsvRow {
    std::string alpha;
    double gamma;
    std::string regime;
};

std::vector<CsvRow> parse_csv(const std::string& text) {
    std::vector<CsvRow> rows;
    std::istringstream ss(text);
    std::string line;
    bool first = true;
    while (std::getline(ss, line)) {
        if (first) {
            first = false;
            continue;
        }
        if (line.empty()) continue;
        auto c1 = line.find(','), c2 = line.rfind(',');
        rows.push_back({line.substr(0, c1), std::stod(line.substr(c1 + 1, c2 - c1 - 1)),
                        line.substr(c2 + 1)});
    }
    return rows;
}

}  // namespace

TEST_CASE("compute: closed-form regimes and manifest shape") {
    auto r = run("compute --epsilon 0.3 --alpha 2");
    REQUIRE(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["epsilon"].get<double>() == 0.3);
    CHECK(doc["alpha"].get<double>() == 2.0);
    CHECK(doc["regime"] == "super1");
    CHECK(doc["order"] == "(1,inf)");
    CHECK(std::abs(doc["gamma_bits"].get<double>() - 0.54049540498747694) < 1e-11);
    CHECK(std::abs(doc["p_star"].get<double>() - 0.0087722339831620668) < 1e-11);
    const auto& m = doc["manifest"];
    CHECK(m.contains("command_line"));
    CHECK(m.contains("tolerances"));
    CHECK(m.contains("grid_sizes"));
    CHECK(m.contains("seed"));
    CHECK(m.contains("artifact_version"));
    CHECK(m.contains("wall_time_s"));
    CHECK(m["command_line"].get<std::string>().find("compute") != std::string::npos);
}

TEST_CASE("compute: order endpoints serialize as strings") {
    auto r = run("compute --epsilon 0.3 --alpha inf");
    REQUIRE(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["alpha"] == "inf");
    CHECK(doc["regime"] == "exact");
    CHECK(std::abs(doc["gamma_bits"].get<double>() - 0.58733650832208264) < 1e-11);

    auto rz = run("compute --epsilon 0.3 --alpha 0");
    REQUIRE(rz.status == 0);
    json dz = json::parse(rz.out);
    CHECK(dz["regime"] == "zero");
    CHECK(dz["gamma_bits"].get<double>() == 0.0);

    auto rw = run("compute --epsilon 0.3 --alpha 0.5");
    REQUIRE(rw.status == 0);
    json dw = json::parse(rw.out);
    CHECK(dw["regime"] == "wyner");
    CHECK(std::abs(dw["gamma_bits"].get<double>() - 0.50477066257684554) < 1e-11);
}

TEST_CASE("compute: negative order where the condition holds is exact") {
    auto r = run("compute --epsilon 0.3 --alpha -inf");
    REQUIRE(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["alpha"] == "-inf");
    CHECK(doc["regime"] == "negative-ub");
    CHECK(doc["exact"].get<bool>());
    CHECK(doc["condition_holds"].get<bool>());
    CHECK_FALSE(doc.contains("wyner_gap"));
    CHECK(std::abs(doc["gamma_bits"].get<double>() - 0.50477066257684554) < 1e-11);
    CHECK(doc["r_star"].get<double>() == 0.3);
}

TEST_CASE("compute: negative order below the threshold refuses without --upper-bound") {
    auto r = run("compute --epsilon 0.03 --alpha -inf", true);
    CHECK(r.status == 2);
    CHECK(r.out.find("--upper-bound") != std::string::npos);

    auto ub = run("compute --epsilon 0.03 --alpha -inf --upper-bound");
    REQUIRE(ub.status == 0);
    json doc = json::parse(ub.out);
    CHECK_FALSE(doc["exact"].get<bool>());
    CHECK_FALSE(doc["condition_holds"].get<bool>());
    CHECK(std::abs(doc["wyner_gap"].get<double>() - 9.404113e-5) < 1e-9);
    CHECK(doc["r_star"].get<double>() >= 0.0);
    CHECK(doc["r_star"].get<double>() <= 0.03);
}

TEST_CASE("compute: --out writes the same JSON to a file") {
    std::string path = g_tmp + "/compute.json";
    auto r = run("compute --epsilon 0.2 --alpha 4 --out " + path);
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    json doc = json::parse(slurp(path));
    CHECK(doc["regime"] == "super1");
}

TEST_CASE("curve: structure, anchors, bounds, monotonicity") {
    auto r = run("curve --epsilon 0.3 --alpha-min 0");
    REQUIRE(r.status == 0);
    REQUIRE(r.out.rfind("alpha,gamma_bits,regime\n", 0) == 0);
    CHECK(r.out.find('\r') == std::string::npos);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() > 10);
    CHECK(rows.front().alpha == "0");
    CHECK(rows.front().gamma == 0.0);
    CHECK(rows.front().regime == "zero");
    CHECK(rows.back().alpha == "inf");
    CHECK(rows.back().regime == "exact");
    const double wyner = 0.50477066257684554, exact = 0.58733650832208264;
    CHECK(std::abs(rows.back().gamma - exact) < 1e-11);
    double prev = -1.0;
    for (size_t i = 1; i < rows.size(); ++i) {  // skip the alpha = 0 row
        CHECK(rows[i].gamma >= prev - 1e-9);
        CHECK(rows[i].gamma >= wyner - 1e-9);
        CHECK(rows[i].gamma <= exact + 1e-9);
        prev = rows[i].gamma;
    }
}

TEST_CASE("curve: negative range uses the certified upper bound") {
    auto r = run("curve --epsilon 0.3 --alpha-min -inf --alpha-max -1 --points 4");
    REQUIRE(r.status == 0);
    auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows.front().alpha == "-inf");
    for (const auto& row : rows) {
        CHECK(row.regime == "negative-ub");
        // Above the threshold the bound collapses onto the Wyner value.
        CHECK(std::abs(row.gamma - 0.50477066257684554) < 1e-6);
    }
}

TEST_CASE("curve: files are byte-stable and carry a manifest sidecar") {
    std::string p1 = g_tmp + "/c1.csv", p2 = g_tmp + "/c2.csv";
    REQUIRE(run("curve --epsilon 0.1 --alpha-min 0 --points 9 --out " + p1).status == 0);
    REQUIRE(run("curve --epsilon 0.1 --alpha-min 0 --points 9 --out " + p2).status == 0);
    std::string b1 = slurp(p1), b2 = slurp(p2);
    REQUIRE_FALSE(b1.empty());
    CHECK(b1 == b2);
    json side = json::parse(slurp(p1 + ".manifest.json"));
    CHECK(side["manifest"]["grid_sizes"]["points"].get<int>() == 9);
    // Stdout emission matches the file bytes.
    auto direct = run("curve --epsilon 0.1 --alpha-min 0 --points 9");
    CHECK(direct.out == b1);
}

TEST_CASE("condition1: verdicts on both sides of the threshold") {
    auto good = run("condition1 --epsilon 0.3");
    REQUIRE(good.status == 0);
    json dg = json::parse(good.out);
    CHECK(dg["holds"].get<bool>());
    CHECK(dg["worst_omega"].get<double>() == 0.0);
    CHECK(dg["grid_points"].get<int>() == 10000);

    auto bad = run("condition1 --epsilon 0.03");
    REQUIRE(bad.status == 0);  // a false verdict is still a successful run
    json db = json::parse(bad.out);
    CHECK_FALSE(db["holds"].get<bool>());
    CHECK(db["worst_omega"].get<double>() > 1.0);
}

TEST_CASE("epsilon0: threshold with bracket in the report") {
    auto r = run("epsilon0 --tol 1e-4");
    REQUIRE(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(std::abs(doc["epsilon0"].get<double>() - 0.0551046517) < 2e-4);
    CHECK(doc["tolerance"].get<double>() == 1e-4);
    CHECK(doc["bracket"][0].get<double>() == 0.01);
    CHECK(doc["bracket"][1].get<double>() == 0.10);
}

TEST_CASE("phase-scan: row structure") {
    auto r = run("phase-scan --eps-min 0.02 --eps-max 0.04 --points 3");
    REQUIRE(r.status == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["epsilon"].get<double>() == 0.02);
    CHECK(std::abs(doc["rows"][0]["gap"].get<double>() - 1.634845e-4) < 1e-9);
    for (const auto& row : doc["rows"]) {
        CHECK(row.contains("gamma_ub_minus_inf"));
        CHECK(row.contains("wyner"));
        CHECK(row.contains("r_star"));
    }
}

TEST_CASE("verify: passing suite exits 0, failing suite exits 1") {
    auto ok = run("verify --suite phi-ratio");
    CHECK(ok.status == 0);
    json dok = json::parse(ok.out);
    CHECK(dok["all_pass"].get<bool>());
    REQUIRE(dok["reports"].size() == 1);
    CHECK(dok["reports"][0]["pass"].get<bool>());

    auto bad = run("verify --suite chi-properties");
    CHECK(bad.status == 1);
    json dbad = json::parse(bad.out);
    CHECK_FALSE(dbad["all_pass"].get<bool>());
    CHECK_FALSE(dbad["reports"][0]["pass"].get<bool>());

    auto chain = run("verify --suite condition-chain --epsilon 0.3 --grid 150");
    CHECK(chain.status == 0);
    json dch = json::parse(chain.out);
    REQUIRE(dch["reports"].size() == 1);
    CHECK(dch["reports"][0]["suite"].get<std::string>().find("0.3") != std::string::npos);

    CHECK(run("verify --suite bogus").status == 2);
}

TEST_CASE("schema and help are printable; errors use exit 2") {
    auto schema = run("--schema");
    CHECK(schema.status == 0);
    CHECK(schema.out.find("alpha,gamma_bits,regime") != std::string::npos);
    CHECK(run("--help").status == 0);
    CHECK(run("").status == 2);                                     // no subcommand
    CHECK(run("compute --epsilon 0.3 --alpha 2x").status == 2);     // bad alpha
    CHECK(run("compute --epsilon 0.7 --alpha 1").status == 2);      // bad epsilon
    CHECK(run("curve --epsilon 0.3 --alpha-min 2 --alpha-max 1").status == 2);
    CHECK(run("compute --epsilon 0.3").status == 2);                // missing --alpha
    CHECK(run("frobnicate").status == 2);                           // unknown subcommand
}

TEST_CASE("unwritable output path exits 3") {
    CHECK(run("curve --epsilon 0.3 --alpha-min 0 --points 5 --out /nonexistent_dir_zz/x.csv")
              .status == 3);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-cli> [doctest args]\n", argv[0]);
        return 2;
    }
    g_cli = argv[1];
    char tmpl[] = "/tmp/renyi_cli_test_XXXXXX";
    if (!mkdtemp(tmpl)) {
        std::perror("mkdtemp");
        return 2;
    }
    g_tmp = tmpl;
    std::vector<char*> rest;
    rest.push_back(argv[0]);
    for (int i = 2; i < argc; ++i) rest.push_back(argv[i]);
    doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
    int rc = ctx.run();
    std::string cleanup = "rm -rf '" + g_tmp + "'";
    if (std::system(cleanup.c_str()) != 0) std::fprintf(stderr, "cleanup failed\n");
    return rc;
}
