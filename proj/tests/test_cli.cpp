#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

// End-to-end checks of the installed command line tool: exit codes, JSON
// shape, determinism against a golden capture, and CSV trajectory output.

namespace {

int run(const std::string& args, const std::string& redirect = "> /dev/null 2>&1") {
    const std::string cmd = std::string(TOPOCS_CLI_PATH) + " " + args + " " + redirect;
    const int rc = std::system(cmd.c_str());
#ifdef _WIN32
    return rc;
#else
    return WEXITSTATUS(rc);
#endif
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kOverlapArgs =
    "overlap both --l1 0 --a1 0 --l2 0 --a2 0 "
    "--lp1 0 --ap1 0 --lp2 0 --ap2 0 --cutoff 8";

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("overlap both --cutoff 8") == 0);
    CHECK(run("") == 2);                          // missing subcommand
    CHECK(run("no-such-command") == 2);           // unknown subcommand
    CHECK(run("overlap both --bogus 1") == 2);    // unknown flag
    CHECK(run("overlap both --cutoff 99") == 2);  // range-checked option
    CHECK(run("entangle oam --weights 0.5,0.4") == 3);  // domain error
}

TEST_CASE("overlap output is deterministic and matches the golden capture") {
    CHECK(run(kOverlapArgs + " --output cli_overlap_1.json") == 0);
    CHECK(run(kOverlapArgs + " --output cli_overlap_2.json") == 0);

    const std::string a = slurp("cli_overlap_1.json");
    const std::string b = slurp("cli_overlap_2.json");
    CHECK(a == b);  // byte-identical across runs

    const std::string golden = slurp(std::string(TOPOCS_GOLDEN_DIR) + "/overlap_both.json");
    CHECK(a == golden);

    const nlohmann::json doc = nlohmann::json::parse(a);
    CHECK(doc.at("kind") == "overlap.both");
    const double brute = doc.at("result").at("brute").at(0).get<double>();
    const double theta = doc.at("result").at("theta").at(0).get<double>();
    CHECK(std::abs(brute - 3.1422426599356) < 1e-10);
    CHECK(std::abs(brute - theta) < 1e-12);
    CHECK(doc.at("diagnostics").at("brute_minus_theta_abs").get<double>() < 1e-12);
}

TEST_CASE("entangled pair report") {
    CHECK(run("entangle pair --j 1,0 --jp 2,0 --cutoff 8 --output cli_pair.json") == 0);
    const nlohmann::json doc = nlohmann::json::parse(slurp("cli_pair.json"));
    CHECK(std::abs(doc.at("result").at("entropy").get<double>() -
                   0.6931471805599453) < 1e-12);
    CHECK(std::abs(doc.at("result").at("entropy_log2").get<double>() - 1.0) < 1e-12);
}

TEST_CASE("strip trajectory closes after two turns") {
    CHECK(run("geom trajectory --surface mobius --periods 2 --dt 0.001 "
              "--output cli_mobius.csv") == 0);
    std::ifstream in("cli_mobius.csv");
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,x,y,z,energy");

    std::vector<double> first;
    std::vector<double> last;
    std::string line;
    bool have_first = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        REQUIRE(row.size() == 5);
        if (!have_first) {
            first = row;
            have_first = true;
        }
        last = row;
    }
    REQUIRE(have_first);
    const double gap = std::hypot(last[1] - first[1], last[2] - first[2], last[3] - first[3]);
    CHECK(gap < 1e-6);
    CHECK(std::abs(last[4] - first[4]) < 1e-9);  // energy conserved
}

TEST_CASE("diagnostic reports render") {
    CHECK(run("diag theta-approx --samples 11 --output cli_theta.json") == 0);
    const nlohmann::json doc = nlohmann::json::parse(slurp("cli_theta.json"));
    const auto& rows = doc.at("result");
    REQUIRE(rows.size() == 11);
    for (const auto& row : rows) {
        CHECK(row.at("relative_error").get<double>() < 2e-4);
    }
}
