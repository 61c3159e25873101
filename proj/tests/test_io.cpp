#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"
#include "tokenalg/json_io.hpp"
#include "tokenalg/spectrum.hpp"
#include "tokenalg/token.hpp"

using namespace tokenalg;
using namespace tokenalg::testing;
using nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_fixture_") + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = tokenalg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kPawEdgeList = "n 4\n1 3\n1 4\n2 4\n3 4\n";

}  // namespace

TEST_CASE("matrix JSON round trip") {
    Matrix b = binomial_matrix(4, 2);
    b(0, 0) = rat_of(-7, 3);
    Matrix parsed = matrix_from_json(matrix_to_json(b));
    CHECK(parsed == b);
    json j = json::parse(matrix_to_json(b));
    CHECK(j["entries"][0] == "-7/3");
    CHECK_THROWS_AS(matrix_from_json(R"({"rows":2,"cols":2,"entries":["1"]})"), InputError);
}

TEST_CASE("polynomial and spectrum JSON round trips") {
    Poly p({rat_of(6357015, 51436919), rat_of(-3, 7), Rat(1)});
    CHECK(poly_from_json(poly_to_json(p)) == p);

    Spectrum exact;
    exact.mode = Spectrum::Mode::exact;
    exact.rational = {{Rat(0), 1}, {rat_of(7, 2), 3}};
    CHECK(spectrum_from_json(spectrum_to_json(exact)) == exact);

    Spectrum approx;
    approx.mode = Spectrum::Mode::approximate;
    approx.tolerance = 1e-9;
    approx.numeric = {{0.0, 1}, {2.585786437626905, 2}};
    Spectrum back = spectrum_from_json(spectrum_to_json(approx));
    CHECK(back.mode == Spectrum::Mode::approximate);
    REQUIRE(back.numeric.size() == 2);
    CHECK(back.numeric[1].first == doctest::Approx(approx.numeric[1].first).epsilon(1e-14));
}

TEST_CASE("cli exit codes") {
    std::string paw_path = write_temp("paw.el", kPawEdgeList);

    CHECK(run_cli({"verify-all", "--input", paw_path, "--k", "2"}).code == 0);
    CHECK(run_cli({"token", "--input", paw_path, "--k", "5"}).code == 2);
    CHECK(run_cli({"token", "--input", "does_not_exist.el", "--k", "2"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"token", "--input", paw_path, "--k", "2", "--bogus"}).code == 2);
    CHECK(run_cli({}).code == 2);

    std::string bad = write_temp("bad.el", "n 3\n1 1\n");
    CHECK(run_cli({"token", "--input", bad, "--k", "2"}).code == 2);

    // a broken Johnson subgraph is a failed check, not an input error
    Graph broken = token_graph(complete_graph(4), 2).graph;
    broken.edges.erase(broken.edges.begin());
    std::ostringstream el;
    el << "n " << broken.n << "\n";
    for (auto [u, v] : broken.edges) el << u << " " << v << "\n";
    std::string broken_path = write_temp("broken.el", el.str());
    CliResult rej = run_cli({"recognize", "--input", broken_path, "--n", "4", "--k", "2"});
    CHECK(rej.code == 1);
    CHECK(json::parse(rej.out)["results"]["recognition"]["is_token_graph"]["pass"] == false);
}

TEST_CASE("cli accepts graph6 input") {
    Graph g = paw();
    std::string g6 = write_temp("paw.g6", graph_to_graph6(g));
    CliResult res = run_cli({"token", "--input", g6, "--k", "2"});
    CHECK(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["edge_count"] == 8);
    CHECK(j["vertices"][0] == json::array({1, 2}));
}

TEST_CASE("verify-all report is deterministic") {
    std::string paw_path = write_temp("paw2.el", kPawEdgeList);
    CliResult first = run_cli({"verify-all", "--input", paw_path, "--k", "2"});
    CliResult second = run_cli({"verify-all", "--input", paw_path, "--k", "2"});
    json a = json::parse(first.out), b = json::parse(second.out);
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a == b);
    CHECK(a["passed"] == true);
}

TEST_CASE("report payloads parse back into their types") {
    std::string paw_path = write_temp("paw3.el", kPawEdgeList);
    CliResult res = run_cli({"token", "--input", paw_path, "--k", "2", "--emit-binomial"});
    REQUIRE(res.code == 0);
    json j = json::parse(res.out);
    Matrix b = matrix_from_json(j["binomial_matrix"].dump());
    CHECK(b == binomial_matrix(4, 2));

    CliResult poly = run_cli({"poly", "--input", paw_path, "--kind", "laplacian"});
    REQUIRE(poly.code == 0);
    json pj = json::parse(poly.out);
    CHECK(pj["mode"] == "exact");
    Spectrum s = spectrum_from_json(pj["spectrum"].dump());
    CHECK(s.rational.size() == 4);
    Poly q1 = poly_from_json(pj["polys"][1].dump());
    CHECK(q1.degree() == 1);
}

TEST_CASE("forced generator coefficients flow through the cli") {
    std::string paw_path = write_temp("paw4.el", kPawEdgeList);
    CliResult res = run_cli({"algebra", "local", "--input", paw_path, "--k", "2", "--alpha", "2", "--beta", "1"});
    REQUIRE(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["local_algebra"]["theta"] == json::array({"0", "5", "7", "8", "9", "11"}));
    CHECK(j["local_algebra"]["dim"] == 6);

    CHECK(run_cli({"algebra", "local", "--input", paw_path, "--k", "2", "--alpha", "1", "--beta", "1"}).code == 2);
}

TEST_CASE("johnson subcommand verifies its closed forms") {
    CliResult res = run_cli({"johnson", "--n", "5", "--k", "2", "--verify"});
    CHECK(res.code == 0);
    json j = json::parse(res.out);
    CHECK(j["passed"] == true);
    CHECK(j["intersection_array"]["b"] == json::array({6, 2}));
}

TEST_CASE("pair csv output") {
    std::string paw_path = write_temp("paw5.el", kPawEdgeList);
    CliResult res = run_cli({"pair", "--input", paw_path, "--k", "2", "--format", "csv"});
    REQUIRE(res.code == 0);
    CHECK(res.out == "level,index,lambda,lambda_bar,johnson\n"
                     "0,1,0,0,0\n"
                     "1,1,1,3,4\n"
                     "1,2,3,1,4\n"
                     "1,3,4,0,4\n"
                     "2,1,3,3,6\n"
                     "2,2,5,1,6\n");
}

TEST_CASE("poly csv sampling table") {
    std::string paw_path = write_temp("paw6.el", kPawEdgeList);
    CliResult res = run_cli({"poly", "--input", paw_path, "--format", "csv"});
    REQUIRE(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    CHECK(count == 201);
    CHECK(res.out.substr(0, 16) == "x,q0,q1,q2,q3\n0,");
}

TEST_CASE("output lands in the requested file") {
    std::string paw_path = write_temp("paw7.el", kPawEdgeList);
    CliResult res = run_cli({"token", "--input", paw_path, "--k", "2", "--out", "cli_fixture_out.json"});
    CHECK(res.code == 0);
    CHECK(res.out.empty());
    std::ifstream in("cli_fixture_out.json");
    json j = json::parse(in);
    CHECK(j["edge_count"] == 8);
}
