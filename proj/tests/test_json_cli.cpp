#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "qp/json_io.hpp"
#include "qp/prng.hpp"

using namespace qp;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(QP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return CliResult{WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(QP_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("json round trips") {
    Lcg64 rng(107);
    SlicePoint w = random_slice_point(rng, 4);
    CHECK(slice_point_from_json(to_json(w)) == w);

    QuadricPencil p = embed_diagonal(w);
    QuadricPencil p2 = pencil_from_json(to_json(p));
    CHECK(p2.q1 == p.q1);
    CHECK(p2.q2 == p.q2);

    GkElement g = random_gk_element(rng, 4, -2);
    GkElement g2 = gk_element_from_json(to_json(g));
    CHECK(g2.m == g.m);
    CHECK(g2.lambdas == g.lambdas);
    CHECK(g2.sigma == g.sigma);
    CHECK(g2.k == g.k);

    BinaryForm f = column_product_form(w);
    CHECK(binary_form_from_json(to_json(f)) == f);

    WeightedPoint pt(make_rat(1, 2), Rat(3), make_rat(-7, 5));
    WeightedPoint pt2 = weighted_point_from_json(to_json(pt));
    CHECK(pt2.x == pt.x);
    CHECK(pt2.z == pt.z);
    CHECK(pt2.y == pt.y);

    CHECK(to_json(AbelianGroup::cyclic(Int(12)))["torsion"][0] == "12");
    CHECK_THROWS_AS(rat_from_json(json(3)), ParseError);
    CHECK_THROWS_AS(pencil_from_json(json{{"n", 3}}), ParseError);
}

TEST_CASE("cli: pic") {
    CliResult r = run_cli("pic --n 7 --k -2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Z/28") != std::string::npos);

    r = run_cli("pic --n 4 --k -1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Z/4") != std::string::npos);

    r = run_cli("--json pic --table --n-max 10");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["command"] == "pic");
    CHECK(rep["outputs"]["rows"].size() == 8);
    CHECK(rep["checks_failed"] == 0);

    CHECK(run_cli("pic --n 2 --k -2").exit_code == 1);
}

TEST_CASE("cli: smooth") {
    CliResult r = run_cli("smooth --pencil " + data("pencil_n3_smooth.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("smooth") == 0);

    r = run_cli("--json smooth --pencil " + data("pencil_n3_singular.json"));
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["outputs"]["smooth"] == false);
    CHECK(rep["outputs"]["offending_minor"] == json::array({1, 2}));

    CHECK(run_cli("smooth --pencil " + data("pencil_malformed.json")).exit_code == 2);
    CHECK(run_cli("smooth --pencil " + data("no_such_file.json")).exit_code == 2);
}

TEST_CASE("cli: diagonalize") {
    CliResult r = run_cli("--json diagonalize --pencil " + data("pencil_n3_smooth.json"));
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    // already diagonal: the identity basis works and is found
    CHECK(rep["outputs"].contains("slice_point"));

    r = run_cli("--json diagonalize --pencil " + data("pencil_n3_obstruction.json"));
    CHECK(r.exit_code == 0);
    rep = json::parse(r.out);
    REQUIRE(rep["outputs"].contains("obstruction"));
    CHECK(rep["outputs"]["obstruction"]["irreducible_factors"].size() == 1);

    CHECK(run_cli("diagonalize --pencil " + data("pencil_n3_singular.json")).exit_code == 1);
}

TEST_CASE("cli: aut") {
    CliResult r = run_cli("--json aut --point " + data("point_n3_0_1_3_inf.json") + " --k 2");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["outputs"]["config_aut_order"] == 4);
    CHECK(rep["outputs"]["stabilizer_cardinality"] == "32");

    r = run_cli("--json aut --point " + data("point_n4_generic.json") + " --k 2");
    CHECK(r.exit_code == 0);
    rep = json::parse(r.out);
    CHECK(rep["outputs"]["stabilizer_cardinality"] == "16");
}

TEST_CASE("cli: hyperelliptic") {
    CliResult r = run_cli("--json hyperelliptic --pencil " + data("pencil_n5_smooth.json"));
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["outputs"]["model"]["g"] == 2);
    CHECK(rep["outputs"]["weierstrass_rational_points"].size() == 6);
    CHECK(rep["outputs"]["pic_hyperelliptic"]["torsion"][0] == "10");
    CHECK(rep["outputs"]["triangle_verified"] == true);

    CHECK(run_cli("hyperelliptic --pencil " + data("pencil_n4_even.json")).exit_code == 1);
    CHECK(run_cli("hyperelliptic --pencil " + data("pencil_n3_singular.json")).exit_code == 1);
}

TEST_CASE("cli: verify suites") {
    CHECK(run_cli("verify --suite kernel-character --n 5 --k -2 --trials 50 --seed 42").exit_code == 0);
    CHECK(run_cli("verify --suite action-laws --n 4 --trials 50 --seed 7").exit_code == 0);
    CHECK(run_cli("verify --suite pic-table --n-max 16").exit_code == 0);
    CHECK(run_cli("verify --suite equivariance-theta --n 4 --trials 50 --seed 1").exit_code == 0);
    CHECK(run_cli("verify --suite no-such-suite").exit_code == 1);
}

TEST_CASE("cli: reports replay byte-identically modulo wall time") {
    std::string args = "--json verify --suite kernel-character --n 4 --k -2 --trials 25 --seed 99";
    json a = json::parse(run_cli(args).out);
    json b = json::parse(run_cli(args).out);
    a.erase("duration_ms");
    b.erase("duration_ms");
    CHECK(a.dump() == b.dump());
}
