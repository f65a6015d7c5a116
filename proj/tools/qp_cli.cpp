// Command-line front end: Picard group computations, smoothness and
// diagonalization of pencils from JSON files, configuration automorphisms,
// the hyperelliptic association, and the seeded verification suites.
//
// Exit codes: 0 success, 1 domain or verification failure, 2 I/O or parse
// failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qp/qp.hpp"

namespace {

using qp::json;

struct RunReport {
    std::string command;
    json inputs = json::object();
    json outputs = json::object();
    long checks_passed = 0;
    long checks_failed = 0;
    std::uint64_t seed = 0;
    long duration_ms = 0;

    json to_json() const {
        return json{{"command", command},
                    {"inputs", inputs},
                    {"outputs", outputs},
                    {"checks_passed", checks_passed},
                    {"checks_failed", checks_failed},
                    {"seed", seed},
                    {"duration_ms", duration_ms}};
    }
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qp::ParseError("cannot open " + path);
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw qp::ParseError("malformed JSON in " + path);
    return j;
}

int emit(const RunReport& rep, bool as_json, const std::string& human) {
    if (as_json)
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << human;
    return rep.checks_failed == 0 ? 0 : 1;
}

std::string group_str(const qp::AbelianGroup& g) { return g.str(); }

int cmd_pic(int n, long k, bool table, int n_max, bool as_json) {
    Timer timer;
    RunReport rep;
    rep.command = "pic";
    std::ostringstream human;
    if (table) {
        rep.inputs = json{{"table", true}, {"n_max", n_max}};
        json rows = json::array();
        char line[96];
        std::snprintf(line, sizeof line, "%-4s  %-16s  %-16s\n", "n", "Pic at level -2", "Pic at level -1");
        human << line;
        for (int m = 3; m <= n_max; ++m) {
            qp::AbelianGroup p2 = qp::pic_complete_intersections(m);
            qp::AbelianGroup p1 = qp::pic_binary_forms(m);
            rep.checks_passed += 2; // each carries its own SNF-vs-closed-form assert
            rows.push_back(json{{"n", m}, {"k_minus_2", qp::to_json(p2)}, {"k_minus_1", qp::to_json(p1)}});
            std::snprintf(line, sizeof line, "%-4d  %-16s  %-16s\n", m, group_str(p2).c_str(),
                          group_str(p1).c_str());
            human << line;
        }
        rep.outputs = json{{"rows", rows}};
    } else {
        rep.inputs = json{{"n", n}, {"k", k}};
        qp::AbelianGroup pic = qp::picard_group(n, k);
        ++rep.checks_passed;
        if (k == -2) {
            if (qp::pic_complete_intersections(n) == pic) ++rep.checks_passed;
            else ++rep.checks_failed;
        } else if (k == -1) {
            if (qp::pic_binary_forms(n) == pic) ++rep.checks_passed;
            else ++rep.checks_failed;
        }
        rep.outputs = json{{"group", qp::to_json(pic)}, {"order", pic.order().get_str()}};
        human << "Pic([W/G_" << k << "]) for n = " << n << ": " << group_str(pic) << "\n";
    }
    rep.duration_ms = timer.ms();
    return emit(rep, as_json, human.str());
}

int cmd_smooth(const std::string& pencil_file, bool as_json) {
    Timer timer;
    RunReport rep;
    rep.command = "smooth";
    json input = load_json_file(pencil_file);
    qp::QuadricPencil p = qp::pencil_from_json(input);
    rep.inputs = input;

    qp::BinaryForm disc = qp::discriminant_form(p);
    bool squarefree = !disc.is_zero() && qp::is_squarefree(disc);
    bool smooth = qp::is_smooth(p);
    ++rep.checks_passed;
    rep.outputs = json{{"smooth", smooth},
                       {"discriminant_form", qp::to_json(disc)},
                       {"squarefree", squarefree}};
    std::ostringstream human;
    human << (smooth ? "smooth" : "singular") << "\n";
    human << "discriminant form coefficients:";
    for (const auto& c : disc.coeffs()) human << " " << c.get_str();
    human << "\n";
    if (!smooth && p.is_diagonal()) {
        qp::SlicePoint w(p.n, [&] {
            std::vector<qp::Rat> a(p.n + 1);
            for (int i = 0; i <= p.n; ++i) a[i] = p.q1(i, i);
            return a;
        }(), [&] {
            std::vector<qp::Rat> b(p.n + 1);
            for (int i = 0; i <= p.n; ++i) b[i] = p.q2(i, i);
            return b;
        }());
        for (int i = 0; i <= p.n; ++i)
            for (int j = i + 1; j <= p.n; ++j)
                if (w.minor(i, j) == 0) {
                    rep.outputs["offending_minor"] = json::array({i, j});
                    human << "offending minor: (" << i << ", " << j << ")\n";
                    i = p.n + 1;
                    break;
                }
    }
    rep.duration_ms = timer.ms();
    return emit(rep, as_json, human.str());
}

int cmd_diagonalize(const std::string& pencil_file, bool as_json) {
    Timer timer;
    RunReport rep;
    rep.command = "diagonalize";
    json input = load_json_file(pencil_file);
    qp::QuadricPencil p = qp::pencil_from_json(input);
    rep.inputs = input;

    qp::DiagonalizeResult res = qp::simultaneous_diagonalize(p);
    std::ostringstream human;
    if (auto* success = std::get_if<qp::DiagonalizeSuccess>(&res)) {
        ++rep.checks_passed;
        rep.outputs = json{{"basis", qp::matrix_to_json(success->basis)},
                           {"slice_point", qp::to_json(success->point)}};
        human << "diagonalized; slice point a:";
        for (const auto& v : success->point.a) human << " " << v.get_str();
        human << "  b:";
        for (const auto& v : success->point.b) human << " " << v.get_str();
        human << "\n";
    } else {
        ++rep.checks_passed; // an obstruction is a definite answer, not a failure
        rep.outputs = json{{"obstruction", qp::to_json(std::get<qp::Obstruction>(res))}};
        human << "not diagonalizable over the rationals; "
              << std::get<qp::Obstruction>(res).irreducible_factors.size()
              << " irreducible non-linear factor(s) in the discriminant form\n";
    }
    rep.duration_ms = timer.ms();
    return emit(rep, as_json, human.str());
}

int cmd_aut(const std::string& point_file, long k, int cap, bool as_json) {
    Timer timer;
    RunReport rep;
    rep.command = "aut";
    json input = load_json_file(point_file);
    qp::SlicePoint w = qp::slice_point_from_json(input);
    rep.inputs = json{{"point", input}, {"k", k}, {"cap", cap}};

    auto auts = qp::configuration_automorphisms(qp::configuration(w), cap);
    qp::Int stab = qp::stabilizer_cardinality(w, k, cap);
    ++rep.checks_passed;
    json list = json::array();
    for (const auto& a : auts) list.push_back(qp::to_json(a));
    rep.outputs = json{{"config_aut_order", auts.size()},
                       {"config_auts", list},
                       {"stabilizer_cardinality", stab.get_str()}};
    std::ostringstream human;
    human << "configuration automorphisms: " << auts.size() << "\n";
    for (const auto& a : auts) {
        human << "  moebius [[" << a.moebius(0, 0).get_str() << ", " << a.moebius(0, 1).get_str()
              << "], [" << a.moebius(1, 0).get_str() << ", " << a.moebius(1, 1).get_str() << "]]  sigma (";
        for (size_t i = 0; i < a.perm.images().size(); ++i)
            human << (i ? " " : "") << a.perm.images()[i];
        human << ")\n";
    }
    human << "stabilizer cardinality at level " << k << ": " << stab.get_str() << "\n";
    rep.duration_ms = timer.ms();
    return emit(rep, as_json, human.str());
}

int cmd_hyperelliptic(const std::string& pencil_file, bool as_json) {
    Timer timer;
    RunReport rep;
    rep.command = "hyperelliptic";
    json input = load_json_file(pencil_file);
    qp::QuadricPencil p = qp::pencil_from_json(input);
    rep.inputs = input;

    qp::HyperellipticModel model = qp::associated_curve(p);
    qp::WeierstrassDivisor div = qp::weierstrass_divisor(model);
    ++rep.checks_passed;
    json points = json::array();
    for (const auto& pt : div.rational_points) points.push_back(qp::to_json(pt));
    json irr = json::array();
    for (const auto& f : div.irreducible_factors) irr.push_back(qp::to_json(f));
    rep.outputs = json{{"model", qp::to_json(model)},
                       {"weierstrass_rational_points", points},
                       {"weierstrass_irreducible_factors", irr}};
    std::ostringstream human;
    human << "genus " << model.g;
    if (model.genus_one_passthrough()) human << " (below the hyperelliptic range; classical double cover)";
    human << "\nbranch form coefficients:";
    for (const auto& c : model.f.coeffs()) human << " " << c.get_str();
    human << "\nweierstrass divisor: " << div.rational_points.size() << " rational point(s), "
          << div.irreducible_factors.size() << " irreducible factor(s)\n";
    if (model.g >= 2) {
        qp::AbelianGroup hg = qp::pic_hyperelliptic(model.g);
        qp::AbelianGroup ci = qp::pic_complete_intersections(p.n);
        bool triangle = qp::verify_pic_triangle(model.g);
        if (hg.order() == ci.order() && triangle) ++rep.checks_passed;
        else ++rep.checks_failed;
        rep.outputs["pic_hyperelliptic"] = qp::to_json(hg);
        rep.outputs["pic_complete_intersections"] = qp::to_json(ci);
        rep.outputs["triangle_verified"] = triangle;
        human << "Pic(curve moduli) = " << hg.str() << ", Pic(intersection moduli) = " << ci.str()
              << (triangle ? " (comparison verified)" : " (comparison FAILED)") << "\n";
    }
    rep.duration_ms = timer.ms();
    return emit(rep, as_json, human.str());
}

int cmd_verify(const std::string& suite, int n, long k, int trials, std::uint64_t seed, int n_max,
               bool as_json) {
    Timer timer;
    RunReport rep;
    rep.command = "verify";
    rep.seed = seed;
    rep.inputs = json{{"suite", suite}, {"n", n}, {"k", k}, {"trials", trials},
                      {"seed", seed}, {"n_max", n_max}};

    qp::SuiteReport sr;
    if (suite == "kernel-character")
        sr = qp::kernel_character_suite(n, k, trials, seed);
    else if (suite == "equivariance-theta")
        sr = qp::theta_equivariance_suite(n, trials, seed);
    else if (suite == "equivariance-f")
        sr = qp::f_equivariance_suite(n, trials, seed);
    else if (suite == "action-laws")
        sr = qp::action_laws_suite(n, trials, seed);
    else if (suite == "pic-table")
        sr = qp::pic_table_suite(n_max, seed);
    else if (suite == "gamma-curve")
        sr = qp::gamma_curve_suite(n, trials, seed);
    else if (suite == "oracle-smoothness")
        sr = qp::oracle_smoothness_suite(n, trials, seed);
    else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 1;
    }

    rep.checks_passed = sr.checks_passed;
    rep.checks_failed = sr.checks_failed;
    rep.outputs = json{{"suite", sr.suite}};
    if (!sr.ok()) rep.outputs["counterexample"] = sr.counterexample;
    rep.duration_ms = timer.ms();
    std::ostringstream human;
    human << sr.suite << ": " << sr.checks_passed << " passed, " << sr.checks_failed << " failed\n";
    if (!sr.ok()) human << "counterexample: " << sr.counterexample.dump() << "\n";
    return emit(rep, as_json, human.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with pencils of quadrics, diagonal slices and their moduli"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable RunReport output");

    int n = 5;
    long k = -2;
    bool table = false;
    int n_max = 10;
    auto* pic = app.add_subcommand("pic", "Picard group of [W/G_k]");
    pic->add_option("--n", n, "projective dimension, >= 3");
    pic->add_option("--k", k, "level (nonzero)");
    pic->add_flag("--table", table, "sweep n = 3..n-max at levels -1 and -2");
    pic->add_option("--n-max", n_max, "table upper bound");

    std::string pencil_file, point_file;
    auto* smooth = app.add_subcommand("smooth", "smoothness of a pencil from JSON");
    smooth->add_option("--pencil", pencil_file, "pencil JSON file")->required();

    auto* diag = app.add_subcommand("diagonalize", "simultaneous diagonalization over Q");
    diag->add_option("--pencil", pencil_file, "pencil JSON file")->required();

    long aut_k = 2;
    int cap = 9;
    auto* aut = app.add_subcommand("aut", "configuration automorphisms and stabilizer size");
    aut->add_option("--point", point_file, "slice point JSON file")->required();
    aut->add_option("--k", aut_k, "level for the stabilizer count");
    aut->add_option("--cap", cap, "configuration size guard for the factorial search");

    auto* hyper = app.add_subcommand("hyperelliptic", "the associated hyperelliptic curve");
    hyper->add_option("--pencil", pencil_file, "pencil JSON file")->required();

    std::string suite;
    int trials = 100;
    std::uint64_t seed = 42;
    int verify_n = 4;
    long verify_k = -2;
    int verify_n_max = 32;
    auto* verify = app.add_subcommand("verify", "seeded property suites");
    verify->add_option("--suite", suite,
                       "kernel-character | equivariance-theta | equivariance-f | action-laws | "
                       "pic-table | gamma-curve | oracle-smoothness")
        ->required();
    verify->add_option("--n", verify_n, "projective dimension");
    verify->add_option("--k", verify_k, "level");
    verify->add_option("--trials", trials, "number of seeded trials");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--n-max", verify_n_max, "pic-table upper bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // 0 covers --help
    }

    try {
        if (pic->parsed()) return cmd_pic(n, k, table, n_max, as_json);
        if (smooth->parsed()) return cmd_smooth(pencil_file, as_json);
        if (diag->parsed()) return cmd_diagonalize(pencil_file, as_json);
        if (aut->parsed()) return cmd_aut(point_file, aut_k, cap, as_json);
        if (hyper->parsed()) return cmd_hyperelliptic(pencil_file, as_json);
        if (verify->parsed()) {
            if (verify->count("--n") == 0) {
                if (suite == "gamma-curve") verify_n = 5;       // needs odd n
                if (suite == "oracle-smoothness") verify_n = 3; // scan cost grows with n
            }
            return cmd_verify(suite, verify_n, verify_k, trials, seed, verify_n_max, as_json);
        }
    } catch (const qp::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const qp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
