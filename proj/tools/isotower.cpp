// Command-line front door: splitting-obstruction checks, map degrees,
// point-level map evaluation, K-theory polynomials and the self-test suites.
// Results go to stdout as JSON; diagnostics go to stderr.
//
// Exit codes: 0 success (obstruction: split not obstructed), 1 self-test
// failure, 2 input error, 3 obstructed.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "isotower/builtin_maps.hpp"
#include "isotower/json_io.hpp"
#include "isotower/sampling.hpp"
#include "isotower/selftest.hpp"

using namespace isotower;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftestFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitObstructed = 3;

double default_tol() {
    if (const char* env = std::getenv("ISOTOWER_TOL")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed ISOTOWER_TOL\n";
        }
    }
    return 0.0;
}

int run_obstruction(const std::string& group_path, const std::string& v0_path,
                    const std::string& v1_path) {
    auto g = io::group_from_json(io::load_json_file(group_path));
    auto v0 = io::representation_from_json(g, io::load_json_file(v0_path));
    auto v1 = io::representation_from_json(g, io::load_json_file(v1_path));
    auto verdict = kresidue::obstruction_check(v0, v1);
    std::cout << io::verdict_to_json(verdict).dump(2) << "\n";
    return verdict.divides ? kExitOk : kExitObstructed;
}

int run_degree(const std::string& id, int samples, int grid, unsigned long long seed) {
    auto bm = facial::builtin_map(id);
    if (!bm) throw io::io_error("unknown builtin map '" + id + "'");
    json out;
    out["map"] = id;
    if (auto* cm = std::get_if<facial::CircleMap>(&*bm)) {
        out["kind"] = "circle";
        out["degree"] = facial::circle_degree(*cm, samples);
    } else if (auto* sm = std::get_if<facial::SphereMap>(&*bm)) {
        out["kind"] = "sphere";
        out["degree"] = facial::sphere_degree(*sm, grid, seed);
    } else {
        auto& fm = std::get<facial::FacialMap>(*bm);
        int dim = fm.dim_in() > 0 ? fm.dim_in() : 2;
        out["kind"] = "facial(diagonal)";
        out["degree"] = facial::circle_degree(facial::diagonal_restriction(fm, dim), samples);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_fv(const std::string& group_path, const std::string& rep_path) {
    auto g = io::group_from_json(io::load_json_file(group_path));
    auto v = io::representation_from_json(g, io::load_json_file(rep_path));
    auto f = kresidue::k_polynomial(v);
    json out;
    out["group"] = io::group_to_json(g);
    out["dim"] = v.dim();
    out["f"] = io::k_polynomial_to_json(f);
    out["pretty"] = f.pretty();
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

opcalc::LinOp linop_from_json(const json& in) {
    if (in.contains("matrix")) return opcalc::LinOp(io::matrix_from_json(in["matrix"]));
    if (in.contains("gamma")) return opcalc::LinOp(io::matrix_from_json(in["gamma"]));
    throw io::io_error("eval: input needs field \"matrix\" or \"gamma\"");
}

// eval: named point-level maps on JSON inputs
int run_eval(const std::string& op, const std::string& input_path, int k) {
    json in = io::load_json_file(input_path);
    json out;
    out["op"] = op;

    auto need_matrix = [&](const char* field) {
        if (!in.contains(field))
            throw io::io_error(std::string("eval: input needs field \"") + field + "\"");
        return io::matrix_from_json(in[field]);
    };
    auto the_matrix = [&]() {
        if (in.contains("matrix")) return io::matrix_from_json(in["matrix"]);
        throw io::io_error("eval: input needs field \"matrix\"");
    };

    if (op == "exp" || op == "log") {
        opcalc::HermitianOp a(the_matrix());
        auto r = (op == "exp") ? opcalc::op_exp(a) : opcalc::op_log(a);
        out["result"] = io::matrix_to_json(r.matrix());
    } else if (op == "rho") {
        out["result"] = io::matrix_to_json(opcalc::polar_rho(linop_from_json(in)).matrix());
    } else if (op == "sigma") {
        out["result"] = io::matrix_to_json(opcalc::polar_sigma(linop_from_json(in)).matrix());
    } else if (op == "lambda") {
        opcalc::HermitianOp a(the_matrix());
        out["result"] = io::matrix_to_json(opcalc::lambda_k(a, k).matrix());
    } else if (op == "eig") {
        opcalc::HermitianOp a(the_matrix());
        auto es = opcalc::eig_sorted(a);
        out["values"] = io::tuple_to_json(es.values);
        out["vectors"] = io::matrix_to_json(es.vectors);
    } else if (op == "kappa") {
        opcalc::HermitianOp a(need_matrix("alpha"));
        opcalc::LinOp theta(need_matrix("theta"));
        out["result"] = io::matrix_to_json(opcalc::kappa(a, theta).matrix());
    } else if (op == "kappa-inv") {
        auto r = opcalc::kappa_inv(linop_from_json(in));
        out["alpha"] = io::matrix_to_json(r.alpha.matrix());
        out["theta"] = io::matrix_to_json(r.theta.matrix());
    } else if (op == "chi") {
        auto r = tower::chi_map(linop_from_json(in));
        out["suspension"] = r.coordinate;
        out["result"] = io::matrix_to_json(r.hom.matrix());
    } else if (op == "tau") {
        auto r = tower::tau_map(io::tower_point_from_json(in));
        if (r.basepoint) {
            out["result"] = "basepoint";
        } else {
            out["suspension"] = r.coordinate;
            out["result"] = io::matrix_to_json(r.hom.matrix());
        }
    } else if (op == "pk") {
        opcalc::HermitianOp a(the_matrix());
        auto r = tower::pk_projector(a, k);
        out["projector"] = io::matrix_to_json(r.grass.projector);
        out["rank"] = r.grass.rank;
        out["under_rank"] = r.under_rank;
    } else if (op == "pi") {
        out["result"] = io::tower_point_to_json(tower::pi_k(io::tower_point_from_json(in)));
    } else if (op == "qk") {
        out["result"] = io::thom_point_to_json(tower::qk_map(io::tower_point_from_json(in)));
    } else if (op == "rk") {
        out["result"] = io::tower_point_to_json(tower::rk_map(io::thom_point_from_json(in)));
    } else if (op == "fk") {
        auto r = tower::fk_map(io::tower_point_from_json(in), k);
        out["suspension"] = r.coordinate;
        out["result"] = io::thom_point_to_json(r.point);
    } else if (op == "gk") {
        if (!in.contains("suspension"))
            throw io::io_error("eval gk: input needs field \"suspension\"");
        out["result"] = io::tower_point_to_json(
            tower::gk_map(in["suspension"].get<double>(), io::thom_point_from_json(in)));
    } else if (op == "delta") {
        out["result"] =
            io::thom_point_to_json(tower::delta_k(io::tower_point_from_json(in), k));
    } else if (op == "phi") {
        out["result"] = io::tower_point_to_json(tower::phi_k(io::thom_point_from_json(in)));
    } else if (op == "embed") {
        auto r = tower::embed_coords(io::tower_point_from_json(in));
        out["alpha"] = io::matrix_to_json(r.first.matrix());
        out["beta"] = io::matrix_to_json(r.second.matrix());
    } else if (op == "miller-rank") {
        opcalc::LinOp theta(need_matrix("theta"));
        opcalc::LinOp incl(need_matrix("inclusion"));
        out["rank"] = tower::miller_rank(theta, incl);
    } else if (op == "ndr-halfdisc" || op == "ndr-dplus2" || op == "ndr-hom") {
        double t = in.value("t", 0.0);
        if (op == "ndr-halfdisc") {
            auto zj = in.at("z");
            std::complex<double> z(zj.at(0).get<double>(), zj.at(1).get<double>());
            auto v = facial::ndr_halfdisc(z, t);
            out["u"] = v.u;
            out["result"] = json::array({v.h.real(), v.h.imag()});
        } else if (op == "ndr-dplus2") {
            auto p = io::tuple_from_json(in.at("tuple"), facial::TupleKind::nonneg);
            auto v = facial::ndr_dplus2(p, t);
            out["u"] = v.u;
            out["result"] = io::tuple_to_json(v.h);
        } else {
            auto v = opcalc::ndr_hom(linop_from_json(in), t);
            out["u"] = v.u;
            out["result"] = io::matrix_to_json(v.h.matrix());
        }
    } else if (op == "conformal") {
        auto t = io::tuple_from_json(in.at("tuple"), facial::TupleKind::nonneg);
        auto z = facial::conformal(t);
        out["result"] = json::array({z.real(), z.imag()});
    } else if (op == "conformal-inv") {
        auto zj = in.at("z");
        std::complex<double> z(zj.at(0).get<double>(), zj.at(1).get<double>());
        out["result"] = io::tuple_to_json(facial::conformal_inv(z));
    } else if (auto bm = facial::builtin_map(op)) {
        // builtin facial/circle maps applied to a tuple or value
        if (auto* fm = std::get_if<facial::FacialMap>(&*bm)) {
            auto t = io::tuple_from_json(in.at("tuple"), fm->domain_kind());
            auto img = fm->apply(t);
            out["result"] = io::tuple_to_json(img.tuple);
            if (img.suspension) out["suspension"] = *img.suspension;
        } else if (auto* cm = std::get_if<facial::CircleMap>(&*bm)) {
            ExtReal x = in.at("t").is_string() ? ExtReal::infinity()
                                               : ExtReal::of(in.at("t").get<double>());
            ExtReal y = (*cm)(x);
            out["result"] = y.at_infinity ? json("infinity") : json(y.value);
        } else {
            throw io::io_error("eval: use the degree subcommand for sphere maps");
        }
    } else {
        throw io::io_error("eval: unknown operation '" + op + "'");
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_selftest(const std::string& suite, long long samples, unsigned long long seed,
                 double tol) {
    selftest::Options opt;
    opt.samples = samples;
    opt.seed = seed;
    opt.tol = tol;
    auto results = selftest::run_suite(suite, opt);
    bool all_pass = true;
    json checks = json::array();
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        json c;
        c["name"] = r.name;
        c["samples"] = r.samples;
        c["failures"] = r.failures;
        c["worst"] = r.worst;
        c["tol"] = r.tol;
        c["pass"] = r.pass;
        checks.push_back(std::move(c));
        std::cerr << (r.pass ? "  ok   " : "  FAIL ") << std::left << std::setw(32) << r.name
                  << " samples=" << r.samples << " failures=" << r.failures
                  << " worst=" << std::scientific << std::setprecision(3) << r.worst
                  << std::defaultfloat << "\n";
    }
    json out;
    out["suite"] = suite;
    out["seed"] = seed;
    out["samples"] = samples;
    out["pass"] = all_pass;
    out["checks"] = std::move(checks);
    std::cout << out.dump(2) << "\n";
    if (!all_pass)
        std::cerr << "selftest FAILED; reproduce with --suite " << suite << " --seed " << seed
                  << "\n";
    return all_pass ? kExitOk : kExitSelftestFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenvalue-space functional calculus, isometry-tower maps and "
                 "K-theory splitting obstructions"};
    app.require_subcommand(1);

    std::string group_path, v0_path, v1_path, map_id, input_path, suite = "all";
    int k = 0, samples_i = 512, grid = 192;
    long long samples = 2000;
    unsigned long long seed = 42;
    double tol = default_tol();

    auto* obstruction = app.add_subcommand("obstruction", "K-theoretic splitting obstruction");
    obstruction->add_option("--group", group_path, "group JSON file")->required();
    obstruction->add_option("--v0", v0_path, "V0 representation JSON file")->required();
    obstruction->add_option("--v1", v1_path, "V1 representation JSON file")->required();

    auto* degree = app.add_subcommand("degree", "degree of a builtin circle/sphere map");
    degree->add_option("--map", map_id, "builtin map id")->required();
    degree->add_option("--samples", samples_i, "initial circle samples");
    degree->add_option("--grid", grid, "sphere grid resolution");
    degree->add_option("--seed", seed, "target-value seed");

    auto* eval = app.add_subcommand("eval", "evaluate a named map at a point");
    eval->add_option("--map", map_id, "operation or builtin map id")->required();
    eval->add_option("--input", input_path, "input JSON file")->required();
    eval->add_option("--k", k, "level/index parameter where required");

    auto* fv = app.add_subcommand("fv", "K-theory polynomial of a representation");
    fv->add_option("--group", group_path, "group JSON file")->required();
    fv->add_option("--v0", v0_path, "representation JSON file")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run module property suites");
    selftest_cmd->add_option("--suite", suite, "all|facial|opcalc|tower|kresidue");
    selftest_cmd->add_option("--samples", samples, "samples per check");
    selftest_cmd->add_option("--seed", seed, "RNG seed");
    selftest_cmd->add_option("--tol", tol, "tolerance override (0 = per-check default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (obstruction->parsed()) return run_obstruction(group_path, v0_path, v1_path);
        if (degree->parsed()) return run_degree(map_id, samples_i, grid, seed);
        if (eval->parsed()) return run_eval(map_id, input_path, k);
        if (fv->parsed()) return run_fv(group_path, v0_path);
        if (selftest_cmd->parsed()) return run_selftest(suite, samples, seed, tol);
    } catch (const io::io_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
