#include <CLI11.hpp>
#include <gmp.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "lie2mm/io.hpp"

namespace {

using namespace lie2mm;
using io::Json;

struct Options {
    std::string command;
    std::string input;
    std::string output;
    std::string moment_map;
    std::optional<unsigned> degree_bound;
    std::size_t witness_points = 0;
};

struct Outcome {
    Json result;
    int exit_code = 0;
    std::string summary;
};

Json toolchain()
{
    return Json{{"compiler", std::string("g++ ") + __VERSION__},
                {"cxx_standard", static_cast<long>(__cplusplus)},
                {"gmp", gmp_version},
#ifdef _OPENMP
                {"openmp", static_cast<long>(_OPENMP)}
#else
                {"openmp", nullptr}
#endif
    };
}

io::ProblemInput load(const Options& o)
{
    io::ProblemInput in = io::read_problem(o.input);
    if (in.geometry && o.witness_points > 0)
        for (auto& pt : io::sample_points(in.geometry->n, o.witness_points))
            in.geometry->witness_points.push_back(std::move(pt));
    return in;
}

OmegaThreeP existence_input(const io::Problem& p)
{
    if (p.omega3_direct)
        return *p.omega3_direct;
    if (p.action)
        return omega_3p(*p.action);
    throw ParseError("", "this command needs either omega3_direct or geometry");
}

Json step(const std::string& name, const std::function<void()>& f, bool& ok)
{
    if (!ok)
        return Json{{"name", name}, {"status", "skipped"}};
    try {
        f();
        return Json{{"name", name}, {"status", "pass"}};
    } catch (const InternalInvariantBreach&) {
        throw;
    } catch (const Error& e) {
        ok = false;
        return Json{{"name", name}, {"status", "fail"}, {"error", io::to_json(e)}};
    }
}

Outcome cmd_check(const Options& o)
{
    const io::ProblemInput in = load(o);
    Json checks = Json::array();
    bool ok = true;
    std::optional<LieAlgebra> g;
    std::optional<Representation> h;
    std::optional<MinimalLie2Algebra> L;
    std::optional<TwoPlecticForm> w;

    checks.push_back(step("lie_algebra", [&] { g = check_lie_algebra(in.structure_constants, in.basis_names); }, ok));
    checks.push_back(step("representation", [&] {
        h = in.representation ? check_representation(*g, in.representation->matrices, in.representation->dim)
                              : trivial_representation(*g, 0);
    }, ok));
    checks.push_back(step("cocycle", [&] {
        L = build_minimal(*g, *h, in.cocycle_c ? *in.cocycle_c : Cochain(g->dim(), 3, h->dim()));
    }, ok));
    const bool algebra_ok = ok;
    if (in.omega3_direct)
        checks.push_back(step("omega3_direct", [&] {
            make_omega(*g, *in.omega3_direct, OmegaThreeP::Origin::Direct);
        }, ok));
    if (in.geometry) {
        bool geo_ok = algebra_ok;
        const auto& geo = *in.geometry;
        checks.push_back(step("two_plectic", [&] {
            w = make_two_plectic(geo.omega, geo.point_p, geo.witness_points);
        }, geo_ok));
        checks.push_back(step("hamiltonian_action", [&] { build_action(*g, geo.action_fields, *w); }, geo_ok));
        ok = ok && geo_ok;
    }
    Json r{{"valid", ok}, {"checks", checks}};
    if (L)
        r["dimensions"] = Json{{"g", L->dim_g()}, {"h", L->dim_h()}};
    return {r, ok ? 0 : 1, ok ? "all checks pass" : "invalid input"};
}

Json class_json(const Representation& rho, const Cochain& c)
{
    const ClassCertificate cert = class_is_zero(rho, c);
    Json j{{"is_zero", cert.is_zero}, {"rank_d", cert.rank_d}, {"rank_augmented", cert.rank_augmented}};
    if (cert.primitive)
        j["primitive"] = io::to_json(*cert.primitive);
    return j;
}

Outcome cmd_cohomology(const Options& o)
{
    const io::Problem p = io::validate(load(o));
    const MinimalLie2Algebra& L = p.L;
    const Representation trivial = trivial_representation(L.g(), 1);
    Json triv = Json::array(), rep = Json::array();
    for (std::size_t k = 0; k <= L.dim_g(); ++k) {
        triv.push_back(cohomology_dim(trivial, k));
        if (L.dim_h() > 0)
            rep.push_back(cohomology_dim(L.h(), k));
    }
    Json r{{"trivial", triv}};
    r["representation"] = L.dim_h() > 0 ? rep : Json(nullptr);
    Json classes = Json::object();
    if (L.dim_h() > 0) {
        classes["c"] = class_json(L.h(), L.c());
        const ReducedLie2Algebra red = reduce(L);
        classes["c_red"] = red.h_red.dim() > 0 ? class_json(red.h_red, red.c_red) : Json(nullptr);
    }
    if (p.omega3_direct || p.action)
        classes["omega_3p"] = class_json(trivial, existence_input(p).values);
    r["classes"] = classes;
    return {r, 0, "H^3(g) has dimension " + std::to_string(triv.size() > 3 ? triv[3].get<std::size_t>() : 0)};
}

Outcome cmd_exists(const Options& o)
{
    const io::Problem p = io::validate(load(o));
    const OmegaThreeP w = existence_input(p);
    ExistenceReport rep = decide_existence(p.L, w, p.action.has_value());
    if (!p.action)
        rep.notes.push_back("no geometry given: geometric synthesis out of scope, verdict is algebraic");
    Json r = io::to_json(rep);
    r["omega_3p"] = io::to_json(w.values);
    return {r, 0, rep.verdict + " (" + rep.reason + ")"};
}

Json verification_pair(const Verification& a, const Verification& b)
{
    return Json{{"components", io::to_json(a)}, {"total_differential", io::to_json(b)},
                {"agree", a.pass == b.pass}};
}

Outcome cmd_construct(const Options& o)
{
    const io::Problem p = io::validate(load(o));
    const OmegaThreeP w = existence_input(p);
    const ExistenceReport rep = decide_existence(p.L, w, p.action.has_value());
    Json r{{"existence", io::to_json(rep)}};
    if (!rep.certificate) {
        r["moment_map"] = nullptr;
        return {r, 0, rep.verdict + ": nothing to construct"};
    }
    if (!p.action) {
        OutOfGeometricScope e("no geometry given; only the algebraic witness can be produced");
        Json err = io::to_json(e);
        err["witness"] = Json{{"xi", io::to_json(rep.certificate->xi)}, {"phi", io::to_json(rep.certificate->phi)}};
        return {Json{{"error", err}, {"existence", r["existence"]}}, 1, "OutOfGeometricScope"};
    }
    const HamiltonianAction& a = *p.action;
    const MomentMapCandidate mu = build_phi_eta(a, p.L, *rep.certificate);
    const Verification v1 = verify_moment_map(a, p.L, mu);
    const Verification v2 = verify_via_dtot(a, p.L, mu);
    if (!v1.pass || !v2.pass)
        throw InternalInvariantBreach("constructed moment map fails verification: " +
                                      (v1.pass ? v2.first_failure : v1.first_failure));
    const CECochain back = restrict_r(p.L, mu, a.base_point());
    if (!(back == star_as_ce(p.L, rep.certificate->xi, rep.certificate->phi)))
        throw InternalInvariantBreach("r(phi^eta) differs from eta");
    r["moment_map"] = io::to_json(mu, p.L.dim_g());
    r["verification"] = verification_pair(v1, v2);
    r["restriction_matches_witness"] = true;
    return {r, 0, "moment map constructed and verified"};
}

Outcome cmd_verify(const Options& o)
{
    if (o.moment_map.empty())
        throw ParseError("--moment-map", "verify needs a moment map file");
    const io::Problem p = io::validate(load(o));
    if (!p.action)
        throw ParseError("geometry", "verify needs a geometry block");
    const HamiltonianAction& a = *p.action;
    const MomentMapCandidate mu = io::moment_map_from_json(io::read_json(o.moment_map), p.L, a.nvars());
    const Verification v1 = verify_moment_map(a, p.L, mu);
    const Verification v2 = verify_via_dtot(a, p.L, mu);
    if (v1.pass != v2.pass)
        throw InternalInvariantBreach("verification routes disagree");
    Json r{{"status", v1.pass ? "pass" : "fail"}, {"verification", verification_pair(v1, v2)}};
    if (v1.pass) {
        const ExistenceReport rep = decide_existence(p.L, omega_3p(a), true);
        if (rep.certificate) {
            const MomentMapCandidate ref = build_phi_eta(a, p.L, *rep.certificate);
            const InnerEquivalence eq = inner_equivalence(p.L, mu, ref, o.degree_bound);
            Json e{{"equivalent_to_constructed", eq.alpha.has_value()}, {"degree_bound", eq.degree_bound}};
            if (eq.alpha) {
                Json al = Json::array();
                for (const auto& f : *eq.alpha)
                    al.push_back(io::to_json(f));
                e["alpha"] = al;
            }
            r["inner_equivalence"] = e;
        }
    }
    return {r, 0, std::string("verification ") + (v1.pass ? "pass" : "fail: " + v1.first_failure)};
}

Json command_echo(const Options& o)
{
    Json j{{"name", o.command}, {"input", o.input}};
    if (!o.moment_map.empty())
        j["moment_map"] = o.moment_map;
    if (o.degree_bound)
        j["degree_bound"] = *o.degree_bound;
    j["witness_points"] = o.witness_points;
    return j;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homotopy moment maps for minimal Lie 2-algebras"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"check", "validate a problem file"},
        {"cohomology", "Lie algebra cohomology dimensions and classes"},
        {"exists", "decide whether a moment map exists"},
        {"construct", "build and verify a moment map"},
        {"verify", "verify a moment map file"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--input", o.input, "problem file (JSON)")->required();
        sub->add_option("--output", o.output, "report path (default: stdout)");
        sub->add_option("--witness-points", o.witness_points,
                        "extra deterministic points for the nondegeneracy check");
        sub->add_option("--degree-bound", o.degree_bound, "polynomial degree bound for the equivalence search");
        if (name == "verify")
            sub->add_option("--moment-map", o.moment_map, "moment map file (JSON)")->required();
        sub->callback([&o, n = name] { o.command = n; });
    }
    CLI11_PARSE(app, argc, argv);

    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        if (o.command == "check")
            out = cmd_check(o);
        else if (o.command == "cohomology")
            out = cmd_cohomology(o);
        else if (o.command == "exists")
            out = cmd_exists(o);
        else if (o.command == "construct")
            out = cmd_construct(o);
        else
            out = cmd_verify(o);
    } catch (const InternalInvariantBreach& e) {
        out = {Json{{"error", io::to_json(e)}}, 2, e.kind()};
    } catch (const Error& e) {
        out = {Json{{"error", io::to_json(e)}}, 1, e.kind() + ": " + e.what()};
    } catch (const std::exception& e) {
        out = {Json{{"error", Json{{"kind", "Unexpected"}, {"message", e.what()}}}}, 2, e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    Json report{{"command", command_echo(o)},
                {"exit_code", out.exit_code},
                {"result", out.result},
                {"timing_ms", ms},
                {"toolchain", toolchain()}};
    const std::string text = report.dump(2) + "\n";
    if (o.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.output);
        if (!f) {
            std::cerr << "cannot write " << o.output << "\n";
            return 1;
        }
        f << text;
    }
    std::cerr << o.command << ": " << out.summary << "\n";
    return out.exit_code;
}
