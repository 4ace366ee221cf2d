#include "lie2mm/io.hpp"

#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "lie2mm/geometries.hpp"

namespace lie2mm::io {

namespace {

std::string at_index(const std::string& field, std::size_t i)
{
    return field + "[" + std::to_string(i) + "]";
}

const Json& member(const Json& j, const std::string& key, const std::string& field)
{
    if (!j.is_object())
        throw ParseError(field, "expected an object");
    const auto it = j.find(key);
    if (it == j.end())
        throw ParseError(field.empty() ? key : field + "." + key, "missing required field");
    return *it;
}

const Json& array(const Json& j, const std::string& field)
{
    if (!j.is_array())
        throw ParseError(field, "expected an array");
    return j;
}

std::size_t index_value(const Json& j, std::size_t bound, const std::string& field)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(field, "expected a non-negative integer index");
    const auto v = static_cast<std::size_t>(j.get<long long>());
    if (v >= bound)
        throw ParseError(field, "index " + std::to_string(v) + " out of range [0," +
                                    std::to_string(bound) + ")");
    return v;
}

std::size_t count_value(const Json& j, const std::string& field)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(field, "expected a non-negative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

Vector vector_from_json(const Json& j, std::size_t len, const std::string& field)
{
    array(j, field);
    if (j.size() != len)
        throw ParseError(field, "expected " + std::to_string(len) + " entries, got " +
                                    std::to_string(j.size()));
    Vector v;
    for (std::size_t i = 0; i < len; ++i)
        v.push_back(rational_from_json(j[i], at_index(field, i)));
    return v;
}

Matrix matrix_from_json(const Json& j, std::size_t dim, const std::string& field)
{
    array(j, field);
    if (j.size() != dim)
        throw ParseError(field, "expected " + std::to_string(dim) + " rows");
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const Vector row = vector_from_json(j[r], dim, at_index(field, r));
        for (std::size_t c = 0; c < dim; ++c)
            m(r, c) = row[c];
    }
    return m;
}

ExtIndex indices_from_json(const Json& j, std::size_t k, std::size_t bound,
                           const std::string& field)
{
    array(j, field);
    if (j.size() != k)
        throw ParseError(field, "expected " + std::to_string(k) + " indices");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
        idx.push_back(index_value(j[i], bound, at_index(field, i)));
    return idx;
}

// Alternating cochain from a list of {indices, value}; unsorted indices are sorted with sign.
Cochain cochain_from_json(const Json& j, std::size_t dim, std::size_t degree, std::size_t V,
                          const std::string& field)
{
    array(j, field);
    Cochain c(dim, degree, V);
    std::set<ExtIndex> seen;
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string f = at_index(field, e);
        ExtIndex idx = indices_from_json(member(j[e], "indices", f), degree, dim, f + ".indices");
        const int s = sort_with_sign(idx);
        if (s == 0)
            throw ParseError(f + ".indices", "repeated index in an alternating cochain");
        if (!seen.insert(idx).second)
            throw ParseError(f + ".indices", "duplicate entry");
        const Json& val = member(j[e], "value", f);
        const Vector v = V == 1 && !val.is_array() ? Vector{rational_from_json(val, f + ".value")}
                                                   : vector_from_json(val, V, f + ".value");
        for (std::size_t a = 0; a < V; ++a)
            c.at(idx, a) = s > 0 ? v[a] : Rational(-v[a]);
    }
    return c;
}

GeometryInput geometry_from_json(const Json& j)
{
    const std::string field = "geometry";
    GeometryInput g;
    g.n = count_value(member(j, "n", field), field + ".n");
    if (g.n < 3)
        throw ParseError(field + ".n", "a 2-plectic form needs n >= 3");
    if (j.contains("coordinates")) {
        const Json& names = array(j["coordinates"], field + ".coordinates");
        if (names.size() != g.n)
            throw ParseError(field + ".coordinates", "expected " + std::to_string(g.n) + " names");
        for (const auto& s : names) {
            if (!s.is_string())
                throw ParseError(field + ".coordinates", "names must be strings");
            g.coordinates.push_back(s.get<std::string>());
        }
    }
    g.point_p = vector_from_json(member(j, "point_p", field), g.n, field + ".point_p");
    g.omega = form_from_json(member(j, "omega", field), g.n, 3, field + ".omega");
    const Json& fields = array(member(j, "action_fields", field), field + ".action_fields");
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string f = at_index(field + ".action_fields", i);
        array(fields[i], f);
        if (fields[i].size() != g.n)
            throw ParseError(f, "expected " + std::to_string(g.n) + " component polynomials");
        std::vector<Poly> comps;
        for (std::size_t c = 0; c < g.n; ++c)
            comps.push_back(poly_from_json(fields[i][c], g.n, at_index(f, c)));
        g.action_fields.emplace_back(std::move(comps));
    }
    if (j.contains("witness_points")) {
        const Json& w = array(j["witness_points"], field + ".witness_points");
        for (std::size_t i = 0; i < w.size(); ++i)
            g.witness_points.push_back(
                vector_from_json(w[i], g.n, at_index(field + ".witness_points", i)));
    }
    return g;
}

template <class E>
const E* as(const Error& e)
{
    return dynamic_cast<const E*>(&e);
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& field)
{
    if (j.is_number_integer())
        return Rational(j.dump());
    if (!j.is_string())
        throw ParseError(field, "expected a rational as \"p/q\" or an integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(field, e.what());
    }
}

Poly poly_from_json(const Json& j, std::size_t nvars, const std::string& field)
{
    if (!j.is_array())
        return Poly::constant(nvars, rational_from_json(j, field));
    Poly p(nvars);
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string f = at_index(field, t);
        const Json& ex = array(member(j[t], "exponents", f), f + ".exponents");
        if (ex.size() != nvars)
            throw ParseError(f + ".exponents", "expected " + std::to_string(nvars) + " exponents");
        Exponent e;
        for (std::size_t i = 0; i < nvars; ++i)
            e.push_back(static_cast<unsigned>(count_value(ex[i], at_index(f + ".exponents", i))));
        p.add_term(e, rational_from_json(member(j[t], "coefficient", f), f + ".coefficient"));
    }
    return p;
}

PolyForm form_from_json(const Json& j, std::size_t nvars, std::size_t degree,
                        const std::string& field)
{
    array(j, field);
    PolyForm a(nvars, degree);
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string f = at_index(field, t);
        ExtIndex idx = indices_from_json(member(j[t], "indices", f), degree, nvars, f + ".indices");
        ExtIndex sorted = idx;
        if (sort_with_sign(sorted) == 0)
            throw ParseError(f + ".indices", "repeated index in a differential form");
        a.add(idx, poly_from_json(member(j[t], "poly", f), nvars, f + ".poly"));
    }
    return a;
}

ProblemInput parse_problem(const Json& doc)
{
    if (!doc.is_object())
        throw ParseError("", "problem file must be a JSON object");
    ProblemInput in;
    const Json& la = member(doc, "lie_algebra", "");
    in.dim = count_value(member(la, "dim", "lie_algebra"), "lie_algebra.dim");
    if (la.contains("basis_names")) {
        const Json& names = array(la["basis_names"], "lie_algebra.basis_names");
        if (names.size() != in.dim)
            throw ParseError("lie_algebra.basis_names", "expected " + std::to_string(in.dim) + " names");
        for (const auto& s : names) {
            if (!s.is_string())
                throw ParseError("lie_algebra.basis_names", "names must be strings");
            in.basis_names.push_back(s.get<std::string>());
        }
    }
    in.structure_constants = StructureConstants(in.dim);
    const std::string scf = "lie_algebra.structure_constants";
    const Json& sc = array(member(la, "structure_constants", "lie_algebra"), scf);
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> given;
    for (std::size_t e = 0; e < sc.size(); ++e) {
        const std::string f = at_index(scf, e);
        if (!sc[e].is_array() || sc[e].size() != 4)
            throw ParseError(f, "expected [i, j, k, \"value\"] meaning [e_i,e_j] has e_k-coefficient value");
        const std::size_t i = index_value(sc[e][0], in.dim, f + "[0]");
        const std::size_t jj = index_value(sc[e][1], in.dim, f + "[1]");
        const std::size_t k = index_value(sc[e][2], in.dim, f + "[2]");
        if (!given.emplace(std::tuple{i, jj, k}, rational_from_json(sc[e][3], f + "[3]")).second)
            throw ParseError(f, "duplicate entry");
    }
    // unlisted mirrored entries follow by antisymmetry; listed ones are taken verbatim
    for (const auto& [key, v] : given) {
        const auto [i, j, k] = key;
        in.structure_constants.at(i, j, k) = v;
        if (!given.count({j, i, k}))
            in.structure_constants.at(j, i, k) = -v;
    }

    if (doc.contains("representation") && !doc["representation"].is_null()) {
        const Json& r = doc["representation"];
        RepresentationInput rep;
        rep.dim = count_value(member(r, "dim", "representation"), "representation.dim");
        const Json& ms = array(member(r, "matrices", "representation"), "representation.matrices");
        if (ms.size() != in.dim)
            throw ParseError("representation.matrices",
                             "expected one matrix per basis element (" + std::to_string(in.dim) + ")");
        for (std::size_t i = 0; i < ms.size(); ++i)
            rep.matrices.push_back(matrix_from_json(ms[i], rep.dim, at_index("representation.matrices", i)));
        in.representation = std::move(rep);
    }
    if (doc.contains("cocycle_c") && !doc["cocycle_c"].is_null()) {
        if (!in.representation)
            throw ParseError("cocycle_c", "requires a representation block defining h");
        in.cocycle_c = cochain_from_json(doc["cocycle_c"], in.dim, 3, in.representation->dim, "cocycle_c");
    }
    if (doc.contains("omega3_direct") && !doc["omega3_direct"].is_null())
        in.omega3_direct = cochain_from_json(doc["omega3_direct"], in.dim, 3, 1, "omega3_direct");
    if (doc.contains("geometry") && !doc["geometry"].is_null())
        in.geometry = geometry_from_json(doc["geometry"]);
    if (in.omega3_direct && in.geometry)
        throw ParseError("omega3_direct", "give either omega3_direct or geometry, not both");
    if (in.geometry && in.geometry->action_fields.size() != in.dim)
        throw ParseError("geometry.action_fields",
                         "expected one vector field per basis element (" + std::to_string(in.dim) + ")");
    return in;
}

Json read_json(const std::filesystem::path& path)
{
    std::ifstream f(path);
    if (!f)
        throw ParseError("", "cannot open " + path.string());
    try {
        return Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw ParseError("", path.string() + ": " + e.what());
    }
}

ProblemInput read_problem(const std::filesystem::path& path)
{
    return parse_problem(read_json(path));
}

Problem validate(const ProblemInput& in)
{
    const LieAlgebra g = check_lie_algebra(in.structure_constants, in.basis_names);
    const Representation h = in.representation
                                 ? check_representation(g, in.representation->matrices, in.representation->dim)
                                 : trivial_representation(g, 0);
    const Cochain c = in.cocycle_c ? *in.cocycle_c : Cochain(g.dim(), 3, h.dim());
    Problem p{build_minimal(g, h, c), std::nullopt, std::nullopt, {}};
    if (in.omega3_direct)
        p.omega3_direct = make_omega(g, *in.omega3_direct, OmegaThreeP::Origin::Direct);
    if (in.geometry) {
        const GeometryInput& geo = *in.geometry;
        const TwoPlecticForm w = make_two_plectic(geo.omega, geo.point_p, geo.witness_points);
        p.action = build_action(g, geo.action_fields, w);
        p.coordinates = geo.coordinates;
    }
    return p;
}

std::vector<Vector> sample_points(std::size_t n, std::size_t count)
{
    std::mt19937_64 rng(20240917);
    std::uniform_int_distribution<int> num(-6, 6);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < count; ++i) {
        Vector v;
        for (std::size_t k = 0; k < n; ++k)
            v.push_back(Rational(num(rng), 2));
        for (auto& x : v)
            x.canonicalize();
        out.push_back(std::move(v));
    }
    return out;
}

Json to_json(const Rational& q) { return lie2mm::to_string(q); }

Json to_json(const Vector& v)
{
    Json j = Json::array();
    for (const auto& x : v)
        j.push_back(to_json(x));
    return j;
}

Json to_json(const Poly& p)
{
    Json j = Json::array();
    for (const auto& [e, c] : p.terms())
        j.push_back(Json{{"exponents", e}, {"coefficient", to_json(c)}});
    return j;
}

Json to_json(const PolyForm& a)
{
    Json j = Json::array();
    for (const auto& [idx, c] : a.coefficients())
        j.push_back(Json{{"indices", idx}, {"poly", to_json(c)}});
    return j;
}

Json to_json(const PolyVectorField& v)
{
    Json j = Json::array();
    for (const auto& c : v.components())
        j.push_back(to_json(c));
    return j;
}

Json to_json(const Cochain& c)
{
    Json j = Json::array();
    for (const auto& idx : ext_basis(c.algebra_dim, c.degree)) {
        const Vector v = c.value(idx);
        if (is_zero(v))
            continue;
        j.push_back(Json{{"indices", idx}, {"value", c.coeff_dim == 1 ? to_json(v[0]) : to_json(v)}});
    }
    return j;
}

Json to_json(const CECochain& x)
{
    Json j = Json::array();
    for (const auto& [m, c] : x.terms())
        j.push_back(Json{{"theta", m.theta}, {"eta", m.eta}, {"coefficient", to_json(c)}});
    return j;
}

Json to_json(const MomentMapCandidate& mu, std::size_t dim_g)
{
    Json g = Json::array(), h = Json::array(), two = Json::array();
    for (const auto& f : mu.mu1_g)
        g.push_back(to_json(f));
    for (const auto& f : mu.mu1_h)
        h.push_back(to_json(f));
    const auto pairs = ext_basis(dim_g, 2);
    for (std::size_t p = 0; p < mu.mu2.size(); ++p)
        two.push_back(Json{{"pair", pairs.at(p)}, {"poly", to_json(mu.mu2[p])}});
    return Json{{"mu1_g", g}, {"mu1_h", h}, {"mu2", two}};
}

Json to_json(const Verification& v)
{
    Json eqs = Json::array();
    for (const auto& e : v.equations) {
        Json s{{"name", e.name}, {"status", e.pass ? "pass" : "fail"}};
        if (!e.pass) {
            s["tuple"] = e.tuple;
            s["defect"] = e.defect;
        }
        eqs.push_back(std::move(s));
    }
    Json j{{"status", v.pass ? "pass" : "fail"}};
    if (!v.pass)
        j["first_failure"] = v.first_failure;
    j["equations"] = std::move(eqs);
    return j;
}

Json to_json(const ExistenceReport& r)
{
    Json j{{"verdict", r.verdict},
           {"geometric_status", r.geometric_status},
           {"criterion", r.reason},
           {"omega_class_zero", r.omega_class_zero}};
    j["cred_class_zero"] = r.cred_class_zero ? Json(*r.cred_class_zero) : Json(nullptr);
    j["h3_dim"] = r.h3_dim;
    j["annihilator_dim"] = r.annihilator_dim;
    Json star{{"solvable", r.star.solution.has_value()},
              {"rank", r.star.rank},
              {"augmented_rank", r.star.augmented_rank}};
    if (r.star.solution)
        star["kernel_dim"] = r.star.solution->kernel_basis.size();
    j["system"] = std::move(star);
    if (r.certificate)
        j["certificate"] = Json{{"xi", to_json(r.certificate->xi)}, {"phi", to_json(r.certificate->phi)}};
    else
        j["certificate"] = nullptr;
    j["notes"] = r.notes;
    return j;
}

Json to_json(const Error& e)
{
    Json j{{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* p = as<ParseError>(e))
        j["field"] = p->field();
    else if (const auto* a = as<AntisymmetryViolation>(e))
        j["pair"] = a->pair;
    else if (const auto* jv = as<JacobiViolation>(e)) {
        j["triple"] = jv->triple;
        j["defect"] = to_json(jv->defect);
    } else if (const auto* r = as<RepViolation>(e))
        j["pair"] = r->pair;
    else if (const auto* c = as<CocycleViolation>(e)) {
        j["tuple"] = c->tuple;
        j["defect"] = to_json(c->defect);
    } else if (const auto* m = as<NotMorphism>(e))
        j["pair"] = m->pair;
    else if (const auto* h = as<NotHamiltonian>(e))
        j["generator"] = h->generator_index;
    return j;
}

MomentMapCandidate moment_map_from_json(const Json& j, const MinimalLie2Algebra& L,
                                        std::size_t nvars)
{
    if (j.is_object() && j.contains("result"))
        return moment_map_from_json(j["result"], L, nvars);
    if (j.is_object() && j.contains("moment_map")) {
        if (j["moment_map"].is_null())
            throw ParseError("moment_map", "the report carries no moment map");
        return moment_map_from_json(j["moment_map"], L, nvars);
    }
    const std::size_t n = L.dim_g();
    MomentMapCandidate mu;
    const Json& g = array(member(j, "mu1_g", ""), "mu1_g");
    if (g.size() != n)
        throw ParseError("mu1_g", "expected " + std::to_string(n) + " 1-forms, got " + std::to_string(g.size()));
    for (std::size_t i = 0; i < n; ++i)
        mu.mu1_g.push_back(form_from_json(g[i], nvars, 1, at_index("mu1_g", i)));
    const Json& h = array(member(j, "mu1_h", ""), "mu1_h");
    if (h.size() != L.dim_h())
        throw ParseError("mu1_h", "expected " + std::to_string(L.dim_h()) + " functions, got " +
                                      std::to_string(h.size()));
    for (std::size_t b = 0; b < h.size(); ++b)
        mu.mu1_h.push_back(poly_from_json(h[b], nvars, at_index("mu1_h", b)));
    mu.mu2.assign(binomial(n, 2), Poly(nvars));
    const Json& two = array(member(j, "mu2", ""), "mu2");
    std::set<ExtIndex> seen;
    for (std::size_t e = 0; e < two.size(); ++e) {
        const std::string f = at_index("mu2", e);
        ExtIndex idx = indices_from_json(member(two[e], "pair", f), 2, n, f + ".pair");
        if (idx[0] >= idx[1])
            throw ParseError(f + ".pair", "pairs must be strictly increasing (upper triangle)");
        if (!seen.insert(idx).second)
            throw ParseError(f + ".pair", "duplicate entry");
        mu.mu2[ext_rank(idx, n)] = poly_from_json(member(two[e], "poly", f), nvars, f + ".poly");
    }
    return mu;
}

}  // namespace lie2mm::io
