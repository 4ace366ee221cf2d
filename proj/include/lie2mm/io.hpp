#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lie2mm/errors.hpp"
#include "lie2mm/existence.hpp"
#include "lie2mm/moment_map.hpp"

/// JSON problem files, moment-map files and report fragments.
namespace lie2mm::io {

using Json = nlohmann::ordered_json;

struct RepresentationInput {
    std::size_t dim = 0;
    std::vector<Matrix> matrices;
};

struct GeometryInput {
    std::size_t n = 0;
    std::vector<std::string> coordinates;
    Vector point_p;
    PolyForm omega;
    std::vector<PolyVectorField> action_fields;
    std::vector<Vector> witness_points;
};

/// A problem file after parsing, before any mathematical validation.
struct ProblemInput {
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    StructureConstants structure_constants{0};
    std::optional<RepresentationInput> representation;
    std::optional<Cochain> cocycle_c;
    std::optional<Cochain> omega3_direct;
    std::optional<GeometryInput> geometry;
};

/// Throws ParseError naming the offending field.
ProblemInput parse_problem(const Json& doc);
/// Reads and parses a file; JSON syntax errors become ParseError with the byte position.
Json read_json(const std::filesystem::path& path);
ProblemInput read_problem(const std::filesystem::path& path);

/// Fully validated problem. Without a representation, h = 0 and c = 0.
struct Problem {
    MinimalLie2Algebra L;
    std::optional<OmegaThreeP> omega3_direct;
    std::optional<HamiltonianAction> action;
    std::vector<std::string> coordinates;
};

/// Runs the algebraic and geometric validations in order, throwing the first failure.
Problem validate(const ProblemInput& in);

/// Deterministic extra nondegeneracy sample points in [-3,3]^n with small denominators.
std::vector<Vector> sample_points(std::size_t n, std::size_t count);

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Poly& p);
Json to_json(const PolyForm& a);
Json to_json(const PolyVectorField& v);
/// List of {indices, value} over nonzero entries.
Json to_json(const Cochain& c);
Json to_json(const CECochain& x);
Json to_json(const MomentMapCandidate& mu, std::size_t dim_g);
Json to_json(const Verification& v);
Json to_json(const ExistenceReport& r);
/// {kind, message} plus structured context where the error carries any.
Json to_json(const Error& e);

Rational rational_from_json(const Json& j, const std::string& field);
Poly poly_from_json(const Json& j, std::size_t nvars, const std::string& field);
PolyForm form_from_json(const Json& j, std::size_t nvars, std::size_t degree,
                        const std::string& field);
/// Accepts a bare moment map, {"moment_map": ..}, or a CLI report holding one under "result".
MomentMapCandidate moment_map_from_json(const Json& j, const MinimalLie2Algebra& L,
                                        std::size_t nvars);

}  // namespace lie2mm::io
