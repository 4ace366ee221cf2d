#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "lie2mm/rational.hpp"

namespace lie2mm {

/// Base of every error thrown by the library. `kind()` is a stable tag used in reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class ParseError : public Error {
public:
    ParseError(std::string field, const std::string& message)
        : Error("ParseError", field.empty() ? message : field + ": " + message),
          field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(const std::string& lhs, const std::string& rhs)
        : Error("DimensionMismatch", "shape mismatch: " + lhs + " vs " + rhs) {}
};

class AntisymmetryViolation : public Error {
public:
    AntisymmetryViolation(std::size_t i, std::size_t j)
        : Error("AntisymmetryViolation",
                "structure constants not antisymmetric at basis pair (" + std::to_string(i) +
                    "," + std::to_string(j) + ")"),
          pair{i, j} {}
    std::array<std::size_t, 2> pair;
};

class JacobiViolation : public Error {
public:
    JacobiViolation(std::array<std::size_t, 3> t, Vector d)
        : Error("JacobiViolation",
                "Jacobi identity fails on basis triple (" + std::to_string(t[0]) + "," +
                    std::to_string(t[1]) + "," + std::to_string(t[2]) +
                    "), defect " + to_string(d)),
          triple(t), defect(std::move(d)) {}
    std::array<std::size_t, 3> triple;
    Vector defect;
};

class RepViolation : public Error {
public:
    RepViolation(std::size_t i, std::size_t j, const std::string& detail)
        : Error("RepViolation",
                "rho([e" + std::to_string(i) + ",e" + std::to_string(j) +
                    "]) != [rho(e" + std::to_string(i) + "),rho(e" + std::to_string(j) +
                    ")]: " + detail),
          pair{i, j} {}
    std::array<std::size_t, 2> pair;
};

class CocycleViolation : public Error {
public:
    CocycleViolation(std::array<std::size_t, 4> t, Vector d)
        : Error("CocycleViolation",
                "d c != 0 on basis 4-tuple (" + std::to_string(t[0]) + "," +
                    std::to_string(t[1]) + "," + std::to_string(t[2]) + "," +
                    std::to_string(t[3]) + "), defect " + to_string(d)),
          tuple(t), defect(std::move(d)) {}
    std::array<std::size_t, 4> tuple;
    Vector defect;
};

class NotClosed : public Error {
public:
    explicit NotClosed(const std::string& defect)
        : Error("NotClosed", "input is not closed; defect " + defect) {}
};

class FormNotInvariant : public Error {
public:
    explicit FormNotInvariant(const std::string& detail) : Error("FormNotInvariant", detail) {}
};

class NotInAnnihilator : public Error {
public:
    explicit NotInAnnihilator(const std::string& detail) : Error("NotInAnnihilator", detail) {}
};

class PreconditionFailed : public Error {
public:
    explicit PreconditionFailed(const std::string& detail)
        : Error("PreconditionFailed", detail) {}
};

class StarViolation : public Error {
public:
    explicit StarViolation(const std::string& detail) : Error("StarViolation", detail) {}
};

class XiZero : public Error {
public:
    XiZero()
        : Error("XiZero",
                "the h-component of the solution vanishes; no quotient onto R[1]+g exists") {}
};

class NotHamiltonian : public Error {
public:
    NotHamiltonian(std::size_t generator, const std::string& defect)
        : Error("NotHamiltonian", "generator " + std::to_string(generator) +
                                      ": d(i_v omega) != 0, defect " + defect),
          generator_index(generator) {}
    std::size_t generator_index;
};

class NotMorphism : public Error {
public:
    NotMorphism(std::size_t i, std::size_t j, const std::string& defect)
        : Error("NotMorphism", "[v" + std::to_string(i) + ",v" + std::to_string(j) +
                                   "] != v([e" + std::to_string(i) + ",e" +
                                   std::to_string(j) + "]), defect " + defect),
          pair{i, j} {}
    std::array<std::size_t, 2> pair;
};

class DegreeTooLow : public Error {
public:
    explicit DegreeTooLow(const std::string& detail) : Error("DegreeTooLow", detail) {}
};

class DegreeMismatch : public Error {
public:
    explicit DegreeMismatch(const std::string& detail) : Error("DegreeMismatch", detail) {}
};

class Degenerate : public Error {
public:
    explicit Degenerate(const std::string& detail) : Error("Degenerate", detail) {}
};

class NotClosedDifference : public Error {
public:
    explicit NotClosedDifference(const std::string& detail)
        : Error("NotClosedDifference", detail) {}
};

class OutOfGeometricScope : public Error {
public:
    explicit OutOfGeometricScope(const std::string& detail)
        : Error("OutOfGeometricScope", detail) {}
};

/// A result that should be impossible if the library is correct (e.g. two decision routes
/// disagreeing). Mapped to exit code 2 by the CLI.
class InternalInvariantBreach : public Error {
public:
    explicit InternalInvariantBreach(const std::string& detail)
        : Error("InternalInvariantBreach", detail) {}
};

}  // namespace lie2mm
