#pragma once

#include <stdexcept>
#include <string>

namespace normalis {

/// Which ambient space a point set lives in. Sphere points are unit
/// vectors in R^3; Plane points carry z = 0 internally.
enum class Space { Plane, Space3, Sphere };

inline const char* to_string(Space s) {
    switch (s) {
        case Space::Plane: return "plane";
        case Space::Space3: return "space3";
        case Space::Sphere: return "sphere";
    }
    return "?";
}

/// Classification tolerances. All classification bands are relative to the
/// natural scale of the quantity being classified (chord length, plane
/// offset), so results are invariant under rigid motions and scaling.
struct Tolerance {
    double boundary_eps = 1e-9;   // on-boundary band for slab/cap/segment tests
    double unit_norm = 1e-6;      // allowed deviation from |x| = 1 at ingestion
    double concyclic_eps = 1e-7;  // equal-length / shared-midpoint / coplanarity tests

    bool valid() const {
        return boundary_eps >= 1e3 * 2.220446049250313e-16 && unit_norm > 0.0 &&
               concyclic_eps > 0.0;
    }
};

enum class ErrorCode {
    DegeneratePair,
    AntipodalPair,
    CollinearArcs,
    TooFewPoints,
    WrongSpace,
    DuplicatePoint,
    NotUnitNorm,
    DegenerateHull,
    NotAnEquivalence,
    ReductionInvariantViolated,
    EmbeddingError,
    LiftMismatch,
    BadParameter,
    DuplicateAngle,
    InfeasibleSideLength,
    NoTriangularFace,
    ParseError,
    IoError,
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::DegeneratePair: return "DegeneratePair";
        case ErrorCode::AntipodalPair: return "AntipodalPair";
        case ErrorCode::CollinearArcs: return "CollinearArcs";
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::WrongSpace: return "WrongSpace";
        case ErrorCode::DuplicatePoint: return "DuplicatePoint";
        case ErrorCode::NotUnitNorm: return "NotUnitNorm";
        case ErrorCode::DegenerateHull: return "DegenerateHull";
        case ErrorCode::NotAnEquivalence: return "NotAnEquivalence";
        case ErrorCode::ReductionInvariantViolated: return "ReductionInvariantViolated";
        case ErrorCode::EmbeddingError: return "EmbeddingError";
        case ErrorCode::LiftMismatch: return "LiftMismatch";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::DuplicateAngle: return "DuplicateAngle";
        case ErrorCode::InfeasibleSideLength: return "InfeasibleSideLength";
        case ErrorCode::NoTriangularFace: return "NoTriangularFace";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace normalis
