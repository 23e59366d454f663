#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "normalis/double_normal.hpp"
#include "normalis/geo_graph.hpp"
#include "normalis/point_set.hpp"

namespace normalis {

enum class Theorem { T1, T1Strict, T2, T3, Gabriel154 };

const char* to_string(Theorem t);
std::optional<Theorem> theorem_from_string(const std::string& s);

/// Exact rational value, reduced, positive denominator.
struct Rational {
    long long num = 0;
    long long den = 1;
    Rational() = default;
    Rational(long long n, long long d);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

inline bool leq(long long lhs, const Rational& r) { return lhs * r.den <= r.num; }
inline bool eq(long long lhs, const Rational& r) { return lhs * r.den == r.num; }

/// Exact bound value of a theorem at n. Out-of-range n still evaluates;
/// check in_stated_range separately.
Rational bound_formula(Theorem t, int n);
bool in_stated_range(Theorem t, int n);

/// Equality-characterization predicates, evaluated only when the observed
/// count meets the bound exactly.
struct Characterization {
    bool applicable = false;
    bool holds = false;
    std::vector<std::string> details;
};

struct BoundReport {
    Theorem theorem = Theorem::T1;
    int n = 0;
    Rational bound;
    int observed = 0;
    bool in_range = true;
    bool equality = false;
    Characterization characterization;
    bool pass = false;
    std::vector<Vec3> witness;  // offending configuration on failure
    std::string summary() const;
};

BoundReport check_bound(const PointSet& V, Theorem t);

/// Deliberately naive double-normal enumeration used as ground truth. It
/// shares no code with the production path: raw coordinate arithmetic,
/// no predicates, no hull shortcuts.
GeoGraph oracle_double_normals(const PointSet& V, NormalMode mode);

/// Predicates behind the equality clauses.
bool concyclic_centrally_symmetric(const PointSet& V);
struct HullFaceShape {
    bool all_rect_or_acute_triangle = false;
    bool three_rectangles_per_vertex = false;
    int rectangles = 0;
    int triangles = 0;
};
HullFaceShape hull_face_shape(const PointSet& V);

/// Simulated annealing over point perturbations. The energy is the sum
/// of the bound-many smallest slab violations, so sets attaining the
/// theorem bound are the global minima; the incumbent is periodically
/// squeezed onto an exact double-normal structure (basin hopping) by
/// driving those violations to zero. Accepted states are bound-checked
/// at the strict tolerance and violations abort with a witness.
struct SearchParams {
    Space space = Space::Plane;
    int n = 8;
    int budget = 20000;
    std::uint64_t seed = 1;
    double t_start = 0.1;   // initial temperature
    double t_end = 1e-6;    // final temperature (geometric cooling)
    double sigma0 = 0.5;    // proposal step scale at t_start
    Tolerance tol;
};

struct SearchState {
    SearchParams params;
    PointSet best;
    int best_count = 0;       // strict-tolerance double-normal count of `best`
    double best_score = 0.0;  // lowest annealing energy reached before polishing
    int accepted = 0;
    bool bound_violation = false;
    std::string violation_note;
    explicit SearchState(PointSet b) : best(std::move(b)) {}
};

SearchState random_search(const SearchParams& params);

/// The full acceptance battery; prints one line per criterion and returns
/// true if all pass.
bool run_acceptance_suite(std::ostream& out);

}  // namespace normalis
