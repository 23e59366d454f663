#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <optional>

#include "normalis/types.hpp"

namespace normalis {

/// Position of a query point relative to the closed slab between the two
/// hyperplanes through p and q perpendicular to pq.
enum class SlabRegion { Interior, OnBoundary, Outside };

/// Position of a sphere point relative to the minor spherical cap whose
/// boundary circle has the chord ab as a diameter.
enum class CapRegion { InsideOpen, OnBoundary, Outside };

/// Classify x against the closed slab of the pair (p, q). The on-boundary
/// band is boundary_eps * |q - p| on signed projections, so the result is
/// invariant under rigid motions and uniform scaling.
template <typename DerivedP, typename DerivedQ, typename DerivedX>
SlabRegion slab_classify(const Eigen::MatrixBase<DerivedP>& p,
                         const Eigen::MatrixBase<DerivedQ>& q,
                         const Eigen::MatrixBase<DerivedX>& x,
                         const Tolerance& tol = Tolerance{}) {
    using Scalar = typename DerivedP::Scalar;
    const auto d = (q - p).eval();
    const Scalar len2 = d.squaredNorm();
    const Scalar scale = std::max(Scalar(1), std::max(p.norm(), q.norm()));
    if (len2 <= Scalar(tol.boundary_eps) * Scalar(tol.boundary_eps) * scale * scale)
        throw Error(ErrorCode::DegeneratePair, "slab_classify: p and q coincide");
    // t/len2 is the projection parameter: 0 at H_p, 1 at H_q.
    const Scalar t = d.dot((x - p).eval());
    const Scalar band = Scalar(tol.boundary_eps) * len2;
    if (std::abs(t) <= band || std::abs(t - len2) <= band) return SlabRegion::OnBoundary;
    if (t > Scalar(0) && t < len2) return SlabRegion::Interior;
    return SlabRegion::Outside;
}

/// Classify a unit vector x against the minor cap on the chord ab.
/// Uses the sign of x.(a+b) - (1 + a.b), which for unit vectors equals
/// -(x-a).(x-b): positive inside the open cap, zero on the boundary circle.
template <typename DerivedA, typename DerivedB, typename DerivedX>
CapRegion minor_cap_classify(const Eigen::MatrixBase<DerivedA>& a,
                             const Eigen::MatrixBase<DerivedB>& b,
                             const Eigen::MatrixBase<DerivedX>& x,
                             const Tolerance& tol = Tolerance{}) {
    using Scalar = typename DerivedA::Scalar;
    const Scalar eps = Scalar(tol.boundary_eps);
    const Scalar sum_norm = (a + b).norm();
    if (sum_norm <= eps)
        throw Error(ErrorCode::AntipodalPair, "minor_cap_classify: a and b are antipodal");
    if ((a - b).norm() <= eps)
        throw Error(ErrorCode::DegeneratePair, "minor_cap_classify: a and b coincide");
    const Scalar v = x.dot((a + b).eval()) - (Scalar(1) + a.dot(b));
    const Scalar band = eps * std::max(Scalar(1), sum_norm);
    if (std::abs(v) <= band) return CapRegion::OnBoundary;
    return v > Scalar(0) ? CapRegion::InsideOpen : CapRegion::Outside;
}

namespace detail {

/// True if s (a unit vector on the great circle through a and b) lies
/// strictly inside the minor arc from a to b. n must be a x b.
template <typename Scalar>
bool inside_minor_arc(const Eigen::Matrix<Scalar, 3, 1>& a,
                      const Eigen::Matrix<Scalar, 3, 1>& b,
                      const Eigen::Matrix<Scalar, 3, 1>& n,
                      const Eigen::Matrix<Scalar, 3, 1>& s, Scalar eps) {
    // s = (alpha a + beta b)/|.| with alpha, beta > 0 iff both triple
    // products are positive.
    const Scalar margin = eps * n.squaredNorm();
    return a.cross(s).dot(n) > margin && s.cross(b).dot(n) > margin;
}

}  // namespace detail

/// Interior intersection point of the minor arcs ab and cd, if any.
/// Meeting at a shared endpoint does not count. Throws CollinearArcs when
/// the arcs lie on one great circle and overlap in more than a point.
template <typename Scalar>
std::optional<Eigen::Matrix<Scalar, 3, 1>> arc_cross(
    const Eigen::Matrix<Scalar, 3, 1>& a, const Eigen::Matrix<Scalar, 3, 1>& b,
    const Eigen::Matrix<Scalar, 3, 1>& c, const Eigen::Matrix<Scalar, 3, 1>& d,
    const Tolerance& tol = Tolerance{}) {
    using Vec = Eigen::Matrix<Scalar, 3, 1>;
    const Scalar eps = Scalar(tol.boundary_eps);
    if ((a + b).norm() <= eps || (c + d).norm() <= eps)
        throw Error(ErrorCode::AntipodalPair, "arc_cross: arc endpoints are antipodal");
    const Vec n1 = a.cross(b);
    const Vec n2 = c.cross(d);
    const Vec axis = n1.cross(n2);
    const Scalar axis_norm = axis.norm();
    if (axis_norm <= eps * n1.norm() * n2.norm()) {
        // Same great circle. Overlap in more than a point is an error;
        // disjoint or endpoint-touching arcs simply do not cross.
        int interior_hits = 0;
        if (detail::inside_minor_arc(a, b, n1, c.normalized().eval(), eps)) ++interior_hits;
        if (detail::inside_minor_arc(a, b, n1, d.normalized().eval(), eps)) ++interior_hits;
        if (detail::inside_minor_arc(c, d, n2, a.normalized().eval(), eps)) ++interior_hits;
        if (detail::inside_minor_arc(c, d, n2, b.normalized().eval(), eps)) ++interior_hits;
        if (interior_hits > 0)
            throw Error(ErrorCode::CollinearArcs, "arc_cross: overlapping arcs on one great circle");
        return std::nullopt;
    }
    for (const Vec& s : {Vec(axis / axis_norm), Vec(-axis / axis_norm)}) {
        if (detail::inside_minor_arc(a, b, n1, s, eps) &&
            detail::inside_minor_arc(c, d, n2, s, eps))
            return s;
    }
    return std::nullopt;
}

/// Spherical (angular) length of the minor arc ab.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar arc_length(const Eigen::MatrixBase<DerivedA>& a,
                                     const Eigen::MatrixBase<DerivedB>& b) {
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

/// Midpoint of the minor arc ab (endpoints must not be antipodal).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, 3, 1> arc_midpoint(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    return (a + b).normalized();
}

}  // namespace normalis
