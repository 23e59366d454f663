#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <optional>
#include <vector>

#include "normalis/types.hpp"

namespace normalis {

using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

/// Labeled finite point set in the plane, in 3-space, or on the unit
/// sphere. Planar points are stored with z = 0. Index = vertex id.
/// Ingestion rejects duplicates and, for sphere sets, renormalizes points
/// that are within tol.unit_norm of unit length (rejecting the rest).
class PointSet {
public:
    PointSet(Space space, std::vector<Vec3> points, Tolerance tol = Tolerance{});

    /// Planar convenience constructor.
    static PointSet plane(const std::vector<Vec2>& points, Tolerance tol = Tolerance{});

    Space space() const { return space_; }
    const Tolerance& tol() const { return tol_; }
    int size() const { return static_cast<int>(points_.size()); }
    const Vec3& operator[](int i) const { return points_[i]; }
    const std::vector<Vec3>& points() const { return points_; }

    Vec2 xy(int i) const { return points_[i].head<2>(); }

    /// Index of the point matching -points_[i] within the duplicate
    /// tolerance, if the set contains it.
    std::optional<int> antipode_index(int i) const;

    /// True if the set equals its antipodal image pointwise.
    bool closed_under_antipody() const;

    /// Image under x -> R*x*s + t. The caller is responsible for keeping
    /// sphere sets on the sphere (s = 1, t = 0).
    PointSet transformed(const Eigen::Matrix3d& rotation, double scale = 1.0,
                         const Vec3& translation = Vec3::Zero()) const;

private:
    Space space_;
    std::vector<Vec3> points_;
    Tolerance tol_;
};

/// Distance below which two points of one set are considered duplicates.
double duplicate_tolerance(const Vec3& a, const Vec3& b, const Tolerance& tol);

}  // namespace normalis
