#include "normalis/point_set.hpp"

#include <cmath>
#include <sstream>

namespace normalis {

double duplicate_tolerance(const Vec3& a, const Vec3& b, const Tolerance& tol) {
    return tol.boundary_eps * std::max({1.0, a.norm(), b.norm()});
}

PointSet::PointSet(Space space, std::vector<Vec3> points, Tolerance tol)
    : space_(space), points_(std::move(points)), tol_(tol) {
    if (!tol_.valid()) throw Error(ErrorCode::BadParameter, "invalid tolerance");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        Vec3& p = points_[i];
        if (!p.allFinite()) throw Error(ErrorCode::BadParameter, "non-finite coordinate");
        if (space_ == Space::Plane && p.z() != 0.0)
            throw Error(ErrorCode::WrongSpace, "planar point with nonzero z");
        if (space_ == Space::Sphere) {
            const double n = p.norm();
            if (std::abs(n - 1.0) > tol_.unit_norm) {
                std::ostringstream os;
                os << "point " << i << " has norm " << n;
                throw Error(ErrorCode::NotUnitNorm, os.str());
            }
            // Renormalize only when measurably off so that rereading an
            // already-unit point reproduces it bit for bit.
            if (std::abs(n - 1.0) > 1e-14) p /= n;
        }
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if ((points_[i] - points_[j]).norm() <=
                duplicate_tolerance(points_[i], points_[j], tol_)) {
                std::ostringstream os;
                os << "points " << i << " and " << j << " coincide";
                throw Error(ErrorCode::DuplicatePoint, os.str());
            }
}

PointSet PointSet::plane(const std::vector<Vec2>& points, Tolerance tol) {
    std::vector<Vec3> lifted;
    lifted.reserve(points.size());
    for (const Vec2& p : points) lifted.emplace_back(p.x(), p.y(), 0.0);
    return PointSet(Space::Plane, std::move(lifted), tol);
}

std::optional<int> PointSet::antipode_index(int i) const {
    const Vec3 target = -points_[i];
    for (int j = 0; j < size(); ++j)
        if ((points_[j] - target).norm() <= duplicate_tolerance(points_[j], target, tol_))
            return j;
    return std::nullopt;
}

bool PointSet::closed_under_antipody() const {
    for (int i = 0; i < size(); ++i)
        if (!antipode_index(i)) return false;
    return true;
}

PointSet PointSet::transformed(const Eigen::Matrix3d& rotation, double scale,
                               const Vec3& translation) const {
    std::vector<Vec3> out;
    out.reserve(points_.size());
    for (const Vec3& p : points_) out.push_back(rotation * p * scale + translation);
    return PointSet(space_, std::move(out), tol_);
}

}  // namespace normalis
