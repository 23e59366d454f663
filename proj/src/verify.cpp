#include "normalis/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "normalis/convex_hull.hpp"
#include "normalis/gabriel.hpp"
#include "normalis/lift.hpp"

namespace normalis {

const char* to_string(Theorem t) {
    switch (t) {
        case Theorem::T1: return "t1";
        case Theorem::T1Strict: return "t1s";
        case Theorem::T2: return "t2";
        case Theorem::T3: return "t3";
        case Theorem::Gabriel154: return "gabriel";
    }
    return "?";
}

std::optional<Theorem> theorem_from_string(const std::string& s) {
    if (s == "t1") return Theorem::T1;
    if (s == "t1s") return Theorem::T1Strict;
    if (s == "t2") return Theorem::T2;
    if (s == "t3") return Theorem::T3;
    if (s == "gabriel") return Theorem::Gabriel154;
    return std::nullopt;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw Error(ErrorCode::BadParameter, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

Rational bound_formula(Theorem t, int n) {
    switch (t) {
        case Theorem::T1: return Rational(3LL * (n / 2), 1);
        case Theorem::T1Strict: return Rational(n, 1);
        case Theorem::T2: return Rational(2LL * n - 2, 1);
        case Theorem::T3: return Rational(17LL * n - 24, 4);
        case Theorem::Gabriel154: return Rational(15LL * n - 24, 4);
    }
    throw Error(ErrorCode::BadParameter, "unknown theorem");
}

bool in_stated_range(Theorem t, int n) {
    switch (t) {
        case Theorem::T1:
        case Theorem::T1Strict: return n >= 3;
        case Theorem::T2: return n >= 4;
        case Theorem::T3: return n >= 8;
        case Theorem::Gabriel154: return n >= 2;
    }
    return false;
}

bool concyclic_centrally_symmetric(const PointSet& V) {
    const int n = V.size();
    Vec3 c = Vec3::Zero();
    for (int i = 0; i < n; ++i) c += V[i];
    c /= static_cast<double>(n);
    double r = 0.0;
    for (int i = 0; i < n; ++i) r += (V[i] - c).norm();
    r /= static_cast<double>(n);
    if (r <= 0.0) return false;
    const double eps = V.tol().concyclic_eps * std::max(1.0, r);
    for (int i = 0; i < n; ++i)
        if (std::abs((V[i] - c).norm() - r) > eps) return false;
    for (int i = 0; i < n; ++i) {
        const Vec3 mirror = 2.0 * c - V[i];
        bool found = false;
        for (int j = 0; j < n && !found; ++j)
            if ((V[j] - mirror).norm() <= eps) found = true;
        if (!found) return false;
    }
    return true;
}

HullFaceShape hull_face_shape(const PointSet& V) {
    HullFaceShape shape;
    const Hull3 hull = convex_hull_3d(V.points(), V.tol());
    const double ceps = V.tol().concyclic_eps;
    shape.all_rect_or_acute_triangle = true;
    std::vector<int> rect_count(V.size(), 0);
    for (const HullFace& f : hull.faces) {
        if (f.vertices.size() == 4) {
            const Vec3 &a = V[f.vertices[0]], &b = V[f.vertices[1]], &c = V[f.vertices[2]],
                       &d = V[f.vertices[3]];
            const bool rect = ((a + c) - (b + d)).norm() <= ceps * 4.0 &&
                              std::abs((c - a).norm() - (d - b).norm()) <= ceps * 4.0;
            if (!rect) shape.all_rect_or_acute_triangle = false;
            ++shape.rectangles;
            for (int v : f.vertices) ++rect_count[v];
        } else if (f.vertices.size() == 3) {
            ++shape.triangles;
            for (int i = 0; i < 3; ++i) {
                const Vec3& v = V[f.vertices[i]];
                const Vec3& u = V[f.vertices[(i + 1) % 3]];
                const Vec3& w = V[f.vertices[(i + 2) % 3]];
                if ((u - v).dot(w - v) <= -ceps * (u - v).norm() * (w - v).norm())
                    shape.all_rect_or_acute_triangle = false;
            }
        } else {
            shape.all_rect_or_acute_triangle = false;
        }
    }
    shape.three_rectangles_per_vertex = true;
    for (int v : hull.vertices)
        if (rect_count[v] != 3) shape.three_rectangles_per_vertex = false;
    if (hull.vertices.size() != static_cast<std::size_t>(V.size()))
        shape.three_rectangles_per_vertex = false;
    return shape;
}

namespace {

int observed_count(const PointSet& V, Theorem t) {
    switch (t) {
        case Theorem::T1: return double_normal_graph(V, NormalMode::Weak).edge_count();
        case Theorem::T1Strict:
            return double_normal_graph(V, NormalMode::Strict).edge_count();
        case Theorem::T2: return sphere_double_normals(V, NormalMode::Strict).count;
        case Theorem::T3: return sphere_double_normals(V, NormalMode::Weak).count;
        case Theorem::Gabriel154: return weak_gabriel(V).edge_count();
    }
    throw Error(ErrorCode::BadParameter, "unknown theorem");
}

}  // namespace

BoundReport check_bound(const PointSet& V, Theorem t) {
    const bool planar_theorem = (t == Theorem::T1 || t == Theorem::T1Strict);
    if (planar_theorem && V.space() != Space::Plane)
        throw Error(ErrorCode::WrongSpace, "theorem applies to planar sets");
    if (!planar_theorem && V.space() != Space::Sphere)
        throw Error(ErrorCode::WrongSpace, "theorem applies to sphere sets");

    BoundReport rep;
    rep.theorem = t;
    rep.n = V.size();
    rep.bound = bound_formula(t, V.size());
    rep.in_range = in_stated_range(t, V.size());
    rep.observed = observed_count(V, t);
    rep.pass = leq(rep.observed, rep.bound);
    rep.equality = eq(rep.observed, rep.bound);
    if (!rep.pass) rep.witness = V.points();

    if (rep.equality) {
        if (t == Theorem::T1 && rep.n % 2 == 0) {
            rep.characterization.applicable = true;
            rep.characterization.holds = concyclic_centrally_symmetric(V);
            rep.characterization.details.push_back(
                rep.characterization.holds ? "concyclic and centrally symmetric"
                                           : "not concyclic-symmetric");
        } else if (t == Theorem::T3) {
            rep.characterization.applicable = true;
            const bool antipodal = V.closed_under_antipody();
            const HullFaceShape shape = hull_face_shape(V);
            rep.characterization.holds = antipodal && shape.all_rect_or_acute_triangle &&
                                         shape.three_rectangles_per_vertex;
            std::ostringstream os;
            os << "V=V': " << (antipodal ? "yes" : "no") << ", rectangles: "
               << shape.rectangles << ", triangles: " << shape.triangles
               << ", 3-rect-per-vertex: "
               << (shape.three_rectangles_per_vertex ? "yes" : "no");
            rep.characterization.details.push_back(os.str());
        }
    }
    return rep;
}

std::string BoundReport::summary() const {
    std::ostringstream os;
    os << to_string(theorem) << " n=" << n << " observed=" << observed
       << " bound=" << bound.str() << " " << (pass ? "PASS" : "FAIL");
    if (!in_range) os << " (outside stated range)";
    if (equality) os << " equality";
    if (characterization.applicable)
        os << " characterization=" << (characterization.holds ? "true" : "false");
    return os.str();
}

GeoGraph oracle_double_normals(const PointSet& V, NormalMode mode) {
    if (V.size() < 2) throw Error(ErrorCode::TooFewPoints, "need at least 2 points");
    const int n = V.size();
    const double eps = V.tol().boundary_eps;
    GeoGraph G(n, V.space());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = V[j].x() - V[i].x();
            const double dy = V[j].y() - V[i].y();
            const double dz = V[j].z() - V[i].z();
            const double len2 = dx * dx + dy * dy + dz * dz;
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) {
                if (x == i || x == j) continue;
                const double t = dx * (V[x].x() - V[i].x()) + dy * (V[x].y() - V[i].y()) +
                                 dz * (V[x].z() - V[i].z());
                if (mode == NormalMode::Weak) {
                    if (t < -eps * len2 || t > (1.0 + eps) * len2) ok = false;
                } else {
                    if (t <= eps * len2 || t >= (1.0 - eps) * len2) ok = false;
                }
            }
            if (ok) G.add_edge(i, j);
        }
    }
    return G;
}

// ---------------------------------------------------------------------------
// Simulated annealing search.

namespace {

/// Worst relative slab excess of the pair (i, j): <= 0 when every other
/// point lies in the closed slab, measured in units of the projection
/// parameter.
double pair_violation(const std::vector<Vec3>& pts, int i, int j) {
    const Vec3 d = pts[j] - pts[i];
    const double len2 = d.squaredNorm();
    double worst = -1.0;
    for (std::size_t x = 0; x < pts.size(); ++x) {
        if (static_cast<int>(x) == i || static_cast<int>(x) == j) continue;
        const double u = d.dot(pts[x] - pts[i]) / len2;
        worst = std::max(worst, std::max(-u, u - 1.0));
    }
    return worst;
}

/// Minimum allowed pairwise distance, relative to the configuration's
/// RMS radius. Point sets are sets: letting points collapse fabricates
/// double-normal pairs that only exist inside the tolerance band.
double separation_floor(const std::vector<Vec3>& pts) {
    Vec3 centroid = Vec3::Zero();
    for (const Vec3& p : pts) centroid += p;
    centroid /= static_cast<double>(pts.size());
    double rms = 0.0;
    for (const Vec3& p : pts) rms += (p - centroid).squaredNorm();
    rms = std::sqrt(rms / static_cast<double>(pts.size()));
    return 0.15 * std::max(rms, 1e-12);
}

/// Quotient out translation and scale for planar states (the counts are
/// invariant); keeps the annealing from drifting through the gauge.
void gauge_normalize(std::vector<Vec3>& pts, Space space) {
    if (space != Space::Plane) return;
    Vec3 centroid = Vec3::Zero();
    for (const Vec3& p : pts) centroid += p;
    centroid /= static_cast<double>(pts.size());
    double rms = 0.0;
    for (const Vec3& p : pts) rms += (p - centroid).squaredNorm();
    rms = std::sqrt(rms / static_cast<double>(pts.size()));
    if (rms <= 1e-12) return;
    for (Vec3& p : pts) p = (p - centroid) / rms;
}

/// Quadratic barrier below the separation floor, zero otherwise.
double separation_penalty(const std::vector<Vec3>& pts, double floor_dist) {
    double sum = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double gap = floor_dist - (pts[i] - pts[j]).norm();
            if (gap > 0.0) sum += (gap / floor_dist) * (gap / floor_dist);
        }
    return sum;
}

/// Annealing energy: the sum of the k smallest positive slab violations
/// plus a separation barrier. Zero exactly when some k pairs of a
/// well-separated set are simultaneously double-normal, so sets attaining
/// the bound are the global minima; cluster collapses, whose phantom
/// pairs exist only inside the tolerance band, pay the barrier.
double best_k_energy(const std::vector<Vec3>& pts, long long k) {
    std::vector<double> vs;
    const int n = static_cast<int>(pts.size());
    vs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            vs.push_back(std::max(pair_violation(pts, i, j), 0.0));
    const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), vs.size());
    std::nth_element(vs.begin(), vs.begin() + kk, vs.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < kk; ++i) sum += vs[i];
    return sum + 10.0 * separation_penalty(pts, separation_floor(pts));
}

int band_count(const std::vector<Vec3>& pts, double band) {
    int count = 0;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pair_violation(pts, i, j) <= band) ++count;
    return count;
}

/// Levenberg-Marquardt on the slab-excess residuals. Quadratic
/// convergence near zero-residual solutions, which is what plain
/// gradient descent lacks on these ill-conditioned systems.
bool polish(std::vector<Vec3>& pts, const std::vector<Edge>& pairs, Space space,
            int max_iter) {
    const double floor_dist = 0.15 * separation_floor(pts);
    const int n = static_cast<int>(pts.size());
    const int vars = 2 * n;  // plane coordinates, or the tangent plane on the sphere

    struct Term {
        double r;
        int cols[3];
        Vec3 jac[3];
        int used;
    };
    auto assemble = [&](const std::vector<Vec3>& v, std::vector<Term>& terms) {
        terms.clear();
        double penalty = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Vec3 diff = v[i] - v[j];
                const double dist = diff.norm();
                const double gap = floor_dist - dist;
                if (gap <= 0.0 || dist <= 0.0) continue;
                Term t;
                t.r = gap / floor_dist;
                t.used = 2;
                t.cols[0] = i;
                t.jac[0] = -diff / (dist * floor_dist);
                t.cols[1] = j;
                t.jac[1] = diff / (dist * floor_dist);
                penalty += t.r * t.r;
                terms.push_back(t);
            }
        for (const Edge& e : pairs) {
            const int i = e.first, j = e.second;
            const Vec3 d = v[j] - v[i];
            const double len2 = d.squaredNorm();
            for (int x = 0; x < n; ++x) {
                if (x == i || x == j) continue;
                const Vec3 rel = v[x] - v[i];
                const double u = d.dot(rel) / len2;
                double sign;
                double excess;
                if (u < 0.0) {
                    excess = -u;
                    sign = -1.0;
                } else if (u > 1.0) {
                    excess = u - 1.0;
                    sign = 1.0;
                } else {
                    continue;
                }
                Term t;
                t.r = excess;
                t.used = 3;
                t.cols[0] = x;
                t.jac[0] = sign * d / len2;
                t.cols[1] = i;
                t.jac[1] = sign * (-d - rel + 2.0 * u * d) / len2;
                t.cols[2] = j;
                t.jac[2] = sign * (rel - 2.0 * u * d) / len2;
                penalty += excess * excess;
                terms.push_back(t);
            }
        }
        return penalty;
    };

    std::vector<Term> terms;
    double penalty = assemble(pts, terms);
    double lambda = 1e-4;
    for (int it = 0; it < max_iter && penalty > 1e-26; ++it) {
        // Per-point frame: cartesian axes in the plane, the tangent
        // basis on the sphere (manifold Levenberg-Marquardt).
        std::vector<std::array<Vec3, 2>> frame(n);
        for (int i = 0; i < n; ++i) {
            if (space == Space::Sphere) {
                frame[i][0] = pts[i].unitOrthogonal();
                frame[i][1] = pts[i].cross(frame[i][0]);
            } else {
                frame[i][0] = Vec3::UnitX();
                frame[i][1] = Vec3::UnitY();
            }
        }
        Eigen::MatrixXd jtj = Eigen::MatrixXd::Zero(vars, vars);
        Eigen::VectorXd jtr = Eigen::VectorXd::Zero(vars);
        for (const Term& t : terms) {
            for (int a = 0; a < t.used; ++a) {
                for (int da = 0; da < 2; ++da) {
                    const double ja = t.jac[a].dot(frame[t.cols[a]][da]);
                    const int col_a = t.cols[a] * 2 + da;
                    jtr[col_a] += ja * t.r;
                    for (int b = 0; b < t.used; ++b)
                        for (int db = 0; db < 2; ++db)
                            jtj(col_a, t.cols[b] * 2 + db) +=
                                ja * t.jac[b].dot(frame[t.cols[b]][db]);
                }
            }
        }
        bool moved = false;
        for (int damp = 0; damp < 25; ++damp) {
            Eigen::MatrixXd damped = jtj;
            damped.diagonal().array() += lambda;
            const Eigen::VectorXd delta = damped.ldlt().solve(-jtr);
            std::vector<Vec3> trial = pts;
            for (int i = 0; i < n; ++i) {
                trial[i] += delta[i * 2] * frame[i][0] + delta[i * 2 + 1] * frame[i][1];
                if (space == Space::Sphere) trial[i].normalize();
            }
            std::vector<Term> trial_terms;
            const double trial_penalty = assemble(trial, trial_terms);
            if (trial_penalty < penalty) {
                pts = std::move(trial);
                terms = std::move(trial_terms);
                penalty = trial_penalty;
                lambda = std::max(lambda * 0.3, 1e-12);
                moved = true;
                break;
            }
            lambda *= 5.0;
        }
        if (!moved) break;
    }
    return penalty <= 1e-26;
}

/// Worst violating pair of a pair set (for greedy swap-out on failure).
std::size_t worst_pair_index(const std::vector<Vec3>& pts, const std::vector<Edge>& pairs) {
    std::size_t worst = 0;
    double worst_v = -1.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double v = pair_violation(pts, pairs[i].first, pairs[i].second);
        if (v > worst_v) {
            worst_v = v;
            worst = i;
        }
    }
    return worst;
}

/// Try to realize a maximum set of exact double-normal pairs near the
/// given state: polish the k lowest-violation pairs for several k,
/// greedily swapping out stubborn pairs. Returns the best strict count
/// achieved and its configuration.
std::pair<std::vector<Vec3>, int> exactify(const std::vector<Vec3>& base, Space space,
                                           long long k_target, double strict_band) {
    const int n = static_cast<int>(base.size());
    std::vector<std::pair<double, Edge>> ranked;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            ranked.push_back({pair_violation(base, i, j), make_edge(i, j)});
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Vec3> best_state = base;
    int best_count = band_count(base, strict_band);

    std::vector<std::size_t> sizes;
    if (k_target > 0 && k_target <= static_cast<long long>(ranked.size()))
        sizes.push_back(static_cast<std::size_t>(k_target));
    for (double cutoff : {0.05, 0.01}) {
        std::size_t c = 0;
        while (c < ranked.size() && ranked[c].first <= cutoff) ++c;
        if (c > 0) sizes.push_back(c);
    }

    for (std::size_t k : sizes) {
        std::vector<Edge> pairs;
        pairs.reserve(k);
        for (std::size_t i = 0; i < k; ++i) pairs.push_back(ranked[i].second);
        std::size_t next_rank = k;
        for (int attempt = 0; attempt < 6; ++attempt) {
            std::vector<Vec3> polished = base;
            const bool converged = polish(polished, pairs, space, 60);
            if (converged) {
                const int count = band_count(polished, strict_band);
                if (count > best_count) {
                    best_count = count;
                    best_state = std::move(polished);
                }
                break;
            }
            if (next_rank >= ranked.size()) break;
            pairs[worst_pair_index(polished, pairs)] = ranked[next_rank++].second;
        }
        if (best_count >= k_target && k_target > 0) break;
    }

    // Ladder climb: from the best exact structure, re-rank and ask for
    // one more simultaneous pair at a time.
    std::vector<Vec3> cur = best_state;
    for (long long k = best_count + 1; k <= k_target; ++k) {
        std::vector<std::pair<double, Edge>> local;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                local.push_back({pair_violation(cur, i, j), make_edge(i, j)});
        std::sort(local.begin(), local.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Edge> pairs;
        for (long long i = 0; i < k; ++i) pairs.push_back(local[i].second);
        std::size_t next_rank = static_cast<std::size_t>(k);
        bool stepped = false;
        for (int attempt = 0; attempt < 4 && !stepped; ++attempt) {
            std::vector<Vec3> polished = cur;
            if (polish(polished, pairs, space, 60)) {
                cur = std::move(polished);
                stepped = true;
                const int count = band_count(cur, strict_band);
                if (count > best_count) {
                    best_count = count;
                    best_state = cur;
                }
            } else if (next_rank < local.size()) {
                pairs[worst_pair_index(polished, pairs)] = local[next_rank++].second;
            } else {
                break;
            }
        }
        if (!stepped) break;
    }
    return {best_state, best_count};
}

std::optional<Theorem> bound_theorem_for(Space space, int n) {
    if (space == Space::Plane && n >= 3) return Theorem::T1;
    if (space == Space::Sphere && n >= 8) return Theorem::T3;
    return std::nullopt;  // no weak-count bound is asserted below n = 8 on the sphere
}

}  // namespace

SearchState random_search(const SearchParams& params) {
    if (params.n < 3) throw Error(ErrorCode::BadParameter, "search needs n >= 3");
    if (params.budget < 1) throw Error(ErrorCode::BadParameter, "budget must be >= 1");
    if (params.space == Space::Space3)
        throw Error(ErrorCode::BadParameter, "search supports plane and sphere");

    std::mt19937_64 rng(params.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    auto random_state = [&]() {
        std::vector<Vec3> pts(params.n);
        for (Vec3& p : pts) {
            p = Vec3(gauss(rng), gauss(rng), gauss(rng));
            if (params.space == Space::Plane) p.z() = 0.0;
            if (params.space == Space::Sphere) p.normalize();
        }
        gauge_normalize(pts, params.space);
        return pts;
    };
    std::vector<Vec3> state = random_state();

    // The budget is split into complete annealing phases; stagnation ends
    // a phase early. Each phase cools from t_start to t_end on its own.
    const int phase_length = std::max(2, std::min(params.budget, 5000));
    const double cool =
        std::pow(params.t_end / params.t_start, 1.0 / (phase_length - 1));
    double temperature = params.t_start;
    int phase_iter = 0;

    const double strict_band = params.tol.boundary_eps;
    const std::optional<Theorem> thm = bound_theorem_for(params.space, params.n);
    const long long all_pairs = static_cast<long long>(params.n) * (params.n - 1) / 2;
    long long k_target = all_pairs;
    if (thm) {
        const Rational b = bound_formula(*thm, params.n);
        k_target = std::min(all_pairs, b.num / b.den);
    }

    SearchState result(PointSet(params.space, state, params.tol));
    std::vector<Vec3> best_state = state;
    double best_energy = best_k_energy(state, k_target);
    double energy = best_energy;
    std::vector<Vec3> final_state = state;
    int final_count = band_count(state, strict_band);
    std::vector<Vec3> violation_state;

    auto check_violation = [&](const std::vector<Vec3>& pts) {
        if (!thm || result.bound_violation) return;
        const int strict_n = band_count(pts, strict_band);
        if (!leq(strict_n, bound_formula(*thm, params.n))) {
            result.bound_violation = true;
            violation_state = pts;
            std::ostringstream os;
            os << "bound violation: N=" << strict_n << " exceeds " << to_string(*thm)
               << " bound at n=" << params.n << " (seed " << params.seed << ")";
            result.violation_note = os.str();
        }
    };

    auto valid_state = [&](const std::vector<Vec3>& pts) {
        try {
            PointSet probe(params.space, pts, params.tol);
            return true;
        } catch (const Error&) {
            return false;
        }
    };

    const int hop_interval = std::max(500, params.budget / 8);
    const int stagnation_window = std::max(1000, phase_length / 3);
    int stagnant = 0;
    int restarts = 0;

    auto top_pairs = [&](const std::vector<Vec3>& pts) {
        std::vector<std::pair<double, Edge>> ranked;
        for (int i = 0; i < params.n; ++i)
            for (int j = i + 1; j < params.n; ++j)
                ranked.push_back({pair_violation(pts, i, j), make_edge(i, j)});
        std::sort(ranked.begin(), ranked.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Edge> pairs;
        for (long long i = 0; i < k_target && i < static_cast<long long>(ranked.size()); ++i)
            pairs.push_back(ranked[i].second);
        return pairs;
    };

    for (int it = 0; it < params.budget && !result.bound_violation; ++it) {
        std::vector<Vec3> candidate = state;
        const int pick = static_cast<int>(unif(rng) * params.n) % params.n;
        const double sigma = params.sigma0 * std::pow(temperature / params.t_start, 0.6);
        Vec3 delta(gauss(rng), gauss(rng), gauss(rng));
        if (params.space == Space::Plane) delta.z() = 0.0;
        const double move_kind = unif(rng);
        if (move_kind < 0.15) {
            // Darting move: one damped least-squares step toward making
            // the current best pairs exact.
            polish(candidate, top_pairs(candidate), params.space, 2);
            gauge_normalize(candidate, params.space);
        } else if (move_kind < 0.45 && params.n >= 3) {
            // Mirror move: park the point opposite another through the
            // centre; extremal families are centrally symmetric.
            int other = static_cast<int>(unif(rng) * params.n) % params.n;
            if (other == pick) other = (other + 1) % params.n;
            candidate[pick] = -candidate[other] + 0.2 * sigma * delta;
            if (params.space == Space::Sphere) candidate[pick].normalize();
            gauge_normalize(candidate, params.space);
        } else {
            candidate[pick] += sigma * delta;
            if (params.space == Space::Sphere) candidate[pick].normalize();
            gauge_normalize(candidate, params.space);
        }

        const double trial = best_k_energy(candidate, k_target);
        const bool accept =
            trial <= energy || unif(rng) < std::exp(-(trial - energy) / temperature);
        if (accept) {
            state = std::move(candidate);
            energy = trial;
            ++result.accepted;
            check_violation(state);
            if (trial < best_energy - 1e-12) {
                best_energy = trial;
                best_state = state;
                stagnant = 0;
            } else {
                ++stagnant;
            }
        } else {
            ++stagnant;
        }

        // Basin hopping: periodically squeeze the incumbent onto an exact
        // double-normal structure and continue from it when that helps.
        if ((it + 1) % hop_interval == 0 && final_count < k_target) {
            auto [polished, count] = exactify(best_state, params.space, k_target, strict_band);
            if (count > final_count && valid_state(polished)) {
                final_count = count;
                final_state = polished;
                check_violation(final_state);
                const double polished_energy = best_k_energy(polished, k_target);
                if (polished_energy <= energy) {
                    state = polished;
                    energy = polished_energy;
                }
            }
        }
        // Phase end (schedule exhausted or stagnant): convert what the
        // phase found, then alternately restart fresh and kick the
        // incumbent.
        ++phase_iter;
        if ((phase_iter >= phase_length || stagnant > stagnation_window) &&
            final_count < k_target) {
            auto [polished, count] = exactify(best_state, params.space, k_target, strict_band);
            if (count > final_count && valid_state(polished)) {
                final_count = count;
                final_state = polished;
                check_violation(final_state);
            }
            if (restarts++ % 2 == 0) {
                state = random_state();
            } else {
                state = best_state;
                for (Vec3& p : state) {
                    Vec3 kick(gauss(rng), gauss(rng), gauss(rng));
                    if (params.space == Space::Plane) kick.z() = 0.0;
                    p += 0.3 * kick;
                    if (params.space == Space::Sphere) p.normalize();
                }
                gauge_normalize(state, params.space);
            }
            energy = best_k_energy(state, k_target);
            temperature = params.t_start;
            phase_iter = 0;
            stagnant = 0;
        }
        temperature *= cool;
    }

    if (result.bound_violation) {
        result.params = params;
        result.best = PointSet(params.space, violation_state, params.tol);
        result.best_count = band_count(violation_state, strict_band);
        result.best_score = best_energy;
        return result;
    }

    if (final_count < k_target) {
        auto [polished, count] = exactify(best_state, params.space, k_target, strict_band);
        if (count > final_count && valid_state(polished)) {
            final_count = count;
            final_state = polished;
        }
    }
    check_violation(final_state);

    result.params = params;
    if (valid_state(final_state))
        result.best = PointSet(params.space, final_state, params.tol);
    result.best_count = final_count;
    result.best_score = best_energy;
    return result;
}

}  // namespace normalis
