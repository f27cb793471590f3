#pragma once

// Linear vector optimization min_K { Mx : x in D } for a polyhedral ordering
// cone K that may contain a nontrivial lineality space.
//
// Efficiency is decided in the ambient space; witnesses are built in the
// quotient picture: y is projected onto Y1 (orthogonal complement of l(K))
// along l(K), the image D1 = (pi M)(D) is separated from K1 \ {0}, and the
// separating functional is pulled back. Efficient and weakly efficient sets
// are enumerated face by face: a face belongs to the set iff a single weight
// in ri K* (resp. K* \ {0}) makes the whole face optimal.

#include <algorithm>
#include <optional>
#include <vector>

#include "gpoly/cone.hpp"
#include "gpoly/lp.hpp"
#include "gpoly/polyhedron.hpp"

namespace gpoly {

enum class SolutionKind { Efficient, WeaklyEfficient };

inline const char* to_string(SolutionKind k) {
    return k == SolutionKind::Efficient ? "efficient" : "weak";
}

class VLPProblem {
public:
    VLPProblem(Matrix objective, HRep feasible, ConeH ordering)
        : m_(std::move(objective)), d_(std::move(feasible)), k_(std::move(ordering)) {
        d_.validate();
        require_same_dim(m_.cols(), d_.dim, "objective columns vs feasible set dimension");
        require_same_dim(m_.rows(), k_.dim(), "objective rows vs cone dimension");
        decomposition_ = decompose(k_);
        projection_ = projection_matrix(decomposition_.y1_basis, decomposition_.y0_basis, k_.dim());
        d_vrep_ = h_to_v(d_);
        d1_ = map_polyhedron(projection_ * m_, d_vrep_);
        empty_interior_ = interior_is_empty(k_);
    }

    const Matrix& objective() const { return m_; }
    const HRep& feasible_set() const { return d_; }
    const ConeH& cone() const { return k_; }
    const ConeDecomposition& decomposition() const { return decomposition_; }
    /// Projection onto Y1 along Y0, in ambient coordinates.
    const Matrix& projection() const { return projection_; }
    const VRep& feasible_vrep() const { return d_vrep_; }
    /// (pi o M)(D)
    const VRep& image_in_y1() const { return d1_; }

    std::size_t decision_dim() const { return d_.dim; }
    std::size_t outcome_dim() const { return k_.dim(); }

    bool cone_is_subspace() const { return decomposition_.is_subspace(); }
    bool cone_interior_empty() const { return empty_interior_; }

    /// M^T y*
    Vector pull_back(std::span<const Rational> ystar) const { return m_.transpose() * ystar; }

private:
    Matrix m_;
    HRep d_;
    ConeH k_;
    ConeDecomposition decomposition_;
    Matrix projection_;
    VRep d_vrep_;
    VRep d1_;
    bool empty_interior_ = false;
};

inline Vector project_to_y1(const VLPProblem& p, std::span<const Rational> y) {
    require_same_dim(y.size(), p.outcome_dim(), "project_to_y1");
    return p.projection() * y;
}

// ---------------------------------------------------------------------------
// Point tests

inline void require_feasible(const VLPProblem& p, std::span<const Rational> u) {
    require_same_dim(u.size(), p.decision_dim(), "decision point");
    if (!contains(p.feasible_set(), u)) throw InfeasiblePoint();
}

/// u is efficient iff max sum s_j subject to x in D, 0 <= s_j <= 1,
/// <n_j, Mu - Mx> <= -s_j is zero.
inline bool is_efficient(const VLPProblem& p, std::span<const Rational> u) {
    require_feasible(p, u);
    const std::size_t n = p.decision_dim();
    const auto& normals = p.cone().normals();
    const std::size_t q = normals.size();
    if (q == 0) return true;
    const Vector mu = p.objective() * u;
    LinearProgram lp(n + q);
    const auto& d = p.feasible_set();
    auto pad = [&](std::span<const Rational> a) {
        Vector row = zeros(n + q);
        std::copy(a.begin(), a.end(), row.begin());
        return row;
    };
    for (std::size_t i = 0; i < d.num_eq(); ++i) lp.add_eq(pad(d.eq_lhs.row(i)), d.eq_rhs[i]);
    for (std::size_t i = 0; i < d.num_ineq(); ++i) lp.add_le(pad(d.ineq_lhs.row(i)), d.ineq_rhs[i]);
    for (std::size_t j = 0; j < q; ++j) {
        lp.nonneg[n + j] = true;
        // -<M^T n_j, x> + s_j <= -<n_j, Mu>
        Vector row = pad(-p.pull_back(normals[j]));
        row[n + j] = 1;
        lp.add_le(std::move(row), Rational(-dot(normals[j], mu)));
        lp.add_le(unit_vector(n + q, n + j), Rational(1));
        lp.objective[n + j] = -1;
    }
    const auto r = solve(lp);
    if (r.status != LPStatus::Optimal) throw InvariantViolation("efficiency LP not optimal");
    return sgn(r.value) == 0;
}

/// u is weakly efficient iff max t subject to x in D, t <= 1,
/// <n_j, Mu - Mx> <= -t is zero.
inline bool is_weakly_efficient(const VLPProblem& p, std::span<const Rational> u) {
    require_feasible(p, u);
    const std::size_t n = p.decision_dim();
    const auto& normals = p.cone().normals();
    const Vector mu = p.objective() * u;
    LinearProgram lp(n + 1);
    const auto& d = p.feasible_set();
    auto pad = [&](std::span<const Rational> a) {
        Vector row = zeros(n + 1);
        std::copy(a.begin(), a.end(), row.begin());
        return row;
    };
    for (std::size_t i = 0; i < d.num_eq(); ++i) lp.add_eq(pad(d.eq_lhs.row(i)), d.eq_rhs[i]);
    for (std::size_t i = 0; i < d.num_ineq(); ++i) lp.add_le(pad(d.ineq_lhs.row(i)), d.ineq_rhs[i]);
    for (const auto& nj : normals) {
        Vector row = pad(-p.pull_back(nj));
        row[n] = 1;
        lp.add_le(std::move(row), Rational(-dot(nj, mu)));
    }
    lp.add_le(unit_vector(n + 1, n), Rational(1));
    lp.objective[n] = -1;
    const auto r = solve(lp);
    if (r.status != LPStatus::Optimal) throw InvariantViolation("weak efficiency LP not optimal");
    return sgn(r.value) == 0;
}

inline bool is_solution(const VLPProblem& p, std::span<const Rational> u, SolutionKind kind) {
    return kind == SolutionKind::Efficient ? is_efficient(p, u) : is_weakly_efficient(p, u);
}

// ---------------------------------------------------------------------------
// Witnesses

namespace detail {

// Rows (over the first q variables, holding y*) forcing every point of `face`
// to minimize <M^T y*, .> over D.
inline void add_argmin_rows(LinearProgram& lp, const VLPProblem& p, const VRep& face) {
    const std::size_t total = lp.num_vars;
    auto in_y = [&](const Vector& x) {
        Vector row = zeros(total);
        const Vector mx = p.objective() * x;
        std::copy(mx.begin(), mx.end(), row.begin());
        return row;
    };
    const Vector& anchor = face.points.front();
    for (std::size_t i = 1; i < face.points.size(); ++i) lp.add_eq(in_y(face.points[i] - anchor), Rational(0));
    for (const auto& r : face.rays) lp.add_eq(in_y(r), Rational(0));
    for (const auto& w : face.lineality) lp.add_eq(in_y(w), Rational(0));
    const VRep& dv = p.feasible_vrep();
    for (const auto& r : dv.rays) lp.add_ge(in_y(r), Rational(0));
    for (const auto& w : dv.lineality) lp.add_eq(in_y(w), Rational(0));
    for (const auto& x : dv.points) lp.add_ge(in_y(x - anchor), Rational(0));
}

// y* in ri K*, normalized: y* orthogonal to Y0 and <y*, r> >= 1 on K1 rays.
inline LinearProgram efficient_witness_system(const VLPProblem& p, const VRep& face) {
    const std::size_t q = p.outcome_dim();
    LinearProgram lp(q);
    for (const auto& w : p.decomposition().y0_basis) lp.add_eq(w, Rational(0));
    for (const auto& r : p.decomposition().k1_rays) lp.add_ge(r, Rational(1));
    add_argmin_rows(lp, p, face);
    return lp;
}

// y* = sum lambda_j (-n_j) with lambda >= 0, sum lambda = 1; variables (y*, lambda).
inline LinearProgram weak_witness_system(const VLPProblem& p, const VRep& face) {
    const std::size_t q = p.outcome_dim();
    const auto& normals = p.cone().normals();
    const std::size_t m = normals.size();
    LinearProgram lp(q + m);
    for (std::size_t j = 0; j < m; ++j) lp.nonneg[q + j] = true;
    for (std::size_t c = 0; c < q; ++c) {
        Vector row = zeros(q + m);
        row[c] = 1;
        for (std::size_t j = 0; j < m; ++j) row[q + j] = normals[j][c];
        lp.add_eq(std::move(row), Rational(0));
    }
    Vector sum = zeros(q + m);
    for (std::size_t j = 0; j < m; ++j) sum[q + j] = 1;
    lp.add_eq(std::move(sum), Rational(1));
    add_argmin_rows(lp, p, face);
    return lp;
}

inline HRep as_hrep(const LinearProgram& lp) {
    HRep h(lp.num_vars);
    for (const auto& row : lp.rows) {
        switch (row.rel) {
            case Relation::Equal: h.add_eq(row.coeffs, row.rhs); break;
            case Relation::LessEqual: h.add_ineq(row.coeffs, row.rhs); break;
            case Relation::GreaterEqual: h.add_ineq(-row.coeffs, Rational(-row.rhs)); break;
        }
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j)
        if (lp.nonneg[j]) h.add_ineq(-unit_vector(lp.num_vars, j), Rational(0));
    return h;
}

/// Average of the points plus the sum of the rays: a strictly positive
/// combination of all generators, hence a relative-interior point.
inline Vector relative_interior_point(const VRep& v) {
    Vector x = zeros(v.dim);
    for (const auto& p : v.points) x = x + p;
    x = Rational(1, static_cast<unsigned long>(v.points.size())) * x;
    for (const auto& r : v.rays) x = x + r;
    return x;
}

inline VRep point_face(const Vector& u) { return VRep{u.size(), {u}, {}, {}}; }

}  // namespace detail

/// A weight certifying that every point of `face` is a solution of the given
/// kind, or nullopt. The efficient weight lies in ri K*, the weak one in K* \ {0}.
inline std::optional<Vector> face_witness(const VLPProblem& p, const VRep& face, SolutionKind kind) {
    if (face.empty()) return std::nullopt;
    const std::size_t q = p.outcome_dim();
    const LinearProgram lp = kind == SolutionKind::Efficient ? detail::efficient_witness_system(p, face)
                                                              : detail::weak_witness_system(p, face);
    const auto r = solve(lp);
    if (r.status == LPStatus::Infeasible) return std::nullopt;
    if (r.status != LPStatus::Optimal) throw InvariantViolation("witness system not optimal");
    return Vector(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(q));
}

/// y* in ri K* with u in argmin of min <y*, Mx> over D.
///
/// The separating set of A = pi(Mu) - D1 against K1 \ {0} is computed as a
/// polyhedron in Y1 and a relative-interior point of it is returned, which
/// avoids weights sitting on the boundary of the normal cone at u.
inline Vector scalarize_witness(const VLPProblem& p, const Vector& u) {
    if (!is_efficient(p, u)) throw NotEfficient();
    const auto& dec = p.decomposition();
    if (dec.is_subspace()) return zeros(p.outcome_dim());   // ri K* = K* contains 0
    const Vector base = project_to_y1(p, p.objective() * u);
    const VRep& d1 = p.image_in_y1();
    VRep a;
    a.dim = p.outcome_dim();
    for (const auto& x : d1.points) a.points.push_back(base - x);
    for (const auto& r : d1.rays) a.rays.push_back(-r);
    a.lineality = d1.lineality;

    const VRep separators = h_to_v(separation_set(a, dec.k1_rays, dec.y0_basis));
    if (separators.empty()) throw InvariantViolation("efficient point is not separable");
    // z lies in Y1 = Y0-perp, where the pull-back pi^T z equals z.
    Vector ystar = detail::relative_interior_point(separators);
    if (!ri_dual_contains(dec, ystar)) throw InvariantViolation("witness outside ri K*");
    return ystar;
}

/// y* in K* \ {0} with u in argmin. Requires int K nonempty.
inline Vector weak_scalarize_witness(const VLPProblem& p, const Vector& u) {
    if (!is_weakly_efficient(p, u)) throw NotEfficient();
    const std::size_t q = p.outcome_dim();
    const VRep set = h_to_v(detail::as_hrep(detail::weak_witness_system(p, detail::point_face(u))));
    if (set.empty()) throw NotEfficient();
    Vector joint = detail::relative_interior_point(set);
    return Vector(joint.begin(), joint.begin() + static_cast<std::ptrdiff_t>(q));
}

inline Vector solution_witness(const VLPProblem& p, const Vector& u, SolutionKind kind) {
    return kind == SolutionKind::Efficient ? scalarize_witness(p, u) : weak_scalarize_witness(p, u);
}

// ---------------------------------------------------------------------------
// Solution sets

struct EfficientSet {
    SolutionKind kind = SolutionKind::Efficient;
    std::vector<Face> faces;       // maximal faces of D, sorted by active set
    bool subspace_cone = false;    // K = l(K): nothing is dominated, E = D
    bool empty_interior = false;   // int K empty: E^w = D
};

namespace detail {

inline std::vector<Face> keep_maximal(std::vector<Face> fs) {
    // Faces carry maximal active sets: F is inside G iff act(G) is a subset of act(F).
    std::vector<bool> dominated(fs.size(), false);
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = 0; j < fs.size() && !dominated[i]; ++j) {
            if (i == j || fs[j].active_ineq.size() >= fs[i].active_ineq.size()) continue;
            dominated[i] = std::includes(fs[i].active_ineq.begin(), fs[i].active_ineq.end(),
                                         fs[j].active_ineq.begin(), fs[j].active_ineq.end());
        }
    std::vector<Face> out;
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (!dominated[i]) out.push_back(std::move(fs[i]));
    return out;
}

inline Face whole_set_face(const VLPProblem& p) {
    return {tight_rows(p.feasible_set(), p.feasible_vrep()), p.feasible_vrep()};
}

}  // namespace detail

inline EfficientSet solution_set(const VLPProblem& p, SolutionKind kind, std::size_t max_faces = kDefaultMaxFaces) {
    EfficientSet out;
    out.kind = kind;
    out.subspace_cone = p.cone_is_subspace();
    out.empty_interior = p.cone_interior_empty();
    if (p.feasible_vrep().empty()) return out;
    if (kind == SolutionKind::Efficient && out.subspace_cone) {
        out.faces.push_back(detail::whole_set_face(p));
        return out;
    }
    if (kind == SolutionKind::WeaklyEfficient && out.empty_interior) {
        out.faces.push_back(detail::whole_set_face(p));
        return out;
    }
    std::vector<Face> passing;
    for (auto& f : faces(p.feasible_set(), max_faces))
        if (face_witness(p, f.geometry, kind)) passing.push_back(std::move(f));
    out.faces = detail::keep_maximal(std::move(passing));
    return out;
}

inline EfficientSet efficient_set(const VLPProblem& p, std::size_t max_faces = kDefaultMaxFaces) {
    return solution_set(p, SolutionKind::Efficient, max_faces);
}

inline EfficientSet weakly_efficient_set(const VLPProblem& p, std::size_t max_faces = kDefaultMaxFaces) {
    return solution_set(p, SolutionKind::WeaklyEfficient, max_faces);
}

// ---------------------------------------------------------------------------
// Connectivity

/// Chain u = points[0], ..., points[r-1] = v; segment i lies in the argmin of
/// the scalar problem weighted by weights[i] = (1-t) xi0 + t xi1 with
/// t = breakpoints[i].
struct PathCertificate {
    std::vector<Vector> points;
    std::vector<Vector> weights;
    std::vector<Rational> breakpoints;
};

namespace detail {

inline bool in_argmin(const VLPProblem& p, const Vector& weight, const Vector& x) {
    const Vector c = p.pull_back(weight);
    const VRep& v = p.feasible_vrep();
    if (!bounded_below(c, v)) return false;
    Rational best = dot(c, v.points.front());
    for (const auto& pt : v.points) best = std::min(best, Rational(dot(c, pt)));
    return dot(c, x) == best;
}

inline void simplify_chain(const VLPProblem& p, PathCertificate& c) {
    // Drop repeated points together with the degenerate segment they close.
    for (std::size_t i = 0; i + 1 < c.points.size();) {
        if (c.points[i] == c.points[i + 1]) {
            c.points.erase(c.points.begin() + static_cast<std::ptrdiff_t>(i + 1));
            c.weights.erase(c.weights.begin() + static_cast<std::ptrdiff_t>(i));
            c.breakpoints.erase(c.breakpoints.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    // Shortcut p_i -> p_{i+2} when one of the two weights already covers both.
    for (std::size_t i = 0; i + 2 < c.points.size();) {
        const auto& a = c.points[i];
        const auto& b = c.points[i + 2];
        if (in_argmin(p, c.weights[i], b)) {
            c.points.erase(c.points.begin() + static_cast<std::ptrdiff_t>(i + 1));
            c.weights.erase(c.weights.begin() + static_cast<std::ptrdiff_t>(i + 1));
            c.breakpoints.erase(c.breakpoints.begin() + static_cast<std::ptrdiff_t>(i + 1));
        } else if (in_argmin(p, c.weights[i + 1], a)) {
            c.points.erase(c.points.begin() + static_cast<std::ptrdiff_t>(i + 1));
            c.weights.erase(c.weights.begin() + static_cast<std::ptrdiff_t>(i));
            c.breakpoints.erase(c.breakpoints.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
}

}  // namespace detail

/// Line-segment chain from u to v inside E (or E^w for the weak kind).
///
/// The weights xi_t = (1-t) xi0 + t xi1 interpolate the witnesses of the two
/// endpoints. On each open interval between breakpoints of t the argmin face
/// is constant, and it is contained in the argmin at both interval ends, so a
/// point picked in each interval face can be joined to its neighbours inside
/// the argmin at the shared breakpoint.
inline PathCertificate connect(const VLPProblem& p, const Vector& u, const Vector& v,
                               SolutionKind kind = SolutionKind::Efficient) {
    for (const auto* x : {&u, &v}) {
        require_same_dim(x->size(), p.decision_dim(), "connect endpoint");
        if (!contains(p.feasible_set(), *x) || !is_solution(p, *x, kind)) throw EndpointNotEfficient();
    }
    PathCertificate cert;
    cert.points.push_back(u);
    if (u == v) return cert;

    if (kind == SolutionKind::WeaklyEfficient && p.cone_interior_empty()) {
        // E^w = D is convex; the zero weight makes all of D optimal.
        cert.points.push_back(v);
        cert.weights.push_back(zeros(p.outcome_dim()));
        cert.breakpoints.push_back(Rational(0));
        return cert;
    }

    const Vector xi0 = solution_witness(p, u, kind);
    const Vector xi1 = solution_witness(p, v, kind);
    const VRep& dv = p.feasible_vrep();
    const Vector c0 = p.pull_back(xi0);
    const Vector c1 = p.pull_back(xi1);
    const auto bps = parametric_breakpoints(c0, c1, dv);

    auto add_segment = [&](Vector to, const Rational& t) {
        cert.points.push_back(std::move(to));
        cert.weights.push_back(lerp(xi0, xi1, t));
        cert.breakpoints.push_back(t);
    };
    for (std::size_t k = 0; k + 1 < bps.size(); ++k) {
        const Rational mid = (bps[k] + bps[k + 1]) / 2;
        const auto sig = argmin_signature(lerp(c0, c1, mid), dv);
        add_segment(dv.points[sig.points.front()], bps[k]);
    }
    add_segment(v, bps.back());
    detail::simplify_chain(p, cert);
    return cert;
}

}  // namespace gpoly
