#pragma once

// Scalar linear programs over H-polyhedra: min <c, x> over D, the face of
// minimizers, and the piecewise structure of argmin along c(t) = (1-t)c0 + t c1.

#include <algorithm>
#include <vector>

#include "gpoly/polyhedron.hpp"
#include "gpoly/simplex.hpp"

namespace gpoly {

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    Rational value;
    Vector point;
    Vector descent_ray;
};

inline LinearProgram hrep_program(const HRep& d) {
    LinearProgram lp(d.dim);
    for (std::size_t i = 0; i < d.num_eq(); ++i) lp.add_eq(d.eq_lhs.row_vector(i), d.eq_rhs[i]);
    for (std::size_t i = 0; i < d.num_ineq(); ++i) lp.add_le(d.ineq_lhs.row_vector(i), d.ineq_rhs[i]);
    return lp;
}

inline LPOutcome solve_lp(const Vector& c, const HRep& d) {
    require_same_dim(c.size(), d.dim, "solve_lp objective");
    d.validate();
    LinearProgram lp = hrep_program(d);
    lp.objective = c;
    auto r = solve(lp);
    LPOutcome out;
    out.status = r.status;
    if (r.status == LPStatus::Optimal) {
        out.value = std::move(r.value);
        out.point = std::move(r.point);
    } else if (r.status == LPStatus::Unbounded) {
        out.descent_ray = normalize_direction(std::move(r.ray));
    }
    return out;
}

inline VRep argmin_face(const Vector& c, const HRep& d) {
    const auto sol = solve_lp(c, d);
    if (sol.status != LPStatus::Optimal) throw NoArgmin();
    HRep h = d;
    h.add_eq(c, sol.value);
    VRep f = h_to_v(h);
    if (f.empty()) throw InvariantViolation("argmin face is empty");
    return f;
}

/// Minimizer set of <c, .> over a V-represented polyhedron, given as indices
/// of minimizing points plus rays orthogonal to c. Requires boundedness.
struct ArgminSignature {
    std::vector<std::size_t> points;
    std::vector<std::size_t> rays;
    friend bool operator==(const ArgminSignature&, const ArgminSignature&) = default;
};

inline ArgminSignature argmin_signature(const Vector& c, const VRep& v) {
    ArgminSignature s;
    Rational best;
    for (std::size_t i = 0; i < v.points.size(); ++i) {
        Rational val = dot(c, v.points[i]);
        if (s.points.empty() || val < best) {
            s.points = {i};
            best = std::move(val);
        } else if (val == best) {
            s.points.push_back(i);
        }
    }
    for (std::size_t j = 0; j < v.rays.size(); ++j)
        if (sgn(dot(c, v.rays[j])) == 0) s.rays.push_back(j);
    return s;
}

/// True iff <c, .> is bounded below on the nonempty polyhedron v.
inline bool bounded_below(const Vector& c, const VRep& v) {
    if (v.empty()) return false;
    for (const auto& r : v.rays)
        if (sgn(dot(c, r)) < 0) return false;
    for (const auto& w : v.lineality)
        if (sgn(dot(c, w)) != 0) return false;
    return true;
}

/// Breakpoints 0 = t_1 <= ... <= t_m = 1 of the argmin face of
/// <(1-t)c0 + t c1, x> over v: the face is constant on each open interval
/// and changes at every interior breakpoint.
inline std::vector<Rational> parametric_breakpoints(const Vector& c0, const Vector& c1, const VRep& v) {
    require_same_dim(c0.size(), v.dim, "parametric_breakpoints c0");
    require_same_dim(c1.size(), v.dim, "parametric_breakpoints c1");
    // Ray and lineality products are linear in t, so checking the ends suffices.
    if (!bounded_below(c0, v) || !bounded_below(c1, v)) throw UnsolvableOnSegment();

    std::vector<Rational> candidates{Rational(0), Rational(1)};
    std::vector<Rational> slope, offset;
    for (const auto& p : v.points) {
        offset.push_back(dot(c0, p));
        slope.push_back(dot(c1, p) - offset.back());
    }
    for (std::size_t i = 0; i < v.points.size(); ++i)
        for (std::size_t j = i + 1; j < v.points.size(); ++j) {
            if (slope[i] == slope[j]) continue;
            Rational t = (offset[j] - offset[i]) / (slope[i] - slope[j]);
            if (sgn(t) > 0 && t < 1) candidates.push_back(std::move(t));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto sig_at = [&](const Rational& t) { return argmin_signature(lerp(c0, c1, t), v); };
    std::vector<Rational> out{Rational(0)};
    for (std::size_t k = 1; k + 1 < candidates.size(); ++k) {
        const auto here = sig_at(candidates[k]);
        const Rational left_mid = (candidates[k - 1] + candidates[k]) / 2;
        const Rational right_mid = (candidates[k] + candidates[k + 1]) / 2;
        if (!(here == sig_at(left_mid)) || !(here == sig_at(right_mid))) out.push_back(candidates[k]);
    }
    out.push_back(Rational(1));
    return out;
}

inline std::vector<Rational> parametric_breakpoints(const Vector& c0, const Vector& c1, const HRep& d) {
    const VRep v = h_to_v(d);
    if (v.empty()) throw UnsolvableOnSegment();
    return parametric_breakpoints(c0, c1, v);
}

}  // namespace gpoly
