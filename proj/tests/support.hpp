#pragma once

// Shared fixtures for the test suites: named instances, random generators,
// and oracles that reach their verdicts by a different route than the
// library code they check.

#include <random>
#include <vector>

#include "gpoly/gpoly.hpp"

namespace gpoly::testing {

inline Vector vec(std::initializer_list<long> xs) { return make_vector(xs); }

inline Vector vecq(std::initializer_list<const char*> xs) {
    Vector v;
    for (auto s : xs) v.push_back(parse_rational(s));
    return v;
}

// ---------------------------------------------------------------------------
// Named instances

inline HRep unit_square() {
    HRep h(2);
    h.add_ineq(vec({-1, 0}), 0).add_ineq(vec({1, 0}), 1).add_ineq(vec({0, -1}), 0).add_ineq(vec({0, 1}), 1);
    return h;
}

/// conv{(0,1), (1,0), (1,1)}
inline HRep triangle() {
    HRep h(2);
    h.add_ineq(vec({-1, -1}), -1).add_ineq(vec({1, 0}), 1).add_ineq(vec({0, 1}), 1);
    return h;
}

inline ConeH first_quadrant() { return ConeH(2, {vec({-1, 0}), vec({0, -1})}); }

inline VLPProblem triangle_problem() { return VLPProblem(Matrix::identity(2), triangle(), first_quadrant()); }

/// Unit square, M = [[1,0],[0,0]]: second objective constant.
inline VLPProblem square_constant_row_problem() {
    return VLPProblem(Matrix::from_rows({{1, 0}, {0, 0}}), unit_square(), first_quadrant());
}

// ---------------------------------------------------------------------------
// Random generators

class Generator {
public:
    explicit Generator(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long range, long max_den) {
        Rational r(mpz_class(integer(-range * max_den, range * max_den)), mpz_class(integer(1, max_den)));
        r.canonicalize();
        return r;
    }

    Vector int_vector(std::size_t n, long lo, long hi) {
        Vector v(n);
        for (auto& x : v) x = integer(lo, hi);
        return v;
    }

    Vector nonzero_int_vector(std::size_t n, long lo, long hi) {
        for (;;) {
            Vector v = int_vector(n, lo, hi);
            if (!is_zero(v)) return v;
        }
    }

    Vector rational_vector(std::size_t n, long range, long max_den) {
        Vector v(n);
        for (auto& x : v) x = rational(range, max_den);
        return v;
    }

    /// A nonempty polyhedron in Q^n: random rows through a slack of an
    /// integer anchor point. Optional equality rows and bounding box.
    HRep polyhedron(std::size_t n, std::size_t ineqs, std::size_t eqs, bool bounded) {
        const Vector anchor = int_vector(n, -2, 2);
        HRep h(n);
        for (std::size_t i = 0; i < eqs; ++i) {
            Vector a = nonzero_int_vector(n, -2, 2);
            h.add_eq(a, dot(a, anchor));
        }
        for (std::size_t i = 0; i < ineqs; ++i) {
            Vector a = nonzero_int_vector(n, -3, 3);
            h.add_ineq(a, dot(a, anchor) + integer(0, 3));
        }
        if (bounded)
            for (std::size_t c = 0; c < n; ++c) {
                h.add_ineq(unit_vector(n, c), Rational(anchor[c] + 4));
                h.add_ineq(-unit_vector(n, c), Rational(4 - anchor[c]));
            }
        return h;
    }

    /// Random cone with `count` nonzero normals in Q^q.
    ConeH cone(std::size_t q, std::size_t count) {
        std::vector<Vector> normals;
        for (std::size_t i = 0; i < count; ++i) normals.push_back(nonzero_int_vector(q, -2, 2));
        return ConeH(q, std::move(normals));
    }

    /// Random VLP instance within the acceptance limits (n <= 4, <= 6
    /// inequalities, q <= 3, 1-3 normals, K not a subspace).
    VLPProblem vlp_instance() {
        for (;;) {
            const std::size_t n = static_cast<std::size_t>(integer(1, 4));
            const std::size_t ineqs = static_cast<std::size_t>(integer(static_cast<long>(n), 6));
            const std::size_t q = static_cast<std::size_t>(integer(1, 3));
            const std::size_t normals = static_cast<std::size_t>(integer(1, 3));
            HRep d = polyhedron(n, ineqs, 0, false);
            ConeH k = cone(q, normals);
            Matrix m = Matrix::from_rows(
                [&] {
                    std::vector<Vector> rows;
                    for (std::size_t i = 0; i < q; ++i) rows.push_back(int_vector(n, -2, 2));
                    return rows;
                }(),
                n);
            VLPProblem p(std::move(m), std::move(d), std::move(k));
            if (p.cone_is_subspace()) continue;
            return p;
        }
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

// ---------------------------------------------------------------------------
// Oracles

/// Domination by enumeration: u is dominated iff the polyhedron
/// {x in D : <n_j, Mu - Mx> <= 0 for all j} has a generator along which some
/// product is strictly negative. Uses only the H-to-V conversion, no simplex.
inline bool dominated_by_enumeration(const VLPProblem& p, const Vector& u, bool weak) {
    const auto& normals = p.cone().normals();
    const Vector mu = p.objective() * u;
    HRep h = p.feasible_set();
    for (const auto& nj : normals) {
        // <n_j, Mu> - <M^T n_j, x> <= 0
        h.add_ineq(-p.pull_back(nj), Rational(-dot(nj, mu)));
    }
    const VRep v = h_to_v(h);
    if (v.empty()) return false;
    // Row j can be made strict somewhere on the set iff some generator pushes
    // it below zero. For the weak test every row needs this; averaging the
    // per-row points then gives one point that is strict in all rows.
    auto row_can_be_strict = [&](const Vector& nj) {
        const Vector c = p.pull_back(nj);
        for (const auto& x : v.points)
            if (dot(nj, mu) - dot(c, x) < 0) return true;
        for (const auto& r : v.rays)
            if (sgn(dot(c, r)) > 0) return true;
        for (const auto& w : v.lineality)
            if (sgn(dot(c, w)) != 0) return true;
        return false;
    };
    if (weak) return std::all_of(normals.begin(), normals.end(), row_can_be_strict);
    return std::any_of(normals.begin(), normals.end(), row_can_be_strict);
}

/// Efficiency through the quotient: ((pi M)u - D1) meets K1 \ {0} iff some
/// conic combination of K1 rays with positive total weight equals pi(Mu) - d
/// for d in D1.
inline bool efficient_via_quotient(const VLPProblem& p, const Vector& u) {
    const auto& rays = p.decomposition().k1_rays;
    if (rays.empty()) return true;
    const VRep& d1 = p.image_in_y1();
    const Vector target = project_to_y1(p, p.objective() * u);
    const std::size_t q = p.outcome_dim();
    const std::size_t np = d1.points.size(), nr = d1.rays.size(), nl = d1.lineality.size(), nk = rays.size();
    LinearProgram lp(np + nr + nl + nk);
    for (std::size_t j = 0; j < np + nr; ++j) lp.nonneg[j] = true;
    for (std::size_t j = 0; j < nk; ++j) lp.nonneg[np + nr + nl + j] = true;
    // sum lambda p + sum mu r + sum nu w + sum kappa k = pi(Mu)
    for (std::size_t c = 0; c < q; ++c) {
        Vector row = zeros(lp.num_vars);
        for (std::size_t j = 0; j < np; ++j) row[j] = d1.points[j][c];
        for (std::size_t j = 0; j < nr; ++j) row[np + j] = d1.rays[j][c];
        for (std::size_t j = 0; j < nl; ++j) row[np + nr + j] = d1.lineality[j][c];
        for (std::size_t j = 0; j < nk; ++j) row[np + nr + nl + j] = rays[j][c];
        lp.add_eq(std::move(row), target[c]);
    }
    Vector convex = zeros(lp.num_vars), kappa = zeros(lp.num_vars);
    for (std::size_t j = 0; j < np; ++j) convex[j] = 1;
    for (std::size_t j = 0; j < nk; ++j) kappa[np + nr + nl + j] = 1;
    lp.add_eq(std::move(convex), Rational(1));
    // D1 is not a cone, so the cone part cannot be normalized to one; the
    // largest cone weight up to one decides.
    lp.objective = -kappa;
    lp.add_le(std::move(kappa), Rational(1));
    const auto r = solve(lp);
    return r.status == LPStatus::Infeasible || sgn(r.value) == 0;
}

/// y = w + k with w in span(Y0) and k a nonzero conic combination of K1 rays.
inline bool has_strict_decomposition(const ConeDecomposition& d, const Vector& y) {
    const std::size_t q = y.size();
    std::vector<Vector> basis = d.y0_basis;
    basis.insert(basis.end(), d.y1_basis.begin(), d.y1_basis.end());
    const auto coords = solve_linear(Matrix::from_columns(basis, q), y);
    if (!coords) return false;
    Vector k = zeros(q);
    for (std::size_t i = 0; i < d.y1_basis.size(); ++i)
        k = k + (*coords)[d.y0_basis.size() + i] * d.y1_basis[i];
    if (is_zero(k) || d.k1_rays.empty()) return false;
    LinearProgram lp(d.k1_rays.size());
    for (std::size_t j = 0; j < d.k1_rays.size(); ++j) lp.nonneg[j] = true;
    for (std::size_t c = 0; c < q; ++c) {
        Vector row = zeros(d.k1_rays.size());
        for (std::size_t j = 0; j < d.k1_rays.size(); ++j) row[j] = d.k1_rays[j][c];
        lp.add_eq(std::move(row), k[c]);
    }
    return feasible(std::move(lp));
}

/// Vertices, pairwise midpoints, point-plus-ray and point-plus-lineality
/// samples of a V-representation, plus random exterior candidates.
inline std::vector<Vector> sample_points(const VRep& v, Generator& g, std::size_t exterior) {
    std::vector<Vector> out;
    for (const auto& p : v.points) out.push_back(p);
    for (std::size_t i = 0; i < v.points.size(); ++i)
        for (std::size_t j = i + 1; j < v.points.size(); ++j)
            out.push_back(Rational(1, 2) * (v.points[i] + v.points[j]));
    for (const auto& p : v.points) {
        for (const auto& r : v.rays) out.push_back(p + Rational(3, 2) * r);
        for (const auto& w : v.lineality) out.push_back(p - Rational(5, 3) * w);
    }
    for (std::size_t i = 0; i < exterior; ++i) out.push_back(g.rational_vector(v.dim, 6, 3));
    return out;
}

}  // namespace gpoly::testing
