#pragma once

// Polyhedral cones K = {y : <n_j, y> <= 0} given by their normals: lineality,
// decomposition K = Y0 + K1 with K1 pointed, dual cone, interior and strict
// part membership, relative interiors, and separation from a polyhedron.

#include <vector>

#include "gpoly/polyhedron.hpp"
#include "gpoly/simplex.hpp"

namespace gpoly {

class ConeH {
public:
    ConeH() = default;

    /// Throws DimensionMismatch on wrong-length normals and Error on a zero
    /// normal. An empty normal list describes the whole space.
    ConeH(std::size_t dim, std::vector<Vector> normals) : dim_(dim), normals_(std::move(normals)) {
        for (const auto& n : normals_) {
            require_same_dim(n.size(), dim_, "cone normal");
            if (is_zero(n)) throw Error("cone normal must be nonzero");
        }
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Vector>& normals() const { return normals_; }
    Matrix normal_matrix() const { return Matrix::from_rows(normals_, dim_); }

private:
    std::size_t dim_ = 0;
    std::vector<Vector> normals_;
};

struct ConeDecomposition {
    std::vector<Vector> y0_basis;          // lineality space l(K)
    std::vector<Vector> y1_basis;          // its orthogonal complement
    std::vector<Vector> k1_rays;           // extreme rays of K intersected with Y1
    std::vector<Vector> dual_generators;   // the negated normals, generating K*

    bool is_subspace() const { return k1_rays.empty(); }
};

inline std::vector<Vector> lineality(const ConeH& k) {
    if (k.normals().empty()) return orthogonal_complement({}, k.dim());
    return canonical_basis(kernel_basis(k.normal_matrix()), k.dim());
}

inline ConeDecomposition decompose(const ConeH& k) {
    ConeDecomposition d;
    d.y0_basis = lineality(k);
    d.y1_basis = orthogonal_complement(d.y0_basis, k.dim());
    d.y1_basis = canonical_basis(d.y1_basis, k.dim());
    const Matrix eq = Matrix::from_rows(d.y0_basis, k.dim());
    const auto gens = cone_generators(eq, k.normal_matrix());
    if (!gens.lineality.empty()) throw InvariantViolation("K1 is not pointed");
    d.k1_rays = gens.rays;
    for (const auto& n : k.normals()) d.dual_generators.push_back(-n);
    return d;
}

inline bool in_cone(const ConeH& k, std::span<const Rational> y) {
    require_same_dim(y.size(), k.dim(), "cone membership");
    for (const auto& n : k.normals())
        if (sgn(dot(n, y)) > 0) return false;
    return true;
}

/// y in K \ l(K): all normal products <= 0, at least one < 0.
inline bool strict_part_contains(const ConeH& k, std::span<const Rational> y) {
    require_same_dim(y.size(), k.dim(), "strict_part_contains");
    bool strict = false;
    for (const auto& n : k.normals()) {
        const int s = sgn(dot(n, y));
        if (s > 0) return false;
        if (s < 0) strict = true;
    }
    return strict;
}

/// y in int K: every normal product < 0.
inline bool interior_contains(const ConeH& k, std::span<const Rational> y) {
    require_same_dim(y.size(), k.dim(), "interior_contains");
    for (const auto& n : k.normals())
        if (sgn(dot(n, y)) >= 0) return false;
    return true;
}

/// int K is empty iff no y has all normal products < 0 (by scaling: <= -1).
inline bool interior_is_empty(const ConeH& k) {
    if (k.normals().empty()) return false;
    LinearProgram lp(k.dim());
    for (const auto& n : k.normals()) lp.add_le(n, Rational(-1));
    return !feasible(std::move(lp));
}

/// y is a strictly positive combination of the generators. For each i the LP
/// max lambda_i over {lambda >= 0 : U lambda = y} must have a positive (or
/// unbounded) optimum; averaging the optimizers then gives an all-positive one.
inline bool ri_generated_cone_contains(const std::vector<Vector>& generators, std::span<const Rational> y) {
    if (generators.empty()) return is_zero(y);
    const std::size_t dim = y.size();
    LinearProgram lp(generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
        require_same_dim(generators[j].size(), dim, "generator");
        lp.nonneg[j] = true;
    }
    for (std::size_t c = 0; c < dim; ++c) {
        Vector row = zeros(generators.size());
        for (std::size_t j = 0; j < generators.size(); ++j) row[j] = generators[j][c];
        lp.add_eq(std::move(row), y[c]);
    }
    for (std::size_t i = 0; i < generators.size(); ++i) {
        lp.objective = zeros(generators.size());
        lp.objective[i] = -1;
        const auto r = solve(lp);
        if (r.status == LPStatus::Infeasible) return false;
        if (r.status == LPStatus::Optimal && sgn(r.value) == 0) return false;
    }
    return true;
}

inline bool ri_dual_contains(const ConeDecomposition& d, std::span<const Rational> ystar) {
    for (const auto& w : d.y0_basis)
        if (sgn(dot(w, ystar)) != 0) return false;
    for (const auto& r : d.k1_rays)
        if (sgn(dot(r, ystar)) <= 0) return false;
    return true;
}

inline bool ri_dual_contains(const ConeH& k, std::span<const Rational> ystar) {
    require_same_dim(ystar.size(), k.dim(), "ri_dual_contains");
    return ri_dual_contains(decompose(k), ystar);
}

/// Sum of the dual generators; all coefficients equal one.
inline Vector ri_dual_witness(const ConeH& k) {
    Vector s = zeros(k.dim());
    for (const auto& n : k.normals()) s = s - n;
    return s;
}

/// All z with <z, a> <= 0 on the points and rays of A, <z, w> = 0 on the
/// lineality of A and on `annihilate`, and <z, r> >= 1 on each cone ray r.
inline HRep separation_set(const VRep& a, const std::vector<Vector>& cone_rays,
                           const std::vector<Vector>& annihilate) {
    HRep h(a.dim);
    for (const auto& u : a.points) h.add_ineq(u, Rational(0));
    for (const auto& d : a.rays) h.add_ineq(d, Rational(0));
    for (const auto& w : a.lineality) h.add_eq(w, Rational(0));
    for (const auto& w : annihilate) h.add_eq(w, Rational(0));
    for (const auto& r : cone_rays) h.add_ineq(-r, Rational(-1));
    return h;
}

/// A point of separation_set minimizing the sum of <z, r> over the cone rays.
/// Throws NotSeparable when the set is empty.
inline Vector separate(const VRep& a, const std::vector<Vector>& cone_rays,
                       const std::vector<Vector>& annihilate) {
    const HRep h = separation_set(a, cone_rays, annihilate);
    LinearProgram lp(a.dim);
    for (std::size_t i = 0; i < h.num_eq(); ++i) lp.add_eq(h.eq_lhs.row_vector(i), h.eq_rhs[i]);
    for (std::size_t i = 0; i < h.num_ineq(); ++i) lp.add_le(h.ineq_lhs.row_vector(i), h.ineq_rhs[i]);
    for (const auto& r : cone_rays) lp.objective = lp.objective + r;
    auto sol = solve(lp);
    if (sol.status == LPStatus::Infeasible) throw NotSeparable();
    if (sol.status == LPStatus::Unbounded) throw InvariantViolation("separation LP unbounded");
    return sol.point;
}

/// Separates A (containing 0) from K \ {0} for pointed K.
inline Vector separate(const VRep& a, const ConeH& k) {
    require_same_dim(a.dim, k.dim(), "separate");
    const auto d = decompose(k);
    if (!d.y0_basis.empty()) throw Error("separate requires a pointed cone");
    if (!contains(a, zeros(a.dim))) throw Error("separate requires 0 in A");
    return separate(a, d.k1_rays, {});
}

}  // namespace gpoly
