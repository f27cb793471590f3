#pragma once

// H- and V-representations of polyhedra and conversions between them.
//
// Conversion runs the double description method on a pointed cone: the
// lineality space is split off first (kernel of all constraint rows), the
// remaining cone is parametrized over the orthogonal complement, seeded with
// a simplicial cone and refined one inequality at a time. Adjacency of two
// rays is decided by the rank of their common active rows.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "gpoly/exact.hpp"
#include "gpoly/simplex.hpp"

namespace gpoly {

/// {x : eq_lhs x = eq_rhs, ineq_lhs x <= ineq_rhs}
struct HRep {
    std::size_t dim = 0;
    Matrix eq_lhs;
    Vector eq_rhs;
    Matrix ineq_lhs;
    Vector ineq_rhs;

    HRep() = default;
    explicit HRep(std::size_t d) : dim(d), eq_lhs(0, d), ineq_lhs(0, d) {}

    std::size_t num_eq() const { return eq_lhs.rows(); }
    std::size_t num_ineq() const { return ineq_lhs.rows(); }

    HRep& add_eq(const Vector& a, const Rational& b) {
        require_same_dim(a.size(), dim, "equality row");
        eq_lhs.append_row(a);
        eq_rhs.push_back(b);
        return *this;
    }
    HRep& add_ineq(const Vector& a, const Rational& b) {
        require_same_dim(a.size(), dim, "inequality row");
        ineq_lhs.append_row(a);
        ineq_rhs.push_back(b);
        return *this;
    }

    void validate() const {
        require_same_dim(eq_lhs.cols(), dim, "equality matrix columns");
        require_same_dim(ineq_lhs.cols(), dim, "inequality matrix columns");
        require_same_dim(eq_rhs.size(), eq_lhs.rows(), "equality rhs length");
        require_same_dim(ineq_rhs.size(), ineq_lhs.rows(), "inequality rhs length");
    }
};

/// conv(points) + cone(rays) + span(lineality). Empty iff points is empty.
struct VRep {
    std::size_t dim = 0;
    std::vector<Vector> points;
    std::vector<Vector> rays;
    std::vector<Vector> lineality;

    bool empty() const { return points.empty(); }
    friend bool operator==(const VRep&, const VRep&) = default;
};

/// A nonempty face: the parent polyhedron with `active_ineq` rows set tight.
struct Face {
    std::vector<std::size_t> active_ineq;
    VRep geometry;
};

// ---------------------------------------------------------------------------
// Double description on homogeneous cones

/// Generators of the cone {x : E x = 0, A x <= 0}.
struct ConeGenerators {
    std::vector<Vector> lineality;  // canonical basis
    std::vector<Vector> rays;       // extreme rays modulo lineality, normalized, sorted
};

namespace detail {

inline std::vector<Vector> pointed_cone_rays(const std::vector<Vector>& rows, std::size_t k) {
    // {z in Q^k : <row, z> <= 0 for all rows}, known to be pointed.
    std::vector<Vector> active;   // processed rows
    std::vector<std::size_t> seed;
    {
        std::vector<Vector> chosen;
        for (std::size_t i = 0; i < rows.size() && chosen.size() < k; ++i) {
            if (is_zero(rows[i])) continue;
            chosen.push_back(rows[i]);
            if (rank(chosen, k) < chosen.size())
                chosen.pop_back();
            else
                seed.push_back(i);
        }
        if (chosen.size() < k) throw InvariantViolation("double description: cone is not pointed");
    }
    const Matrix seed_rows = Matrix::from_rows(
        [&] {
            std::vector<Vector> r;
            for (auto i : seed) r.push_back(rows[i]);
            return r;
        }(),
        k);
    std::vector<Vector> rays;
    for (std::size_t i = 0; i < k; ++i) {
        auto z = solve_linear(seed_rows, -unit_vector(k, i));
        if (!z) throw InvariantViolation("double description: singular seed");
        rays.push_back(normalize_direction(*z));
    }
    for (auto i : seed) active.push_back(rows[i]);

    std::vector<bool> is_seed(rows.size(), false);
    for (auto i : seed) is_seed[i] = true;

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (is_seed[i] || is_zero(rows[i])) continue;
        const Vector& a = rows[i];
        std::vector<std::size_t> pos, neg, zero;
        std::vector<Rational> val(rays.size());
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(a, rays[r]);
            const int s = sgn(val[r]);
            (s > 0 ? pos : s < 0 ? neg : zero).push_back(r);
        }
        if (pos.empty()) {
            active.push_back(a);
            continue;
        }
        std::vector<Vector> next;
        for (auto r : neg) next.push_back(rays[r]);
        for (auto r : zero) next.push_back(rays[r]);
        if (k >= 2) {
            // Active-row incidence for the adjacency test.
            std::vector<std::vector<bool>> tight(rays.size(), std::vector<bool>(active.size()));
            for (std::size_t r = 0; r < rays.size(); ++r)
                for (std::size_t j = 0; j < active.size(); ++j)
                    tight[r][j] = sgn(dot(active[j], rays[r])) == 0;
            for (auto p : pos)
                for (auto q : neg) {
                    std::vector<Vector> common;
                    for (std::size_t j = 0; j < active.size(); ++j)
                        if (tight[p][j] && tight[q][j]) common.push_back(active[j]);
                    if (common.size() + 2 < k) continue;
                    if (rank(common, k) != k - 2) continue;
                    Vector combo = val[p] * rays[q] - val[q] * rays[p];
                    next.push_back(normalize_direction(std::move(combo)));
                }
        }
        rays = std::move(next);
        active.push_back(a);
    }
    return rays;
}

}  // namespace detail

inline ConeGenerators cone_generators(const Matrix& eq, const Matrix& ineq) {
    const std::size_t n = std::max(eq.cols(), ineq.cols());
    ConeGenerators out;
    const Matrix all = vstack(eq.rows() ? eq : Matrix(0, n), ineq.rows() ? ineq : Matrix(0, n));
    out.lineality = canonical_basis(kernel_basis(all), n);

    // Parametrize W = {x : Ex = 0, x orthogonal to lineality} by a basis B.
    Matrix w_rows = eq.rows() ? eq : Matrix(0, n);
    if (!out.lineality.empty()) w_rows = vstack(w_rows, Matrix::from_rows(out.lineality, n));
    const std::vector<Vector> basis =
        w_rows.rows() ? kernel_basis(w_rows) : orthogonal_complement({}, n);
    const std::size_t k = basis.size();
    if (k == 0) return out;

    const Matrix b = Matrix::from_columns(basis, n);
    std::vector<Vector> restricted;
    for (std::size_t i = 0; i < ineq.rows(); ++i) {
        Vector row = zeros(k);
        for (std::size_t c = 0; c < k; ++c) row[c] = dot(ineq.row(i), basis[c]);
        restricted.push_back(std::move(row));
    }
    for (const auto& z : detail::pointed_cone_rays(restricted, k))
        out.rays.push_back(normalize_direction(b * z));
    sort_unique(out.rays);
    return out;
}

// ---------------------------------------------------------------------------
// H -> V

inline VRep h_to_v(const HRep& p) {
    p.validate();
    const std::size_t n = p.dim;
    // Homogenize: (x, t) with A x - b t <= 0, E x - f t = 0, -t <= 0.
    Matrix eq(0, n + 1), ineq(0, n + 1);
    for (std::size_t i = 0; i < p.num_eq(); ++i) {
        Vector row(p.eq_lhs.row(i).begin(), p.eq_lhs.row(i).end());
        row.push_back(-p.eq_rhs[i]);
        eq.append_row(row);
    }
    for (std::size_t i = 0; i < p.num_ineq(); ++i) {
        Vector row(p.ineq_lhs.row(i).begin(), p.ineq_lhs.row(i).end());
        row.push_back(-p.ineq_rhs[i]);
        ineq.append_row(row);
    }
    {
        Vector row = zeros(n + 1);
        row[n] = -1;
        ineq.append_row(row);
    }
    const auto gens = cone_generators(eq, ineq);
    VRep v;
    v.dim = n;
    for (const auto& r : gens.rays) {
        const Rational& t = r[n];
        Vector x(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
        if (sgn(t) > 0)
            v.points.push_back((1 / t) * x);
        else
            v.rays.push_back(normalize_direction(std::move(x)));
    }
    if (v.points.empty()) {
        v.rays.clear();
        return v;
    }
    std::vector<Vector> lin;
    for (const auto& l : gens.lineality) lin.emplace_back(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
    v.lineality = canonical_basis(lin, n);
    sort_unique(v.points);
    sort_unique(v.rays);
    return v;
}

// ---------------------------------------------------------------------------
// V -> H

/// The set that is never satisfied, in dimension n.
inline HRep empty_hrep(std::size_t n) {
    HRep h(n);
    h.add_ineq(zeros(n), Rational(-1));
    return h;
}

inline HRep v_to_h(const VRep& v) {
    const std::size_t n = v.dim;
    if (v.empty()) return empty_hrep(n);
    // Valid inequalities a.x <= beta form the cone
    // {(a, beta) : a.u - beta <= 0, a.r <= 0, a.w = 0}.
    Matrix eq(0, n + 1), ineq(0, n + 1);
    for (const auto& u : v.points) {
        Vector row = u;
        row.push_back(Rational(-1));
        ineq.append_row(row);
    }
    for (const auto& r : v.rays) {
        Vector row = r;
        row.push_back(Rational(0));
        ineq.append_row(row);
    }
    for (const auto& w : v.lineality) {
        Vector row = w;
        row.push_back(Rational(0));
        eq.append_row(row);
    }
    const auto gens = cone_generators(eq, ineq);
    HRep h(n);
    for (const auto& l : gens.lineality)
        h.add_eq(Vector(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n)), l[n]);
    // Reduce each inequality modulo the equalities: its normal becomes
    // orthogonal to the equality normals, and vanishes iff it is implied.
    // The equality normals are independent since v has a point.
    const Matrix& e = h.eq_lhs;
    const Matrix gram = e * e.transpose();
    std::vector<Vector> rows;
    for (const auto& r : gens.rays) {
        Vector a(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
        Rational beta = r[n];
        if (e.rows() > 0) {
            const auto lambda = solve_linear(gram, e * a);
            if (!lambda) throw InvariantViolation("dependent equality normals");
            a = a - e.transpose() * *lambda;
            beta -= dot(*lambda, h.eq_rhs);
        }
        if (is_zero(a)) continue;
        a.push_back(beta);
        rows.push_back(normalize_direction(std::move(a)));
    }
    sort_unique(rows);
    for (auto& r : rows) {
        const Rational beta = r.back();
        r.pop_back();
        h.add_ineq(std::move(r), beta);
    }
    return h;
}

/// Irredundant canonical form of a V-representation.
inline VRep canonicalize(const VRep& v) {
    if (v.empty()) return VRep{v.dim, {}, {}, {}};
    return h_to_v(v_to_h(v));
}

// ---------------------------------------------------------------------------
// Membership

inline bool contains(const HRep& p, std::span<const Rational> x) {
    require_same_dim(x.size(), p.dim, "contains");
    for (std::size_t i = 0; i < p.num_eq(); ++i)
        if (dot(p.eq_lhs.row(i), x) != p.eq_rhs[i]) return false;
    for (std::size_t i = 0; i < p.num_ineq(); ++i)
        if (dot(p.ineq_lhs.row(i), x) > p.ineq_rhs[i]) return false;
    return true;
}

/// Membership in a V-representation, decided by an exact feasibility LP over
/// the generator coefficients.
inline bool contains(const VRep& v, std::span<const Rational> x) {
    require_same_dim(x.size(), v.dim, "contains");
    if (v.empty()) return false;
    const std::size_t np = v.points.size(), nr = v.rays.size(), nl = v.lineality.size();
    LinearProgram lp(np + nr + nl);
    for (std::size_t j = 0; j < np + nr; ++j) lp.nonneg[j] = true;
    for (std::size_t c = 0; c < v.dim; ++c) {
        Vector row = zeros(lp.num_vars);
        for (std::size_t j = 0; j < np; ++j) row[j] = v.points[j][c];
        for (std::size_t j = 0; j < nr; ++j) row[np + j] = v.rays[j][c];
        for (std::size_t j = 0; j < nl; ++j) row[np + nr + j] = v.lineality[j][c];
        lp.add_eq(std::move(row), x[c]);
    }
    Vector convex = zeros(lp.num_vars);
    for (std::size_t j = 0; j < np; ++j) convex[j] = 1;
    lp.add_eq(std::move(convex), Rational(1));
    return feasible(std::move(lp));
}

/// True iff x lies in V and strictly inside every facet inequality of V
/// (implicit equalities are kept as equalities by v_to_h).
inline bool relative_interior_contains(const VRep& v, std::span<const Rational> x) {
    require_same_dim(x.size(), v.dim, "relative_interior_contains");
    if (v.empty()) return false;
    const HRep h = v_to_h(v);
    for (std::size_t i = 0; i < h.num_eq(); ++i)
        if (dot(h.eq_lhs.row(i), x) != h.eq_rhs[i]) return false;
    for (std::size_t i = 0; i < h.num_ineq(); ++i)
        if (dot(h.ineq_lhs.row(i), x) >= h.ineq_rhs[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Images

inline VRep map_polyhedron(const Matrix& t, const VRep& v) {
    require_same_dim(t.cols(), v.dim, "map_polyhedron");
    VRep img;
    img.dim = t.rows();
    if (v.empty()) return img;
    for (const auto& u : v.points) img.points.push_back(t * u);
    for (const auto& r : v.rays) {
        Vector tr = t * r;
        if (!is_zero(tr)) img.rays.push_back(std::move(tr));
    }
    for (const auto& w : v.lineality) {
        Vector tw = t * w;
        if (!is_zero(tw)) img.lineality.push_back(std::move(tw));
    }
    return canonicalize(img);
}

// ---------------------------------------------------------------------------
// Faces

/// Indices of inequality rows of `p` tight on the whole of `v`.
inline std::vector<std::size_t> tight_rows(const HRep& p, const VRep& v) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.num_ineq(); ++i) {
        const auto a = p.ineq_lhs.row(i);
        bool tight = true;
        for (const auto& u : v.points)
            if (dot(a, u) != p.ineq_rhs[i]) { tight = false; break; }
        for (const auto& r : v.rays)
            if (tight && sgn(dot(a, r)) != 0) tight = false;
        for (const auto& w : v.lineality)
            if (tight && sgn(dot(a, w)) != 0) tight = false;
        if (tight) out.push_back(i);
    }
    return out;
}

/// `p` with the listed inequality rows turned into equalities.
inline HRep with_active(const HRep& p, const std::vector<std::size_t>& active) {
    HRep h = p;
    for (auto i : active) h.add_eq(p.ineq_lhs.row_vector(i), p.ineq_rhs[i]);
    return h;
}

inline Face face_of(const HRep& p, const std::vector<std::size_t>& active) {
    VRep g = h_to_v(with_active(p, active));
    if (g.empty()) throw EmptyPolyhedron();
    return {tight_rows(p, g), std::move(g)};
}

/// The smallest face of `p` containing x.
inline Face minimal_face(const HRep& p, std::span<const Rational> x) {
    if (!contains(p, x)) throw InfeasiblePoint();
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < p.num_ineq(); ++i)
        if (dot(p.ineq_lhs.row(i), x) == p.ineq_rhs[i]) active.push_back(i);
    return face_of(p, active);
}

inline constexpr std::size_t kDefaultMaxFaces = 4096;

/// All nonempty faces of `p`, ordered by active set. Each face carries its
/// maximal active set, so distinct entries have distinct geometry.
inline std::vector<Face> faces(const HRep& p, std::size_t max_faces = kDefaultMaxFaces) {
    VRep whole = h_to_v(p);
    if (whole.empty()) throw EmptyPolyhedron();
    std::map<std::vector<std::size_t>, VRep> found;
    std::vector<std::vector<std::size_t>> frontier;
    {
        auto act = tight_rows(p, whole);
        found.emplace(act, std::move(whole));
        frontier.push_back(std::move(act));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& act : frontier) {
            for (std::size_t i = 0; i < p.num_ineq(); ++i) {
                if (std::binary_search(act.begin(), act.end(), i)) continue;
                auto trial = act;
                trial.insert(std::upper_bound(trial.begin(), trial.end(), i), i);
                VRep g = h_to_v(with_active(p, trial));
                if (g.empty()) continue;
                auto full = tight_rows(p, g);
                if (found.count(full)) continue;
                found.emplace(full, std::move(g));
                if (found.size() > max_faces) throw FaceLimitExceeded(max_faces);
                next.push_back(std::move(full));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Face> out;
    out.reserve(found.size());
    for (auto& [act, g] : found) out.push_back({act, std::move(g)});
    return out;
}

}  // namespace gpoly
