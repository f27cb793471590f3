#include <gtest/gtest.h>

#include "support.hpp"

namespace gpoly {
namespace {

using testing::first_quadrant;
using testing::square_constant_row_problem;
using testing::triangle;
using testing::triangle_problem;
using testing::unit_square;
using testing::vec;
using testing::vecq;

bool argmin_contains(const VLPProblem& p, const Vector& ystar, const Vector& u) {
    const auto sol = solve_lp(p.pull_back(ystar), p.feasible_set());
    return sol.status == LPStatus::Optimal && dot(p.pull_back(ystar), u) == sol.value;
}

TEST(VLPProblem, ValidatesDimensions) {
    EXPECT_THROW(VLPProblem(Matrix::identity(3), triangle(), first_quadrant()), DimensionMismatch);
    EXPECT_THROW(VLPProblem(Matrix::from_rows({{1, 0}}), triangle(), first_quadrant()), DimensionMismatch);
}

TEST(ProjectToY1, Examples) {
    const VLPProblem p(Matrix::identity(3), HRep(3), ConeH(3, {vec({-1, 0, 0}), vec({0, -1, 0})}));
    EXPECT_EQ(project_to_y1(p, vec({1, 2, 7})), vec({1, 2, 0}));
    EXPECT_EQ(project_to_y1(p, vec({0, 0, 3})), vec({0, 0, 0}));
    EXPECT_EQ(project_to_y1(triangle_problem(), vecq({"3/2", "-4"})), vecq({"3/2", "-4"}));
    EXPECT_THROW(project_to_y1(p, vec({1, 2})), DimensionMismatch);

    // Oblique lineality: the projection is orthogonal, so it is linear and idempotent.
    const VLPProblem o(Matrix::identity(2), HRep(2), ConeH(2, {vec({1, -1}), vec({-1, 1})}));
    const Vector y = vec({3, 1});
    EXPECT_EQ(project_to_y1(o, y), vec({1, -1}));
    EXPECT_EQ(project_to_y1(o, project_to_y1(o, y)), project_to_y1(o, y));
}

TEST(IsEfficient, TriangleExamples) {
    const auto p = triangle_problem();
    EXPECT_TRUE(is_efficient(p, vec({0, 1})));
    EXPECT_FALSE(is_efficient(p, vec({1, 1})));
    EXPECT_TRUE(is_efficient(p, vecq({"1/2", "1/2"})));
    EXPECT_THROW(is_efficient(p, vec({2, 2})), InfeasiblePoint);
    EXPECT_THROW(is_efficient(p, vec({1})), DimensionMismatch);
}

TEST(IsWeaklyEfficient, Examples) {
    EXPECT_FALSE(is_weakly_efficient(triangle_problem(), vec({1, 1})));
    const auto sq = square_constant_row_problem();
    EXPECT_TRUE(is_weakly_efficient(sq, vec({1, 1})));
    EXPECT_FALSE(is_efficient(sq, vec({1, 1})));
    EXPECT_TRUE(is_weakly_efficient(triangle_problem(), vec({0, 1})));
    EXPECT_THROW(is_weakly_efficient(sq, vec({2, 0})), InfeasiblePoint);

    // int K empty: every feasible point is weakly efficient.
    const VLPProblem flat(Matrix::identity(2), unit_square(), ConeH(2, {vec({-1, 0}), vec({1, 0})}));
    EXPECT_TRUE(flat.cone_interior_empty());
    EXPECT_TRUE(is_weakly_efficient(flat, vec({1, 1})));
}

TEST(ScalarizeWitness, Examples) {
    const auto p = triangle_problem();
    for (const Vector& u : {vecq({"1/2", "1/2"}), vec({0, 1}), vec({1, 0})}) {
        const Vector y = scalarize_witness(p, u);
        EXPECT_TRUE(ri_dual_contains(p.cone(), y));
        EXPECT_TRUE(argmin_contains(p, y, u));
    }
    EXPECT_EQ(scalarize_witness(p, vec({0, 1})), vec({3, 2}));
    EXPECT_THROW(scalarize_witness(p, vec({1, 1})), NotEfficient);

    const auto sq = square_constant_row_problem();
    const Vector y = scalarize_witness(sq, vec({0, 0}));
    EXPECT_TRUE(ri_dual_contains(sq.cone(), y));
    EXPECT_TRUE(argmin_contains(sq, y, vec({0, 0})));
}

TEST(ScalarizeWitness, SubspaceConeGivesZero) {
    const VLPProblem p(Matrix::identity(2), unit_square(), ConeH(2, {vec({-1, 0}), vec({1, 0})}));
    EXPECT_EQ(scalarize_witness(p, vec({1, 1})), vec({0, 0}));
}

TEST(EfficientSet, TriangleIsTheHypotenuse) {
    const auto e = efficient_set(triangle_problem());
    ASSERT_EQ(e.faces.size(), 1u);
    EXPECT_EQ(e.faces[0].active_ineq, std::vector<std::size_t>{0});
    EXPECT_EQ(e.faces[0].geometry.points, (std::vector<Vector>{vec({0, 1}), vec({1, 0})}));
    EXPECT_FALSE(e.subspace_cone);
    EXPECT_FALSE(e.empty_interior);
}

TEST(EfficientSet, SquareIdealPoint) {
    const VLPProblem p(Matrix::identity(2), unit_square(), first_quadrant());
    const auto e = efficient_set(p);
    ASSERT_EQ(e.faces.size(), 1u);
    EXPECT_EQ(e.faces[0].geometry.points, std::vector<Vector>{vec({0, 0})});
}

TEST(EfficientSet, SubspaceConeGivesWholeSet) {
    const VLPProblem p(Matrix::identity(2), triangle(), ConeH(2, {vec({-1, 0}), vec({1, 0})}));
    const auto e = efficient_set(p);
    EXPECT_TRUE(e.subspace_cone);
    ASSERT_EQ(e.faces.size(), 1u);
    EXPECT_EQ(e.faces[0].geometry, h_to_v(triangle()));
    EXPECT_TRUE(e.faces[0].active_ineq.empty());
}

TEST(EfficientSet, EmptyFeasibleSet) {
    HRep bad(1);
    bad.add_ineq(vec({1}), -1).add_ineq(vec({-1}), 0);
    const VLPProblem p(Matrix::identity(1), bad, ConeH(1, {vec({-1})}));
    EXPECT_TRUE(efficient_set(p).faces.empty());
    EXPECT_TRUE(weakly_efficient_set(p).faces.empty());
}

TEST(EfficientSet, UnboundedFeasibleSet) {
    // Quadrant x >= 0 with M = I: only the origin is efficient; weakly both axes.
    HRep d(2);
    d.add_ineq(vec({-1, 0}), 0).add_ineq(vec({0, -1}), 0);
    const VLPProblem p(Matrix::identity(2), d, first_quadrant());
    const auto e = efficient_set(p);
    ASSERT_EQ(e.faces.size(), 1u);
    EXPECT_EQ(e.faces[0].geometry.points, std::vector<Vector>{vec({0, 0})});
    const auto w = weakly_efficient_set(p);
    ASSERT_EQ(w.faces.size(), 2u);
    for (const auto& f : w.faces) EXPECT_EQ(f.geometry.rays.size(), 1u);
}

TEST(EfficientSet, FaceLimit) {
    EXPECT_THROW(efficient_set(triangle_problem(), 3), FaceLimitExceeded);
}

TEST(WeaklyEfficientSet, Examples) {
    const auto sq = square_constant_row_problem();
    const auto e = efficient_set(sq);
    ASSERT_EQ(e.faces.size(), 1u);
    EXPECT_EQ(e.faces[0].geometry.points, (std::vector<Vector>{vec({0, 0}), vec({0, 1})}));
    const auto w = weakly_efficient_set(sq);
    ASSERT_EQ(w.faces.size(), 1u);
    EXPECT_EQ(w.faces[0].geometry, h_to_v(unit_square()));

    const auto tw = weakly_efficient_set(triangle_problem());
    ASSERT_EQ(tw.faces.size(), 1u);
    EXPECT_EQ(tw.faces[0].geometry.points, (std::vector<Vector>{vec({0, 1}), vec({1, 0})}));

    const VLPProblem flat(Matrix::identity(2), triangle(), ConeH(2, {vec({-1, 0}), vec({1, 0})}));
    const auto fw = weakly_efficient_set(flat);
    EXPECT_TRUE(fw.empty_interior);
    ASSERT_EQ(fw.faces.size(), 1u);
    EXPECT_EQ(fw.faces[0].geometry, h_to_v(triangle()));
}

TEST(Connect, TriangleGolden) {
    const auto c = connect(triangle_problem(), vec({0, 1}), vec({1, 0}));
    EXPECT_EQ(c.points, (std::vector<Vector>{vec({0, 1}), vec({1, 0})}));
    ASSERT_EQ(c.breakpoints.size(), 1u);
    EXPECT_EQ(c.breakpoints[0], Rational(1, 2));
    ASSERT_EQ(c.weights.size(), 1u);
    // The t = 1/2 weight makes the whole edge optimal.
    const VRep f = argmin_face(triangle_problem().pull_back(c.weights[0]), triangle());
    EXPECT_EQ(f.points, (std::vector<Vector>{vec({0, 1}), vec({1, 0})}));
}

TEST(Connect, DegenerateAndErrors) {
    const auto p = triangle_problem();
    const auto c = connect(p, vec({0, 1}), vec({0, 1}));
    EXPECT_EQ(c.points, std::vector<Vector>{vec({0, 1})});
    EXPECT_TRUE(c.weights.empty());
    EXPECT_THROW(connect(p, vec({1, 1}), vec({0, 1})), EndpointNotEfficient);
    EXPECT_THROW(connect(p, vec({0, 1}), vec({2, 2})), EndpointNotEfficient);
}

TEST(Connect, WeakPathInConstantRowSquare) {
    const auto sq = square_constant_row_problem();
    const auto c = connect(sq, vec({0, 0}), vec({0, 1}), SolutionKind::WeaklyEfficient);
    EXPECT_EQ(c.points.front(), vec({0, 0}));
    EXPECT_EQ(c.points.back(), vec({0, 1}));
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
        EXPECT_TRUE(is_weakly_efficient(sq, lerp(c.points[i], c.points[i + 1], Rational(1, 2))));
    // Across the square: (0,0) to (1,1) is weakly efficient everywhere.
    const auto d = connect(sq, vec({0, 0}), vec({1, 1}), SolutionKind::WeaklyEfficient);
    EXPECT_EQ(d.points.back(), vec({1, 1}));
}

// --- properties

struct Instance {
    VLPProblem problem;
    std::vector<Vector> samples;
};

std::vector<Instance> instances(unsigned seed, int count) {
    testing::Generator g(seed);
    std::vector<Instance> out;
    while (static_cast<int>(out.size()) < count) {
        VLPProblem p = g.vlp_instance();
        std::vector<Vector> samples = testing::sample_points(p.feasible_vrep(), g, 0);
        out.push_back({std::move(p), std::move(samples)});
    }
    return out;
}

TEST(VlpProperty, VertexVerdictsAgree) {
    for (const auto& inst : instances(51, 40)) {
        const auto& p = inst.problem;
        for (const auto& u : p.feasible_vrep().points) {
            const bool lp = is_efficient(p, u);
            EXPECT_EQ(lp, face_witness(p, minimal_face(p.feasible_set(), u).geometry, SolutionKind::Efficient).has_value());
            EXPECT_EQ(lp, !testing::dominated_by_enumeration(p, u, false));
            const bool weak = is_weakly_efficient(p, u);
            EXPECT_EQ(weak, !testing::dominated_by_enumeration(p, u, true));
            if (lp) {
                EXPECT_TRUE(weak);
            }
        }
    }
}

TEST(VlpProperty, QuotientAgrees) {
    for (const auto& inst : instances(52, 40))
        for (const auto& u : inst.samples) EXPECT_EQ(is_efficient(inst.problem, u), testing::efficient_via_quotient(inst.problem, u));
}

TEST(VlpProperty, WitnessSoundness) {
    for (const auto& inst : instances(53, 40)) {
        const auto& p = inst.problem;
        for (const auto& u : inst.samples) {
            if (!is_efficient(p, u)) continue;
            const Vector y = scalarize_witness(p, u);
            EXPECT_TRUE(ri_dual_contains(p.decomposition(), y));
            EXPECT_TRUE(argmin_contains(p, y, u));
        }
    }
}

TEST(VlpProperty, SetStructure) {
    for (const auto& inst : instances(54, 30)) {
        const auto& p = inst.problem;
        for (auto kind : {SolutionKind::Efficient, SolutionKind::WeaklyEfficient}) {
            const auto set = solution_set(p, kind);
            testing::Generator g(7);
            for (const auto& f : set.faces)
                for (const auto& x : testing::sample_points(f.geometry, g, 0)) EXPECT_TRUE(is_solution(p, x, kind));
            for (std::size_t i = 0; i < set.faces.size(); ++i)
                for (std::size_t j = 0; j < set.faces.size(); ++j) {
                    if (i == j) continue;
                    const auto& a = set.faces[i].active_ineq;
                    const auto& b = set.faces[j].active_ineq;
                    EXPECT_FALSE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
                }
            for (const auto& u : p.feasible_vrep().points) {
                if (!is_solution(p, u, kind)) continue;
                bool covered = false;
                for (const auto& f : set.faces)
                    if (contains(v_to_h(f.geometry), u)) covered = true;
                EXPECT_TRUE(covered);
            }
        }
    }
}

TEST(VlpProperty, ConnectCertificates) {
    int pairs = 0;
    for (const auto& inst : instances(55, 40)) {
        const auto& p = inst.problem;
        std::vector<Vector> eff;
        for (const auto& u : inst.samples)
            if (is_efficient(p, u)) eff.push_back(u);
        if (eff.size() < 2) continue;
        const std::size_t face_count = faces(p.feasible_set()).size();
        for (std::size_t i = 0; i + 1 < eff.size() && i < 3; ++i) {
            const auto c = connect(p, eff[i], eff.back());
            ++pairs;
            EXPECT_EQ(c.points.front(), eff[i]);
            EXPECT_EQ(c.points.back(), eff.back());
            EXPECT_EQ(c.weights.size() + 1, c.points.size());
            EXPECT_LE(c.weights.size(), face_count);
            for (const auto& x : c.points) EXPECT_TRUE(is_efficient(p, x));
            for (std::size_t s = 0; s + 1 < c.points.size(); ++s) {
                EXPECT_TRUE(is_efficient(p, lerp(c.points[s], c.points[s + 1], Rational(1, 2))));
                EXPECT_TRUE(ri_dual_contains(p.decomposition(), c.weights[s]));
                EXPECT_TRUE(argmin_contains(p, c.weights[s], c.points[s]));
                EXPECT_TRUE(argmin_contains(p, c.weights[s], c.points[s + 1]));
            }
        }
    }
    EXPECT_GT(pairs, 10);
}

}  // namespace
}  // namespace gpoly
