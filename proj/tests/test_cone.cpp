#include <gtest/gtest.h>

#include <cmath>

#include "gen.hpp"
#include "ordlip/cone.hpp"
#include "ordlip/nnls.hpp"
#include "ordlip/norms.hpp"

using namespace ordlip;

TEST(Nnls, SolvesUnconstrainedInterior) {
    Matrix A = Matrix::Identity(3, 3);
    const auto r = nnls(A, Vector{{1.0, 2.0, 3.0}});
    EXPECT_NEAR((r.coef - Vector{{1.0, 2.0, 3.0}}).norm(), 0.0, 1e-12);
    EXPECT_NEAR(r.residual, 0.0, 1e-12);
}

TEST(Nnls, ClipsNegativeDirections) {
    Matrix A = Matrix::Identity(2, 2);
    const auto r = nnls(A, Vector{{-1.0, 2.0}});
    EXPECT_NEAR(r.coef(0), 0.0, 1e-14);
    EXPECT_NEAR(r.coef(1), 2.0, 1e-12);
    EXPECT_NEAR(r.residual, 1.0, 1e-12);
}

// Property: KKT conditions of the NNLS solution.
TEST(NnlsProperty, Kkt) {
    gen::Rng rng(5);
    for (int it = 0; it < 200; ++it) {
        const int m = rng.integer(1, 6);
        const int n = rng.integer(1, 8);
        Matrix A(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) A(i, j) = rng.normal();
        const Vector b = rng.gaussian(m);
        const auto r = nnls(A, b);
        const Vector w = A.transpose() * (b - A * r.coef);
        for (int j = 0; j < n; ++j) {
            EXPECT_GE(r.coef(j), 0.0);
            EXPECT_LE(w(j), 1e-8);
            if (r.coef(j) > 1e-10) EXPECT_NEAR(w(j), 0.0, 1e-8);
        }
    }
}

TEST(Norms, DualPairsAndBalls) {
    const Vector v{{3.0, -4.0}};
    EXPECT_DOUBLE_EQ(norm(v, NormTag::L1), 7.0);
    EXPECT_DOUBLE_EQ(norm(v, NormTag::L2), 5.0);
    EXPECT_DOUBLE_EQ(norm(v, NormTag::LInf), 4.0);
    EXPECT_DOUBLE_EQ(dual_norm(v, NormTag::L1), 4.0);
    EXPECT_DOUBLE_EQ(dual_norm(v, NormTag::LInf), 7.0);
    for (NormTag t : {NormTag::L1, NormTag::L2, NormTag::LInf}) {
        const Vector p = project_ball(v, 1.0, t);
        EXPECT_LE(norm(p, t), 1.0 + 1e-12);
    }
    EXPECT_EQ(norm_from_string("linf"), NormTag::LInf);
    EXPECT_THROW(norm_from_string("l3"), Error);
}

TEST(Cone, OrthantMembershipAndProjection) {
    const auto c = ConeOrder::orthant(3);
    EXPECT_TRUE(contains(c, Vector{{1.0, 0.0, 2.0}}));
    EXPECT_FALSE(contains(c, Vector{{1.0, -0.1, 2.0}}));
    const Vector p = project_cone(c, Vector{{1.0, -2.0, 3.0}});
    EXPECT_NEAR((p - Vector{{1.0, 0.0, 3.0}}).norm(), 0.0, 1e-12);
    EXPECT_TRUE(is_pointed(c));
}

TEST(Cone, HalfspaceAndGeneratorFormsAgree) {
    // The cone spanned by (1,0) and (1,1), described both ways.
    const auto g = ConeOrder::from_generators(2, {Vector{{1.0, 0.0}}, Vector{{1.0, 1.0}}});
    const auto h = ConeOrder::from_halfspaces(2, {Vector{{0.0, 1.0}}, Vector{{1.0, -1.0}}});
    gen::Rng rng(11);
    for (int it = 0; it < 200; ++it) {
        const Vector a = rng.gaussian(2) * 3.0;
        EXPECT_EQ(contains(g, a), contains(h, a));
        EXPECT_NEAR((project_cone(g, a) - project_cone(h, a)).norm(), 0.0, 1e-9);
    }
    ASSERT_TRUE(h.rays().has_value());
    EXPECT_EQ(h.rays()->size(), 2u);
}

TEST(Cone, FromBothRejectsMismatch) {
    EXPECT_THROW(ConeOrder::from_both(2, {Vector{{1.0, 0.0}}, Vector{{-1.0, 1.0}}}, {Vector{{0.0, 1.0}}, Vector{{1.0, -1.0}}}),
                 StructuralError);
    EXPECT_NO_THROW(ConeOrder::from_both(2, {Vector{{1.0, 0.0}}, Vector{{1.0, 1.0}}}, {Vector{{0.0, 1.0}}, Vector{{1.0, -1.0}}}));
}

TEST(Cone, PointedCriterion) {
    EXPECT_FALSE(is_pointed(ConeOrder::from_generators(2, {Vector{{1.0, 0.0}}, Vector{{-1.0, 0.0}}, Vector{{0.0, 1.0}}})));
    EXPECT_FALSE(is_pointed(ConeOrder::from_halfspaces(2, {Vector{{0.0, 1.0}}})));
    EXPECT_TRUE(is_pointed(ConeOrder::trivial(3)));
}

TEST(Cone, DualOfOrthantIsOrthant) {
    const auto c = ConeOrder::orthant(3);
    const auto d = dual_generators(c);
    EXPECT_EQ(d.size(), 3u);
    for (const auto& v : d) EXPECT_TRUE(contains(c, v));
    EXPECT_TRUE(dual_contains(c, Vector{{1.0, 2.0, 0.0}}));
    EXPECT_FALSE(dual_contains(c, Vector{{1.0, -2.0, 0.0}}));
}

TEST(Cone, MonotoneDirectionOnNarrowCone) {
    // C* is wider than C here; e must land in both.
    const auto c = ConeOrder::from_generators(2, {Vector{{1.0, 0.2}}, Vector{{1.0, -0.2}}});
    const Vector e = monotone_direction(c);
    EXPECT_NEAR(e.norm(), 1.0, 1e-12);
    EXPECT_TRUE(contains(c, e));
    EXPECT_TRUE(dual_contains(c, e));
}

TEST(Cone, MonotoneDirectionErrors) {
    EXPECT_THROW(monotone_direction(ConeOrder::trivial(2)), NoDirectionError);
    EXPECT_THROW(monotone_direction(ConeOrder::from_generators(1, {Vector{{1.0}}, Vector{{-1.0}}})), DomainError);
}

TEST(Cone, DimensionMismatchThrows) {
    EXPECT_THROW(contains(ConeOrder::orthant(2), Vector::Zero(3)), StructuralError);
}

// Property: Moreau decomposition a = P_C a + P_polar a with orthogonal parts,
// both projections in their cones; dual projection lies in C*.
TEST(ConeProperty, MoreauIdentities) {
    gen::Rng rng(17);
    for (int it = 0; it < 300; ++it) {
        const int dim = rng.integer(2, 6);
        const auto c = gen::pointed_cone(rng, dim, rng.integer(2, 8));
        const Vector a = rng.gaussian(dim) * 2.0;
        const auto s = moreau_split(c, a);
        EXPECT_NEAR((s.part_cone + s.part_polar - a).norm(), 0.0, 1e-10);
        EXPECT_NEAR(s.part_cone.dot(s.part_polar), 0.0, 1e-8);
        EXPECT_TRUE(contains(c, s.part_cone, 1e-8));
        for (const auto& g : *c.generators()) EXPECT_LE(s.part_polar.dot(g), 1e-8 * g.norm());
        EXPECT_TRUE(dual_contains(c, project_dual(c, a), 1e-8));
    }
}

TEST(ConeProperty, MonotoneDirectionInBothCones) {
    gen::Rng rng(23);
    for (int it = 0; it < 200; ++it) {
        const int dim = rng.integer(2, 6);
        const auto c = gen::pointed_cone(rng, dim, rng.integer(2, 8));
        const Vector e = monotone_direction(c, static_cast<std::uint64_t>(it));
        EXPECT_NEAR(e.norm(), 1.0, 1e-12);
        EXPECT_TRUE(contains(c, e));
        EXPECT_TRUE(dual_contains(c, e));
    }
}

TEST(ConeProperty, DualGeneratorsSpanDual) {
    gen::Rng rng(29);
    for (int it = 0; it < 100; ++it) {
        const int dim = rng.integer(2, 5);
        const auto c = gen::pointed_cone(rng, dim, rng.integer(dim, 7));
        const auto d = dual_generators(c);
        for (const auto& v : d) EXPECT_TRUE(dual_contains(c, v, 1e-8));
        // A vector is in C iff it is nonnegative against every dual generator.
        if (d.empty()) continue;
        for (int k = 0; k < 20; ++k) {
            const Vector a = rng.gaussian(dim);
            bool inside = true;
            for (const auto& v : d) inside = inside && v.dot(a) >= -1e-9;
            EXPECT_EQ(inside, contains(c, a, 1e-7)) << "dim " << dim;
        }
    }
}
