#include <gtest/gtest.h>

#include <cmath>

#include "gen.hpp"
#include "ordlip/hilbert.hpp"
#include "ordlip/hyperbolic.hpp"
#include "ordlip/ray_space.hpp"
#include "ordlip/rtree.hpp"

using namespace ordlip;

static_assert(RaySpace<HilbertRay>);
static_assert(RaySpace<HalfSpaceHn>);
static_assert(RaySpace<RTree>);
static_assert(RaySpace<RayOrdered<HalfSpaceHn>>);

namespace {

HilbertRay vertical_ray() { return HilbertRay(ConeOrder::orthant(2), Vector{{0.0, 1.0}}); }

// Hyperbolic length of the geodesic between two points of the upper
// half-plane, integrated along the semicircle (or vertical line) through them.
double integrated_length(double x1, double h1, double x2, double h2) {
    const int steps = 200000;
    if (std::abs(x1 - x2) < 1e-15) return std::abs(std::log(h2 / h1));
    const double c = ((x2 * x2 + h2 * h2) - (x1 * x1 + h1 * h1)) / (2.0 * (x2 - x1));
    const double r = std::hypot(x1 - c, h1);
    const double a1 = std::atan2(h1, x1 - c);
    const double a2 = std::atan2(h2, x2 - c);
    // ds / y = r dθ / (r sin θ); Simpson on 1/sin.
    const double h = (a2 - a1) / steps;
    double sum = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w / std::sin(a1 + i * h);
    }
    return std::abs(sum * h / 3.0);
}

// Tree from the concrete example: root r, ray r - a - end, side branch a - b.
RTree small_tree() {
    return RTree({"r", "a", "b", "end"}, {{0, 1, 2.0}, {1, 2, 1.5}, {1, 3, 1.0}}, 0, 3);
}

} // namespace

TEST(Hilbert, ClosedFormExamples) {
    const auto ray = vertical_ray();
    EXPECT_DOUBLE_EQ(hilbert_busemann(ray, Vector{{3.0, 4.0}}), -4.0);
    EXPECT_DOUBLE_EQ(hilbert_busemann(ray, Vector{{7.0, 0.0}}), 0.0);
}

TEST(Hilbert, LimitOracle) {
    const auto ray = vertical_ray();
    const auto base = busemann_limit(ray, Vector{{0.0, 0.0}});
    for (double p : base.partials) EXPECT_NEAR(p, 0.0, 1e-12);
    const auto on = busemann_limit(ray, Vector{{0.0, 5.0}});
    for (double p : on.partials) EXPECT_NEAR(p, -5.0, 1e-9);
    EXPECT_NEAR(busemann_limit(ray, Vector{{3.0, 4.0}}, {1e4}).value, -4.0, 1e-2);
    EXPECT_TRUE(std::isinf(busemann_closed(ray, Vector{{3.0, 4.0}}).horizon));
}

TEST(Hilbert, RejectsBadDirection) {
    EXPECT_THROW(HilbertRay(ConeOrder::orthant(2), Vector{{1.0, 1.0}}), DomainError);
    const auto narrow = ConeOrder::from_generators(2, {Vector{{1.0, 3.0}}, Vector{{1.0, 4.0}}});
    EXPECT_THROW(HilbertRay(narrow, Vector{{0.0, 1.0}}), HypothesisError);
}

TEST(Hilbert, BusemannIsDecreasingOnComparablePairs) {
    gen::Rng rng(31);
    for (int it = 0; it < 30; ++it) {
        const int dim = rng.integer(2, 5);
        const auto c = gen::pointed_cone(rng, dim, rng.integer(2, 6));
        const auto ray = HilbertRay::from_cone(c);
        for (int k = 0; k < 50; ++k) {
            const Vector b = rng.gaussian(dim);
            Vector step = Vector::Zero(dim);
            for (const auto& g : *c.generators()) step += rng.uniform(0.0, 1.0) * g;
            EXPECT_LE(ray.busemann(b + step), ray.busemann(b) + 1e-12);
        }
    }
}

TEST(Hyperbolic, DistanceMatchesGeodesicIntegration) {
    const HalfSpaceHn H(2);
    gen::Rng rng(41);
    for (int it = 0; it < 20; ++it) {
        const double x1 = rng.uniform(-2, 2), x2 = rng.uniform(-2, 2);
        const double h1 = rng.uniform(0.2, 3), h2 = rng.uniform(0.2, 3);
        const double d = H.distance(Vector{{x1, h1}}, Vector{{x2, h2}});
        EXPECT_NEAR(d, integrated_length(x1, h1, x2, h2), 1e-7);
        EXPECT_NEAR(d, std::acosh(1.0 + ((x1 - x2) * (x1 - x2) + (h1 - h2) * (h1 - h2)) / (2 * h1 * h2)), 1e-9);
    }
}

TEST(Hyperbolic, VerticalDistanceAndBusemann) {
    const HalfSpaceHn H(3);
    EXPECT_NEAR(H.distance(Vector{{0, 0, 1}}, Vector{{0, 0, std::exp(2.0)}}), 2.0, 1e-12);
    EXPECT_NEAR(H.busemann(Vector{{5, -1, std::exp(1.5)}}), -1.5, 1e-12);
    EXPECT_NEAR(H.busemann(H.ray(3.0)), -3.0, 1e-12);
    EXPECT_THROW(H.busemann(Vector{{0, 0, -1}}), DomainError);
    EXPECT_THROW(HalfSpaceHn(1), DomainError);
}

TEST(Hyperbolic, LimitOracleAgrees) {
    const HalfSpaceHn H(2);
    gen::Rng rng(43);
    for (int it = 0; it < 100; ++it) {
        const Vector a{{rng.uniform(-3, 3), rng.uniform(0.1, 10)}};
        EXPECT_NEAR(busemann_limit(H, a, {10, 100, 1000, 1e4}).value, H.busemann(a), 1e-4);
    }
}

TEST(Hyperbolic, FarHorizonIsStable) {
    const HalfSpaceHn H(2);
    const Vector a{{1.0, 0.5}};
    const auto v = busemann_limit(H, a, {1e2, 1e3, 1e4, 1e5, 1e6});
    EXPECT_NEAR(v.value, H.busemann(a), 1e-6);
}

TEST(Hyperbolic, OrderIsVertical) {
    const HalfSpaceHn H(2);
    EXPECT_TRUE(H.dominates(Vector{{1, 3}}, Vector{{1, 2}}));
    EXPECT_FALSE(H.dominates(Vector{{1, 3}}, Vector{{1.5, 2}}));
    EXPECT_FALSE(H.dominates(Vector{{1, 1}}, Vector{{1, 2}}));
}

TEST(RayOrder, OnlyRayPointsCompare) {
    const RayOrdered<HalfSpaceHn> R(HalfSpaceHn(2));
    EXPECT_TRUE(R.dominates(R.ray(2.0), R.ray(1.0)));
    EXPECT_FALSE(R.dominates(R.ray(1.0), R.ray(2.0)));
    EXPECT_FALSE(R.dominates(Vector{{0.5, 3.0}}, R.ray(0.0)));
    EXPECT_TRUE(R.dominates(Vector{{0.5, 3.0}}, Vector{{0.5, 3.0}}));
}

TEST(Busemann, InstabilityDetected) {
    struct Noisy {
        using point_type = Vector;
        double distance(const Vector&, const Vector&) const { return 0.0; }
        Vector ray(double t) const { return Vector::Constant(1, t); }
        double distance_to_ray(const Vector&, double t) const { return t + (t > 50 ? 1.0 : 0.0); }
        double busemann(const Vector&) const { return 0.0; }
        bool dominates(const Vector&, const Vector&) const { return true; }
        std::optional<double> ray_parameter(const Vector&) const { return std::nullopt; }
        std::string name() const { return "noisy"; }
    };
    EXPECT_THROW(busemann_limit(Noisy{}, Vector::Zero(1)), NumericInstabilityError);
    EXPECT_THROW(busemann_limit(Noisy{}, Vector::Zero(1), {10, 5}), DomainError);
}

TEST(RTree, ValidationMessages) {
    auto msg = [](auto&& make) {
        try {
            make();
        } catch (const Error& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(msg([] { RTree({"a", "b", "c"}, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}}, 0, 2); }).find("edges not acyclic"),
              std::string::npos);
    EXPECT_NE(msg([] { RTree({"a", "b", "c", "d"}, {{0, 1, 1.0}, {2, 3, 1.0}}, 0, 1); }).find("edges not connected"),
              std::string::npos);
    EXPECT_THROW(RTree({"a", "b"}, {{0, 1, 1.0}}, 0, 0), StructuralError);
    EXPECT_THROW(RTree({"a", "b"}, {{0, 1, -1.0}}, 0, 1), StructuralError);
}

TEST(RTree, HittingAndBusemann) {
    const auto T = small_tree();
    const TreePoint b = T.vertex(2);
    const Hitting h = T.hitting(b);
    EXPECT_DOUBLE_EQ(h.t, 2.0);
    EXPECT_DOUBLE_EQ(T.busemann(b), 1.5 - 2.0);
    EXPECT_DOUBLE_EQ(T.busemann(T.ray(7.0)), -7.0);
    EXPECT_DOUBLE_EQ(T.distance(b, T.ray(5.0)), 1.5 + 3.0);
    EXPECT_THROW(T.vertex(3), DomainError);
}

TEST(RTree, OrderAlongBranch) {
    const auto T = small_tree();
    const TreePoint b = T.vertex(2);
    const TreePoint mid = T.on_edge(1, 0.5); // 0.5 along a -> b
    EXPECT_TRUE(T.dominates(mid, b));
    EXPECT_FALSE(T.dominates(b, mid));
    EXPECT_TRUE(T.dominates(T.ray(2.5), b));
    EXPECT_FALSE(T.dominates(T.ray(1.0), b));
    EXPECT_FALSE(T.dominates(T.vertex(0), mid));
}

TEST(RTree, EdgeAddressing) {
    const auto T = small_tree();
    const TreePoint p = T.on_edge(2, 4.0); // unbounded edge, 4 past a
    EXPECT_DOUBLE_EQ(T.depth(p), 6.0);
    EXPECT_EQ(T.ray_parameter(p).value(), 6.0);
    EXPECT_THROW(T.on_edge(0, 3.0), StructuralError);
    EXPECT_FALSE(T.ray_parameter(T.vertex(2)).has_value());
}

// Property: on random trees the path order equals the Busemann order, the
// limit oracle is exact beyond the hitting time, and geodesics between
// comparable points stay comparable.
TEST(RTreeProperty, OrderCharacterizations) {
    gen::Rng rng(53);
    for (int it = 0; it < 40; ++it) {
        const auto T = gen::random_tree(rng, rng.integer(2, 25));
        std::vector<TreePoint> pts;
        for (std::size_t v = 0; v < T.vertex_count(); ++v)
            if (v != T.end()) pts.push_back(T.vertex(v));
        for (std::size_t e = 0; e < T.edges().size(); ++e) {
            const double len = T.is_unbounded_edge(e) ? 3.0 : T.edges()[e].length;
            pts.push_back(T.on_edge(e, 0.5 * len));
        }
        for (const auto& a : pts) {
            const double t_a = T.hitting(a).t;
            for (double horizon : {t_a + 1.0, t_a + 10.0, t_a + 1000.0})
                EXPECT_NEAR(T.distance_to_ray(a, horizon) - horizon, T.busemann(a), 1e-9);
            for (const auto& b : pts) {
                ASSERT_EQ(T.dominates(a, b), T.dominates_by_busemann(a, b));
                if (!T.dominates(a, b)) continue;
                for (double lam : {0.1, 0.5, 0.9}) {
                    const TreePoint c = T.along(b, a, lam);
                    EXPECT_TRUE(T.dominates(a, c));
                    EXPECT_TRUE(T.dominates(c, b));
                    EXPECT_NEAR(T.distance(b, c), lam * T.distance(a, b), 1e-9);
                }
            }
        }
    }
}

// Property: the triangle inequality and 1-Lipschitz Busemann on trees.
TEST(RTreeProperty, MetricAndLipschitz) {
    gen::Rng rng(59);
    for (int it = 0; it < 30; ++it) {
        const auto T = gen::random_tree(rng, rng.integer(2, 20));
        std::vector<TreePoint> pts;
        for (std::size_t v = 0; v < T.vertex_count(); ++v)
            if (v != T.end()) pts.push_back(T.vertex(v));
        for (const auto& a : pts)
            for (const auto& b : pts) {
                EXPECT_LE(std::abs(T.busemann(a) - T.busemann(b)), T.distance(a, b) + 1e-12);
                for (const auto& c : pts) EXPECT_LE(T.distance(a, c), T.distance(a, b) + T.distance(b, c) + 1e-12);
            }
    }
}
