#pragma once

#include <cmath>
#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ordlip/cone.hpp"
#include "ordlip/extension.hpp"
#include "ordlip/poset.hpp"
#include "ordlip/rtree.hpp"

namespace gen {

using ordlip::Matrix;
using ordlip::Vector;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(eng); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng); }
    int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(eng); }
    bool coin(double p = 0.5) { return uniform(0.0, 1.0) < p; }

    Vector gaussian(int dim) {
        Vector v(dim);
        for (int i = 0; i < dim; ++i) v(i) = normal();
        return v;
    }
    Vector box(int dim, double a, double b) {
        Vector v(dim);
        for (int i = 0; i < dim; ++i) v(i) = uniform(a, b);
        return v;
    }
};

// Generators within a fixed angle of a random axis, so the cone is pointed.
inline ordlip::ConeOrder pointed_cone(Rng& rng, int dim, int count) {
    Vector axis = rng.gaussian(dim).normalized();
    std::vector<Vector> gens;
    while (static_cast<int>(gens.size()) < count) {
        const Vector g = (axis + 0.6 * rng.gaussian(dim) / std::sqrt(double(dim))).normalized();
        if (g.dot(axis) > 0.2) gens.push_back(g);
    }
    return ordlip::ConeOrder::from_generators(dim, gens);
}

// Random points with a random cone order (possibly trivial).
inline ordlip::FiniteMetricPoset point_poset(Rng& rng, int n, int dim, const ordlip::ConeOrder& cone, double scale = 3.0) {
    std::vector<Vector> pts;
    for (int i = 0; i < n; ++i) {
        Vector p(dim);
        for (int k = 0; k < dim; ++k) p(k) = std::round(rng.uniform(-scale, scale) * 4.0) / 4.0;
        bool dup = false;
        for (const auto& q : pts) dup = dup || (q - p).norm() < 1e-12;
        if (dup) {
            --i;
            continue;
        }
        pts.push_back(p);
    }
    return ordlip::poset_from_points(pts, cone);
}

// Random metric (shortest paths of a random weighted complete graph) with a
// random order from a random DAG closed transitively.
inline ordlip::FiniteMetricPoset random_poset(Rng& rng, int n, double edge_p = 0.3) {
    Matrix d(n, n);
    for (int i = 0; i < n; ++i) {
        d(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) d(i, j) = d(j, i) = rng.uniform(0.5, 3.0);
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng.eng);
    std::vector<std::vector<bool>> ge(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.coin(edge_p)) ge[static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (ge[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && ge[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    ge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    std::vector<ordlip::IndexPair> order;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back("v" + std::to_string(i));
        for (int j = 0; j < n; ++j)
            if (i != j && ge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) order.emplace_back(std::size_t(i), std::size_t(j));
    }
    return {labels, d, order};
}

// Chain t_0 < ... < t_{n-1} on the line, plus optional trivial-order
// points: both kinds are radial.
inline ordlip::FiniteMetricPoset radial_chain(Rng& rng, int n) {
    std::vector<double> t;
    double x = rng.uniform(-5.0, 0.0);
    for (int i = 0; i < n; ++i) {
        t.push_back(x);
        x += rng.uniform(0.2, 2.0);
    }
    return ordlip::line_poset(t);
}

inline ordlip::FiniteMetricPoset trivial_poset(Rng& rng, int n, int dim) {
    return point_poset(rng, n, dim, ordlip::ConeOrder::trivial(dim));
}

// Random tree on n vertices: vertex i > 0 hangs off a random earlier vertex;
// a fresh leaf `end` is attached to a random vertex.
inline ordlip::RTree random_tree(Rng& rng, int n) {
    std::vector<std::string> ids;
    std::vector<ordlip::RTree::Edge> edges;
    for (int i = 0; i < n; ++i) ids.push_back("t" + std::to_string(i));
    for (int i = 1; i < n; ++i) {
        const int p = rng.integer(0, i - 1);
        edges.push_back({std::size_t(p), std::size_t(i), std::round(rng.uniform(0.25, 3.0) * 4.0) / 4.0});
    }
    // Attach the end to the deepest-indexed vertex not equal to the root so the ray has some length.
    const int at = n > 1 ? rng.integer(1, n - 1) : 0;
    ids.push_back("end");
    edges.push_back({std::size_t(at), std::size_t(n), 1.0});
    return ordlip::RTree(ids, edges, 0, std::size_t(n));
}

} // namespace gen
