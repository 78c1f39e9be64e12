#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace ordlip {

/// x[to] - x[from] <= weight
struct DifferenceArc {
    std::size_t from = 0;
    std::size_t to = 0;
    double weight = 0.0;
};

struct DifferenceSolution {
    bool feasible = false;
    std::vector<double> x;                  // shortest-path potentials when feasible
    std::vector<std::size_t> negative_cycle; // node sequence of a negative cycle otherwise
    double cycle_weight = 0.0;
};

/// Bellman-Ford from `source`. A system of difference constraints is
/// feasible iff its constraint graph has no negative cycle; the cycle is the
/// Farkas certificate of infeasibility. Relaxations smaller than `eps` are
/// ignored, so cycles of weight within about nodes*eps of zero count as
/// feasible.
inline DifferenceSolution solve_difference_constraints(std::size_t nodes, const std::vector<DifferenceArc>& arcs,
                                                       std::size_t source, double eps = 1e-12) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(nodes, inf);
    std::vector<std::size_t> pred(nodes, nodes);
    dist[source] = 0.0;

    std::size_t last_relaxed = nodes;
    for (std::size_t round = 0; round < nodes; ++round) {
        last_relaxed = nodes;
        for (const auto& a : arcs) {
            if (dist[a.from] == inf) continue;
            const double cand = dist[a.from] + a.weight;
            if (cand < dist[a.to] - eps) {
                dist[a.to] = cand;
                pred[a.to] = a.from;
                last_relaxed = a.to;
            }
        }
        if (last_relaxed == nodes) break;
    }

    DifferenceSolution out;
    if (last_relaxed == nodes) {
        out.feasible = true;
        out.x = std::move(dist);
        return out;
    }

    // Walk back far enough to land on the cycle, then trace it.
    std::size_t v = last_relaxed;
    for (std::size_t i = 0; i < nodes; ++i) v = pred[v];
    std::vector<std::size_t> cycle{v};
    for (std::size_t u = pred[v]; u != v; u = pred[u]) cycle.push_back(u);
    std::reverse(cycle.begin(), cycle.end());

    double weight = 0.0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const std::size_t from = cycle[i];
        const std::size_t to = cycle[(i + 1) % cycle.size()];
        double best = inf;
        for (const auto& a : arcs) {
            if (a.from == from && a.to == to) best = std::min(best, a.weight);
        }
        weight += best;
    }
    out.feasible = false;
    out.negative_cycle = std::move(cycle);
    out.cycle_weight = weight;
    return out;
}

} // namespace ordlip
