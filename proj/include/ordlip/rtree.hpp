#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "ray_space.hpp"

namespace ordlip {

/// A point of a metric tree. `below` is the child endpoint of the edge the
/// point lies on and `s` its distance from the parent endpoint, s in
/// (0, length]. The root is {root, 0}.
struct TreePoint {
    std::size_t below = 0;
    double s = 0.0;

    friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

struct Hitting {
    double t = 0.0;   // hitting time t_a
    TreePoint merge;  // m_a = σ(t_a)
};

/// A finite metric tree with a geodesic ray. The ray starts at `root` and
/// follows the tree path to the leaf `end`; the edge into `end` is treated as
/// unbounded, so `end` itself is the ray's point at infinity and is not a
/// point of the space. The order is a ⪰ b iff a lies on [b, σ(t)] for some t.
class RTree {
public:
    using point_type = TreePoint;

    struct Edge {
        std::size_t u = 0;
        std::size_t v = 0;
        double length = 0.0;
    };

    RTree(std::vector<std::string> vertices, std::vector<Edge> edges, std::size_t root, std::size_t end,
          double tol = 1e-9)
        : ids_(std::move(vertices)), edges_(std::move(edges)), root_(root), end_(end), tol_(tol) {
        build();
    }

    std::size_t vertex_count() const { return ids_.size(); }
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t root() const { return root_; }
    std::size_t end() const { return end_; }
    std::size_t parent(std::size_t v) const { return parent_[v]; }
    bool vertex_on_ray(std::size_t v) const { return on_ray_[v] != 0; }
    bool is_unbounded_edge(std::size_t e) const { return edges_[e].u == end_ || edges_[e].v == end_; }

    /// Every vertex except `end` is a point of the space.
    TreePoint vertex(std::size_t v) const {
        if (v >= ids_.size()) throw StructuralError("RTree: vertex index out of range");
        if (v == end_) throw DomainError("RTree: the end vertex lies at infinity");
        if (v == root_) return {root_, 0.0};
        return {v, parent_len_[v]};
    }

    /// Offset is measured from the edge's first endpoint, except on the
    /// unbounded edge where it is measured from the endpoint that is not `end`.
    TreePoint on_edge(std::size_t e, double offset) const {
        if (e >= edges_.size()) throw StructuralError("RTree: edge index out of range");
        const Edge& ed = edges_[e];
        const std::size_t child = parent_[ed.u] == ed.v && ed.u != root_ ? ed.u : ed.v;
        const std::size_t par = child == ed.u ? ed.v : ed.u;
        if (!std::isfinite(offset) || offset < 0.0) throw StructuralError("RTree: offset must be nonnegative");
        double s = 0.0;
        if (child == end_) {
            s = offset;
        } else {
            if (offset > ed.length) throw StructuralError("RTree: offset exceeds edge length");
            s = par == ed.u ? offset : ed.length - offset;
        }
        if (s == 0.0) return vertex(par);
        return {child, s};
    }

    void check(const TreePoint& p) const {
        if (p.below >= ids_.size()) throw StructuralError("RTree: invalid point address");
        if (p.below == root_) {
            if (p.s != 0.0) throw StructuralError("RTree: invalid point address");
            return;
        }
        const double len = p.below == end_ ? std::numeric_limits<double>::infinity() : parent_len_[p.below];
        if (!(p.s > 0.0) || p.s > len) throw StructuralError("RTree: invalid point address");
    }

    /// Distance from the root.
    double depth(const TreePoint& p) const { return p.below == root_ ? 0.0 : depth_[parent_[p.below]] + p.s; }

    double distance(const TreePoint& a, const TreePoint& b) const {
        check(a);
        check(b);
        if (a.below == b.below) return std::abs(a.s - b.s);
        if (is_ancestor(a.below, b.below)) return depth(b) - depth(a);
        if (is_ancestor(b.below, a.below)) return depth(a) - depth(b);
        const std::size_t l = lca(a.below, b.below);
        return depth(a) + depth(b) - 2.0 * depth_[l];
    }

    TreePoint ray(double t) const {
        if (t < 0.0) throw DomainError("RTree: ray parameter must be nonnegative");
        if (t == 0.0) return {root_, 0.0};
        for (std::size_t i = 1; i < ray_path_.size(); ++i) {
            const std::size_t v = ray_path_[i];
            const double top = depth_[parent_[v]];
            if (v == end_ || t <= depth_[v]) return {v, t - top};
        }
        return {end_, t};
    }

    double distance_to_ray(const TreePoint& a, double t) const { return distance(a, ray(t)); }

    bool on_ray(const TreePoint& p) const { return p.below == root_ || on_ray_[p.below] != 0; }

    std::optional<double> ray_parameter(const TreePoint& p) const {
        check(p);
        if (!on_ray(p)) return std::nullopt;
        return depth(p);
    }

    /// Hitting time t_a and merge point m_a of the path from a into the ray.
    Hitting hitting(const TreePoint& a) const {
        check(a);
        if (on_ray(a)) return {depth(a), a};
        const std::size_t w = ray_anchor_[a.below];
        return {depth_[w], vertex(w)};
    }

    /// B(a) = d(a, m_a) - t_a.
    double busemann(const TreePoint& a) const {
        const Hitting h = hitting(a);
        return distance(a, h.merge) - h.t;
    }

    /// Path-based order: a lies on the segment from b up to m_b, or on the
    /// ray at or beyond m_b.
    bool dominates(const TreePoint& a, const TreePoint& b) const {
        check(a);
        check(b);
        const Hitting hb = hitting(b);
        if (on_ray(a)) return depth(a) >= hb.t - tol_;
        if (a.below == b.below) return a.s <= b.s + tol_;
        return is_ancestor(a.below, b.below);
    }

    /// Order via B(b) - B(a) = d(a, b).
    bool dominates_by_busemann(const TreePoint& a, const TreePoint& b) const {
        const double gap = busemann(b) - busemann(a) - distance(a, b);
        return std::abs(gap) <= tol_ * std::max(1.0, depth(a) + depth(b));
    }

    /// The point at fraction lambda of the way along the geodesic from a to b.
    TreePoint along(const TreePoint& a, const TreePoint& b, double lambda) const {
        check(a);
        check(b);
        const double d = distance(a, b);
        const double delta = lambda * d;
        if (a.below == b.below) return normalized({a.below, a.s + lambda * (b.s - a.s)});
        if (is_ancestor(a.below, b.below)) return move_up(b, d - delta);
        if (is_ancestor(b.below, a.below)) return move_up(a, delta);
        const double up_a = depth(a) - depth_[lca(a.below, b.below)];
        return delta <= up_a ? move_up(a, delta) : move_up(b, d - delta);
    }

    std::string name() const { return "rtree"; }

private:
    bool is_ancestor(std::size_t a, std::size_t b) const { return tin_[a] <= tin_[b] && tout_[b] <= tout_[a]; }

    std::size_t lca(std::size_t a, std::size_t b) const {
        while (!is_ancestor(a, b)) a = parent_[a];
        return a;
    }

    TreePoint normalized(TreePoint p) const {
        if (p.below != root_ && p.s <= 0.0) return vertex(parent_[p.below]);
        return p;
    }

    TreePoint move_up(TreePoint p, double delta) const {
        while (delta > 0.0 && p.below != root_) {
            if (delta < p.s) return {p.below, p.s - delta};
            delta -= p.s;
            p = vertex(parent_[p.below]);
        }
        return p;
    }

    void build() {
        const std::size_t n = ids_.size();
        if (n < 2) throw StructuralError("RTree: need at least two vertices");
        if (root_ >= n || end_ >= n) throw StructuralError("RTree: root or end out of range");
        if (root_ == end_) throw StructuralError("RTree: root and end must differ");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (ids_[i] == ids_[j]) throw StructuralError("RTree: duplicate vertex id '" + ids_[i] + "'");
            }
        }
        std::vector<std::size_t> uf(n);
        std::iota(uf.begin(), uf.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
        for (const auto& e : edges_) {
            if (e.u >= n || e.v >= n) throw StructuralError("RTree: edge endpoint out of range");
            if (!std::isfinite(e.length) || !(e.length > 0.0)) throw StructuralError("RTree: edge lengths must be positive");
            const auto ru = find(e.u);
            const auto rv = find(e.v);
            if (ru == rv) throw StructuralError("RTree: edges not acyclic");
            uf[ru] = rv;
            adj[e.u].emplace_back(e.v, e.length);
            adj[e.v].emplace_back(e.u, e.length);
        }
        if (edges_.size() + 1 != n) throw StructuralError("RTree: edges not connected");
        if (adj[end_].size() != 1) throw StructuralError("RTree: end must be a leaf");

        parent_.assign(n, n);
        parent_len_.assign(n, 0.0);
        depth_.assign(n, 0.0);
        tin_.assign(n, 0);
        tout_.assign(n, 0);
        parent_[root_] = root_;
        std::size_t clock = 0;
        // Iterative DFS recording entry/exit times.
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root_, 0}};
        tin_[root_] = clock++;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[v].size()) {
                const auto [w, len] = adj[v][next++];
                if (w == parent_[v] && v != root_) continue;
                if (w == root_) continue;
                parent_[w] = v;
                parent_len_[w] = len;
                depth_[w] = w == end_ ? std::numeric_limits<double>::infinity() : depth_[v] + len;
                tin_[w] = clock++;
                stack.emplace_back(w, 0);
            } else {
                tout_[v] = clock++;
                stack.pop_back();
            }
        }
        parent_len_[end_] = std::numeric_limits<double>::infinity();

        on_ray_.assign(n, 0);
        for (std::size_t v = end_;; v = parent_[v]) {
            on_ray_[v] = 1;
            ray_path_.push_back(v);
            if (v == root_) break;
        }
        std::reverse(ray_path_.begin(), ray_path_.end());
        ray_anchor_.assign(n, root_);
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t w = v;
            while (!on_ray_[w]) w = parent_[w];
            ray_anchor_[v] = w;
        }
    }

    std::vector<std::string> ids_;
    std::vector<Edge> edges_;
    std::size_t root_;
    std::size_t end_;
    double tol_;

    std::vector<std::size_t> parent_;
    std::vector<double> parent_len_;
    std::vector<double> depth_;
    std::vector<std::size_t> tin_, tout_;
    std::vector<unsigned char> on_ray_;
    std::vector<std::size_t> ray_path_;
    std::vector<std::size_t> ray_anchor_;
};

inline Hitting rtree_hitting(const RTree& tree, const TreePoint& a) { return tree.hitting(a); }
inline double rtree_busemann(const RTree& tree, const TreePoint& a) { return tree.busemann(a); }

/// Both order predicates; they agree on every pair of points.
inline bool rtree_order(const RTree& tree, const TreePoint& a, const TreePoint& b) { return tree.dominates(a, b); }
inline bool rtree_order_busemann(const RTree& tree, const TreePoint& a, const TreePoint& b) {
    return tree.dominates_by_busemann(a, b);
}

} // namespace ordlip
