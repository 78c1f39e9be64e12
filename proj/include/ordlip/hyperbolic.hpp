#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "config.hpp"
#include "errors.hpp"
#include "ray_space.hpp"

namespace ordlip {

/// Hyperbolic n-space in the upper half-space model. Points are
/// (x_1, ..., x_{n-1}, h) with h > 0, the ray is the vertical geodesic
/// σ(t) = (0, ..., 0, e^t), and a ⪰ b iff a and b share their horizontal
/// coordinates and h(a) >= h(b). In this model B(a) = -log h(a).
///
/// Note: the vertical ray and the -log h Busemann function are exact in the
/// half-space model; (0, ..., 0, e^t) is not a point of the hyperboloid
/// <a, a>_L = -1, so the hyperboloid reading of the same formulas is not used.
class HalfSpaceHn {
public:
    using point_type = Vector;

    explicit HalfSpaceHn(int n, double tol = 1e-9) : n_(n), tol_(tol) {
        if (n < 2) throw DomainError("HalfSpaceHn: dimension must be at least 2");
    }

    int dim() const { return n_; }

    void check(const Vector& a) const {
        if (a.size() != n_) throw StructuralError("HalfSpaceHn: point has wrong dimension");
        if (!(a(n_ - 1) > 0.0) || !a.allFinite()) throw DomainError("HalfSpaceHn: height must be positive");
    }

    static double height(const Vector& a) { return a(a.size() - 1); }

    // d = 2 asinh(|a - b| / (2 sqrt(h_a h_b))), equivalent to
    // arcosh(1 + |a - b|^2 / (2 h_a h_b)) and accurate near a = b.
    double distance(const Vector& a, const Vector& b) const {
        check(a);
        check(b);
        const double gap = (a - b).norm();
        return 2.0 * std::asinh(gap / (2.0 * std::sqrt(height(a) * height(b))));
    }

    Vector ray(double t) const {
        Vector p = Vector::Zero(n_);
        p(n_ - 1) = std::exp(t);
        return p;
    }

    // Overflow-free d(a, σ(t)). With E = e^t, cosh d = (|x|^2 + h^2 + E^2) / (2 h E).
    double distance_to_ray(const Vector& a, double t) const {
        check(a);
        if (t < 700.0) return distance(a, ray(t));
        const double h = height(a);
        const double rest = a.head(n_ - 1).squaredNorm() + h * h;
        const double log_num = 2.0 * t + std::log1p(rest * std::exp(-2.0 * t));
        const double log_z = log_num - std::log(2.0 * h) - t;
        const double inv_z2 = std::exp(-2.0 * log_z);
        return log_z + std::log1p(std::sqrt(std::max(0.0, 1.0 - inv_z2)));
    }

    double busemann(const Vector& a) const {
        check(a);
        return -std::log(height(a));
    }

    bool dominates(const Vector& a, const Vector& b) const {
        check(a);
        check(b);
        for (int i = 0; i + 1 < n_; ++i) {
            if (std::abs(a(i) - b(i)) > tol_) return false;
        }
        return height(a) >= height(b) - tol_;
    }

    std::optional<double> ray_parameter(const Vector& a) const {
        check(a);
        if (a.head(n_ - 1).norm() > tol_) return std::nullopt;
        const double t = std::log(height(a));
        if (t < -tol_) return std::nullopt;
        return std::max(t, 0.0);
    }

    std::string name() const { return "hyperbolic"; }

private:
    int n_;
    double tol_;
};

inline double hn_distance(const HalfSpaceHn& space, const Vector& a, const Vector& b) { return space.distance(a, b); }
inline double hn_busemann(const HalfSpaceHn& space, const Vector& a) { return space.busemann(a); }
inline bool hn_order(const HalfSpaceHn& space, const Vector& a, const Vector& b) { return space.dominates(a, b); }

} // namespace ordlip
