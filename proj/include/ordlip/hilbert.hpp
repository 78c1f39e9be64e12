#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "cone.hpp"
#include "ray_space.hpp"

namespace ordlip {

/// R^m with the Euclidean metric, the order of a pointed cone C and the
/// ray σ(t) = t e for a unit e in C ∩ C*. Then B(a) = -<a, e>.
class HilbertRay {
public:
    using point_type = Vector;

    HilbertRay(ConeOrder cone, Vector e, double tol = 1e-9) : cone_(std::move(cone)), e_(std::move(e)), tol_(tol) {
        if (e_.size() != cone_.dim()) throw StructuralError("HilbertRay: direction has wrong dimension");
        if (std::abs(e_.norm() - 1.0) > 1e-9) throw DomainError("HilbertRay: direction must be a unit vector");
        if (!contains(cone_, e_, 1e-9) || !dual_contains(cone_, e_, 1e-9)) {
            throw HypothesisError("HilbertRay: direction must lie in C ∩ C* for the Busemann function to be decreasing");
        }
    }

    static HilbertRay from_cone(const ConeOrder& cone, std::uint64_t seed = 0) {
        return HilbertRay(cone, monotone_direction(cone, seed));
    }

    const ConeOrder& cone() const { return cone_; }
    const Vector& direction() const { return e_; }
    int dim() const { return cone_.dim(); }

    double distance(const Vector& a, const Vector& b) const { return (a - b).norm(); }
    Vector ray(double t) const { return t * e_; }
    double distance_to_ray(const Vector& a, double t) const { return (a - t * e_).norm(); }
    double busemann(const Vector& a) const { return -a.dot(e_); }
    bool dominates(const Vector& a, const Vector& b) const { return ordlip::dominates(cone_, a, b, tol_); }

    std::optional<double> ray_parameter(const Vector& a) const {
        const double t = a.dot(e_);
        if (t < -tol_) return std::nullopt;
        if ((a - std::max(t, 0.0) * e_).norm() > tol_ * std::max(1.0, std::abs(t))) return std::nullopt;
        return std::max(t, 0.0);
    }

    std::string name() const { return "hilbert"; }

private:
    ConeOrder cone_;
    Vector e_;
    double tol_;
};

inline double hilbert_busemann(const HilbertRay& ray, const Vector& a) {
    if (a.size() != ray.dim()) throw StructuralError("hilbert_busemann: point has wrong dimension");
    return ray.busemann(a);
}

} // namespace ordlip
