#pragma once

#include <cmath>
#include <concepts>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ordlip {

/// A target space carrying an order-preserving geodesic ray σ with a
/// closed-form Busemann function B(a) = lim (d(a, σ(t)) - t).
template <class S>
concept RaySpace = requires(const S& s, const typename S::point_type& a, double t) {
    typename S::point_type;
    { s.distance(a, a) } -> std::convertible_to<double>;
    { s.ray(t) } -> std::same_as<typename S::point_type>;
    { s.distance_to_ray(a, t) } -> std::convertible_to<double>;
    { s.busemann(a) } -> std::convertible_to<double>;
    { s.dominates(a, a) } -> std::convertible_to<bool>;
    { s.ray_parameter(a) } -> std::same_as<std::optional<double>>;
    { s.name() } -> std::convertible_to<std::string>;
};

struct BusemannValue {
    double value = 0.0;
    double horizon = 0.0; // +inf for closed forms
    std::vector<double> horizons;
    std::vector<double> partials; // d(a, σ(T)) - T for each horizon T
};

inline std::vector<double> default_schedule() { return {1e1, 1e2, 1e3, 1e4, 1e5, 1e6}; }

/// Busemann value from its limit definition, evaluated at each horizon of an
/// increasing schedule. The partial values of any geodesic ray are
/// non-increasing in T; a rise beyond `tol * max(1, T)` means the distance
/// evaluation has lost precision and raises NumericInstabilityError.
template <RaySpace S>
BusemannValue busemann_limit(const S& space, const typename S::point_type& a,
                             const std::vector<double>& schedule = default_schedule(), double tol = 1e-9) {
    if (schedule.empty()) throw DomainError("busemann_limit: empty schedule");
    BusemannValue out;
    double prev_t = -1.0;
    for (double t : schedule) {
        if (!(t > prev_t) || t < 0.0) throw DomainError("busemann_limit: schedule must be increasing and nonnegative");
        const double partial = space.distance_to_ray(a, t) - t;
        if (!out.partials.empty() && partial > out.partials.back() + tol * std::max(1.0, t)) {
            throw NumericInstabilityError("busemann_limit: partial values increased with the horizon");
        }
        out.horizons.push_back(t);
        out.partials.push_back(partial);
        prev_t = t;
    }
    out.value = out.partials.back();
    out.horizon = out.horizons.back();
    return out;
}

template <RaySpace S>
BusemannValue busemann_closed(const S& space, const typename S::point_type& a) {
    BusemannValue out;
    out.value = space.busemann(a);
    out.horizon = std::numeric_limits<double>::infinity();
    return out;
}

/// The ray order: a ⪰ b iff both lie on σ and σ⁻¹(a) >= σ⁻¹(b). Points off
/// the ray are comparable only to themselves.
template <RaySpace S>
bool ray_order(const S& space, const typename S::point_type& a, const typename S::point_type& b, double tol = 1e-9) {
    const auto ta = space.ray_parameter(a);
    const auto tb = space.ray_parameter(b);
    if (ta && tb) return *ta >= *tb - tol;
    return space.distance(a, b) <= tol;
}

/// Wraps a space so that its order becomes the ray order of its own σ.
template <RaySpace S>
class RayOrdered {
public:
    using point_type = typename S::point_type;

    explicit RayOrdered(S base, double tol = 1e-9) : base_(std::move(base)), tol_(tol) {}

    double distance(const point_type& a, const point_type& b) const { return base_.distance(a, b); }
    point_type ray(double t) const { return base_.ray(t); }
    double distance_to_ray(const point_type& a, double t) const { return base_.distance_to_ray(a, t); }
    double busemann(const point_type& a) const { return base_.busemann(a); }
    bool dominates(const point_type& a, const point_type& b) const { return ray_order(base_, a, b, tol_); }
    std::optional<double> ray_parameter(const point_type& a) const { return base_.ray_parameter(a); }
    std::string name() const { return base_.name() + "+ray-order"; }

    const S& base() const { return base_; }

private:
    S base_;
    double tol_;
};

} // namespace ordlip
