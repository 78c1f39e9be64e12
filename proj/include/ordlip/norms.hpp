#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"

namespace ordlip {

enum class NormTag { L1, L2, LInf };

inline std::string to_string(NormTag tag) {
    switch (tag) {
    case NormTag::L1: return "l1";
    case NormTag::L2: return "l2";
    case NormTag::LInf: return "linf";
    }
    return "?";
}

inline NormTag norm_from_string(const std::string& s) {
    if (s == "l1") return NormTag::L1;
    if (s == "l2") return NormTag::L2;
    if (s == "linf") return NormTag::LInf;
    throw StructuralError("unknown norm '" + s + "' (expected l1, l2 or linf)");
}

inline double norm(const Vector& v, NormTag tag) {
    switch (tag) {
    case NormTag::L1: return v.lpNorm<1>();
    case NormTag::L2: return v.norm();
    case NormTag::LInf: return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
    }
    return v.norm();
}

// Norm of a linear functional <w, .> with respect to `tag`.
inline double dual_norm(const Vector& w, NormTag tag) {
    switch (tag) {
    case NormTag::L1: return w.size() == 0 ? 0.0 : w.lpNorm<Eigen::Infinity>();
    case NormTag::L2: return w.norm();
    case NormTag::LInf: return w.lpNorm<1>();
    }
    return w.norm();
}

// Euclidean projection onto the centered `tag`-ball of the given radius.
inline Vector project_ball(const Vector& v, double radius, NormTag tag) {
    if (radius <= 0.0) return Vector::Zero(v.size());
    switch (tag) {
    case NormTag::L2: {
        const double n = v.norm();
        return n <= radius ? v : Vector(v * (radius / n));
    }
    case NormTag::LInf:
        return v.cwiseMax(-radius).cwiseMin(radius);
    case NormTag::L1: {
        if (v.lpNorm<1>() <= radius) return v;
        // Simplex projection of |v| followed by sign restoration.
        std::vector<double> u(static_cast<std::size_t>(v.size()));
        for (Eigen::Index i = 0; i < v.size(); ++i) u[static_cast<std::size_t>(i)] = std::abs(v(i));
        std::sort(u.begin(), u.end(), std::greater<>());
        double cum = 0.0;
        double theta = 0.0;
        for (std::size_t j = 0; j < u.size(); ++j) {
            cum += u[j];
            const double t = (cum - radius) / static_cast<double>(j + 1);
            if (u[j] - t > 0.0) theta = t;
        }
        Vector out(v.size());
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            const double mag = std::max(std::abs(v(i)) - theta, 0.0);
            out(i) = v(i) < 0.0 ? -mag : mag;
        }
        return out;
    }
    }
    return v;
}

} // namespace ordlip
