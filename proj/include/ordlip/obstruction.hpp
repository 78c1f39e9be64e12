#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "extension.hpp"
#include "poset.hpp"
#include "ray_space.hpp"

namespace ordlip {

/// Two-point map built from a radiality witness and a target ray: the
/// dominant anchor goes to σ(rhs), the other to σ(0).
///   RD1 (x ⪰• y ≻ z): f(x) = σ(d(x,y)), f(y) = σ(0), free point z.
///   RD2 (x ≻ y ⪰• z): f(y) = σ(d(y,z)), f(z) = σ(0), free point x.
template <RaySpace S>
struct TestMap {
    std::size_t top = 0;
    std::size_t base = 0;
    std::size_t free_point = 0;
    double top_parameter = 0.0;
    typename S::point_type top_value;
    typename S::point_type base_value;
};

/// One instantiated inequality of the obstruction argument.
struct ChainLine {
    std::string statement;
    double left = 0.0;
    std::string relation; // "=", "<=", ">=", ">"
    double right = 0.0;
    bool holds = false;
};

template <RaySpace S>
struct ObstructionCertificate {
    RadialityWitness witness;
    std::string target;
    TestMap<S> test_map;
    double bound = 1.0;
    double lp_crosscheck = 0.0;
    std::vector<ChainLine> chain;
};

namespace detail {

inline void check_witness(const FiniteMetricPoset& p, const RadialityWitness& w, double tol) {
    const std::size_t n = p.size();
    if (w.x >= n || w.y >= n || w.z >= n) throw DomainError("witness indices out of range for this poset");
    bool ok = false;
    if (w.kind == RadialityKind::RD1) {
        ok = bullet(p, w.x, w.y) && p.greater(w.y, w.z) && std::abs(w.lhs - p.d(w.x, w.z)) <= tol &&
             std::abs(w.rhs - p.d(w.x, w.y)) <= tol;
    } else {
        ok = p.greater(w.x, w.y) && bullet(p, w.y, w.z) && std::abs(w.lhs - p.d(w.x, w.z)) <= tol &&
             std::abs(w.rhs - p.d(w.y, w.z)) <= tol;
    }
    if (!ok || !(w.lhs < w.rhs)) throw DomainError("witness does not match the poset");
}

// σ order-preserving, B(σ(t)) = -t and B decreasing along σ, on sample parameters.
template <RaySpace S>
void check_ray_hypotheses(const S& target, double reach) {
    std::vector<double> ts{0.0, 0.25, 0.5, 1.0, 2.0, reach};
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto p = target.ray(ts[i]);
        if (std::abs(target.busemann(p) + ts[i]) > 1e-9 * (1.0 + ts[i])) {
            throw HypothesisError("target Busemann function does not satisfy B(σ(t)) = -t");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!target.dominates(p, target.ray(ts[j]))) {
                throw HypothesisError("target ray is not order-preserving");
            }
        }
    }
}

} // namespace detail

template <RaySpace S>
TestMap<S> build_test_map(const FiniteMetricPoset& p, const RadialityWitness& w, const S& target, double tol = kDefaultTol) {
    detail::check_witness(p, w, tol);
    TestMap<S> m;
    if (w.kind == RadialityKind::RD1) {
        m.top = w.x;
        m.base = w.y;
        m.free_point = w.z;
    } else {
        m.top = w.y;
        m.base = w.z;
        m.free_point = w.x;
    }
    m.top_parameter = w.rhs;
    m.top_value = target.ray(w.rhs);
    m.base_value = target.ray(0.0);
    return m;
}

/// The three-point scalar problem obtained by composing the test map with
/// -B: anchors carry the values rhs and 0, the third point is free.
inline ExtensionProblem induced_scalar_problem(const FiniteMetricPoset& p, const RadialityWitness& w) {
    const FiniteMetricPoset sub = p.restrict_to({w.x, w.y, w.z});
    if (w.kind == RadialityKind::RD1) {
        return {sub, {0, 1}, scalar_target(), {Vector::Constant(1, w.rhs), Vector::Zero(1)}};
    }
    return {sub, {1, 2}, scalar_target(), {Vector::Constant(1, w.rhs), Vector::Zero(1)}};
}

/// Lower bound K >= rhs/lhs for every order-preserving K-Lipschitz
/// extension of the test map, with the inequality chain evaluated on the
/// target and cross-checked against the exact scalar problem.
template <RaySpace S>
ObstructionCertificate<S> certify_obstruction(const FiniteMetricPoset& p, const RadialityWitness& w, const S& target,
                                              double tol = kDefaultTol) {
    detail::check_witness(p, w, tol);
    const double bound = w.rhs / w.lhs;
    if (!(bound > 1.0 + 1e-12)) throw DomainError("certify_obstruction: witness gives no bound above 1");
    detail::check_ray_hypotheses(target, w.rhs);

    ObstructionCertificate<S> cert;
    cert.witness = w;
    cert.target = target.name();
    cert.test_map = build_test_map(p, w, target, tol);
    cert.bound = bound;

    const auto& tm = cert.test_map;
    const auto& labels = p.labels();
    const std::string top = labels[tm.top];
    const std::string base = labels[tm.base];
    const std::string fr = labels[tm.free_point];
    const double phi_top = 0.0 - target.busemann(tm.top_value);
    const double phi_base = 0.0 - target.busemann(tm.base_value);
    const double map_gap = target.distance(tm.top_value, tm.base_value);
    const double eps = 1e-9 * (1.0 + w.rhs);

    auto line = [&](std::string text, double left, std::string rel, double right) {
        bool holds = false;
        if (rel == "=") holds = std::abs(left - right) <= eps;
        else if (rel == "<=") holds = left <= right + eps;
        else if (rel == ">=") holds = left >= right - eps;
        else holds = left > right;
        cert.chain.push_back({std::move(text), left, std::move(rel), right, holds});
    };

    line("d_Y(f(" + top + "), f(" + base + ")) <= d_X(" + top + ", " + base + ")", map_gap, "<=", p.d(tm.top, tm.base));
    line("f(" + top + ") dominates f(" + base + ") in Y", target.dominates(tm.top_value, tm.base_value) ? 1.0 : 0.0, "=", 1.0);
    line("phi(" + top + ") = -B(f(" + top + "))", phi_top, "=", w.rhs);
    line("phi(" + base + ") = -B(f(" + base + "))", phi_base, "=", 0.0);
    if (w.kind == RadialityKind::RD1) {
        // y ≻ z forces F(y) ⪰ F(z), and -B is order-preserving: phi(z) <= phi(y) = 0.
        line("phi(" + fr + ") <= phi(" + base + ") since " + base + " > " + fr, phi_base, "<=", 0.0);
        line("phi(" + top + ") - phi(" + fr + ") >= d_X(" + top + ", " + base + ")", phi_top - phi_base, ">=", w.rhs);
        line("K * d_X(" + top + ", " + fr + ") >= phi(" + top + ") - phi(" + fr + ")", bound * w.lhs, ">=", w.rhs);
    } else {
        // x ≻ y forces F(x) ⪰ F(y): phi(x) >= phi(y) = rhs.
        line("phi(" + fr + ") >= phi(" + top + ") since " + fr + " > " + top, phi_top, ">=", w.rhs);
        line("phi(" + fr + ") - phi(" + base + ") >= d_X(" + top + ", " + base + ")", phi_top - phi_base, ">=", w.rhs);
        line("K * d_X(" + fr + ", " + base + ") >= phi(" + fr + ") - phi(" + base + ")", bound * w.lhs, ">=", w.rhs);
    }
    line("K >= rhs / lhs", bound, ">", 1.0);

    for (const auto& c : cert.chain) {
        if (!c.holds) throw HypothesisError("certificate chain failed on this target: " + c.statement);
    }

    EstimateOptions opt;
    opt.tol = 1e-7;
    cert.lp_crosscheck = estimate_e(induced_scalar_problem(p, w), opt).value;
    if (std::abs(cert.lp_crosscheck - bound) > 1e-4) {
        throw Error("certify_obstruction: bound disagrees with the scalar extension problem");
    }
    return cert;
}

/// Largest certified bound over all witnesses of the poset, or 1 if it is radial.
inline double e2_lower_bound(const FiniteMetricPoset& p, double tol = kDefaultTol) {
    double best = 1.0;
    for (const auto& w : all_witnesses(p, tol)) best = std::max(best, w.rhs / w.lhs);
    return best;
}

template <RaySpace S>
double e2_lower_bound(const FiniteMetricPoset& p, const S& target, double tol = kDefaultTol) {
    const double b = e2_lower_bound(p, tol);
    if (b > 1.0) detail::check_ray_hypotheses(target, 1.0);
    return b;
}

} // namespace ordlip
