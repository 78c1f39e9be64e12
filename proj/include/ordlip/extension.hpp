#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cone.hpp"
#include "config.hpp"
#include "difference_constraints.hpp"
#include "errors.hpp"
#include "norms.hpp"
#include "poset.hpp"

namespace ordlip {

/// The scalar target (R, >=).
inline ConeOrder scalar_target() { return ConeOrder::ray(Vector::Ones(1)); }

/// An order-preserving 1-Lipschitz map f on a nonempty subset S of a finite
/// metric poset X, with values in R^m ordered by a cone. The constructor
/// rejects maps that are not monotone or not 1-Lipschitz on S, and repeated
/// subset indices with conflicting values.
class ExtensionProblem {
public:
    ExtensionProblem(FiniteMetricPoset domain, std::vector<std::size_t> subset, ConeOrder target,
                     std::vector<Vector> values, double tol = kDefaultTol)
        : domain_(std::move(domain)), target_(std::move(target)), tol_(tol) {
        if (subset.empty()) throw DomainError("extension problem: subset must be nonempty");
        if (subset.size() != values.size()) throw StructuralError("extension problem: one value per subset point required");
        const std::size_t n = domain_.size();
        anchor_of_.assign(n, -1);
        for (std::size_t k = 0; k < subset.size(); ++k) {
            const std::size_t i = subset[k];
            if (i >= n) throw StructuralError("extension problem: subset index out of range");
            if (values[k].size() != target_.dim()) throw StructuralError("extension problem: value has wrong dimension");
            if (!values[k].allFinite()) throw StructuralError("extension problem: values must be finite");
            if (anchor_of_[i] >= 0) {
                const auto& prev = values_[static_cast<std::size_t>(anchor_of_[i])];
                if ((prev - values[k]).norm() > tol) {
                    throw DomainError("extension problem: point " + std::to_string(i) + " listed twice with different values");
                }
                continue;
            }
            anchor_of_[i] = static_cast<int>(subset_.size());
            subset_.push_back(i);
            values_.push_back(values[k]);
        }
        for (std::size_t a = 0; a < subset_.size(); ++a) {
            for (std::size_t b = 0; b < subset_.size(); ++b) {
                if (a == b) continue;
                const std::size_t i = subset_[a];
                const std::size_t j = subset_[b];
                const Vector diff = values_[a] - values_[b];
                if (ordlip::norm(diff, target_.norm_tag()) > domain_.d(i, j) + tol * std::max(1.0, domain_.d(i, j))) {
                    throw DomainError("extension problem: f is not 1-Lipschitz on S (points " + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
                }
                if (domain_.greater(i, j) && !contains(target_, diff, tol)) {
                    throw DomainError("extension problem: f is not order-preserving on S (points " + std::to_string(i) +
                                      ", " + std::to_string(j) + ")");
                }
            }
        }
    }

    const FiniteMetricPoset& domain() const { return domain_; }
    const ConeOrder& target() const { return target_; }
    const std::vector<std::size_t>& subset() const { return subset_; }
    const std::vector<Vector>& values() const { return values_; }
    double tol() const { return tol_; }

    bool is_anchor(std::size_t i) const { return anchor_of_[i] >= 0; }
    const Vector& anchor_value(std::size_t i) const { return values_[static_cast<std::size_t>(anchor_of_[i])]; }
    bool scalar() const { return target_.dim() == 1; }

private:
    FiniteMetricPoset domain_;
    ConeOrder target_;
    double tol_;
    std::vector<std::size_t> subset_;
    std::vector<Vector> values_;
    std::vector<int> anchor_of_;
};

enum class Status { Feasible, Infeasible, Unknown };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::Feasible: return "feasible";
    case Status::Infeasible: return "infeasible";
    case Status::Unknown: return "unknown";
    }
    return "?";
}

struct Residuals {
    double lipschitz = 0.0; // max over pairs of |F(x) - F(y)| - K d(x, y), clamped at 0
    double order = 0.0;     // max distance from F(x) - F(y) to the cone over x ⪰ y
    double anchor = 0.0;    // max |F(s) - f(s)| over S

    double max() const { return std::max({lipschitz, order, anchor}); }
};

/// Separating certificate: the scalar functional phi = <functional, .> maps
/// the problem to a scalar one whose difference-constraint graph carries the
/// listed negative cycle. Node index == domain size denotes the zero node.
struct InfeasibilityCertificate {
    Vector functional;
    std::vector<std::size_t> cycle;
    double cycle_weight = 0.0;
};

struct ExtensionResult {
    std::vector<Vector> values;
    double K = 0.0;
    Status status = Status::Unknown;
    Residuals residuals;
    long iterations = 0;
    std::optional<InfeasibilityCertificate> certificate;
};

/// Largest |F(x) - F(y)| / d(x, y) over distinct pairs.
inline double lipschitz_constant(const FiniteMetricPoset& X, const std::vector<Vector>& values, NormTag tag) {
    double k = 0.0;
    for (std::size_t i = 0; i < X.size(); ++i) {
        for (std::size_t j = i + 1; j < X.size(); ++j) {
            const double d = X.d(i, j);
            if (d > 0.0) k = std::max(k, ordlip::norm(values[i] - values[j], tag) / d);
        }
    }
    return k;
}

inline Residuals verify_extension(const ExtensionProblem& problem, const std::vector<Vector>& values, double K) {
    const auto& X = problem.domain();
    if (values.size() != X.size()) throw StructuralError("verify_extension: one value per domain point required");
    const NormTag tag = problem.target().norm_tag();
    Residuals r;
    for (std::size_t i = 0; i < X.size(); ++i) {
        for (std::size_t j = 0; j < X.size(); ++j) {
            if (i == j) continue;
            const Vector diff = values[i] - values[j];
            if (i < j) r.lipschitz = std::max(r.lipschitz, ordlip::norm(diff, tag) - K * X.d(i, j));
            if (X.greater(i, j)) r.order = std::max(r.order, (diff - project_cone(problem.target(), diff)).norm());
        }
    }
    for (std::size_t k = 0; k < problem.subset().size(); ++k) {
        r.anchor = std::max(r.anchor, ordlip::norm(values[problem.subset()[k]] - problem.values()[k], tag));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Scalar targets: exact feasibility through difference constraints.

namespace detail {

enum class ScalarOrientation { Up, Down, Equal };

inline ScalarOrientation orientation(const ConeOrder& cone) {
    const bool up = contains(cone, Vector::Ones(1));
    const bool down = contains(cone, -Vector::Ones(1));
    if (up && down) throw DomainError("scalar target cone is not pointed");
    if (up) return ScalarOrientation::Up;
    if (down) return ScalarOrientation::Down;
    return ScalarOrientation::Equal;
}

struct ScalarSystem {
    std::size_t n = 0; // domain points; node n is the zero node
    std::vector<DifferenceArc> arcs;
};

inline ScalarSystem scalar_system(const FiniteMetricPoset& X, const std::vector<std::size_t>& subset,
                                  const std::vector<double>& f, ScalarOrientation orient, double K) {
    ScalarSystem sys;
    sys.n = X.size();
    const std::size_t zero = sys.n;
    for (std::size_t u = 0; u < sys.n; ++u) {
        for (std::size_t v = 0; v < sys.n; ++v) {
            if (u == v) continue;
            sys.arcs.push_back({u, v, K * X.d(u, v)});
            if (!X.greater(u, v)) continue;
            // u ⪰ v: F(u) - F(v) must lie in the cone.
            if (orient != ScalarOrientation::Down) sys.arcs.push_back({u, v, 0.0});
            if (orient != ScalarOrientation::Up) sys.arcs.push_back({v, u, 0.0});
        }
    }
    for (std::size_t k = 0; k < subset.size(); ++k) {
        sys.arcs.push_back({zero, subset[k], f[k]});
        sys.arcs.push_back({subset[k], zero, -f[k]});
    }
    return sys;
}

struct ScalarOutcome {
    bool feasible = false;
    std::vector<double> values;
    std::vector<std::size_t> cycle;
    double cycle_weight = 0.0;
};

inline ScalarOutcome solve_scalar(const FiniteMetricPoset& X, const std::vector<std::size_t>& subset,
                                  const std::vector<double>& f, ScalarOrientation orient, double K) {
    const ScalarSystem sys = scalar_system(X, subset, f, orient, K);
    double scale = 1.0;
    for (const auto& a : sys.arcs) scale = std::max(scale, std::abs(a.weight));
    const auto sol = solve_difference_constraints(sys.n + 1, sys.arcs, sys.n, 1e-13 * scale);
    ScalarOutcome out;
    out.feasible = sol.feasible;
    if (sol.feasible) {
        out.values.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(sys.n));
        for (std::size_t k = 0; k < subset.size(); ++k) out.values[subset[k]] = f[k];
    } else {
        out.cycle = sol.negative_cycle;
        out.cycle_weight = sol.cycle_weight;
    }
    return out;
}

} // namespace detail

struct FeasibilityOptions {
    double tol = 1e-8;     // residual tolerance for the projection method
    long max_iter = 100'000; // projection sweeps
    std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Vector targets: Dykstra's alternating projections.

namespace detail {

class ConeProjector {
public:
    explicit ConeProjector(const ConeOrder& cone) : cone_(cone) {
        trivial_ = cone.is_trivial();
        if (cone.generators() && !trivial_) {
            const auto& g = *cone.generators();
            if (static_cast<int>(g.size()) == cone.dim()) {
                std::vector<bool> seen(static_cast<std::size_t>(cone.dim()), false);
                orthant_ = true;
                for (const auto& v : g) {
                    Eigen::Index k = 0;
                    const double mx = v.maxCoeff(&k);
                    if (mx <= 0.0 || std::abs(v.norm() - mx) > 1e-15 || seen[static_cast<std::size_t>(k)]) {
                        orthant_ = false;
                        break;
                    }
                    seen[static_cast<std::size_t>(k)] = true;
                }
            }
        }
    }

    Vector operator()(const Vector& w) const {
        if (trivial_) return Vector::Zero(w.size());
        if (orthant_) return w.cwiseMax(0.0);
        return project_cone(cone_, w);
    }

    bool orthant() const { return orthant_; }

private:
    const ConeOrder& cone_;
    bool trivial_ = false;
    bool orthant_ = false;
};

struct PairSet {
    bool cone = false; // otherwise a Lipschitz ball
    std::size_t u = 0;
    std::size_t v = 0;
    double radius = 0.0;
};

inline ExtensionResult dykstra(const ExtensionProblem& problem, double K, const FeasibilityOptions& opt) {
    const auto& X = problem.domain();
    const std::size_t n = X.size();
    const int m = problem.target().dim();
    const NormTag tag = problem.target().norm_tag();
    const ConeProjector proj(problem.target());

    std::vector<Vector> F(n);
    Vector mean = Vector::Zero(m);
    for (const auto& v : problem.values()) mean += v;
    mean /= static_cast<double>(problem.values().size());
    for (std::size_t i = 0; i < n; ++i) F[i] = problem.is_anchor(i) ? problem.anchor_value(i) : mean;

    std::vector<PairSet> sets;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v || (problem.is_anchor(u) && problem.is_anchor(v))) continue;
            if (u < v) sets.push_back({false, u, v, K * X.d(u, v)});
            if (X.greater(u, v)) sets.push_back({true, u, v, 0.0});
        }
    }

    auto violation = [&](const PairSet& s) {
        const Vector w = F[s.u] - F[s.v];
        if (s.cone) return (w - proj(w)).norm();
        return std::max(0.0, ordlip::norm(w, tag) - s.radius);
    };
    auto max_violation = [&] {
        double worst = 0.0;
        for (const auto& s : sets) worst = std::max(worst, violation(s));
        return worst;
    };

    ExtensionResult out;
    out.status = Status::Unknown;
    if (sets.empty() || max_violation() <= opt.tol) {
        out.status = Status::Feasible;
    } else {
        std::vector<Vector> inc_u(sets.size(), Vector::Zero(m));
        std::vector<Vector> inc_v(sets.size(), Vector::Zero(m));
        const long check_every = 10;
        for (long it = 1; it <= opt.max_iter; ++it) {
            for (std::size_t k = 0; k < sets.size(); ++k) {
                const PairSet& s = sets[k];
                const bool free_u = !problem.is_anchor(s.u);
                const bool free_v = !problem.is_anchor(s.v);
                const Vector yu = free_u ? Vector(F[s.u] + inc_u[k]) : F[s.u];
                const Vector yv = free_v ? Vector(F[s.v] + inc_v[k]) : F[s.v];
                Vector nu = yu;
                Vector nv = yv;
                const Vector w = yu - yv;
                const Vector pw = s.cone ? proj(w) : project_ball(w, s.radius, tag);
                if (free_u && free_v) {
                    const Vector mid = 0.5 * (yu + yv);
                    nu = mid + 0.5 * pw;
                    nv = mid - 0.5 * pw;
                } else if (free_u) {
                    nu = yv + pw;
                } else {
                    nv = yu - pw;
                }
                if (free_u) {
                    inc_u[k] = yu - nu;
                    F[s.u] = nu;
                }
                if (free_v) {
                    inc_v[k] = yv - nv;
                    F[s.v] = nv;
                }
            }
            out.iterations = it;
            if (it % check_every == 0 && max_violation() <= opt.tol) {
                out.status = Status::Feasible;
                break;
            }
        }
    }
    out.values = std::move(F);
    out.K = lipschitz_constant(X, out.values, tag);
    out.residuals = verify_extension(problem, out.values, K);
    return out;
}

// Scalar relaxations phi = <w, .> with w in C* and dual norm 1. Any
// extension F at constant K maps to a scalar extension phi o F at K.
inline std::vector<Vector> relaxation_functionals(const ExtensionProblem& problem, std::uint64_t seed) {
    const ConeOrder& cone = problem.target();
    const NormTag tag = cone.norm_tag();
    std::vector<Vector> cands;
    auto add = [&](Vector w) {
        const double dn = dual_norm(w, tag);
        if (!(dn > 1e-12)) return;
        w /= dn;
        if (cone.rays() && !dual_contains(cone, w, 1e-12)) return;
        for (const auto& c : cands) {
            if ((c - w).norm() < 1e-12) return;
        }
        cands.push_back(std::move(w));
    };
    for (auto& w : dual_generators(cone)) add(w);
    if (cone.rays() && !cone.is_trivial() && is_pointed(cone)) {
        try {
            add(monotone_direction(cone, seed));
        } catch (const Error&) {
        }
    }
    const auto& vals = problem.values();
    for (std::size_t a = 0; a < vals.size(); ++a) {
        for (std::size_t b = 0; b < vals.size(); ++b) {
            if (a != b) add(project_dual(cone, vals[a] - vals[b]));
        }
    }
    if (cone.is_trivial()) {
        for (int k = 0; k < cone.dim(); ++k) add(Vector::Unit(cone.dim(), k));
    }
    return cands;
}

} // namespace detail

/// Decides whether an order-preserving K-Lipschitz extension exists.
/// Scalar targets are decided exactly (negative-cycle certificate when
/// infeasible). Vector targets first try the scalar relaxations, which can
/// prove infeasibility, and otherwise run Dykstra's method: Feasible once all
/// constraint residuals fall below opt.tol, Unknown after opt.max_iter sweeps.
inline ExtensionResult feasibility_at_K(const ExtensionProblem& problem, double K, const FeasibilityOptions& opt = {}) {
    if (!(K > 0.0)) throw DomainError("feasibility_at_K: K must be positive");
    const auto& X = problem.domain();

    if (problem.scalar()) {
        const auto orient = detail::orientation(problem.target());
        std::vector<double> f;
        for (const auto& v : problem.values()) f.push_back(v(0));
        const auto sol = detail::solve_scalar(X, problem.subset(), f, orient, K);
        ExtensionResult out;
        if (sol.feasible) {
            out.status = Status::Feasible;
            for (double x : sol.values) out.values.push_back(Vector::Constant(1, x));
            out.K = lipschitz_constant(X, out.values, problem.target().norm_tag());
            out.residuals = verify_extension(problem, out.values, K);
        } else {
            out.status = Status::Infeasible;
            out.certificate = InfeasibilityCertificate{Vector::Ones(1), sol.cycle, sol.cycle_weight};
        }
        return out;
    }

    for (const Vector& w : detail::relaxation_functionals(problem, opt.seed)) {
        std::vector<double> f;
        for (const auto& v : problem.values()) f.push_back(w.dot(v));
        const auto sol = detail::solve_scalar(X, problem.subset(), f, detail::ScalarOrientation::Up, K);
        if (!sol.feasible) {
            ExtensionResult out;
            out.status = Status::Infeasible;
            out.certificate = InfeasibilityCertificate{w, sol.cycle, sol.cycle_weight};
            return out;
        }
    }
    return detail::dykstra(problem, K, opt);
}

struct ModulusProbe {
    double K = 0.0;
    Status status = Status::Unknown;
};

/// Bracket [lo, hi] on the smallest K admitting an extension of the given f.
/// `value` is the midpoint; `inconclusive` is set when the lower end rests on
/// an Unknown probe rather than a proof of infeasibility.
struct ModulusEstimate {
    double value = 1.0;
    double lo = 1.0;
    double hi = 1.0;
    bool inconclusive = false;
    std::vector<ModulusProbe> trace;
};

struct EstimateOptions {
    double tol = 1e-4;
    double k_cap = 1 << 20;
    FeasibilityOptions feasibility;
};

/// Binary search for the extension modulus of a single map f (a lower bound
/// on the modulus over all maps on S). Always >= 1.
inline ModulusEstimate estimate_e(const ExtensionProblem& problem, const EstimateOptions& opt = {}) {
    ModulusEstimate est;
    auto probe = [&](double K) {
        const Status s = feasibility_at_K(problem, K, opt.feasibility).status;
        est.trace.push_back({K, s});
        return s;
    };
    if (probe(1.0) == Status::Feasible) return est;

    Status lo_status = est.trace.back().status;
    double lo = 1.0;
    double hi = 2.0;
    while (true) {
        const Status s = probe(hi);
        if (s == Status::Feasible) break;
        lo = hi;
        lo_status = s;
        hi *= 2.0;
        if (hi > opt.k_cap) {
            est.lo = lo;
            est.hi = std::numeric_limits<double>::infinity();
            est.value = std::numeric_limits<double>::infinity();
            est.inconclusive = lo_status != Status::Infeasible;
            return est;
        }
    }
    while (hi - lo > opt.tol) {
        const double mid = 0.5 * (lo + hi);
        const Status s = probe(mid);
        if (s == Status::Feasible) {
            hi = mid;
        } else {
            lo = mid;
            lo_status = s;
        }
    }
    est.lo = lo;
    est.hi = hi;
    est.value = 0.5 * (lo + hi);
    est.inconclusive = lo_status != Status::Infeasible;
    return est;
}

/// Thrown by operations that need a radial domain.
class RadialityRequired : public DomainError {
public:
    explicit RadialityRequired(RadialityWitness w)
        : DomainError(std::string("domain order is not radial (") + to_string(w.kind) + " witness)"), witness_(w) {}
    const RadialityWitness& witness() const { return witness_; }

private:
    RadialityWitness witness_;
};

/// Scalar extension. On a radial domain every monotone 1-Lipschitz f
/// extends at K = 1; the shortest-path potentials of the difference
/// constraints give such an extension (the largest one). Otherwise the
/// extension at the smallest feasible K is returned with status Infeasible.
inline ExtensionResult scalar_extend(const ExtensionProblem& problem) {
    if (!problem.scalar()) throw DomainError("scalar_extend: target must be one-dimensional");
    ExtensionResult at_one = feasibility_at_K(problem, 1.0);
    if (at_one.status == Status::Feasible) return at_one;

    EstimateOptions opt;
    opt.tol = 1e-10;
    const ModulusEstimate est = estimate_e(problem, opt);
    ExtensionResult best = feasibility_at_K(problem, est.hi);
    best.status = Status::Infeasible;
    best.certificate = at_one.certificate;
    return best;
}

inline bool is_orthant(const ConeOrder& cone) { return detail::ConeProjector(cone).orthant(); }

/// Coordinatewise extension into R^n ordered by the nonnegative orthant: each
/// coordinate is extended as a scalar map at K = 1. The result is K-Lipschitz
/// with K <= sqrt(n) for l2, K <= 1 for linf and K <= n for l1.
inline ExtensionResult componentwise_extend(const ExtensionProblem& problem) {
    if (!is_orthant(problem.target())) throw DomainError("componentwise_extend: target must be ordered coordinatewise");
    const auto radial = check_radiality(problem.domain());
    if (!radial.radial()) throw RadialityRequired(*radial.witness);

    const auto& X = problem.domain();
    const int m = problem.target().dim();
    std::vector<Vector> values(X.size(), Vector::Zero(m));
    for (int k = 0; k < m; ++k) {
        std::vector<Vector> fk;
        for (const auto& v : problem.values()) fk.push_back(Vector::Constant(1, v(k)));
        const ExtensionProblem coord(X, problem.subset(), scalar_target(), std::move(fk), problem.tol());
        const ExtensionResult r = scalar_extend(coord);
        if (r.status != Status::Feasible) {
            throw Error("componentwise_extend: scalar extension failed on a radial domain");
        }
        for (std::size_t i = 0; i < X.size(); ++i) values[i](k) = r.values[i](0);
    }
    ExtensionResult out;
    out.K = lipschitz_constant(X, values, problem.target().norm_tag());
    out.residuals = verify_extension(problem, values, std::max(out.K, 1.0));
    out.status = Status::Feasible;
    out.values = std::move(values);
    return out;
}

// ---------------------------------------------------------------------------
// Maps on a subset of the real line.

/// Extension of an order-preserving 1-Lipschitz map from a finite S ⊂ R:
/// affine on each gap between consecutive points of S, constant equal to
/// f(min S) below S and f(max S) above it.
class LineExtension {
public:
    LineExtension(std::vector<double> support, std::vector<Vector> values, const ConeOrder& cone, double tol = kDefaultTol) {
        if (support.empty()) throw DomainError("line extension: support must be nonempty");
        if (support.size() != values.size()) throw StructuralError("line extension: one value per support point required");
        std::vector<std::size_t> idx(support.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });
        for (std::size_t i : idx) {
            if (!std::isfinite(support[i])) throw StructuralError("line extension: support must be finite");
            if (values[i].size() != cone.dim()) throw StructuralError("line extension: value has wrong dimension");
            if (!t_.empty() && t_.back() == support[i]) {
                if ((f_.back() - values[i]).norm() > tol) throw DomainError("line extension: duplicate point with conflicting values");
                continue;
            }
            t_.push_back(support[i]);
            f_.push_back(values[i]);
        }
        for (std::size_t i = 0; i < t_.size(); ++i) {
            for (std::size_t j = i + 1; j < t_.size(); ++j) {
                const double gap = t_[j] - t_[i];
                if (ordlip::norm(f_[j] - f_[i], cone.norm_tag()) > gap + tol * std::max(1.0, gap)) {
                    throw DomainError("line extension: map is not 1-Lipschitz");
                }
            }
            if (i + 1 < t_.size() && !contains(cone, f_[i + 1] - f_[i], tol)) {
                throw DomainError("line extension: map is not order-preserving");
            }
        }
    }

    Vector operator()(double t) const {
        if (t <= t_.front()) return f_.front();
        if (t >= t_.back()) return f_.back();
        const auto hi = static_cast<std::size_t>(std::upper_bound(t_.begin(), t_.end(), t) - t_.begin());
        const std::size_t lo = hi - 1;
        if (t == t_[lo]) return f_[lo];
        const double lambda = (t - t_[lo]) / (t_[hi] - t_[lo]);
        return f_[lo] + lambda * (f_[hi] - f_[lo]);
    }

    const std::vector<double>& support() const { return t_; }
    const std::vector<Vector>& values() const { return f_; }

private:
    std::vector<double> t_;
    std::vector<Vector> f_;
};

inline Vector line_extend(const std::vector<double>& support, const std::vector<Vector>& values, const ConeOrder& cone,
                          double query) {
    return LineExtension(support, values, cone)(query);
}

/// Points of R with |.| and the usual order, in the given sequence.
inline FiniteMetricPoset line_poset(const std::vector<double>& points) {
    const std::size_t n = points.size();
    Matrix dist(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    std::vector<IndexPair> order;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        std::ostringstream label;
        label.precision(17);
        label << points[i];
        labels.push_back(label.str());
        for (std::size_t j = 0; j < n; ++j) {
            dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::abs(points[i] - points[j]);
            if (points[i] > points[j]) order.emplace_back(i, j);
        }
    }
    return {std::move(labels), std::move(dist), std::move(order)};
}

} // namespace ordlip
