#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "nnls.hpp"
#include "norms.hpp"

namespace ordlip {

/// A closed convex cone C in R^dim, described by generators
/// (C = { sum l_i g_i : l_i >= 0 }), by inward normals
/// (C = { x : <n_j, x> >= 0 }), or by both. The cone induces the vector
/// order x >= y iff x - y in C; the norm tag records which norm the
/// ambient space carries for Lipschitz purposes.
class ConeOrder {
public:
    static ConeOrder from_generators(int dim, std::vector<Vector> generators, NormTag norm = NormTag::L2) {
        ConeOrder c(dim, norm);
        c.generators_ = checked(dim, std::move(generators), "generator");
        return c;
    }

    static ConeOrder from_halfspaces(int dim, std::vector<Vector> normals, NormTag norm = NormTag::L2) {
        ConeOrder c(dim, norm);
        auto n = checked(dim, std::move(normals), "halfspace normal");
        for (auto& v : n) v.normalize();
        c.halfspaces_ = std::move(n);
        c.derive_rays();
        return c;
    }

    // Both descriptions must denote the same set; verified on sample points.
    static ConeOrder from_both(int dim, std::vector<Vector> generators, std::vector<Vector> normals,
                               NormTag norm = NormTag::L2, std::uint64_t seed = 7);

    static ConeOrder orthant(int dim, NormTag norm = NormTag::L2) {
        std::vector<Vector> g;
        for (int i = 0; i < dim; ++i) g.push_back(Vector::Unit(dim, i));
        return from_generators(dim, std::move(g), norm);
    }

    static ConeOrder trivial(int dim, NormTag norm = NormTag::L2) { return from_generators(dim, {}, norm); }

    static ConeOrder ray(const Vector& direction, NormTag norm = NormTag::L2) {
        return from_generators(static_cast<int>(direction.size()), {direction}, norm);
    }

    int dim() const { return dim_; }
    NormTag norm_tag() const { return norm_; }
    const std::optional<std::vector<Vector>>& generators() const { return generators_; }
    const std::optional<std::vector<Vector>>& halfspaces() const { return halfspaces_; }

    // Generators if given, otherwise the extreme rays of the halfspace
    // description (absent when the normals do not span R^dim).
    const std::optional<std::vector<Vector>>& rays() const { return generators_ ? generators_ : derived_rays_; }

    bool is_trivial() const {
        const auto& r = rays();
        return r.has_value() && r->empty();
    }

    Matrix generator_matrix() const {
        const auto& r = rays();
        if (!r) throw DomainError("cone has no finite generator description");
        Matrix G(dim_, static_cast<Eigen::Index>(r->size()));
        for (std::size_t i = 0; i < r->size(); ++i) G.col(static_cast<Eigen::Index>(i)) = (*r)[i];
        return G;
    }

private:
    ConeOrder(int dim, NormTag norm) : dim_(dim), norm_(norm) {
        if (dim <= 0) throw StructuralError("cone dimension must be positive");
    }

    static std::vector<Vector> checked(int dim, std::vector<Vector> vs, const char* what) {
        for (const auto& v : vs) {
            if (v.size() != dim) throw StructuralError(std::string(what) + " has wrong dimension");
            if (!v.allFinite() || v.norm() == 0.0) throw StructuralError(std::string(what) + " must be finite and nonzero");
        }
        return vs;
    }

    void derive_rays();

    int dim_;
    NormTag norm_;
    std::optional<std::vector<Vector>> generators_;
    std::optional<std::vector<Vector>> halfspaces_;
    std::optional<std::vector<Vector>> derived_rays_;
};

struct MoreauSplit {
    Vector part_cone;
    Vector part_polar;
};

namespace detail {

inline double scale_of(const Vector& v) { return std::max(1.0, v.norm()); }

inline int matrix_rank(const Matrix& m) {
    if (m.size() == 0) return 0;
    Eigen::FullPivLU<Matrix> lu(m);
    lu.setThreshold(1e-10);
    return static_cast<int>(lu.rank());
}

// Extreme rays of { x : <n_j, x> >= 0 } for normals spanning R^dim.
// Each ray is cut out by dim-1 independent tight constraints.
inline std::vector<Vector> extreme_rays(const std::vector<Vector>& normals, int dim) {
    constexpr int kMaxFacetDim = 8;
    if (dim > kMaxFacetDim) {
        throw UnsupportedError("facet enumeration is limited to dimension <= 8");
    }
    std::vector<Vector> rays;
    auto feasible = [&](const Vector& r) {
        for (const auto& n : normals) {
            if (n.dot(r) < -1e-10) return false;
        }
        return true;
    };
    auto push_unique = [&](Vector r) {
        r.normalize();
        for (const auto& q : rays) {
            if ((q - r).norm() < 1e-9) return;
        }
        rays.push_back(std::move(r));
    };

    const int m = static_cast<int>(normals.size());
    const int k = dim - 1;
    if (k == 0) {
        for (double sign : {1.0, -1.0}) {
            Vector r = Vector::Constant(1, sign);
            if (feasible(r)) push_unique(r);
        }
        return rays;
    }
    if (m < k) return rays;

    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        Matrix A(k, dim);
        for (int i = 0; i < k; ++i) A.row(i) = normals[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])].transpose();
        Eigen::FullPivLU<Matrix> lu(A);
        lu.setThreshold(1e-10);
        if (lu.rank() == k) {
            const Matrix ker = lu.kernel();
            const Vector r = ker.col(0);
            for (double sign : {1.0, -1.0}) {
                const Vector cand = sign * r / r.norm();
                if (feasible(cand)) push_unique(cand);
            }
        }
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return rays;
}

} // namespace detail

inline void ConeOrder::derive_rays() {
    if (!halfspaces_) return;
    Matrix N(static_cast<Eigen::Index>(halfspaces_->size()), dim_);
    for (std::size_t j = 0; j < halfspaces_->size(); ++j) N.row(static_cast<Eigen::Index>(j)) = (*halfspaces_)[j].transpose();
    if (detail::matrix_rank(N) == dim_ && dim_ <= 8) {
        derived_rays_ = detail::extreme_rays(*halfspaces_, dim_);
    }
}

/// Membership x in C. Generated form: NNLS residual <= tol * max(1, |v|);
/// halfspace form: every <n_j, v> >= -tol * max(1, |v|).
inline bool contains(const ConeOrder& cone, const Vector& v, double tol = kDefaultTol) {
    if (v.size() != cone.dim()) throw StructuralError("contains: vector has wrong dimension");
    const double slack = tol * detail::scale_of(v);
    if (cone.halfspaces()) {
        for (const auto& n : *cone.halfspaces()) {
            if (n.dot(v) < -slack) return false;
        }
        return true;
    }
    const auto& g = *cone.generators();
    if (g.empty()) return v.norm() <= slack;
    return nnls(cone.generator_matrix(), v).residual <= slack;
}

inline bool dominates(const ConeOrder& cone, const Vector& x, const Vector& y, double tol = kDefaultTol) {
    return contains(cone, x - y, tol);
}

/// Membership in the dual cone C* = { v : <v, c> >= 0 for all c in C }.
inline bool dual_contains(const ConeOrder& cone, const Vector& v, double tol = kDefaultTol) {
    if (v.size() != cone.dim()) throw StructuralError("dual_contains: vector has wrong dimension");
    const auto& r = cone.rays();
    if (!r) throw DomainError("dual_contains: halfspace description is not pointed; cannot convert to generators");
    const double scale = detail::scale_of(v);
    for (const auto& g : *r) {
        if (v.dot(g) < -tol * scale * g.norm()) return false;
    }
    return true;
}

/// Euclidean projection onto C. Generated cones go through NNLS; halfspace
/// cones project onto the polar cone cone(-n_j) and use a = P_C(a) + P_polar(a).
inline Vector project_cone(const ConeOrder& cone, const Vector& a) {
    if (a.size() != cone.dim()) throw StructuralError("project_cone: vector has wrong dimension");
    if (cone.generators()) {
        if (cone.generators()->empty()) return Vector::Zero(a.size());
        return nnls(cone.generator_matrix(), a).fitted;
    }
    const auto& n = *cone.halfspaces();
    Matrix polar(cone.dim(), static_cast<Eigen::Index>(n.size()));
    for (std::size_t j = 0; j < n.size(); ++j) polar.col(static_cast<Eigen::Index>(j)) = -n[j];
    Vector p = a - nnls(polar, a).fitted;
    // Clean the last rounding step so the result passes membership.
    for (const auto& nj : n) {
        const double s = nj.dot(p);
        if (s < 0.0) p -= s * nj;
    }
    return p;
}

inline MoreauSplit moreau_split(const ConeOrder& cone, const Vector& a) {
    MoreauSplit out;
    out.part_cone = project_cone(cone, a);
    out.part_polar = a - out.part_cone;
    return out;
}

/// Euclidean projection onto the dual cone C*, via Moreau with respect to -C.
inline Vector project_dual(const ConeOrder& cone, const Vector& v) { return v + project_cone(cone, -v); }

/// C ∩ -C = {0}. For generators this holds iff no -g lies in C.
inline bool is_pointed(const ConeOrder& cone, double tol = kDefaultTol) {
    if (cone.generators()) {
        const auto& g = *cone.generators();
        if (g.empty()) return true;
        const Matrix G = cone.generator_matrix();
        for (const auto& gi : g) {
            if (nnls(G, -gi).residual <= tol * gi.norm()) return false;
        }
        return true;
    }
    const auto& n = *cone.halfspaces();
    Matrix N(static_cast<Eigen::Index>(n.size()), cone.dim());
    for (std::size_t j = 0; j < n.size(); ++j) N.row(static_cast<Eigen::Index>(j)) = n[j].transpose();
    return detail::matrix_rank(N) == cone.dim();
}

/// Generators of C*, when they can be enumerated: the normals of a halfspace
/// description, or the extreme rays of { v : <g_i, v> >= 0 } for a
/// full-dimensional generated cone in dimension <= 8. Empty otherwise.
inline std::vector<Vector> dual_generators(const ConeOrder& cone) {
    if (cone.halfspaces()) return *cone.halfspaces();
    const auto& g = *cone.generators();
    if (g.empty() || cone.dim() > 8) return {};
    if (detail::matrix_rank(cone.generator_matrix()) != cone.dim()) return {};
    return detail::extreme_rays(g, cone.dim());
}

/// A unit vector e in C ∩ C*. Candidates a in C* \ -C* are taken first from
/// the dual generators and then from seeded random points pushed into C*;
/// the first candidate whose projection b = P_C(a) is nonzero yields e = b/|b|.
inline Vector monotone_direction(const ConeOrder& cone, std::uint64_t seed = 0, int budget = 10'000) {
    if (cone.is_trivial()) throw NoDirectionError("monotone_direction: the cone is {0}");
    if (!is_pointed(cone)) throw DomainError("monotone_direction: cone is not pointed");
    const auto& rays = cone.rays();
    if (!rays) throw DomainError("monotone_direction: cone has no generator description");

    constexpr double tol = 1e-10;
    auto attempt = [&](const Vector& a) -> std::optional<Vector> {
        if (a.norm() == 0.0 || !dual_contains(cone, a, tol)) return std::nullopt;
        bool strict = false;
        for (const auto& g : *rays) {
            if (a.dot(g) > tol * a.norm() * g.norm()) {
                strict = true;
                break;
            }
        }
        if (!strict) return std::nullopt; // a in -C* as well
        const Vector b = project_cone(cone, a);
        const double nb = b.norm();
        if (nb <= tol * a.norm()) return std::nullopt;
        Vector e = b / nb;
        if (!contains(cone, e, 1e-9) || !dual_contains(cone, e, 1e-9)) return std::nullopt;
        return e;
    };

    for (const auto& a : dual_generators(cone)) {
        if (auto e = attempt(a)) return *e;
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < budget; ++i) {
        Vector v(cone.dim());
        for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = gauss(rng);
        if (auto e = attempt(project_dual(cone, v))) return *e;
    }
    throw SearchBudgetError("monotone_direction: no candidate in C* \\ -C* found within budget (bug for pointed cones)");
}

inline ConeOrder ConeOrder::from_both(int dim, std::vector<Vector> generators, std::vector<Vector> normals,
                                      NormTag norm, std::uint64_t seed) {
    ConeOrder c = from_halfspaces(dim, std::move(normals), norm);
    c.generators_ = checked(dim, std::move(generators), "generator");
    const ConeOrder gen_only = from_generators(dim, *c.generators_, norm);
    const ConeOrder half_only = from_halfspaces(dim, *c.halfspaces_, norm);

    for (const auto& g : *c.generators_) {
        if (!contains(half_only, g, 1e-9)) throw StructuralError("cone: generator violates a halfspace");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        Vector v(dim);
        for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = gauss(rng);
        double margin = std::numeric_limits<double>::infinity();
        for (const auto& n : *c.halfspaces_) margin = std::min(margin, n.dot(v) / v.norm());
        if (std::abs(margin) < 1e-6) continue;
        if (contains(gen_only, v, 1e-9) != (margin > 0.0)) {
            throw StructuralError("cone: generators and halfspaces describe different sets");
        }
    }
    return c;
}

} // namespace ordlip
