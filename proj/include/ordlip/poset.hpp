#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "cone.hpp"
#include "errors.hpp"
#include "norms.hpp"

namespace ordlip {

using IndexPair = std::pair<std::size_t, std::size_t>;

/// A finite metric space with a partial order. Pair (i, j) in the order
/// means point i dominates point j; reflexive pairs are implicit.
/// Construction checks only shapes and index ranges; `validate` checks
/// the metric and order axioms.
class FiniteMetricPoset {
public:
    FiniteMetricPoset() = default;

    FiniteMetricPoset(std::vector<std::string> labels, Matrix dist, std::vector<IndexPair> order)
        : labels_(std::move(labels)), dist_(std::move(dist)) {
        const std::size_t n = labels_.size();
        if (dist_.rows() != dist_.cols()) {
            throw StructuralError("distance matrix is not square");
        }
        if (static_cast<std::size_t>(dist_.rows()) != n) {
            throw StructuralError("distance matrix size does not match the number of labels");
        }
        geq_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) geq_[i * n + i] = 1;
        for (const auto& [i, j] : order) {
            if (i >= n || j >= n) {
                std::ostringstream msg;
                msg << "order pair (" << i << ", " << j << ") out of range for " << n << " points";
                throw StructuralError(msg.str());
            }
            geq_[i * n + j] = 1;
        }
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Matrix& dist() const { return dist_; }
    double d(std::size_t i, std::size_t j) const { return dist_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }

    /// i ⪰ j (reflexive).
    bool geq(std::size_t i, std::size_t j) const { return geq_[i * size() + j] != 0; }
    /// i ≻ j: i ⪰ j and i ≠ j.
    bool greater(std::size_t i, std::size_t j) const { return i != j && geq(i, j); }

    /// Non-reflexive order pairs in row-major order.
    std::vector<IndexPair> order_pairs() const {
        std::vector<IndexPair> out;
        for (std::size_t i = 0; i < size(); ++i) {
            for (std::size_t j = 0; j < size(); ++j) {
                if (greater(i, j)) out.emplace_back(i, j);
            }
        }
        return out;
    }

    /// The sub-poset on the listed points, in the listed order.
    FiniteMetricPoset restrict_to(const std::vector<std::size_t>& idx) const {
        const auto m = idx.size();
        std::vector<std::string> labels;
        Matrix dist(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
        std::vector<IndexPair> order;
        for (std::size_t a = 0; a < m; ++a) {
            labels.push_back(labels_.at(idx[a]));
            for (std::size_t b = 0; b < m; ++b) {
                dist(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = d(idx[a], idx[b]);
                if (a != b && geq(idx[a], idx[b])) order.emplace_back(a, b);
            }
        }
        return {std::move(labels), std::move(dist), std::move(order)};
    }

private:
    std::vector<std::string> labels_;
    Matrix dist_;
    std::vector<unsigned char> geq_;
};

/// x ⪰• y iff not y ⪰ x.
inline bool bullet(const FiniteMetricPoset& p, std::size_t x, std::size_t y) { return !p.geq(y, x); }

struct Violation {
    std::string axiom;
    std::vector<std::size_t> indices;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

namespace detail {

inline void check_triple_cap(std::size_t n) {
    const double triples = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
    if (triples > static_cast<double>(max_triples())) {
        std::ostringstream msg;
        msg << n << " points exceed the triple-enumeration cap of " << max_triples()
            << " (set ORDLIP_MAX_TRIPLES to override)";
        throw SizeCapError(msg.str());
    }
}

} // namespace detail

inline ValidationReport validate(const FiniteMetricPoset& p, double tol = kDefaultTol) {
    ValidationReport report;
    const std::size_t n = p.size();
    detail::check_triple_cap(n);
    auto add = [&](std::string axiom, std::vector<std::size_t> idx, std::string detail) {
        report.violations.push_back({std::move(axiom), std::move(idx), std::move(detail)});
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(p.d(i, i)) || std::abs(p.d(i, i)) > tol) add("zero diagonal", {i}, "d(i,i) != 0");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double dij = p.d(i, j);
            if (!std::isfinite(dij) || dij < 0.0) add("nonnegativity", {i, j}, "negative or non-finite distance");
            if (i < j) {
                if (std::abs(dij - p.d(j, i)) > tol) add("symmetry", {i, j}, "d(i,j) != d(j,i)");
                if (dij <= tol) add("identity of indiscernibles", {i, j}, "distinct points at distance 0");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (p.d(i, j) > p.d(i, k) + p.d(k, j) + tol) {
                    add("triangle inequality", {i, j, k}, "d(i,j) > d(i,k) + d(k,j)");
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p.geq(i, j) && p.geq(j, i)) add("antisymmetry", {i, j}, "i >= j and j >= i");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.geq(i, j) || i == j) continue;
            for (std::size_t k = 0; k < n; ++k) {
                if (j != k && p.geq(j, k) && !p.geq(i, k)) {
                    add("transitivity", {i, j, k}, "i >= j >= k but not i >= k");
                }
            }
        }
    }
    return report;
}

enum class RadialityKind { RD1, RD2 };

inline const char* to_string(RadialityKind k) { return k == RadialityKind::RD1 ? "RD1" : "RD2"; }

/// A violated radiality condition.
///   RD1: x ⪰• y ≻ z with d(x,z) < d(x,y)   (lhs = d(x,z), rhs = d(x,y))
///   RD2: x ≻ y ⪰• z with d(x,z) < d(y,z)   (lhs = d(x,z), rhs = d(y,z))
struct RadialityWitness {
    RadialityKind kind = RadialityKind::RD1;
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t z = 0;
    double lhs = 0.0;
    double rhs = 0.0;

    friend bool operator==(const RadialityWitness&, const RadialityWitness&) = default;
};

struct RadialityReport {
    std::optional<RadialityWitness> witness; // first violation, if any
    bool radially_convex = true;

    bool radial() const { return !witness.has_value(); }
};

namespace detail {

// Calls visit(w) for every violating triple in (kind, x, y, z) order until it returns false.
template <class Visit>
void scan_witnesses(const FiniteMetricPoset& p, double tol, Visit&& visit) {
    const std::size_t n = p.size();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (!bullet(p, x, y)) continue;
            for (std::size_t z = 0; z < n; ++z) {
                if (p.greater(y, z) && p.d(x, z) < p.d(x, y) - tol) {
                    if (!visit(RadialityWitness{RadialityKind::RD1, x, y, z, p.d(x, z), p.d(x, y)})) return;
                }
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (!p.greater(x, y)) continue;
            for (std::size_t z = 0; z < n; ++z) {
                if (bullet(p, y, z) && p.d(x, z) < p.d(y, z) - tol) {
                    if (!visit(RadialityWitness{RadialityKind::RD2, x, y, z, p.d(x, z), p.d(y, z)})) return;
                }
            }
        }
    }
}

} // namespace detail

/// Exhaustive triple scan. Returns the lexicographically first violation
/// by (kind, x, y, z) and, separately, whether x ≻ y ≻ z always gives
/// d(x,z) >= max(d(x,y), d(y,z)).
inline RadialityReport check_radiality(const FiniteMetricPoset& p, double tol = kDefaultTol) {
    detail::check_triple_cap(p.size());
    RadialityReport report;
    detail::scan_witnesses(p, tol, [&](const RadialityWitness& w) {
        report.witness = w;
        return false;
    });
    const std::size_t n = p.size();
    for (std::size_t x = 0; x < n && report.radially_convex; ++x) {
        for (std::size_t y = 0; y < n && report.radially_convex; ++y) {
            if (!p.greater(x, y)) continue;
            for (std::size_t z = 0; z < n; ++z) {
                if (p.greater(y, z) && p.d(x, z) < std::max(p.d(x, y), p.d(y, z)) - tol) {
                    report.radially_convex = false;
                    break;
                }
            }
        }
    }
    return report;
}

/// Every violating triple, in the same order check_radiality uses.
inline std::vector<RadialityWitness> all_witnesses(const FiniteMetricPoset& p, double tol = kDefaultTol) {
    detail::check_triple_cap(p.size());
    std::vector<RadialityWitness> out;
    detail::scan_witnesses(p, tol, [&](const RadialityWitness& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

/// Lattice {0, spacing, ..., (side-1)*spacing}^dim with the cone's norm as
/// distance and x ⪰ y iff x - y in the cone. Points are enumerated with the
/// first coordinate varying slowest.
inline FiniteMetricPoset grid_instance(int dim, int side, double spacing, const ConeOrder& cone,
                                       std::vector<Vector>* coords_out = nullptr) {
    if (dim <= 0 || side <= 0 || !(spacing > 0.0)) throw DomainError("grid_instance: dim, side and spacing must be positive");
    if (cone.dim() != dim) throw StructuralError("grid_instance: cone dimension does not match grid dimension");
    const double size = static_cast<double>(dim) * std::pow(static_cast<double>(side), dim);
    if (size > static_cast<double>(max_grid_size())) {
        std::ostringstream msg;
        msg << "grid_instance: dim*side^dim = " << size << " exceeds the cap " << max_grid_size()
            << " (set ORDLIP_MAX_GRID to override)";
        throw SizeCapError(msg.str());
    }
    std::size_t count = 1;
    for (int i = 0; i < dim; ++i) count *= static_cast<std::size_t>(side);

    std::vector<Vector> pts;
    std::vector<std::string> labels;
    for (std::size_t id = 0; id < count; ++id) {
        Vector v(dim);
        std::size_t rem = id;
        std::ostringstream label;
        label << '(';
        for (int k = dim - 1; k >= 0; --k) {
            v(k) = static_cast<double>(rem % static_cast<std::size_t>(side)) * spacing;
            rem /= static_cast<std::size_t>(side);
        }
        for (int k = 0; k < dim; ++k) label << (k ? "," : "") << v(k);
        label << ')';
        pts.push_back(std::move(v));
        labels.push_back(label.str());
    }
    Matrix dist(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(count));
    std::vector<IndexPair> order;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = norm(pts[i] - pts[j], cone.norm_tag());
            if (i != j && dominates(cone, pts[i], pts[j])) order.emplace_back(i, j);
        }
    }
    if (coords_out) *coords_out = pts;
    return {std::move(labels), std::move(dist), std::move(order)};
}

/// Points in R^dim with the given norm and the order induced by `cone`.
inline FiniteMetricPoset poset_from_points(const std::vector<Vector>& pts, const ConeOrder& cone) {
    const std::size_t n = pts.size();
    Matrix dist(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    std::vector<IndexPair> order;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("p" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            dist(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = norm(pts[i] - pts[j], cone.norm_tag());
            if (i != j && dominates(cone, pts[i], pts[j])) order.emplace_back(i, j);
        }
    }
    return {std::move(labels), std::move(dist), std::move(order)};
}

} // namespace ordlip
