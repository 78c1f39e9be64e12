#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "config.hpp"
#include "extension.hpp"

namespace ordlip {

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status = Status::Optimal;
    double value = 0.0;
    Vector x;
};

/// Dense two-phase tableau simplex with Bland's rule:
///   maximize c^T x  subject to  A x <= b,  x >= 0.
/// Intended for small exact checks, not for speed.
class Simplex {
public:
    Simplex(const Matrix& A, const Vector& b, const Vector& c, double eps = 1e-10)
        : m_(static_cast<int>(A.rows())), n_(static_cast<int>(A.cols())), eps_(eps),
          D_(m_ + 2, n_ + 2), basis_(static_cast<std::size_t>(m_)), nonbasis_(static_cast<std::size_t>(n_ + 1)) {
        D_.setZero();
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) D_(i, j) = A(i, j);
            D_(i, n_) = -1.0;
            D_(i, n_ + 1) = b(i);
            basis_[static_cast<std::size_t>(i)] = n_ + i;
        }
        for (int j = 0; j < n_; ++j) {
            nonbasis_[static_cast<std::size_t>(j)] = j;
            D_(m_, j) = -c(j);
        }
        nonbasis_[static_cast<std::size_t>(n_)] = -1;
        D_(m_ + 1, n_) = 1.0;
    }

    LpResult solve() {
        LpResult out;
        int r = 0;
        for (int i = 1; i < m_; ++i) {
            if (D_(i, n_ + 1) < D_(r, n_ + 1)) r = i;
        }
        if (m_ > 0 && D_(r, n_ + 1) < -eps_) {
            pivot(r, n_);
            if (!run(1) || D_(m_ + 1, n_ + 1) < -eps_) {
                out.status = LpResult::Status::Infeasible;
                out.value = -std::numeric_limits<double>::infinity();
                return out;
            }
            for (int i = 0; i < m_; ++i) {
                if (basis_[static_cast<std::size_t>(i)] != -1) continue;
                int s = -1;
                for (int j = 0; j <= n_; ++j) {
                    if (s == -1 || D_(i, j) < D_(i, s) ||
                        (D_(i, j) == D_(i, s) && nonbasis_[static_cast<std::size_t>(j)] < nonbasis_[static_cast<std::size_t>(s)])) {
                        s = j;
                    }
                }
                pivot(i, s);
            }
        }
        if (!run(2)) {
            out.status = LpResult::Status::Unbounded;
            out.value = std::numeric_limits<double>::infinity();
            return out;
        }
        out.x = Vector::Zero(n_);
        for (int i = 0; i < m_; ++i) {
            const int bi = basis_[static_cast<std::size_t>(i)];
            if (bi >= 0 && bi < n_) out.x(bi) = D_(i, n_ + 1);
        }
        out.value = D_(m_, n_ + 1);
        return out;
    }

private:
    void pivot(int r, int s) {
        const double inv = 1.0 / D_(r, s);
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r) continue;
            const double factor = D_(i, s) * inv;
            if (factor == 0.0) continue;
            for (int j = 0; j < n_ + 2; ++j) {
                if (j != s) D_(i, j) -= D_(r, j) * factor;
            }
        }
        for (int j = 0; j < n_ + 2; ++j) {
            if (j != s) D_(r, j) *= inv;
        }
        for (int i = 0; i < m_ + 2; ++i) {
            if (i != r) D_(i, s) *= -inv;
        }
        D_(r, s) = inv;
        std::swap(basis_[static_cast<std::size_t>(r)], nonbasis_[static_cast<std::size_t>(s)]);
    }

    bool run(int phase) {
        const int row = phase == 1 ? m_ + 1 : m_;
        while (true) {
            int s = -1;
            for (int j = 0; j <= n_; ++j) {
                if (phase == 2 && nonbasis_[static_cast<std::size_t>(j)] == -1) continue;
                if (s == -1 || D_(row, j) < D_(row, s) ||
                    (D_(row, j) == D_(row, s) && nonbasis_[static_cast<std::size_t>(j)] < nonbasis_[static_cast<std::size_t>(s)])) {
                    s = j;
                }
            }
            if (D_(row, s) > -eps_) return true;
            int r = -1;
            for (int i = 0; i < m_; ++i) {
                if (D_(i, s) < eps_) continue;
                if (r == -1) {
                    r = i;
                    continue;
                }
                const double lhs = D_(i, n_ + 1) / D_(i, s);
                const double rhs = D_(r, n_ + 1) / D_(r, s);
                if (lhs < rhs || (lhs == rhs && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(r)])) r = i;
            }
            if (r == -1) return false;
            pivot(r, s);
        }
    }

    int m_;
    int n_;
    double eps_;
    Matrix D_;
    std::vector<int> basis_;
    std::vector<int> nonbasis_;
};

/// Smallest K admitting an order-preserving K-Lipschitz extension of a scalar
/// problem, solved directly as the linear program
///   min K  s.t.  F(v) - F(u) <= K d(u, v),  order constraints,  F = f on S,
/// and clamped below at 1. Independent of the difference-constraint route.
/// Returns +inf if no monotone extension exists at any K.
inline double exact_scalar_modulus(const ExtensionProblem& problem) {
    if (!problem.scalar()) throw DomainError("exact_scalar_modulus: target must be one-dimensional");
    const auto& X = problem.domain();
    const std::size_t n = X.size();
    const bool up = contains(problem.target(), Vector::Ones(1));
    const bool down = contains(problem.target(), -Vector::Ones(1));

    // Columns: K, then (F+, F-) for each free point.
    std::vector<int> col(n, -1);
    int cols = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (!problem.is_anchor(i)) {
            col[i] = cols;
            cols += 2;
        }
    }
    std::vector<Vector> rows;
    std::vector<double> rhs;
    // Adds  sum coef_i F(i) + k_coef K <= bound.
    auto add_row = [&](const std::vector<std::pair<std::size_t, double>>& terms, double k_coef, double bound) {
        Vector row = Vector::Zero(cols);
        row(0) = k_coef;
        for (const auto& [i, coef] : terms) {
            if (problem.is_anchor(i)) {
                bound -= coef * problem.anchor_value(i)(0);
            } else {
                row(col[i]) += coef;
                row(col[i] + 1) -= coef;
            }
        }
        rows.push_back(row);
        rhs.push_back(bound);
    };
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            add_row({{v, 1.0}, {u, -1.0}}, -X.d(u, v), 0.0);
            if (!X.greater(u, v) || (problem.is_anchor(u) && problem.is_anchor(v))) continue;
            if (up || !down) add_row({{v, 1.0}, {u, -1.0}}, 0.0, 0.0);
            if (down || !up) add_row({{u, 1.0}, {v, -1.0}}, 0.0, 0.0);
        }
    }
    Matrix A(static_cast<Eigen::Index>(rows.size()), cols);
    Vector b(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        A.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
        b(static_cast<Eigen::Index>(r)) = rhs[r];
    }
    Vector c = Vector::Zero(cols);
    c(0) = -1.0;
    const LpResult res = Simplex(A, b, c).solve();
    if (res.status == LpResult::Status::Infeasible) return std::numeric_limits<double>::infinity();
    return std::max(1.0, -res.value);
}

} // namespace ordlip
