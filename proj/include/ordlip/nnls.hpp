#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "config.hpp"
#include "errors.hpp"

namespace ordlip {

struct NnlsResult {
    Vector coef;       // nonnegative weights, one per column
    Vector fitted;     // A * coef
    double residual = 0.0;
    int iterations = 0;
};

// Lawson-Hanson active set solver for  min ||A x - b||  subject to  x >= 0.
// Terminates when the dual vector w = A^T (b - A x) is <= kkt_tol on the
// zero set; throws ConvergenceError past max_iter outer steps (0 = 100 * dim).
inline NnlsResult nnls(const Matrix& A, const Vector& b, double kkt_tol = 1e-10, int max_iter = 0) {
    const Eigen::Index m = A.rows();
    const Eigen::Index n = A.cols();
    if (b.size() != m) {
        throw StructuralError("nnls: right-hand side has wrong length");
    }
    NnlsResult out;
    out.coef = Vector::Zero(n);
    out.fitted = Vector::Zero(m);
    if (n == 0) {
        out.residual = b.norm();
        return out;
    }
    if (max_iter <= 0) {
        max_iter = 100 * static_cast<int>(std::max<Eigen::Index>(m, n));
    }

    const double scale = 1.0 + A.norm() * b.norm();
    const double w_tol = kkt_tol * scale;
    std::vector<bool> passive(static_cast<std::size_t>(n), false);
    Vector x = Vector::Zero(n);
    Vector w = A.transpose() * b;

    auto solve_passive = [&](Vector& s) {
        std::vector<Eigen::Index> idx;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
        }
        Matrix Ap(m, static_cast<Eigen::Index>(idx.size()));
        for (std::size_t k = 0; k < idx.size(); ++k) Ap.col(static_cast<Eigen::Index>(k)) = A.col(idx[k]);
        const Vector sp = Ap.colPivHouseholderQr().solve(b);
        s = Vector::Zero(n);
        for (std::size_t k = 0; k < idx.size(); ++k) s(idx[k]) = sp(static_cast<Eigen::Index>(k));
    };

    int iter = 0;
    while (true) {
        Eigen::Index best = -1;
        double best_w = w_tol;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (!passive[static_cast<std::size_t>(j)] && w(j) > best_w) {
                best_w = w(j);
                best = j;
            }
        }
        if (best < 0) break;
        if (++iter > max_iter) {
            throw ConvergenceError("nnls: iteration cap exceeded before meeting KKT tolerance");
        }
        passive[static_cast<std::size_t>(best)] = true;

        Vector s;
        int inner = 0;
        while (true) {
            solve_passive(s);
            bool all_positive = true;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<std::size_t>(j)] && s(j) <= 0.0) {
                    all_positive = false;
                    break;
                }
            }
            if (all_positive) {
                x = s;
                break;
            }
            double alpha = std::numeric_limits<double>::infinity();
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<std::size_t>(j)] && s(j) <= 0.0) {
                    const double denom = x(j) - s(j);
                    if (denom > 0.0) alpha = std::min(alpha, x(j) / denom);
                }
            }
            if (!std::isfinite(alpha)) alpha = 0.0;
            x += alpha * (s - x);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (passive[static_cast<std::size_t>(j)] && x(j) <= 1e-15 * (1.0 + x.cwiseAbs().maxCoeff())) {
                    passive[static_cast<std::size_t>(j)] = false;
                    x(j) = 0.0;
                }
            }
            if (++inner > max_iter) {
                throw ConvergenceError("nnls: inner loop failed to restore feasibility");
            }
        }
        w = A.transpose() * (b - A * x);
    }

    out.coef = x;
    out.fitted = A * x;
    out.residual = (b - out.fitted).norm();
    out.iterations = iter;
    return out;
}

} // namespace ordlip
