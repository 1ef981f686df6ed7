#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "thyper/error.hpp"

namespace thyper {

// Dense square matrix of doubles, row-major, 0-indexed.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}
    DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
        : DenseMatrix(static_cast<int>(rows.size())) {
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n_) throw ValidationError("DenseMatrix rows must be square");
            int j = 0;
            for (double v : row) (*this)(i, j++) = v;
            ++i;
        }
    }

    [[nodiscard]] int n() const { return n_; }
    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)]; }
    [[nodiscard]] double operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
    }

    [[nodiscard]] double frobenius() const {
        double s = 0.0;
        for (double v : data_) s += v * v;
        return std::sqrt(s);
    }

    [[nodiscard]] double off_diagonal_frobenius() const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j) s += (*this)(i, j) * (*this)(i, j);
        return std::sqrt(s);
    }

private:
    int n_ = 0;
    std::vector<double> data_;
};

struct JacobiOptions {
    double tol = 1e-12;   // relative to ||m||_F
    int max_sweeps = 100;
};

// Eigenvalues of a real symmetric matrix by cyclic-by-row Jacobi rotations,
// sorted descending. Rotation order is fixed, so output is reproducible.
inline std::vector<double> eigenvalues_symmetric(DenseMatrix m, JacobiOptions opts = {}) {
    const int n = m.n();
    const double norm = m.frobenius();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > 1e-12 * std::max(norm, 1.0))
                throw ValidationError("eigenvalues_symmetric: matrix is not symmetric");

    int sweep = 0;
    while (norm > 0.0 && m.off_diagonal_frobenius() >= opts.tol * norm) {
        if (sweep++ >= opts.max_sweeps)
            throw ConvergenceError("Jacobi did not converge within " +
                                   std::to_string(opts.max_sweeps) + " sweeps");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (apq == 0.0) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
                double t = 0.0;
                if (std::abs(theta) > 1e150)
                    t = 1.0 / (2.0 * theta);
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = m(r, p);
                    const double arq = m(r, q);
                    m(r, p) = m(p, r) = c * arp - s * arq;
                    m(r, q) = m(q, r) = s * arp + c * arq;
                }
                m(p, p) -= t * apq;
                m(q, q) += t * apq;
                m(p, q) = m(q, p) = 0.0;
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = m(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

}  // namespace thyper
