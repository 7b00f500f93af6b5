#include "lvgame/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lvgame/errors.hpp"

namespace lvgame {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) {
            throw Error(ErrorKind::DimensionMismatch, "matrix rows must all have length " + std::to_string(n_));
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

State multiply(const Matrix& a, std::span<const double> x) {
    if (x.size() != a.size()) {
        throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix size");
    }
    State y(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.size(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

State solve_linear(Matrix a, State b, double pivot_tol) {
    const std::size_t n = a.size();
    if (b.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "right-hand side length does not match matrix size");
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
        }
        if (std::abs(a(pivot, k)) < pivot_tol) {
            throw Error(ErrorKind::SingularInteraction, "pivot below tolerance in column " + std::to_string(k + 1));
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    State x(n, 0.0);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x[j];
        x[ii] = s / a(ii, ii);
    }
    return x;
}

double max_norm(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace lvgame
