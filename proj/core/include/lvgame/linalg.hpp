#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lvgame {

using State = std::vector<double>;

/// Dense square matrix, row-major. Sizes here never exceed a few dozen players.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
    double trace() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

State multiply(const Matrix& a, std::span<const double> x);

/// Solves a·x = b by Gaussian elimination with partial pivoting.
/// Throws SingularInteraction when a pivot magnitude falls below `pivot_tol`.
State solve_linear(Matrix a, State b, double pivot_tol = 1e-12);

double max_norm(std::span<const double> v);

}  // namespace lvgame
