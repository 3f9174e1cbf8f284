#ifndef LPIS_QLINALG_HPP
#define LPIS_QLINALG_HPP

#include "lpis/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lpis {

using QVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVector row(std::size_t r) const;
    void append_row(const QVector& row);
    void swap_rows(std::size_t a, std::size_t b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduces in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

/// Basis of {x : m x = 0}, one vector per free column, in increasing order
/// of the free column (each vector has a 1 in its free column).
std::vector<QVector> nullspace(QMatrix m);

/// Some solution x of a x = b, or nullopt if the system is inconsistent.
std::optional<QVector> solve(QMatrix a, const QVector& b);

/// Canonical basis (nonzero RREF rows) of the span of `vectors`.
std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim);

bool is_zero(const QVector& v);

QVector add_scaled(QVector a, const QVector& b, const Rational& s);

} // namespace lpis

#endif
