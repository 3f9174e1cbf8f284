#include "lpis/qlinalg.hpp"

#include <stdexcept>
#include <utility>

namespace lpis {

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols)
{
    QMatrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

QVector QMatrix::row(std::size_t r) const
{
    return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void QMatrix::append_row(const QVector& row)
{
    if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

void QMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

std::vector<std::size_t> rref(QMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Rational f;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(QMatrix m)
{
    return rref(m).size();
}

std::vector<QVector> nullspace(QMatrix m)
{
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> solve(QMatrix a, const QVector& b)
{
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    QVector x(a.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim)
{
    QMatrix m = QMatrix::from_rows(vectors, dim);
    const auto pivots = rref(m);
    std::vector<QVector> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(i));
    return out;
}

bool is_zero(const QVector& v)
{
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

QVector add_scaled(QVector a, const QVector& b, const Rational& s)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

} // namespace lpis
