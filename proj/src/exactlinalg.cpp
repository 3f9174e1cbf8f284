#include "lpis/exactlinalg.hpp"

#include "lpis/errors.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace lpis {

ExprMatrix::ExprMatrix(VariablesPtr vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), data_(rows * cols, Expression(vars_))
{
}

ExprMatrix ExprMatrix::column_block(std::size_t first, std::size_t count) const
{
    if (first + count > cols_) throw std::out_of_range("column block out of range");
    ExprMatrix out(vars_, rows_, count);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    }
    return out;
}

std::size_t generic_rank(const ExprMatrix& m)
{
    const std::size_t nv = m.variables()->size();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators row by row.
    std::vector<std::vector<Polynomial>> a(rows, std::vector<Polynomial>(cols, Polynomial(nv)));
    for (std::size_t r = 0; r < rows; ++r) {
        Polynomial den = Polynomial::constant(nv, Rational(1));
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& e = m(r, c);
            if (!e.is_zero() && !e.denominator().is_constant()) den = lcm(den, e.denominator());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& e = m(r, c);
            if (e.is_zero()) continue;
            a[r][c] = e.numerator() * *divide_exact(den, e.denominator());
        }
    }

    // Bareiss elimination with column skipping; entries stay polynomial because
    // every division by the previous pivot is exact.
    Polynomial prev = Polynomial::constant(nv, Rational(1));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[rank], a[p]);
        const Polynomial& pivot = a[rank][c];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Polynomial v = pivot * a[i][j] - a[i][c] * a[rank][j];
                if (v.is_zero()) {
                    a[i][j] = std::move(v);
                    continue;
                }
                auto q = divide_exact(v, prev);
                if (!q) throw std::logic_error("Bareiss step produced an inexact division");
                a[i][j] = std::move(*q);
            }
            a[i][c] = Polynomial(nv);
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

std::size_t sample_rank(const ExprMatrix& m, std::span<const Rational> point)
{
    QMatrix q(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) q(r, c) = evaluate_at(m(r, c), point);
    }
    return rank(std::move(q));
}

std::vector<Rational> SamplePoints::next(std::size_t nvars)
{
    std::vector<Rational> p(nvars);
    for (auto& x : p) x = static_cast<long>(2 + engine_() % 96);
    return p;
}

RankCheck checked_rank(const ExprMatrix& m, std::uint64_t seed, int samples)
{
    RankCheck out;
    out.generic = generic_rank(m);
    SamplePoints points(seed);
    int attempts = 0;
    while (static_cast<int>(out.sample_ranks.size()) < samples && attempts < 20 * samples) {
        ++attempts;
        const auto p = points.next(m.variables()->size());
        try {
            const auto r = sample_rank(m, p);
            if (r > out.generic) throw std::logic_error("sample rank exceeds generic rank");
            out.sample_ranks.push_back(r);
            out.attained = out.attained || r == out.generic;
        } catch (const PoleError&) {
            continue;
        }
    }
    return out;
}

QMatrix expression_coordinates(std::span<const Expression> exprs)
{
    const std::size_t k = exprs.size();
    QMatrix out(0, k);
    if (exprs.empty()) return out;
    const std::size_t nv = exprs.front().variables()->size();
    Polynomial den = Polynomial::constant(nv, Rational(1));
    for (const auto& e : exprs) {
        if (!e.is_zero() && !e.denominator().is_constant()) den = lcm(den, e.denominator());
    }
    std::map<Exponents, QVector, GrlexGreater> rows;
    for (std::size_t j = 0; j < k; ++j) {
        const auto& e = exprs[j];
        if (e.is_zero()) continue;
        const Polynomial p = e.numerator() * *divide_exact(den, e.denominator());
        for (const auto& [exp, coef] : p.terms()) {
            auto [it, inserted] = rows.try_emplace(exp, QVector(k, Rational(0)));
            it->second[j] = coef;
        }
    }
    for (const auto& [exp, row] : rows) out.append_row(row);
    return out;
}

QMatrix field_coordinates(std::span<const VectorField> fields)
{
    if (fields.empty()) return QMatrix(0, 0);
    const std::size_t ncomp = fields.front().components().size();
    const std::size_t k = fields.size();
    QMatrix out(0, k);
    std::vector<Expression> column;
    column.reserve(k);
    for (std::size_t c = 0; c < ncomp; ++c) {
        column.clear();
        for (const auto& f : fields) column.push_back(f.component(c));
        const QMatrix part = expression_coordinates(column);
        for (std::size_t r = 0; r < part.rows(); ++r) out.append_row(part.row(r));
    }
    return out;
}

std::optional<QVector> membership_in_span(const VectorField& x, std::span<const VectorField> basis)
{
    if (basis.empty()) {
        if (x.is_zero()) return QVector{};
        return std::nullopt;
    }
    std::vector<VectorField> all(basis.begin(), basis.end());
    all.push_back(x);
    const QMatrix coords = field_coordinates(all);
    const std::size_t k = basis.size();
    QMatrix a(coords.rows(), k);
    QVector b(coords.rows());
    for (std::size_t r = 0; r < coords.rows(); ++r) {
        for (std::size_t j = 0; j < k; ++j) a(r, j) = coords(r, j);
        b[r] = coords(r, k);
    }
    return solve(std::move(a), b);
}

std::size_t linear_rank(std::span<const VectorField> fields)
{
    return rank(field_coordinates(fields));
}

CoefficientMatrices coefficient_matrices(std::span<const VectorField> fields, std::size_t n)
{
    if (fields.empty()) throw std::invalid_argument("coefficient matrices of an empty field list");
    const auto& vars = fields.front().variables();
    const std::size_t total = vars->size();
    ExprMatrix full(vars, fields.size(), total);
    for (std::size_t a = 0; a < fields.size(); ++a) {
        for (std::size_t c = 0; c < total; ++c) full(a, c) = fields[a].component(c);
    }
    return CoefficientMatrices{full.column_block(0, n), full};
}

} // namespace lpis
