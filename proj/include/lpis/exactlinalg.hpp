#ifndef LPIS_EXACTLINALG_HPP
#define LPIS_EXACTLINALG_HPP

#include "lpis/expr.hpp"
#include "lpis/qlinalg.hpp"
#include "lpis/vfield.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace lpis {

/// Rectangular grid of Expressions over one variable set.
class ExprMatrix {
public:
    ExprMatrix(VariablesPtr vars, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const VariablesPtr& variables() const noexcept { return vars_; }
    Expression& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Expression& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Columns [first, first + count).
    ExprMatrix column_block(std::size_t first, std::size_t count) const;

private:
    VariablesPtr vars_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Expression> data_;
};

/// Rank over the field of rational functions (the maximal pointwise rank),
/// by fraction-free elimination on the row-wise cleared polynomial matrix.
std::size_t generic_rank(const ExprMatrix& m);

/// Rank of the matrix evaluated at a point; throws PoleError if an entry has
/// a pole there.
std::size_t sample_rank(const ExprMatrix& m, std::span<const Rational> point);

/// Deterministic random sample points: integers in [2, 97].
class SamplePoints {
public:
    explicit SamplePoints(std::uint64_t seed) : engine_(seed) {}
    std::vector<Rational> next(std::size_t nvars);

private:
    std::mt19937_64 engine_;
};

struct RankCheck {
    std::size_t generic = 0;
    std::vector<std::size_t> sample_ranks;
    /// Some sample reached the generic rank.
    bool attained = false;
};

/// generic_rank plus `samples` random-point ranks. Throws std::logic_error if
/// a sample rank ever exceeds the generic rank.
RankCheck checked_rank(const ExprMatrix& m, std::uint64_t seed, int samples = 3);

/// Coordinates of expressions over Q: one row per monomial of the numerators
/// after clearing the common denominator, one column per expression.
QMatrix expression_coordinates(std::span<const Expression> exprs);

/// Coordinates of fields as vectors over Q: one row per (component, monomial)
/// after clearing the per-component common denominator across all fields, one
/// column per field. Linear relations with constant coefficients among the
/// fields are exactly the nullspace of this matrix.
QMatrix field_coordinates(std::span<const VectorField> fields);

/// Constant coefficients c with x = sum_j c_j basis_j, or nullopt.
std::optional<QVector> membership_in_span(const VectorField& x, std::span<const VectorField> basis);

/// Rank over Q of a list of fields with constant coefficients.
std::size_t linear_rank(std::span<const VectorField> fields);

struct CoefficientMatrices {
    ExprMatrix xi;
    ExprMatrix xi_eta;
};

/// Row a holds the components of fields[a]; xi is the left n-column block.
CoefficientMatrices coefficient_matrices(std::span<const VectorField> fields, std::size_t n);

} // namespace lpis

#endif
