#ifndef LPIS_INVARIANTS_HPP
#define LPIS_INVARIANTS_HPP

#include "lpis/expr.hpp"
#include "lpis/liealg.hpp"

#include <span>
#include <vector>

namespace lpis {

struct Invariant {
    Expression expr;
    /// Depends on independent variables only.
    bool x_only = false;
    /// Found as a ratio of two semi-invariants rather than as a polynomial.
    bool rational = false;
};

/// Functionally independent invariants of a subalgebra, x-only entries first.
struct InvariantBasis {
    std::vector<Invariant> invariants;
    /// Total number t of functionally independent invariants.
    std::size_t expected = 0;
    /// Expected number sigma of x-only invariants.
    std::size_t expected_x_only = 0;
    bool complete = false;

    std::size_t x_only_count() const;
    std::size_t u_dependent_count() const;
    std::vector<Expression> expressions() const;
};

struct InvariantSearchOptions {
    int max_degree = 2;
    /// Also look for ratios P/Q of semi-invariants when polynomials do not suffice.
    bool rational = true;
    std::uint64_t seed = 42;
};

/// Solves X(P) = 0 for every spanning X over polynomials P of total degree
/// <= max_degree (constants excluded) and keeps a functionally independent
/// subset in (degree, coefficient) order: x-only invariants first, then
/// u-dependent ones. When that is incomplete and options.rational is set,
/// ratios P/Q are added where Q is a semi-invariant (X(Q)/Q polynomial)
/// drawn from monomials and from the field coefficients, and P solves
/// X(P) = (X(Q)/Q) P.
InvariantBasis find_polynomial_invariants(const Subalgebra& s, const InvariantSearchOptions& options = {});

/// True iff every spanning field annihilates e.
bool verify_invariant(std::span<const VectorField> fields, const Expression& e);
bool verify_invariant(const Subalgebra& s, const Expression& e);

/// Generic rank of the Jacobian of exprs with respect to all variables.
std::size_t functional_rank(std::span<const Expression> exprs);

/// Generic rank of the Jacobian with respect to the listed variable indices.
std::size_t functional_rank(std::span<const Expression> exprs, std::span<const std::size_t> wrt);

} // namespace lpis

#endif
