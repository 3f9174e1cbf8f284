#ifndef LPIS_POLYNOMIAL_HPP
#define LPIS_POLYNOMIAL_HPP

#include "lpis/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace lpis {

using Exponents = std::vector<std::uint16_t>;

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic order, greatest first. Variable 0 is the most
/// significant one in the lexicographic tie-break.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables. Terms are stored in descending grlex order, so the
/// first term is the leading term. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(const Exponents& e, const Rational& c);

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;

    std::uint32_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;
    bool contains(std::size_t var) const { return degree_in(var) > 0; }

    const Exponents& leading_exponents() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    /// Adds c * x^e in place.
    void add_term(const Exponents& e, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial pow(unsigned k) const;
    Polynomial derivative(std::size_t var) const;
    Rational evaluate(std::span<const Rational> point) const;
    /// Substitutes a rational value for one variable (the variable count is kept).
    Polynomial substitute(std::size_t var, const Rational& value) const;

    /// Same polynomial scaled so that the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;

    /// Coefficients with respect to one variable: result[k] multiplies var^k and
    /// does not contain var.
    std::vector<Polynomial> coefficients_in(std::size_t var) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

/// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero only if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Monic least common multiple of two nonzero polynomials.
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/// Content with respect to `var`: monic gcd of the coefficients in that variable.
Polynomial content_in(const Polynomial& p, std::size_t var);

} // namespace lpis

#endif
