#ifndef LPIS_EXPR_HPP
#define LPIS_EXPR_HPP

#include "lpis/polynomial.hpp"
#include "lpis/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lpis {

/// Ordered list of distinct variable names shared by a family of expressions.
class Variables {
public:
    explicit Variables(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    /// Index of `name`; throws InputError for an undeclared variable.
    std::size_t require(const std::string& name) const;

    bool operator==(const Variables& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

using VariablesPtr = std::shared_ptr<const Variables>;

VariablesPtr make_variables(std::vector<std::string> names);

/// Exact rational function numerator/denominator in canonical form:
/// gcd(numerator, denominator) = 1 and the denominator is monic under grlex.
/// Two Expressions over the same variables are equal iff they are equal as
/// rational functions.
class Expression {
public:
    explicit Expression(VariablesPtr vars);
    Expression(VariablesPtr vars, const Rational& c);
    Expression(VariablesPtr vars, Polynomial numerator);
    /// Throws std::domain_error if the denominator is the zero polynomial.
    Expression(VariablesPtr vars, Polynomial numerator, Polynomial denominator);

    static Expression variable(VariablesPtr vars, const std::string& name);

    const VariablesPtr& variables() const noexcept { return vars_; }
    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;
    bool depends_on(std::size_t var) const { return num_.contains(var) || den_.contains(var); }

    Expression operator-() const;
    Expression& operator+=(const Expression& o);
    Expression& operator-=(const Expression& o);
    Expression& operator*=(const Expression& o);
    Expression& operator/=(const Expression& o);
    friend Expression operator+(Expression a, const Expression& b) { return a += b; }
    friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
    friend Expression operator*(Expression a, const Expression& b) { return a *= b; }
    friend Expression operator/(Expression a, const Expression& b) { return a /= b; }
    friend bool operator==(const Expression& a, const Expression& b);

    Expression pow(unsigned k) const;

    /// Canonical textual form, re-parseable by parse_expr.
    std::string to_string() const;

private:
    void check_compatible(const Expression& o) const;
    void canonicalize();

    VariablesPtr vars_;
    Polynomial num_;
    Polynomial den_;
};

/// Exact partial derivative with respect to a declared variable.
Expression differentiate(const Expression& e, const std::string& var);
Expression differentiate(const Expression& e, std::size_t var);

/// Exact value at a point. `point` must assign every variable of `e` that
/// occurs in it. Throws PoleError when the denominator vanishes there.
Rational evaluate_at(const Expression& e, const std::map<std::string, Rational>& point);
Rational evaluate_at(const Expression& e, std::span<const Rational> point);

std::string polynomial_to_string(const Polynomial& p, const Variables& vars);

} // namespace lpis

#endif
