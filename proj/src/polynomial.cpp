#include "lpis/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace lpis {

std::uint32_t total_degree(const Exponents& e)
{
    std::uint32_t d = 0;
    for (auto k : e) d += k;
    return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const
{
    const auto da = lpis::total_degree(a);
    const auto db = lpis::total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c)
{
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    Polynomial p(nvars);
    p.add_term(e, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c)
{
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && lpis::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const
{
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value of a non-constant polynomial");
    return terms_.begin()->second;
}

std::uint32_t Polynomial::total_degree() const
{
    return terms_.empty() ? 0 : lpis::total_degree(terms_.begin()->first);
}

std::uint32_t Polynomial::degree_in(std::size_t var) const
{
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max<std::uint32_t>(d, e[var]);
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c)
{
    assert(e.size() == nvars_);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    assert(o.nvars_ == nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    assert(o.nvars_ == nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    assert(a.nvars_ == b.nvars_);
    Polynomial r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial result = constant(nvars_, Rational(1));
    Polynomial base = *this;
    while (k) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum = 0;
    Rational term;
    for (const auto& [e, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (std::uint16_t k = 0; k < e[i]; ++k) term *= point[i];
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const
{
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        Rational f = c;
        for (std::uint16_t k = 0; k < e[var]; ++k) f *= value;
        Exponents d = e;
        d[var] = 0;
        r.add_term(d, f);
    }
    return r;
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) return *this;
    Polynomial r(*this);
    const Rational inv = 1 / leading_coefficient();
    r *= inv;
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const
{
    std::vector<Polynomial> out(degree_in(var) + 1, Polynomial(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[var] = 0;
        out[e[var]].add_term(d, c);
    }
    return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const std::size_t n = a.nvars();
    Polynomial q(n);
    Polynomial r = a;
    const Exponents& lb = b.leading_exponents();
    const Rational lcb = b.leading_coefficient();
    Exponents shift(n);
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        for (std::size_t i = 0; i < n; ++i) {
            if (lr[i] < lb[i]) return std::nullopt;
            shift[i] = static_cast<std::uint16_t>(lr[i] - lb[i]);
        }
        const Polynomial t = Polynomial::monomial(shift, r.leading_coefficient() / lcb);
        q += t;
        r -= t * b;
    }
    return q;
}

namespace {

Polynomial must_divide(const Polynomial& a, const Polynomial& b)
{
    auto q = divide_exact(a, b);
    if (!q) throw std::logic_error("inexact polynomial division inside gcd");
    return std::move(*q);
}

// Pseudo-remainder of p by q in `var`, up to a nonzero factor free of var.
Polynomial pseudo_remainder(Polynomial p, const Polynomial& q, std::size_t var)
{
    const auto dq = q.degree_in(var);
    const Polynomial lcq = q.coefficients_in(var).back();
    const std::size_t n = p.nvars();
    while (!p.is_zero() && p.degree_in(var) >= dq) {
        const auto dp = p.degree_in(var);
        const Polynomial lcp = p.coefficients_in(var).back();
        Exponents shift(n, 0);
        shift[var] = static_cast<std::uint16_t>(dp - dq);
        p = lcq * p - lcp * Polynomial::monomial(shift, Rational(1)) * q;
    }
    return p;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var)
{
    return must_divide(p, content_in(p, var)).monic();
}

std::optional<std::size_t> first_variable(const Polynomial& a, const Polynomial& b)
{
    for (std::size_t v = 0; v < a.nvars(); ++v) {
        if (a.contains(v) || b.contains(v)) return v;
    }
    return std::nullopt;
}

} // namespace

Polynomial content_in(const Polynomial& p, std::size_t var)
{
    Polynomial g(p.nvars());
    for (const auto& c : p.coefficients_in(var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    const std::size_t n = a.nvars();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(n, Rational(1));
    if (a.size() == 1 && b.size() == 1) {
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) e[i] = std::min(a.leading_exponents()[i], b.leading_exponents()[i]);
        return Polynomial::monomial(e, Rational(1));
    }

    const std::size_t v = *first_variable(a, b);
    if (!a.contains(v)) return gcd(a, content_in(b, v));
    if (!b.contains(v)) return gcd(content_in(a, v), b);

    const Polynomial ca = content_in(a, v);
    const Polynomial cb = content_in(b, v);
    const Polynomial c = gcd(ca, cb);
    Polynomial p = must_divide(a, ca);
    Polynomial q = must_divide(b, cb);
    if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
    while (true) {
        Polynomial r = pseudo_remainder(p, q, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            q = Polynomial::constant(n, Rational(1));
            break;
        }
        p = std::move(q);
        q = primitive_in(r, v);
    }
    if (!q.is_constant()) q = primitive_in(q, v);
    return (c * q).monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm of zero polynomial");
    return must_divide(a * b, gcd(a, b)).monic();
}

} // namespace lpis
