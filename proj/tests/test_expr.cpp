#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpis/errors.hpp"
#include "lpis/expr.hpp"
#include "lpis/parser.hpp"
#include "lpis/polynomial.hpp"

#include <random>

using namespace lpis;

namespace {

VariablesPtr txy()
{
    return make_variables({"t", "x", "y"});
}

Expression P(const std::string& s, const VariablesPtr& v)
{
    return parse_expr(s, v);
}

// Random polynomial with small integer coefficients.
Polynomial random_poly(std::mt19937& rng, std::size_t nvars, int terms, int max_exp)
{
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> ex(0, max_exp);
    Polynomial p(nvars);
    for (int i = 0; i < terms; ++i) {
        Exponents e(nvars);
        for (auto& x : e) x = static_cast<std::uint16_t>(ex(rng));
        p.add_term(e, Rational(coeff(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("parse and print round trip")
{
    auto v = txy();
    for (const char* s : {"t^2+1", "1/2*t", "x*y-t", "(t^2+1)/(x-y)", "-2*t*x", "3"}) {
        const Expression e = P(s, v);
        CHECK(P(e.to_string(), v) == e);
    }
    CHECK(P("t^2 + 1", v).to_string() == "t^2+1");
    CHECK(P("t/2", v).to_string() == "1/2*t");
}

TEST_CASE("canonical form of rational functions")
{
    auto v = txy();
    // (t^2-1)/(t-1) reduces to t+1
    CHECK(P("(t^2-1)/(t-1)", v) == P("t+1", v));
    CHECK(P("(t^2-1)/(t-1)", v).is_polynomial());
    // denominator made monic
    const Expression e = P("x/(2*t+2)", v);
    CHECK(e.denominator().leading_coefficient() == 1);
    CHECK(e == P("1/2*x/(t+1)", v));
    CHECK((P("x/y", v) - P("x/y", v)).is_zero());
}

TEST_CASE("differentiation")
{
    auto v = txy();
    CHECK(differentiate(P("t^3*x", v), "t") == P("3*t^2*x", v));
    CHECK(differentiate(P("x/(t^2+1)", v), "t") == P("-2*t*x/(t^2+1)^2", v));
    CHECK(differentiate(P("y", v), "x").is_zero());
}

TEST_CASE("evaluation")
{
    auto v = txy();
    const Expression e = P("(t*x+1)/(y-2)", v);
    CHECK(evaluate_at(e, std::map<std::string, Rational>{{"t", 2}, {"x", 3}, {"y", 4}}) == Rational(7, 2));
    CHECK_THROWS_AS(evaluate_at(e, std::map<std::string, Rational>{{"t", 2}, {"x", 3}}), InputError);
    const std::vector<Rational> pole{Rational(1), Rational(1), Rational(2)};
    CHECK_THROWS_AS(evaluate_at(e, pole), PoleError);
}

TEST_CASE("parse errors carry positions")
{
    auto v = txy();
    try {
        parse_expr("t + q", v);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(parse_expr("t/(x-x)", v), ParseError);
    CHECK_THROWS_AS(parse_expr("t $ x", v), ParseError);
    CHECK_THROWS_AS(parse_expr("(t", v), ParseError);
    CHECK_THROWS_AS(parse_expr("t^x", v), ParseError);
}

TEST_CASE("polynomial gcd agrees with divisibility on random products")
{
    // oracle: gcd(a*c, b*c) is divisible by c and divides both products
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const Polynomial a = random_poly(rng, 3, 3, 2);
        const Polynomial b = random_poly(rng, 3, 3, 2);
        const Polynomial c = random_poly(rng, 3, 2, 2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        const Polynomial ac = a * c;
        const Polynomial bc = b * c;
        const Polynomial g = gcd(ac, bc);
        CHECK(divide_exact(g, c).has_value());
        CHECK(divide_exact(ac, g).has_value());
        CHECK(divide_exact(bc, g).has_value());
    }
}

TEST_CASE("field axioms on random rational functions")
{
    std::mt19937 rng(11);
    auto v = txy();
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial d1 = random_poly(rng, 3, 2, 1);
        Polynomial d2 = random_poly(rng, 3, 2, 1);
        if (d1.is_zero() || d2.is_zero()) continue;
        const Expression a(v, random_poly(rng, 3, 3, 2), d1);
        const Expression b(v, random_poly(rng, 3, 3, 2), d2);
        const Expression c(v, random_poly(rng, 3, 2, 2));
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        // product rule
        CHECK(differentiate(a * b, 0) == differentiate(a, 0) * b + a * differentiate(b, 0));
    }
}

TEST_CASE("polynomial basics")
{
    const Polynomial t = Polynomial::variable(2, 0);
    const Polynomial x = Polynomial::variable(2, 1);
    const Polynomial p = t * t * x + Polynomial::constant(2, Rational(3));
    CHECK(p.total_degree() == 3);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.derivative(0) == t * x * Rational(2));
    CHECK(p.substitute(0, Rational(2)) == x * Rational(4) + Polynomial::constant(2, Rational(3)));
    const std::vector<Rational> pt{Rational(1, 2), Rational(4)};
    CHECK(p.evaluate(pt) == Rational(4));
    CHECK(p.pow(2) == p * p);
}
