#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpis/errors.hpp"
#include "lpis/swsubmodel.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace lpis;
using namespace lpis::sw;

namespace {

double cubic(double V, double lambda, double mu, const SubmodelParams& p)
{
    const double c = std::cos(mu);
    return V * V * V * c + (lambda * lambda - p.b0) * V * c + 2 * p.m_const;
}

// Oracle: sign changes on a fine grid refined by bisection.
std::vector<double> bisection_roots(double lambda, double mu, const SubmodelParams& p)
{
    std::vector<double> out;
    const double lo = -10, hi = 10;
    const int n = 20000;
    double a = lo;
    double fa = cubic(a, lambda, mu, p);
    for (int i = 1; i <= n; ++i) {
        const double b = lo + (hi - lo) * i / n;
        const double fb = cubic(b, lambda, mu, p);
        if (fa == 0) {
            out.push_back(a);
        } else if (fa * fb < 0) {
            double l = a, r = b, fl = fa;
            while (r - l > 1e-13) {
                const double mid = 0.5 * (l + r);
                const double fm = cubic(mid, lambda, mu, p);
                if ((fm < 0) == (fl < 0)) {
                    l = mid;
                    fl = fm;
                } else {
                    r = mid;
                }
            }
            out.push_back(0.5 * (l + r));
        }
        a = b;
        fa = fb;
    }
    return out;
}

} // namespace

TEST_CASE("cubic roots agree with a bisection oracle")
{
    const auto p = preset("default");
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> lam(-1.5, 1.5), mu(-1.2, 1.2);
    int compared = 0;
    for (int i = 0; i < 200; ++i) {
        const double l = lam(rng), m = mu(rng);
        const auto roots = lambda_prime_roots(l, m, p);
        const auto oracle = bisection_roots(l, m, p);
        // skip near-double roots where the grid cannot see both sign changes
        if (roots.size() != oracle.size()) continue;
        ++compared;
        for (std::size_t k = 0; k < roots.size(); ++k) CHECK(roots[k] == doctest::Approx(oracle[k]).epsilon(1e-11));
        for (double r : roots) CHECK(std::abs(cubic(r, l, m, p)) < 1e-12);
    }
    CHECK(compared > 190);
}

TEST_CASE("cubic root selection")
{
    auto p = preset("default");
    const auto roots = lambda_prime_roots(0.5, 0.1, p);
    REQUIRE(roots.size() == 3);
    const auto v = solve_lambda_prime(0.5, 0.1, p, 1.2);
    REQUIRE(v);
    CHECK(*v == doctest::Approx(roots[2]));
    // lambda^2 large: one real root, negative
    const auto one = lambda_prime_roots(3.0, 0.0, p);
    REQUIRE(one.size() == 1);
    CHECK(one[0] < 0);
    CHECK_THROWS_AS(lambda_prime_roots(0.1, std::numbers::pi / 2, p), NumericError);
}

TEST_CASE("degenerate preset reproduces lambda = sin(mu)")
{
    const auto p = preset("degenerate");
    const auto traj = integrate_submodel(p);
    REQUIRE(traj.samples.size() > 100);
    for (const auto& s : traj.samples) {
        CHECK(s.lambda == doctest::Approx(std::sin(s.mu)).epsilon(1e-9));
        CHECK(s.V == doctest::Approx(std::cos(s.mu)).epsilon(1e-9));
        CHECK(std::abs(s.H) < 1e-12);
    }
}

TEST_CASE("default trajectory conserves its integrals")
{
    const auto p = preset("default");
    const auto traj = integrate_submodel(p);
    CHECK(traj.max_bernoulli_drift(p) < 1e-8);
    CHECK(traj.max_first_integral_drift(p) < 1e-10);
    CHECK(traj.max_k_drift() < 1e-12);
    CHECK(ode_consistency(traj) < 1e-5);
    const auto ode = integrate_factor_system(p);
    CHECK(ode.bernoulli < 1e-8);
    CHECK(ode.first_integral < 1e-8);
}

TEST_CASE("field reconstruction special cases")
{
    SUBCASE("t = 0 collapses to the invariants")
    {
        const auto p = preset("default");
        const auto traj = integrate_submodel(p);
        const FieldEvaluator f(traj, p);
        const double y = 0.5 * (f.lambda_min() + f.lambda_max());
        const double x = 0.7;
        const auto pt = f.evaluate(0.0, x, y);
        const auto [mu, V] = f.invert(f.nearest_node(y), y);
        const double H = p.m_const / (V * std::cos(mu));
        CHECK(pt.v == doctest::Approx(V).epsilon(1e-12));
        CHECK(pt.h == doctest::Approx(H).epsilon(1e-12));
        CHECK(pt.u == doctest::Approx(-std::tan(mu) * x + p.g(mu) / std::cos(mu)).epsilon(1e-12));
    }
    SUBCASE("g = 0 gives u = k x")
    {
        const auto p = preset("degenerate");
        const auto traj = integrate_submodel(p);
        const FieldEvaluator f(traj, p);
        for (double t : {-0.5, 0.0, 1.5}) {
            const double s = std::sqrt(1 + t * t);
            const double y = 0.3 * s;
            const auto pt = f.evaluate(t, 2.0, y);
            const auto [mu, V] = f.invert(f.nearest_node(y / s), y / s);
            const double k = (-std::tan(mu) + t) / (s * s);
            CHECK(pt.u == doctest::Approx(2.0 * k).epsilon(1e-10));
            CHECK(pt.v == doctest::Approx((V + t * y / s) / s).epsilon(1e-10));
        }
    }
    SUBCASE("outside the trajectory range")
    {
        const auto p = preset("default");
        const auto traj = integrate_submodel(p);
        const FieldEvaluator f(traj, p);
        CHECK_THROWS_AS(f.evaluate(0.0, 0.0, f.lambda_max() + 1.0), NumericError);
    }
}

TEST_CASE("PDE residual: small, second order, sensitive to perturbation")
{
    const auto p = preset("default");
    const auto traj = integrate_submodel(p);
    const FieldEvaluator f(traj, p);
    const auto grid = default_grid(f);
    REQUIRE(grid.size() == 36);
    const double r1 = pde_residual(f, grid, 1e-4).max();
    const double r2 = pde_residual(f, grid, 5e-5).max();
    CHECK(r1 < 1e-5);
    CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.2));

    const FieldEvaluator bad(traj, p, ReconstructOptions{0.01});
    CHECK(pde_residual(bad, grid, 1e-4).max() > 1e-3);
}

TEST_CASE("lambda = y/s is invariant along the flow, y*s is not")
{
    const auto probe = flow_invariance(0.7, 1.3, 0.4, 0.9, -0.2, 1e-7);
    CHECK(probe.lambda_quotient < 1e-5);
    CHECK(probe.lambda_product > 1.0);
    CHECK(probe.V < 1e-5);
    CHECK(probe.H < 1e-5);
    CHECK(probe.K < 1e-5);
}

TEST_CASE("verify presets")
{
    for (const auto& name : preset_names()) {
        const auto r = verify(preset(name));
        CHECK(r.pass);
        for (const auto& c : r.checks) CHECK_MESSAGE(c.pass, name << ": " << c.name << " = " << c.value);
    }
    CHECK_THROWS_AS(preset("turbulent"), InputError);
}
