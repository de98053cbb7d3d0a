#include <doctest.h>

#include <cmath>

#include "resurgence/errors.hpp"
#include "resurgence/reference.hpp"
#include "resurgence/series.hpp"

using namespace resurgence;

TEST_CASE("euler ODE reference matches e^{-x} Ei(x)") {
    auto ode = builtin_ode("euler");
    BigReal ten(10L, 64);
    double y10 = (exp(-ten) * eint(ten)).to_double();
    auto sol = integrate_ode(ode, 10.0, y10, 5.0, 20.0, 1e-11);
    for (double x : {5.0, 6.5, 8.0, 10.0, 12.5, 16.0, 20.0}) {
        BigReal xv(x, 64);
        double oracle = (exp(-xv) * eint(xv)).to_double();
        CHECK(sol.eval(x) == doctest::Approx(oracle).epsilon(1e-8));
    }
}

TEST_CASE("zero initial data with zero forcing stays zero") {
    NormalFormODE ode;
    ode.lambda = 1;
    ode.a_lin = 0;
    ode.nonlinear.push_back({2, 0, Rational(1)});
    auto sol = integrate_ode(ode, 5.0, 0.0, 2.0, 10.0, 1e-10);
    for (double x : {2.0, 5.0, 7.5, 10.0})
        CHECK(std::abs(sol.eval(x)) < 1e-12);
}

TEST_CASE("self-convergence: halving tol changes the solution below tol") {
    // forward direction, where the flow is contracting and conditioning is O(1)
    auto ode = builtin_ode("ode-simple");
    auto a = integrate_ode(ode, 10.0, 0.12, 10.0, 20.0, 1e-8);
    auto b = integrate_ode(ode, 10.0, 0.12, 10.0, 20.0, 5e-9);
    for (double x = 10.0; x <= 20.0; x += 0.5)
        CHECK(std::abs(a.eval(x) - b.eval(x)) < 1e-8);
    // backward through the sensitive region the discrepancy stays within the
    // tolerance amplified by the flow's condition number ~ e^{x0 - x}
    auto ab = integrate_ode(ode, 10.0, 0.12, 6.0, 10.0, 1e-8);
    auto bb = integrate_ode(ode, 10.0, 0.12, 6.0, 10.0, 5e-9);
    for (double x = 6.0; x <= 10.0; x += 0.5)
        CHECK(std::abs(ab.eval(x) - bb.eval(x)) < 1e-8 * std::exp(10.0 - x));
}

TEST_CASE("forward-backward round trip returns to the initial point") {
    auto ode = builtin_ode("ode-branch");
    double tol = 1e-10;
    auto fwd = integrate_ode(ode, 10.0, 0.12, 10.0, 12.0, tol);
    double y12 = fwd.eval(12.0);
    auto back = integrate_ode(ode, 12.0, y12, 10.0, 12.0, tol);
    CHECK(std::abs(back.eval(10.0) - 0.12) < 10 * tol);
}

TEST_CASE("reference reproduces the independently computed dive of ode-simple") {
    // scipy solve_ivp (rtol 1e-11): y(5) = -0.9930608, crossing at 6.60922
    auto ode = builtin_ode("ode-simple");
    auto sol = integrate_ode(ode, 10.0, 0.12, 4.5, 20.0, 1e-11);
    CHECK(sol.eval(5.0) == doctest::Approx(-0.9930608).epsilon(1e-6));
    CHECK(sol.eval(6.60) * sol.eval(6.62) < 0); // sign change brackets 6.609
    CHECK(sol.eval(20.0) == doctest::Approx(0.0564345).epsilon(1e-6));
}

TEST_CASE("compare: identical curves give zero errors") {
    auto ode = builtin_ode("euler");
    auto sol = integrate_ode(ode, 10.0, 0.1, 5.0, 15.0, 1e-10);
    auto rep = compare(
        sol, [&](double x) { return sol.eval(x); }, {5.0, 7.0, 9.0, 11.0, 14.0});
    CHECK(rep.max_abs == 0.0);
    CHECK(rep.max_rel == 0.0);
    CHECK(rep.rows.size() == 5);
}

TEST_CASE("compare: errors and locations are tracked") {
    auto ode = builtin_ode("euler");
    auto sol = integrate_ode(ode, 10.0, 0.1, 5.0, 15.0, 1e-10);
    auto rep = compare(
        sol, [&](double x) { return sol.eval(x) + ((x > 9 && x < 11) ? 0.01 : 0.0); },
        {6.0, 10.0, 14.0});
    CHECK(rep.max_abs == doctest::Approx(0.01));
    CHECK(rep.x_at_max_abs == 10.0);
    CHECK(rep.scale_rel > 0);
}

TEST_CASE("error paths: bad ranges") {
    auto ode = builtin_ode("euler");
    CHECK_THROWS_AS(integrate_ode(ode, 10.0, 0.1, 12.0, 20.0, 1e-10), config_error);
    CHECK_THROWS_AS(integrate_ode(ode, 10.0, 0.1, -1.0, 20.0, 1e-10), config_error);
    auto sol = integrate_ode(ode, 10.0, 0.1, 8.0, 12.0, 1e-10);
    CHECK_THROWS_AS(compare(sol, [](double) { return 0.0; }, {30.0}), config_error);
    CHECK_THROWS_AS(sol.eval(5.0), config_error);
}
