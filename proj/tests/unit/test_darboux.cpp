#include <doctest.h>

#include <cmath>

#include "resurgence/darboux.hpp"
#include "resurgence/errors.hpp"
#include "resurgence/histogram.hpp"
#include "resurgence/series.hpp"

using namespace resurgence;

namespace {

// Pure model (1-z)^{-1/2} with H == 1, indexed so B_n/B_{n-1} = 1 + (b-1)/n.
BorelSeries pure_sqrt_model(std::size_t count) {
    BorelSeries b;
    Rational v = 1; // B_1
    b.c.push_back(v);
    for (std::size_t n = 2; n <= count; ++n) {
        v *= Rational(1) + Rational(-1, 2) / Rational(static_cast<long>(n));
        b.c.push_back(v);
    }
    return b;
}

} // namespace

TEST_CASE("pure sqrt model gives b = 1/2, s = 0") {
    auto b = pure_sqrt_model(30);
    auto est = darboux_fit(b, 12, 64);
    CHECK(abs(est.b - BigReal(Rational(1, 2), 64)).to_double() < 1e-12);
    CHECK(std::abs(est.s.to_double()) < 1e-10);
}

TEST_CASE("darboux consistency: adjacent n agree on the pure model") {
    auto b = pure_sqrt_model(40);
    auto e1 = darboux_fit(b, 20, 64);
    auto e2 = darboux_fit(b, 21, 64);
    CHECK(abs(e1.b - e2.b).to_double() < 1e-10);
}

TEST_CASE("prototype series: exponent estimate converges to b = 1 - A = 1/3") {
    auto series = derive_coefficients(builtin_ode("prototype"), 101);
    auto borel = borel_transform(series);

    // The low-order window still carries the forcing transient; with the
    // default (0, 2) bracket there is no root at n = 12.
    CHECK_THROWS_AS(darboux_fit(borel, 12, 64), numeric_error);
    auto e12 = darboux_fit(borel, 12, 64, -1.0, 2.0);
    CHECK(e12.b.to_double() == doctest::Approx(-0.146791).epsilon(1e-4));
    CHECK(e12.s.to_double() == doctest::Approx(14.19783).epsilon(1e-3));

    auto e100 = darboux_fit(borel, 100, 64);
    CHECK(e100.b.to_double() == doctest::Approx(0.329798).epsilon(1e-4));
    CHECK(e100.s.to_double() == doctest::Approx(8.99916).epsilon(1e-3));
    // converging toward the structural exponent 1/3
    CHECK(std::abs(e100.b.to_double() - 1.0 / 3.0) < 5e-3);
}

TEST_CASE("error paths: bad n and vanishing coefficients") {
    auto b = pure_sqrt_model(10);
    CHECK_THROWS_AS(darboux_fit(b, 2, 64), config_error);
    BorelSeries z;
    z.c = {Rational(1), Rational(0), Rational(1), Rational(1), Rational(1)};
    CHECK_THROWS_AS(darboux_fit(z, 4, 64), numeric_error);
}

TEST_CASE("histogram mechanics") {
    Histogram h;
    h.lo = 0.0;
    h.hi = 2.0;
    h.counts.assign(20, 0);
    h.add(0.95);
    h.add(1.02);
    h.add(1.03);
    h.add(5.0); // outside
    CHECK(h.total == 3);
    CHECK(h.pooled == 4);
    CHECK(h.peak_center() == doctest::Approx(1.05));
}

TEST_CASE("ode-branch log-derivative poles peak near z = 1") {
    HistogramOptions opt;
    opt.order_lo = 5;
    opt.order_hi = 25;
    opt.window_lo = 0.5;
    opt.window_hi = 1.5;
    opt.bins = 100;
    opt.transform = PadeTransform::log_derivative;
    auto h = pole_histogram(builtin_ode("ode-branch"), opt);
    CHECK(std::abs(h.peak_center() - 1.0) < 0.05);
}

TEST_CASE("euler poles are exactly at z = 1 for every order") {
    HistogramOptions opt;
    opt.order_lo = 5;
    opt.order_hi = 12;
    opt.bins = 40;
    opt.window_lo = 0.0;
    opt.window_hi = 2.0;
    auto scan = scan_poles(builtin_ode("euler"), opt);
    CHECK(scan.failed_orders == 0);
    REQUIRE(!scan.poles.empty());
    for (const auto& p : scan.poles)
        CHECK(p.location.re.to_double() == doctest::Approx(1.0).epsilon(1e-30));
    auto h = pole_histogram(scan, opt);
    CHECK(h.peak_center() == doctest::Approx(1.025)); // bin containing z = 1
}
