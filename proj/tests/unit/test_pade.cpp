#include <doctest.h>

#include "resurgence/errors.hpp"
#include "resurgence/pade.hpp"
#include "resurgence/roots.hpp"
#include "resurgence/series.hpp"

using namespace resurgence;

namespace {

// function equality through cross-multiplication after normalising p, q
bool equals_one_over_one_minus_z(const PadeApproximant& pa, const Rational& scale) {
    // p(z)*(1-z) == scale * q(z)
    std::vector<Rational> one_minus_z = {1, -1};
    auto lhs = series_mul(pa.p_rat, one_minus_z, pa.p_rat.size() + 2);
    std::vector<Rational> rhs(lhs.size(), Rational(0));
    for (std::size_t i = 0; i < pa.q_rat.size(); ++i)
        rhs[i] = scale * pa.q_rat[i];
    return lhs == rhs;
}

} // namespace

TEST_CASE("geometric series collapses to 1/(1-z) at every diagonal order") {
    for (unsigned k = 1; k <= 6; ++k) {
        std::vector<Rational> c(2 * k + 1, Rational(1));
        auto pa = pade(c, k, k);
        CHECK(equals_one_over_one_minus_z(pa, Rational(1)));
    }
}

TEST_CASE("polynomial input is returned identically") {
    std::vector<Rational> c = {1, 3, 0, 0};
    auto pa = pade(c, 1, 0);
    CHECK(pa.p_rat == std::vector<Rational>{1, 3});
    CHECK(pa.q_rat == std::vector<Rational>{1});
}

TEST_CASE("re-expansion of the ode-simple Borel approximant matches all inputs") {
    auto b = borel_transform(derive_coefficients(builtin_ode("ode-simple"), 9));
    auto pa = pade(b.c, 4, 4);
    auto back = pa.taylor_exact(9);
    for (std::size_t i = 0; i < 9; ++i)
        CHECK(back[i] == b.c[i]);
}

TEST_CASE("float path re-expansion matches to working precision") {
    auto b = borel_transform(derive_coefficients(builtin_ode("prototype"), 15));
    auto pa = pade(to_bigreal(b.c, 64), 7, 7);
    auto back = pa.taylor(15);
    for (std::size_t i = 0; i < 15; ++i) {
        BigReal ref(b.c[i], 64);
        CHECK(abs(back[i] - ref).to_double() <= 1e-48 * std::max(1.0, abs(ref).to_double()));
    }
}

TEST_CASE("insufficient coefficients are rejected") {
    std::vector<Rational> c = {1, 1, 1};
    CHECK_THROWS_AS(pade(c, 2, 2, 32), pade_error);
}

TEST_CASE("roots: quadratic with known roots") {
    // (z-1)(z-2) = 2 - 3z + z^2
    std::vector<BigReal> q = {BigReal(2L, 64), BigReal(-3L, 64), BigReal(1L, 64)};
    auto roots = poly_roots(q, 64);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].re.to_double() == doctest::Approx(1.0).epsilon(1e-30));
    CHECK(roots[1].re.to_double() == doctest::Approx(2.0).epsilon(1e-30));
}

TEST_CASE("poles and residues of 1/(1-z) and (1/2)/(1-z)") {
    std::vector<Rational> geom(7, Rational(1));
    auto pa = pade(geom, 3, 3);
    auto pr = poles_and_residues(pa);
    REQUIRE(pr.size() == 1);
    CHECK(pr[0].location.re.to_double() == doctest::Approx(1.0).epsilon(1e-40));
    CHECK(pr[0].residue.re.to_double() == doctest::Approx(-1.0).epsilon(1e-40));

    std::vector<Rational> half(7, Rational(1, 2));
    auto pa2 = pade(half, 3, 3);
    auto pr2 = poles_and_residues(pa2);
    REQUIRE(pr2.size() == 1);
    CHECK(pr2[0].residue.re.to_double() == doctest::Approx(-0.5).epsilon(1e-40));
}

TEST_CASE("roots of a dense degree-12 polynomial: prod (z-k/3)") {
    std::vector<BigReal> poly = {BigReal(1L, 64)};
    for (long k = 1; k <= 12; ++k) {
        // multiply by (z - k/3)
        std::vector<BigReal> next(poly.size() + 1, BigReal(0L, 64));
        BigReal r(Rational(k, 3), 64);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= r * poly[i];
        }
        poly = next;
    }
    auto roots = poly_roots(poly, 64);
    REQUIRE(roots.size() == 12);
    for (long k = 1; k <= 12; ++k) {
        CHECK(roots[k - 1].re.to_double() ==
              doctest::Approx(static_cast<double>(k) / 3.0).epsilon(1e-30));
        CHECK(std::abs(roots[k - 1].im.to_double()) < 1e-30);
    }
}
