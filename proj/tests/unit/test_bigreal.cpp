#include <doctest.h>

#include "resurgence/bigcomplex.hpp"
#include "resurgence/bigreal.hpp"

using namespace resurgence;

TEST_CASE("precision is tracked and never downgraded") {
    BigReal a(1.0, 64);
    BigReal b(1.0, 200);
    BigReal c = a + b;
    CHECK(c.prec_bits() == b.prec_bits());
    CHECK(c.prec_digits() >= 199);
}

TEST_CASE("basic arithmetic at 64 digits") {
    BigReal x("0.1", 64);
    BigReal s(64);
    for (int i = 0; i < 10; ++i)
        s += x;
    CHECK(abs(s - BigReal(1L, 64)).to_double() < 1e-60);
}

TEST_CASE("sqrt and exp against known values") {
    BigReal two(2L, 64);
    CHECK(abs(sqrt(two) * sqrt(two) - two).to_double() < 1e-60);
    BigReal one(1L, 64);
    CHECK(abs(log(exp(one)) - one).to_double() < 1e-60);
}

TEST_CASE("exponential integral matches reference values") {
    // Ei(1) = 1.89511781635593675546...
    BigReal e1 = eint(BigReal(1L, 64));
    CHECK(e1.to_double() == doctest::Approx(1.8951178163559368).epsilon(1e-12));
    // e^{-10} Ei(10) = 0.11315401869094836
    BigReal x(10L, 64);
    BigReal v = exp(-x) * eint(x);
    CHECK(v.to_double() == doctest::Approx(0.11315).epsilon(1e-4));
}

TEST_CASE("complex sqrt uses the principal branch") {
    long d = 64;
    BigComplex w(BigReal(-1L, d), BigReal(0L, d));
    BigComplex r = sqrt(w);
    CHECK(r.re.to_double() == doctest::Approx(0.0));
    CHECK(r.im.to_double() == doctest::Approx(1.0));

    BigComplex z(3.0, 4.0, d);
    BigComplex s = sqrt(z);
    CHECK((s * s).re.to_double() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK((s * s).im.to_double() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("deterministic string rendering") {
    BigReal x("1.5", 64);
    CHECK(x.str(10) == BigReal("1.5", 64).str(10));
    CHECK(BigReal(0L, 64).str() == "0");
}
