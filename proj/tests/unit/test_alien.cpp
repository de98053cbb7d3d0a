#include <doctest.h>

#include "resurgence/alien.hpp"
#include "resurgence/errors.hpp"

using namespace resurgence;

namespace {

Rational op_coeff(const DeltaExpression& e, unsigned k) {
    AlienMono m;
    m.delta_pow = k;
    return e.coeff(m);
}

} // namespace

TEST_CASE("stokes_power expansions") {
    auto g = stokes_power(Rational(1, 2), 4);
    CHECK(op_coeff(g, 0) == 1);
    CHECK(op_coeff(g, 1) == Rational(1, 2));
    CHECK(op_coeff(g, 2) == Rational(-1, 8));
    CHECK(op_coeff(g, 3) == Rational(1, 16));
    CHECK(op_coeff(g, 4) == Rational(-5, 128));

    auto id = stokes_power(Rational(1), 6);
    CHECK(op_coeff(id, 0) == 1);
    CHECK(op_coeff(id, 1) == 1);
    for (unsigned k = 2; k <= 6; ++k)
        CHECK(op_coeff(id, k) == 0);

    auto inv = stokes_power(Rational(-1, 2), 2);
    CHECK(op_coeff(inv, 0) == 1);
    CHECK(op_coeff(inv, 1) == Rational(-1, 2));
    CHECK(op_coeff(inv, 2) == Rational(3, 8));
}

TEST_CASE("stokes_power(1/2) * stokes_power(-1/2) = 1 through every K <= 6") {
    for (unsigned K = 1; K <= 6; ++K) {
        auto prod = DeltaExpression::op_mul(stokes_power(Rational(1, 2), K),
                                            stokes_power(Rational(-1, 2), K), K);
        CHECK(op_coeff(prod, 0) == 1);
        for (unsigned k = 1; k <= K; ++k)
            CHECK(op_coeff(prod, k) == 0);
    }
}

TEST_CASE("alien derivative powers reproduce the bridge-equation prefactors") {
    // log(1+d)*(1+d)^{1/2} = d - d^3/24 + d^4/24 through d^4
    auto op = DeltaExpression::op_mul(alien_derivative_power(1, 4),
                                      stokes_power(Rational(1, 2), 4), 4);
    CHECK(op_coeff(op, 1) == 1);
    CHECK(op_coeff(op, 2) == 0);
    CHECK(op_coeff(op, 3) == Rational(-1, 24));
    CHECK(op_coeff(op, 4) == Rational(1, 24));

    auto op2 = DeltaExpression::op_mul(alien_derivative_power(2, 4),
                                       stokes_power(Rational(1, 2), 4), 4);
    CHECK(op_coeff(op2, 2) == 1);
    CHECK(op_coeff(op2, 3) == Rational(-1, 2));
    CHECK(op_coeff(op2, 4) == Rational(7, 24));

    auto op3 = DeltaExpression::op_mul(alien_derivative_power(3, 4),
                                       stokes_power(Rational(1, 2), 4), 4);
    CHECK(op_coeff(op3, 3) == 1);
    CHECK(op_coeff(op3, 4) == -1);

    auto op4 = DeltaExpression::op_mul(alien_derivative_power(4, 4),
                                       stokes_power(Rational(1, 2), 4), 4);
    CHECK(op_coeff(op4, 4) == 1);
}

TEST_CASE("delta powers in alien-derivative powers start with weight one") {
    auto w1 = delta_in_alien_powers(1, 4);
    REQUIRE(w1.size() == 4);
    CHECK(w1[0] == 1);
    CHECK(w1[1] == Rational(1, 2));
    CHECK(w1[2] == Rational(1, 6));
    auto w2 = delta_in_alien_powers(2, 4);
    CHECK(w2[0] == 1);
    CHECK(w2[1] == 1);
    CHECK(w2[2] == Rational(7, 12));
    auto w3 = delta_in_alien_powers(3, 4);
    CHECK(w3[0] == 1);
    CHECK(w3[1] == Rational(3, 2));
}

TEST_CASE("averaging weights") {
    CHECK(averaging_weight(0, 0) == 1);
    CHECK(averaging_weight(1, 0) == Rational(1, 2));
    CHECK(averaging_weight(1, 1) == Rational(1, 8));
    CHECK(averaging_weight(2, 1) == Rational(1, 16));
    CHECK(averaging_weight(3, 1) == Rational(5, 128));
    // symmetry lambda_{p,q} = lambda_{q,p}
    for (unsigned p = 0; p <= 6; ++p)
        for (unsigned q = 0; q <= 6; ++q)
            CHECK(averaging_weight(p, q) == averaging_weight(q, p));
}

TEST_CASE("balanced average identity has zero residual") {
    for (unsigned K : {1u, 2u, 4u, 6u}) {
        auto r = balanced_average_residual(K);
        CHECK(r.is_zero());
    }
}

TEST_CASE("minus-atom elimination implements Definition 3") {
    // delta^k y_m^- = delta^{k+1} y_m^+ + delta^k y_m^+
    auto e = DeltaExpression::atom(1, 2, true).eliminate_minus(4);
    CHECK(e.coeff([] {
        AlienMono m;
        m.has_atom = true;
        m.delta_pow = 1;
        m.sector = 2;
        return m;
    }()) == 1);
    CHECK(e.coeff([] {
        AlienMono m;
        m.has_atom = true;
        m.delta_pow = 2;
        m.sector = 2;
        return m;
    }()) == 1);
    CHECK(e.size() == 2);
}

TEST_CASE("bridge system reproduces the medianized transseries table") {
    auto t = solve_bridge_system(4);

    // C^0 row: PV marker plus {-1/8 d'^2, +1/16 d'^3}
    CHECK(t.pv_marker);
    CHECK(t.coeff(0, 2) == Rational(-1, 8));
    CHECK(t.coeff(0, 3) == Rational(1, 16));
    CHECK(t.coeff(0, 0) == 0);
    CHECK(t.coeff(0, 1) == 0);

    // C^1 row: (24 d' - d'^3) / (24 S')
    CHECK(t.coeff(1, 1) == 1);
    CHECK(t.coeff(1, 2) == 0);
    CHECK(t.coeff(1, 3) == Rational(-1, 24));

    // C^2 row: (d'^3 - 2 d'^2) / (4 S'^2)
    CHECK(t.coeff(2, 2) == Rational(-1, 2));
    CHECK(t.coeff(2, 3) == Rational(1, 4));

    // C^3 row: -d'^3 / (6 S'^3)
    CHECK(t.coeff(3, 3) == Rational(-1, 6));

    // y_4 receives no contribution at this order
    for (unsigned k = 0; k < 4; ++k)
        CHECK(t.coeff(4, k) == 0);

    // S' powers track the C powers
    for (const auto& e : t.entries)
        CHECK(e.s_pow == -static_cast<int>(e.c_pow));
}

TEST_CASE("table round-trips through JSON") {
    auto t = solve_bridge_system(4);
    auto again = MedianCoefficientTable::from_json(t.to_json());
    REQUIRE(again.entries.size() == t.entries.size());
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        CHECK(again.entries[i].c_pow == t.entries[i].c_pow);
        CHECK(again.entries[i].delta_pow == t.entries[i].delta_pow);
        CHECK(again.entries[i].coeff == t.entries[i].coeff);
    }
}

TEST_CASE("exactness: no floating point — all coefficients rational") {
    auto t = solve_bridge_system(4);
    for (const auto& e : t.entries) {
        CHECK(e.coeff.get_den() > 0);
        CHECK(e.coeff != 0);
    }
    CHECK(t.entries.size() == 7);
}
