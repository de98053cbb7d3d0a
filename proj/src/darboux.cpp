#include "resurgence/darboux.hpp"

#include "resurgence/errors.hpp"

namespace resurgence {

namespace {

// F(b) = 0 after eliminating s between the ratio equations at n and n-1.
// The (b-1) factors cancel, so F is regular at b = 1.
BigReal F(const BigReal& b, const BigReal& Rn, const BigReal& Rn1, long nn, long digits) {
    BigReal n(nn, digits), n1(nn - 1, digits);
    BigReal lhs = BigReal(1L, digits) - Rn1 + (b - 1) / n1;
    BigReal corr = n * (b - n - 2) / (n1 * (b - n - 1));
    return lhs + corr * (Rn - BigReal(1L, digits) - (b - 1) / n);
}

} // namespace

DarbouxEstimate darboux_fit(const BorelSeries& B, unsigned n, long digits, double bracket_lo,
                            double bracket_hi) {
    if (n < 3 || B.size() < n)
        throw config_error("darboux_fit needs n >= 3 and B_1..B_n available");
    if (B.subscript(n) == 0 || B.subscript(n - 1) == 0 || B.subscript(n - 2) == 0)
        throw numeric_error("darboux_fit: vanishing coefficient in the ratio window");

    BigReal Rn(B.subscript(n) / B.subscript(n - 1), digits);
    BigReal Rn1(B.subscript(n - 1) / B.subscript(n - 2), digits);
    long nn = static_cast<long>(n);

    auto f = [&](const BigReal& b) { return F(b, Rn, Rn1, nn, digits); };

    // scan for a sign change inside the bracket
    const int kScan = 128;
    BigReal lo(bracket_lo, digits), hi(bracket_hi, digits);
    BigReal step = (hi - lo) / BigReal(static_cast<long>(kScan), digits);
    BigReal a = lo + step / 1000; // keep off the exact endpoint
    BigReal fa = f(a);
    BigReal b_left(digits), b_right(digits);
    bool found = false;
    for (int i = 1; i <= kScan; ++i) {
        BigReal b = lo + step * BigReal(static_cast<long>(i), digits);
        BigReal fb = f(b);
        if ((fa.sign() <= 0 && fb.sign() >= 0) || (fa.sign() >= 0 && fb.sign() <= 0)) {
            b_left = a;
            b_right = b;
            found = true;
            break;
        }
        a = b;
        fa = fb;
    }
    if (!found)
        throw numeric_error("darboux_fit: no real root for b in (" +
                            std::to_string(bracket_lo) + ", " + std::to_string(bracket_hi) +
                            "); try a different n");

    // bisection to solver tolerance 1e-12, then Newton polish
    BigReal tol("1e-12", digits);
    BigReal fl = f(b_left);
    while (b_right - b_left > tol / 100) {
        BigReal mid = (b_left + b_right) / 2;
        BigReal fm = f(mid);
        if ((fl.sign() <= 0) == (fm.sign() <= 0)) {
            b_left = mid;
            fl = fm;
        } else {
            b_right = mid;
        }
    }
    BigReal b = (b_left + b_right) / 2;
    BigReal h("1e-20", digits);
    for (int it = 0; it < 8; ++it) {
        BigReal fb = f(b);
        BigReal df = (f(b + h) - fb) / h;
        if (df.is_zero())
            break;
        b = b - fb / df;
    }

    DarbouxEstimate est;
    est.n = n;
    est.b = b;
    // s from the equation at n; for the pure model the numerator vanishes
    BigReal num = Rn - BigReal(1L, digits) - (b - 1) / BigReal(nn, digits);
    BigReal bm1 = b - 1;
    if (abs(bm1) < BigReal("1e-30", digits)) {
        est.s = BigReal(0L, digits);
    } else {
        est.s = num * BigReal(nn, digits) * (b - nn - 2) / bm1;
    }
    return est;
}

} // namespace resurgence
