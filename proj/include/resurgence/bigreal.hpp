#ifndef RESURGENCE_BIGREAL_HPP
#define RESURGENCE_BIGREAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "resurgence/rational.hpp"

namespace resurgence {

/// Extended-precision real on top of MPFR. Every value carries its own
/// precision; binary operations widen to the larger operand precision so
/// arithmetic never silently downgrades.
class BigReal {
public:
    static constexpr long kDefaultDigits = 64;

    static mpfr_prec_t bits_for_digits(long digits) {
        if (digits < 2) digits = 2;
        // log2(10) = 3.3219...; a few guard bits on top.
        return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 16);
    }

    BigReal() : BigReal(kDefaultDigits) {}

    explicit BigReal(long digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        mpfr_set_zero(v_, 1);
    }

    BigReal(double x, long digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        mpfr_set_d(v_, x, MPFR_RNDN);
    }

    BigReal(long x, long digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }

    BigReal(const Rational& q, long digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }

    BigReal(const std::string& s, long digits) {
        mpfr_init2(v_, bits_for_digits(digits));
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw config_error("bad real literal: '" + s + "'");
    }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigReal() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    mpfr_prec_t prec_bits() const { return mpfr_get_prec(v_); }
    long prec_digits() const {
        return static_cast<long>((prec_bits() - 16) / 3.3219280948873623);
    }

    /// Same value at a different working precision.
    BigReal to_precision(long digits) const {
        BigReal r(digits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // -- arithmetic ---------------------------------------------------------

    friend BigReal operator-(const BigReal& a) {
        BigReal r = make(mpfr_get_prec(a.v_));
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

#define RESURGENCE_BIGREAL_BINOP(op, fn)                                    \
    friend BigReal operator op(const BigReal& a, const BigReal& b) {        \
        BigReal r = make(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_))); \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                    \
        return r;                                                           \
    }                                                                       \
    friend BigReal operator op(const BigReal& a, long b) {                  \
        return a op BigReal(b, a.prec_digits());                            \
    }                                                                       \
    friend BigReal operator op(long a, const BigReal& b) {                  \
        return BigReal(a, b.prec_digits()) op b;                            \
    }

    RESURGENCE_BIGREAL_BINOP(+, mpfr_add)
    RESURGENCE_BIGREAL_BINOP(-, mpfr_sub)
    RESURGENCE_BIGREAL_BINOP(*, mpfr_mul)
    RESURGENCE_BIGREAL_BINOP(/, mpfr_div)
#undef RESURGENCE_BIGREAL_BINOP

    BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
    BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
    BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
    BigReal& operator/=(const BigReal& o) { return *this = *this / o; }

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    // -- elementary functions -----------------------------------------------

#define RESURGENCE_BIGREAL_FN(name, fn)                       \
    friend BigReal name(const BigReal& a) {                   \
        BigReal r = make(mpfr_get_prec(a.v_));                \
        fn(r.v_, a.v_, MPFR_RNDN);                            \
        return r;                                             \
    }

    RESURGENCE_BIGREAL_FN(abs, mpfr_abs)
    RESURGENCE_BIGREAL_FN(sqrt, mpfr_sqrt)
    RESURGENCE_BIGREAL_FN(exp, mpfr_exp)
    RESURGENCE_BIGREAL_FN(log, mpfr_log)
    RESURGENCE_BIGREAL_FN(sin, mpfr_sin)
    RESURGENCE_BIGREAL_FN(cos, mpfr_cos)
    RESURGENCE_BIGREAL_FN(sinh, mpfr_sinh)
    RESURGENCE_BIGREAL_FN(cosh, mpfr_cosh)
    RESURGENCE_BIGREAL_FN(tanh, mpfr_tanh)
    /// Exponential integral Ei(x) for x > 0.
    RESURGENCE_BIGREAL_FN(eint, mpfr_eint)
#undef RESURGENCE_BIGREAL_FN

    friend BigReal atan2(const BigReal& y, const BigReal& x) {
        BigReal r = make(std::max(mpfr_get_prec(y.v_), mpfr_get_prec(x.v_)));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal hypot(const BigReal& x, const BigReal& y) {
        BigReal r = make(std::max(mpfr_get_prec(y.v_), mpfr_get_prec(x.v_)));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal pow(const BigReal& a, const BigReal& b) {
        BigReal r = make(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    friend BigReal pow_si(const BigReal& a, long e) {
        BigReal r = make(mpfr_get_prec(a.v_));
        mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
        return r;
    }

    friend BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }
    friend BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }

    static BigReal pi(long digits) {
        BigReal r(digits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    static BigReal euler_gamma(long digits) {
        BigReal r(digits);
        mpfr_const_euler(r.v_, MPFR_RNDN);
        return r;
    }

    /// Deterministic scientific-notation rendering with `digits` mantissa digits.
    std::string str(long digits = 0) const;

private:
    static BigReal make(mpfr_prec_t bits) {
        BigReal r(2);
        mpfr_set_prec(r.v_, bits);
        mpfr_set_zero(r.v_, 1);
        return r;
    }

    mpfr_t v_;
};

} // namespace resurgence

#endif
