#include "resurgence/pade.hpp"

#include <algorithm>

#include "resurgence/errors.hpp"

namespace resurgence {

namespace {

bool pivot_better(const Rational& cand, const Rational& cur) {
    return abs(cand) > abs(cur);
}

bool pivot_better(const BigReal& cand, const BigReal& cur) {
    return abs(cand) > abs(cur);
}

// Solves the M x M denominator system sum_{j=0..M} q_j c_{L+i-j} = 0 with
// q_0 = 1 by Gaussian elimination. Returns nullopt when the matrix is
// singular (exact path) or numerically rank-deficient (float path).
template <typename T, typename ZeroPred>
std::optional<std::vector<T>> solve_denominator(const std::vector<T>& c, unsigned L, unsigned M,
                                                const T& zero, ZeroPred is_negligible) {
    auto at = [&](long idx) -> T {
        return (idx >= 0 && static_cast<std::size_t>(idx) < c.size()) ? c[idx] : zero;
    };
    std::vector<std::vector<T>> a(M, std::vector<T>(M + 1, zero));
    for (unsigned i = 1; i <= M; ++i) {
        for (unsigned j = 1; j <= M; ++j)
            a[i - 1][j - 1] = at(static_cast<long>(L + i) - static_cast<long>(j));
        a[i - 1][M] = -at(static_cast<long>(L + i));
    }
    // forward elimination with partial pivoting
    for (unsigned col = 0; col < M; ++col) {
        unsigned piv = col;
        for (unsigned r = col + 1; r < M; ++r)
            if (pivot_better(a[r][col], a[piv][col]))
                piv = r;
        if (is_negligible(a[piv][col]))
            return std::nullopt;
        std::swap(a[col], a[piv]);
        for (unsigned r = col + 1; r < M; ++r) {
            if (a[r][col] == zero)
                continue;
            T f = a[r][col] / a[col][col];
            for (unsigned k = col; k <= M; ++k)
                a[r][k] = a[r][k] - f * a[col][k];
        }
    }
    std::vector<T> qtail(M, zero);
    for (long i = static_cast<long>(M) - 1; i >= 0; --i) {
        T s = a[i][M];
        for (unsigned k = static_cast<unsigned>(i) + 1; k < M; ++k)
            s = s - a[i][k] * qtail[k];
        qtail[i] = s / a[i][i];
    }
    return qtail;
}

template <typename T>
std::vector<T> numerator_from(const std::vector<T>& c, const std::vector<T>& q, unsigned L,
                              const T& zero) {
    std::vector<T> p(L + 1, zero);
    for (unsigned k = 0; k <= L; ++k) {
        T s = k < c.size() ? c[k] : zero;
        for (std::size_t j = 1; j < q.size() && j <= k; ++j)
            s = s + q[j] * c[k - j];
        p[k] = s;
    }
    return p;
}

} // namespace

PadeApproximant pade(const std::vector<Rational>& coeffs, unsigned L, unsigned M, long digits) {
    if (coeffs.size() < L + M + 1)
        throw pade_error("pade: need at least L+M+1 coefficients");
    Rational zero(0);
    PadeApproximant pa;
    pa.L = L;
    pa.M = M;
    pa.digits = digits;
    pa.exact = true;
    unsigned m = M;
    for (;;) {
        auto qt = solve_denominator<Rational>(coeffs, L, m, zero,
                                              [&](const Rational& piv) { return piv == 0; });
        if (qt) {
            pa.q_rat.assign(1, Rational(1));
            pa.q_rat.insert(pa.q_rat.end(), qt->begin(), qt->end());
            pa.p_rat = numerator_from(coeffs, pa.q_rat, L, zero);
            pa.L_eff = L;
            pa.M_eff = m;
            pa.p = to_bigreal(pa.p_rat, digits);
            pa.q = to_bigreal(pa.q_rat, digits);
            return pa;
        }
        if (m == 0)
            throw pade_error("pade: singular system for all denominator degrees <= " +
                             std::to_string(M));
        --m; // standard degeneracy handling
    }
}

PadeApproximant pade(const std::vector<BigReal>& coeffs, unsigned L, unsigned M) {
    if (coeffs.size() < L + M + 1)
        throw pade_error("pade: need at least L+M+1 coefficients");
    long digits = BigReal::kDefaultDigits;
    for (const auto& c : coeffs)
        digits = std::max(digits, c.prec_digits());
    BigReal zero(0L, digits);
    // a pivot this far below the matrix scale marks the system near-singular
    BigReal cutoff = pow(BigReal(10L, digits), BigReal(-(digits - 8L), digits));

    PadeApproximant pa;
    pa.L = L;
    pa.M = M;
    pa.digits = digits;
    pa.exact = false;

    BigReal scale(0L, digits);
    for (const auto& c : coeffs)
        scale = max(scale, abs(c));
    if (scale.is_zero())
        scale = BigReal(1L, digits);

    unsigned m = M;
    for (;;) {
        auto qt = solve_denominator<BigReal>(
            coeffs, L, m, zero,
            [&](const BigReal& piv) { return abs(piv) < cutoff * scale; });
        if (qt) {
            pa.q.assign(1, BigReal(1L, digits));
            pa.q.insert(pa.q.end(), qt->begin(), qt->end());
            pa.p = numerator_from(coeffs, pa.q, L, zero);
            pa.L_eff = L;
            pa.M_eff = m;
            return pa;
        }
        if (m == 0)
            throw pade_error("pade: near-singular system for all denominator degrees <= " +
                             std::to_string(M));
        --m;
    }
}

std::vector<Rational> PadeApproximant::taylor_exact(std::size_t count) const {
    if (!exact)
        throw pade_error("taylor_exact: approximant was built on the float path");
    return series_div(p_rat, q_rat, count);
}

std::vector<BigReal> PadeApproximant::taylor(std::size_t count) const {
    std::vector<BigReal> out(count, BigReal(0L, digits));
    for (std::size_t k = 0; k < count; ++k) {
        BigReal s = k < p.size() ? p[k] : BigReal(0L, digits);
        for (std::size_t j = 1; j <= k && j < q.size(); ++j)
            s = s - q[j] * out[k - j];
        out[k] = s / q[0];
    }
    return out;
}

} // namespace resurgence
