#include "resurgence/series.hpp"

#include <algorithm>

#include "resurgence/errors.hpp"

namespace resurgence {

SingularityModel singularity_model(const NormalFormODE& ode) {
    SingularityModel m;
    m.spacing = ode.lambda;
    m.exponent = Rational(1) - ode.a_lin;
    m.kind = (m.exponent == 1) ? SingularityKind::simple_pole : SingularityKind::branch;
    return m;
}

namespace {

// Truncated powers y^n for the nonlinear terms, extended order by order as
// new coefficients of y become available.
class PowerCache {
public:
    PowerCache(const std::vector<Rational>& a, unsigned max_power)
        : a_(a), pows_(max_power + 1) {}

    // [y^n]_p with all needed a_j already solved (j < current order).
    Rational coeff(unsigned n, long p) {
        if (p < 0)
            return Rational(0);
        if (n == 1)
            return static_cast<std::size_t>(p) < a_.size() ? a_[p] : Rational(0);
        auto& cache = pows_[n];
        while (static_cast<long>(cache.size()) <= p) {
            long q = static_cast<long>(cache.size());
            Rational s = 0;
            for (long j = 1; j <= q - 1; ++j)
                s += coeff(n - 1, q - j) * a_[j];
            cache.push_back(s);
        }
        return cache[p];
    }

private:
    const std::vector<Rational>& a_;
    std::vector<std::vector<Rational>> pows_;
};

} // namespace

AsymptoticSeries derive_coefficients(const NormalFormODE& ode, unsigned N) {
    ode.validate();
    if (N < 1)
        throw config_error("series order must be >= 1");
    if (ode.lambda == 0)
        throw resonance_error("vanishing linear coefficient at order 1", 1);

    AsymptoticSeries s;
    s.a.assign(N + 1, Rational(0));

    unsigned max_n = 1;
    for (const auto& t : ode.nonlinear)
        max_n = std::max(max_n, t.n);
    PowerCache powers(s.a, max_n);

    auto forcing_at = [&](unsigned q) {
        auto it = ode.forcing.find(q);
        return it == ode.forcing.end() ? Rational(0) : it->second;
    };

    // Coefficient of x^{-q} in y' is -(q-1) a_{q-1}; on the right-hand side,
    // -lambda a_q - A a_{q-1} + f_q + nonlinear contributions with indices < q.
    for (unsigned q = 1; q <= N; ++q) {
        Rational rhs = forcing_at(q);
        if (q >= 1)
            rhs += (Rational(static_cast<long>(q) - 1) - ode.a_lin) * s.a[q - 1];
        for (const auto& t : ode.nonlinear)
            rhs += t.k * powers.coeff(t.n, static_cast<long>(q) - static_cast<long>(t.m));
        s.a[q] = rhs / ode.lambda;
    }
    return s;
}

BorelSeries borel_transform(const AsymptoticSeries& series) {
    if (series.order() < 1)
        throw config_error("borel_transform needs a series of order >= 1");
    BorelSeries b;
    b.c.reserve(series.order());
    for (unsigned n = 1; n <= series.order(); ++n)
        b.c.push_back(series.a[n] / factorial_rat(n - 1));
    return b;
}

std::vector<Rational> ode_residual(const NormalFormODE& ode, const AsymptoticSeries& series,
                                   unsigned through) {
    unsigned max_n = 1;
    for (const auto& t : ode.nonlinear)
        max_n = std::max(max_n, t.n);
    PowerCache powers(series.a, max_n);
    auto a_at = [&](long j) {
        return (j >= 0 && static_cast<std::size_t>(j) < series.a.size()) ? series.a[j]
                                                                         : Rational(0);
    };
    auto forcing_at = [&](unsigned q) {
        auto it = ode.forcing.find(q);
        return it == ode.forcing.end() ? Rational(0) : it->second;
    };
    std::vector<Rational> res;
    res.reserve(through);
    for (unsigned q = 1; q <= through; ++q) {
        Rational lhs = -(Rational(static_cast<long>(q)) - 1) * a_at(static_cast<long>(q) - 1);
        Rational rhs = -ode.lambda * a_at(q) - ode.a_lin * a_at(static_cast<long>(q) - 1) +
                       forcing_at(q);
        for (const auto& t : ode.nonlinear)
            rhs += t.k * powers.coeff(t.n, static_cast<long>(q) - static_cast<long>(t.m));
        res.push_back(lhs - rhs);
    }
    return res;
}

std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 std::size_t count) {
    std::vector<Rational> r(count, Rational(0));
    for (std::size_t i = 0; i < a.size() && i < count; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size() && i + j < count; ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<Rational> series_div(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 std::size_t count) {
    if (b.empty() || b[0] == 0)
        throw numeric_error("series division by series with vanishing constant term");
    std::vector<Rational> q(count, Rational(0));
    for (std::size_t k = 0; k < count; ++k) {
        Rational s = k < a.size() ? a[k] : Rational(0);
        for (std::size_t j = 1; j <= k && j < b.size(); ++j)
            s -= b[j] * q[k - j];
        q[k] = s / b[0];
    }
    return q;
}

std::vector<Rational> log_derivative_coeffs(const BorelSeries& b, std::size_t count) {
    // Factor out the leading monomial: B = c_k z^k u(z), u(0) = 1; the formal
    // quotient returned is u'(z)/u(z) (the k/z part is not representable).
    std::size_t lead = 0;
    while (lead < b.c.size() && b.c[lead] == 0)
        ++lead;
    if (lead == b.c.size())
        throw numeric_error("log-derivative of identically-zero series");
    std::vector<Rational> u(b.c.begin() + static_cast<long>(lead), b.c.end());
    std::vector<Rational> du;
    du.reserve(u.size());
    for (std::size_t i = 1; i < u.size(); ++i)
        du.push_back(Rational(static_cast<long>(i)) * u[i]);
    return series_div(du, u, count);
}

std::vector<BigReal> to_bigreal(const std::vector<Rational>& v, long digits) {
    std::vector<BigReal> out;
    out.reserve(v.size());
    for (const auto& q : v)
        out.emplace_back(q, digits);
    return out;
}

} // namespace resurgence
