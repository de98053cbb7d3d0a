#include "resurgence/roots.hpp"

#include <algorithm>
#include <cmath>

#include "resurgence/errors.hpp"

namespace resurgence {

namespace {

BigComplex horner(const std::vector<BigReal>& c, const BigComplex& z) {
    long d = std::max(z.prec_digits(), c.empty() ? 0L : c[0].prec_digits());
    BigComplex acc(BigReal(0L, d), BigReal(0L, d));
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * z;
        acc.re += *it;
    }
    return acc;
}

std::vector<BigReal> derivative(const std::vector<BigReal>& c) {
    std::vector<BigReal> d;
    for (std::size_t k = 1; k < c.size(); ++k)
        d.push_back(BigReal(static_cast<long>(k), c[k].prec_digits()) * c[k]);
    return d;
}

// Starting points on rings around the geometric mean of the root moduli
// (|c_0/c_n|^{1/n}), radially interleaved and angularly offset so no guess
// sits on a symmetry axis.
std::vector<BigComplex> initial_guesses(const std::vector<BigReal>& c, long digits) {
    const std::size_t n = c.size() - 1;
    auto log_mag = [&](const BigReal& v) {
        double a = std::abs(v.to_double());
        if (a > 0 && std::isfinite(a))
            return std::log(a);
        return 0.6931471805599453 *
               static_cast<double>(v.is_zero() ? -100000 : mpfr_get_exp(v.raw()));
    };
    double r_geo = std::exp((log_mag(c[0]) - log_mag(c[n])) / static_cast<double>(n));
    if (!std::isfinite(r_geo) || r_geo <= 0)
        r_geo = 1.0;
    const double two_pi = 6.283185307179586;
    const double ring[3] = {1.0, 0.5, 2.0};
    std::vector<BigComplex> z;
    z.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double r = r_geo * ring[i % 3];
        double th = two_pi * (static_cast<double>(i) / static_cast<double>(n)) + 0.43;
        z.emplace_back(r * std::cos(th), r * std::sin(th), digits);
    }
    return z;
}

} // namespace

std::vector<BigComplex> poly_roots(const std::vector<BigReal>& coeffs_in, long digits) {
    std::vector<BigReal> c = coeffs_in;
    while (!c.empty() && c.back().is_zero())
        c.pop_back();
    if (c.size() <= 1)
        return {};
    for (auto& x : c)
        x = x.to_precision(digits);
    const std::size_t n = c.size() - 1;

    // strip roots at the origin
    std::size_t zero_roots = 0;
    while (zero_roots < n && c[zero_roots].is_zero())
        ++zero_roots;
    std::vector<BigComplex> roots;
    for (std::size_t i = 0; i < zero_roots; ++i)
        roots.emplace_back(BigReal(0L, digits), BigReal(0L, digits));
    if (zero_roots) {
        c.erase(c.begin(), c.begin() + static_cast<long>(zero_roots));
        if (c.size() <= 1)
            return roots;
    }

    auto dc = derivative(c);
    auto z = initial_guesses(c, digits);
    const std::size_t m = z.size();

    // magnitude profile for the running evaluation-error bound
    std::vector<BigReal> cmag;
    cmag.reserve(c.size());
    for (const auto& v : c)
        cmag.push_back(abs(v));
    BigReal eps = pow(BigReal(10L, digits), BigReal(2L - digits, digits));
    BigReal bound_factor = eps * BigReal(static_cast<long>(8 * (m + 1)), digits);

    BigReal tol = pow(BigReal(10L, digits), BigReal(-(digits - 6L), digits));
    const int max_iter = 400 + 2 * static_cast<int>(m);
    std::vector<bool> frozen(m, false);
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        converged = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (frozen[i])
                continue;
            BigComplex pv = horner(c, z[i]);
            // |p(z)| at or below the accumulated-roundoff scale of the Horner
            // evaluation means the root is resolved to working precision
            BigReal zmag = abs(z[i]);
            BigReal scale(0L, digits);
            for (auto it = cmag.rbegin(); it != cmag.rend(); ++it)
                scale = scale * zmag + *it;
            if (abs(pv) <= bound_factor * scale) {
                frozen[i] = true;
                continue;
            }
            BigComplex dv = horner(dc, z[i]);
            if (abs(dv).is_zero()) {
                z[i].re += BigReal(1e-3, digits);
                converged = false;
                continue;
            }
            BigComplex newton = pv / dv;
            BigComplex sum(BigReal(0L, digits), BigReal(0L, digits));
            for (std::size_t j = 0; j < m; ++j) {
                if (j == i)
                    continue;
                BigComplex diff = z[i] - z[j];
                BigReal a2 = diff.re * diff.re + diff.im * diff.im;
                if (a2.is_zero()) {
                    diff.re += BigReal(1e-6, digits);
                    a2 = diff.re * diff.re + diff.im * diff.im;
                }
                sum += BigComplex(diff.re / a2, -diff.im / a2);
            }
            BigComplex denom = BigComplex(BigReal(1L, digits), BigReal(0L, digits)) -
                               newton * sum;
            BigReal dmag = abs(denom);
            BigComplex step = dmag.is_zero() ? newton : newton / denom;
            z[i] = z[i] - step;
            BigReal rel = abs(step) / max(BigReal(1L, digits), abs(z[i]));
            if (rel > tol)
                converged = false;
        }
    }
    if (!converged) {
        std::size_t stuck = 0;
        for (std::size_t i = 0; i < m; ++i)
            if (!frozen[i])
                ++stuck;
        throw rootfinding_error("aberth iteration did not converge at " +
                                std::to_string(digits) + " digits for degree " +
                                std::to_string(m) + " polynomial (" +
                                std::to_string(stuck) + " roots unresolved)");
    }
    roots.insert(roots.end(), z.begin(), z.end());
    std::sort(roots.begin(), roots.end(), [](const BigComplex& a, const BigComplex& b) {
        if (a.re != b.re)
            return a.re < b.re;
        return a.im < b.im;
    });
    return roots;
}

std::vector<PoleData> poles_and_residues(const PadeApproximant& pa) {
    if (pa.M_eff < 1)
        throw rootfinding_error("approximant has constant denominator, no poles");
    auto roots = poly_roots(pa.q, pa.digits);
    auto dq = derivative(pa.q);
    std::vector<PoleData> out;
    out.reserve(roots.size());
    for (const auto& z : roots) {
        BigComplex num = horner(pa.p, z);
        BigComplex den = horner(dq, z);
        if (abs(den).is_zero())
            throw rootfinding_error("repeated denominator root; residue undefined at z = " +
                                    z.re.str(8));
        out.push_back({z, num / den});
    }
    std::sort(out.begin(), out.end(), [](const PoleData& a, const PoleData& b) {
        if (a.location.re != b.location.re)
            return a.location.re < b.location.re;
        return a.location.im < b.location.im;
    });
    return out;
}

} // namespace resurgence
