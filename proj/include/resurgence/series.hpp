#ifndef RESURGENCE_SERIES_HPP
#define RESURGENCE_SERIES_HPP

#include <vector>

#include "resurgence/bigreal.hpp"
#include "resurgence/ode.hpp"
#include "resurgence/rational.hpp"

namespace resurgence {

/// Truncated asymptotic series y(x) ~ sum_{n=0}^{N} a_n x^{-n}.
/// a[0] is always 0 for the decaying solutions handled here.
struct AsymptoticSeries {
    std::vector<Rational> a;
    unsigned order() const { return a.empty() ? 0 : static_cast<unsigned>(a.size() - 1); }
};

/// Borel-transform coefficients B_n = a_n/(n-1)!, n = 1..N, arranged as the
/// power series  B(z) = sum_{n>=1} B_n z^{n-1}  so that the Laplace integral
/// of B reproduces the asymptotic series term by term.
struct BorelSeries {
    std::vector<Rational> c; // c[i] = coefficient of z^i = B_{i+1}

    std::size_t size() const { return c.size(); }
    /// B_n by subscript, n = 1..size().
    const Rational& subscript(unsigned n) const { return c.at(n - 1); }
};

enum class SingularityKind { simple_pole, branch };

/// Borel-plane singularity model: singularities at z = n*lambda with local
/// exponent b; b = 1 - A (simple pole iff b = 1).
struct SingularityModel {
    Rational spacing;
    Rational exponent;         // b = 1 - A
    SingularityKind kind;
};

SingularityModel singularity_model(const NormalFormODE& ode);

/// Solves the coefficient recursion of the normal-form ODE through order N.
/// Exact rational arithmetic; throws resonance_error if a coefficient
/// equation has a vanishing linear coefficient.
AsymptoticSeries derive_coefficients(const NormalFormODE& ode, unsigned N);

BorelSeries borel_transform(const AsymptoticSeries& series);

/// Coefficients of x^{-1}..x^{-through} of y' - F[y, x] after substituting
/// the truncated series; all must vanish through the truncation order.
std::vector<Rational> ode_residual(const NormalFormODE& ode, const AsymptoticSeries& series,
                                   unsigned through);

// -- small exact power-series helpers ---------------------------------------

/// Convolution product truncated to `count` coefficients.
std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 std::size_t count);

/// Series quotient a/b truncated to `count` coefficients; b[0] != 0.
std::vector<Rational> series_div(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 std::size_t count);

/// Coefficients of B'(z)/B(z) through `count` terms after factoring out the
/// leading monomial of B. Throws numeric_error on identically-zero input.
std::vector<Rational> log_derivative_coeffs(const BorelSeries& b, std::size_t count);

std::vector<BigReal> to_bigreal(const std::vector<Rational>& v, long digits);

} // namespace resurgence

#endif
