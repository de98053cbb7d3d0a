#ifndef RESURGENCE_PADE_HPP
#define RESURGENCE_PADE_HPP

#include <optional>
#include <vector>

#include "resurgence/bigreal.hpp"
#include "resurgence/rational.hpp"
#include "resurgence/series.hpp"

namespace resurgence {

/// Rational approximant p(z)/q(z) with q(0) = 1, matching the source series
/// through order L_eff + M_eff. Degrees may have been reduced from the request
/// when the Pade system was (near-)singular.
struct PadeApproximant {
    std::vector<BigReal> p, q;
    unsigned L = 0, M = 0;          // requested degrees
    unsigned L_eff = 0, M_eff = 0;  // effective degrees after degeneracy handling
    long digits = BigReal::kDefaultDigits;
    bool exact = false;
    std::vector<Rational> p_rat, q_rat; // populated on the exact path

    /// Taylor coefficients of p/q (exact path), `count` of them.
    std::vector<Rational> taylor_exact(std::size_t count) const;
    std::vector<BigReal> taylor(std::size_t count) const;
};

/// Exact-rational path (inputs rational). Requires >= L+M+1 coefficients.
PadeApproximant pade(const std::vector<Rational>& coeffs, unsigned L, unsigned M,
                     long digits = BigReal::kDefaultDigits);

/// Floating-point path at working precision.
PadeApproximant pade(const std::vector<BigReal>& coeffs, unsigned L, unsigned M);

} // namespace resurgence

#endif
