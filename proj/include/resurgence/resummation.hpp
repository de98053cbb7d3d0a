#ifndef RESURGENCE_RESUMMATION_HPP
#define RESURGENCE_RESUMMATION_HPP

#include <vector>

#include "resurgence/alien.hpp"
#include "resurgence/approximant.hpp"

namespace resurgence {

/// One term kappa * e^{-m lambda x} * x^{-x_pow} of a discontinuity order.
struct LadderTerm {
    unsigned m = 1;
    BigReal kappa;
    Rational x_pow = 0;
};

/// Real ladder values D_k(x) = delta'^k y_0^+(x) at leading order, k = 1..3.
/// Pole kind: order 1 collects 2*pi times every lattice residue amplitude and
/// every higher order vanishes identically. Branch kind: order k carries the
/// e^{-k lambda x}/sqrt(x) sector with amplitude from the local expansion of
/// the approximant at z = k lambda.
struct DiscontinuityLadder {
    LatticeKind kind = LatticeKind::pole;
    Rational lambda = 1;
    std::vector<std::vector<LadderTerm>> orders; // orders[k-1] holds order k
    bool all_higher_vanish = false;

    /// Full discontinuity content of order k (all lattice terms).
    BigReal eval(unsigned k, const BigReal& x) const;
    /// Leading e^{-k lambda x} sector of order k, the piece that enters the
    /// transseries rows. Far-lattice amplitudes of a fitted approximant grow
    /// with m, so the full sum is a discontinuity statement about the
    /// approximant, not a usable C^1 sector.
    BigReal eval_leading(unsigned k, const BigReal& x) const;
};

DiscontinuityLadder discontinuity_ladder(const ResurgentApproximant& ra, unsigned k_max = 3);

/// Cauchy principal value of int_0^inf e^{-x z} ra(z) dz (realified integrand
/// for the branch kind) to absolute tolerance abs_tol.
BigReal pv_laplace(const ResurgentApproximant& ra, const BigReal& x,
                   double abs_tol = 1e-10);

/// Truncated medianized transseries at x: the PV row plus the coefficient
/// table contracted with the ladder, with S' absorbed into C.
BigReal assemble_median(const ResurgentApproximant& ra, const DiscontinuityLadder& ladder,
                        const MedianCoefficientTable& table, const BigReal& C,
                        const BigReal& x, double quad_tol = 1e-10);

/// C such that assemble_median(..., C, x0) = y_target (linear equation for
/// the pole kind, cubic with the smallest-magnitude real root for branch).
BigReal fit_transseries_constant(const ResurgentApproximant& ra,
                                 const DiscontinuityLadder& ladder,
                                 const MedianCoefficientTable& table, const BigReal& x0,
                                 const BigReal& y_target, double quad_tol = 1e-10);

/// Bundled resummed solution: evaluation returns the real medianized value.
struct ResummedSolution {
    ResurgentApproximant ra;
    DiscontinuityLadder ladder;
    MedianCoefficientTable table;
    BigReal C;
    double quad_tol = 1e-10;

    BigReal eval(const BigReal& x) const {
        return assemble_median(ra, ladder, table, C, x, quad_tol);
    }
    BigReal pv(const BigReal& x) const { return pv_laplace(ra, x, quad_tol); }
    BigReal sector(unsigned k, const BigReal& x) const { return ladder.eval_leading(k, x); }
};

} // namespace resurgence

#endif
