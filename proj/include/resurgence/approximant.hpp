#ifndef RESURGENCE_APPROXIMANT_HPP
#define RESURGENCE_APPROXIMANT_HPP

#include <optional>
#include <string>
#include <vector>

#include "resurgence/bigcomplex.hpp"
#include "resurgence/series.hpp"

namespace resurgence {

enum class LatticeKind { pole, sqrt_branch };

/// Approximant with the resurgence-prescribed singularity lattice
///   ra(z) = sum_{j<=N} c_j z^j / prod_{n=1}^{N'} (n lambda - z)^{b0},
/// b0 = 1 for kind=pole, 1/2 for kind=sqrt_branch. Internally the numerator
/// is stored against the normalised denominator prod (1 - z/(n lambda))^{b0},
/// which keeps every factor O(1) on the evaluation range.
class ResurgentApproximant {
public:
    LatticeKind kind = LatticeKind::pole;
    Rational lambda = 1;
    unsigned N = 0;       // numerator degree; Taylor-matched through z^N
    unsigned Nprime = 1;  // lattice size
    long digits = BigReal::kDefaultDigits;

    std::vector<BigReal> ctilde;          // normalised numerator coefficients
    std::vector<Rational> ctilde_exact;   // exact mirror (rational inputs)

    /// Taylor coefficients of the approximant, powers [from, to].
    std::vector<BigReal> taylor(unsigned from, unsigned to) const;
    std::vector<Rational> taylor_exact(unsigned from, unsigned to) const;

    /// Numerator coefficients in the un-normalised convention of the
    /// denominator prod (n lambda - z)^{b0}.
    std::vector<BigReal> original_numerator() const;

    /// Evaluation off the lattice; real z is taken as z + i0 (branch kind).
    BigComplex evaluate(const BigComplex& z) const;
    /// Re(B) + Im(B) at real z (equals B itself for z < lambda); defined for
    /// both kinds, identity for kind=pole away from poles.
    BigReal realified(const BigReal& z) const;
    /// (Re, Im) of the approximant at real z with the z + i0 convention.
    std::pair<BigReal, BigReal> realified_components(const BigReal& z) const;

    /// Local amplitude of the singularity at z = m lambda:
    /// ra(z) ~ c_m / (m lambda - z)^{b0} with the magnitude carried by the
    /// regular factors and the sign of the numerator.
    BigReal local_amplitude(unsigned m) const;

    std::string to_json() const;
    static ResurgentApproximant from_json(const std::string& text);

    friend ResurgentApproximant build_approximant(const BorelSeries&, LatticeKind, unsigned,
                                                  const Rational&, long, bool);

private:
    // Taylor coefficients of prod (1 - z/(n lambda))^{-b0}, extended on call.
    mutable std::vector<Rational> what_exact_;
    mutable std::vector<BigReal> what_float_;
    const std::vector<Rational>& what_exact(std::size_t count) const;
    const std::vector<BigReal>& what_float(std::size_t count) const;
};

/// Matches c_0..c_N against the Borel coefficients B(z^0..z^N) where
/// N = borel.size()-1 (all supplied coefficients are matched). The exact
/// path keeps a rational mirror of the numerator; the float path works at
/// `digits` throughout (used by the N' grid scan).
ResurgentApproximant build_approximant(const BorelSeries& borel, LatticeKind kind,
                                       unsigned Nprime, const Rational& lambda,
                                       long digits = BigReal::kDefaultDigits,
                                       bool exact = true);

struct RatioEntry {
    unsigned index;     // coefficient power beyond N
    BigReal predicted;
    BigReal exact;
    BigReal ratio;
    bool exact_zero = false; // ratio omitted
};

struct RatioReport {
    std::vector<RatioEntry> entries;
};

/// Predicted-over-exact coefficient ratios for every index beyond the
/// matched window that `exact` provides.
RatioReport predicted_ratios(const ResurgentApproximant& ra, const BorelSeries& exact);

struct PoleCountRange {
    unsigned lo = 1, hi = 1;
};

/// Scans N' over `range`, building an approximant from all but the last
/// supplied coefficient and testing the first predicted coefficient against
/// it; returns the N' minimising |ratio - 1| (ties toward smaller N').
unsigned select_pole_count(const BorelSeries& borel, LatticeKind kind, const Rational& lambda,
                           PoleCountRange range, long digits = BigReal::kDefaultDigits);

} // namespace resurgence

#endif
