#ifndef RESURGENCE_ROOTS_HPP
#define RESURGENCE_ROOTS_HPP

#include <vector>

#include "resurgence/bigcomplex.hpp"
#include "resurgence/pade.hpp"

namespace resurgence {

struct PoleData {
    BigComplex location;
    BigComplex residue;
};

/// All complex roots of sum_k coeffs[k] z^k (leading coefficient nonzero
/// after trailing-zero strip). Aberth-Ehrlich simultaneous iteration with
/// Newton-polygon initial radii; throws rootfinding_error on non-convergence.
std::vector<BigComplex> poly_roots(const std::vector<BigReal>& coeffs, long digits);

/// Denominator roots of the approximant with residues p(z0)/q'(z0).
std::vector<PoleData> poles_and_residues(const PadeApproximant& pa);

} // namespace resurgence

#endif
