#ifndef RESURGENCE_DARBOUX_HPP
#define RESURGENCE_DARBOUX_HPP

#include "resurgence/bigreal.hpp"
#include "resurgence/series.hpp"

namespace resurgence {

struct DarbouxEstimate {
    BigReal b;
    BigReal s;
    unsigned n = 0;
};

/// Fits (b, s) from the coefficient-ratio model
///   B_n/B_{n-1} = 1 + (b-1)/n + (b-1) s / (n (b-n-2))
/// evaluated at n and n-1 (subscript indexing, B_n = a_n/(n-1)!).
/// b is located by bracketed bisection on `bracket` followed by Newton.
DarbouxEstimate darboux_fit(const BorelSeries& B, unsigned n,
                            long digits = BigReal::kDefaultDigits,
                            double bracket_lo = 0.0, double bracket_hi = 2.0);

} // namespace resurgence

#endif
