#ifndef RESURGENCE_HISTOGRAM_HPP
#define RESURGENCE_HISTOGRAM_HPP

#include <cstddef>
#include <vector>

#include "resurgence/ode.hpp"
#include "resurgence/roots.hpp"

namespace resurgence {

/// Uniform-bin histogram over [lo, hi]; samples outside the range are
/// counted in `total` bookkeeping but not binned.
struct Histogram {
    double lo = 0, hi = 0;
    std::vector<std::size_t> counts;
    std::size_t total = 0;     // samples inside the range
    std::size_t pooled = 0;    // all samples offered

    double bin_width() const {
        return counts.empty() ? 0.0 : (hi - lo) / static_cast<double>(counts.size());
    }
    /// Center of the most-populated bin (dominant peak).
    double peak_center() const;
    void add(double x);
};

enum class PadeTransform { none, log_derivative };

struct PoleRecord {
    unsigned order;
    BigComplex location;
    BigComplex residue;
};

struct PoleScan {
    std::vector<PoleRecord> poles; // near-real poles pooled over orders
    unsigned failed_orders = 0;    // orders skipped after pade/root errors
};

struct HistogramOptions {
    unsigned order_lo = 5, order_hi = 25;
    std::size_t bins = 200;
    PadeTransform transform = PadeTransform::none;
    double window_lo = 0.0;   // real-axis pooling window
    double window_hi = -1.0;  // <0: defaults to order_hi + 1
    double im_cut = 0.1;      // |Im z| above this is off-axis, excluded
    long digits = BigReal::kDefaultDigits;
};

/// Diagonal Borel-Pade poles of the truncated series of `ode`, one approximant
/// per order in [order_lo, order_hi], pooled into a real-axis histogram.
PoleScan scan_poles(const NormalFormODE& ode, const HistogramOptions& opt);
Histogram pole_histogram(const PoleScan& scan, const HistogramOptions& opt);
Histogram pole_histogram(const NormalFormODE& ode, const HistogramOptions& opt);

} // namespace resurgence

#endif
