#include "resurgence/histogram.hpp"

#include <cmath>

#include "resurgence/errors.hpp"
#include "resurgence/pade.hpp"
#include "resurgence/series.hpp"

namespace resurgence {

void Histogram::add(double x) {
    ++pooled;
    if (counts.empty() || x < lo || x >= hi)
        return;
    auto idx = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(counts.size()));
    if (idx >= counts.size())
        idx = counts.size() - 1;
    ++counts[idx];
    ++total;
}

double Histogram::peak_center() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] > counts[best])
            best = i;
    return lo + (static_cast<double>(best) + 0.5) * bin_width();
}

PoleScan scan_poles(const NormalFormODE& ode, const HistogramOptions& opt) {
    if (opt.order_lo > opt.order_hi)
        throw config_error("empty order range for pole scan");
    double window_hi = opt.window_hi > 0 ? opt.window_hi : static_cast<double>(opt.order_hi) + 1;

    PoleScan scan;
    for (unsigned N = opt.order_lo; N <= opt.order_hi; ++N) {
        try {
            auto series = derive_coefficients(ode, N);
            auto borel = borel_transform(series);
            std::vector<Rational> coeffs;
            if (opt.transform == PadeTransform::log_derivative)
                coeffs = log_derivative_coeffs(borel, borel.size());
            else
                coeffs = borel.c;
            if (coeffs.size() < 3)
                continue;
            // (near-)diagonal degrees using every available coefficient
            unsigned M = static_cast<unsigned>((coeffs.size() - 1) / 2);
            unsigned L = static_cast<unsigned>(coeffs.size() - 1) - M;
            if (M < 1)
                continue;
            auto pa = pade(to_bigreal(coeffs, opt.digits), L, M);
            for (const auto& pd : poles_and_residues(pa)) {
                double re = pd.location.re.to_double();
                double im = pd.location.im.to_double();
                if (std::abs(im) > opt.im_cut)
                    continue; // real-axis histogram only
                if (re < opt.window_lo || re > window_hi)
                    continue;
                scan.poles.push_back({N, pd.location, pd.residue});
            }
        } catch (const numeric_error&) {
            ++scan.failed_orders;
        }
    }
    return scan;
}

Histogram pole_histogram(const PoleScan& scan, const HistogramOptions& opt) {
    Histogram h;
    h.lo = opt.window_lo;
    h.hi = opt.window_hi > 0 ? opt.window_hi : static_cast<double>(opt.order_hi) + 1;
    h.counts.assign(opt.bins, 0);
    for (const auto& p : scan.poles)
        h.add(p.location.re.to_double());
    return h;
}

Histogram pole_histogram(const NormalFormODE& ode, const HistogramOptions& opt) {
    return pole_histogram(scan_poles(ode, opt), opt);
}

} // namespace resurgence
