#ifndef RESURGENCE_PIPELINE_HPP
#define RESURGENCE_PIPELINE_HPP

#include <optional>
#include <string>

#include "resurgence/histogram.hpp"
#include "resurgence/ode.hpp"

namespace resurgence {

/// File-based configuration for the three pipeline commands.
struct PipelineConfig {
    std::string ode;                 // path to a JSON spec or a built-in name
    unsigned order = 9;              // truncation order N
    long precision = 64;             // working precision, decimal digits

    // analysis options
    unsigned pade_lo = 5, pade_hi = 25;
    std::size_t bins = 200;
    PadeTransform transform = PadeTransform::none;
    double window_lo = 0.0, window_hi = -1.0;
    double im_cut = 0.1;

    // approximant options
    std::string kind = "auto";       // auto | simple-pole | branch
    std::optional<unsigned> nprime;  // empty: grid scan over [N, 16N]

    // resummation options
    double x0 = 10.0;
    double y_target = 0.12;
    double grid_lo = 5.0, grid_hi = 20.0, grid_step = 0.5;
    double quad_tol = 1e-10;
    double ref_tol = 1e-10;

    std::string outdir = ".";

    void validate() const;
    std::string to_json() const;
    static PipelineConfig from_json(const std::string& text);
};

/// Exit codes shared by the CLI and the C API.
enum PipelineStatus : int {
    kOk = 0,
    kConfigError = 1,
    kNumericError = 2,
    kUnsupported = 3,
};

struct PipelineResult {
    int status = kOk;
    std::string message;             // one-line summary (stdout)
    std::vector<std::string> outputs;
    std::string manifest_path;
};

/// Writes series.csv and borel.csv (exact rational tables).
PipelineResult cmd_generate(const PipelineConfig& cfg);

/// Writes histogram.csv, poles.csv, darboux.csv; the summary line carries the
/// structure recommendation (simple-pole / branch-1/2 / unsupported).
PipelineResult cmd_analyze(const PipelineConfig& cfg);

/// Builds the approximant, fits the transseries constant, writes
/// resummed.csv, reference.csv, comparison.csv.
PipelineResult cmd_resum(const PipelineConfig& cfg);

} // namespace resurgence

#endif
