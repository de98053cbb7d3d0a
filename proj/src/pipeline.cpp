#include "resurgence/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "resurgence/alien.hpp"
#include "resurgence/approximant.hpp"
#include "resurgence/darboux.hpp"
#include "resurgence/errors.hpp"
#include "resurgence/reference.hpp"
#include "resurgence/resummation.hpp"
#include "resurgence/series.hpp"
#include "resurgence/version.hpp"

namespace resurgence {

namespace fs = std::filesystem;
using nlohmann::json;

void PipelineConfig::validate() const {
    if (order < 2)
        throw config_error("truncation order must be >= 2");
    if (precision < 32)
        throw config_error("precision must be >= 32 digits");
    if (pade_lo > pade_hi)
        throw config_error("empty pade order range");
    if (grid_lo >= grid_hi || grid_step <= 0)
        throw config_error("bad output grid");
    if (kind != "auto" && kind != "simple-pole" && kind != "branch")
        throw config_error("kind must be auto, simple-pole, or branch");
}

std::string PipelineConfig::to_json() const {
    json j;
    j["ode"] = ode;
    j["order"] = order;
    j["precision"] = precision;
    j["pade_orders"] = {pade_lo, pade_hi};
    j["bins"] = bins;
    j["transform"] = transform == PadeTransform::none ? "none" : "log-derivative";
    j["window"] = {window_lo, window_hi};
    j["im_cut"] = im_cut;
    j["kind"] = kind;
    if (nprime)
        j["nprime"] = *nprime;
    j["x0"] = x0;
    j["y_target"] = y_target;
    j["grid"] = {grid_lo, grid_hi, grid_step};
    j["quad_tol"] = quad_tol;
    j["ref_tol"] = ref_tol;
    j["outdir"] = outdir;
    return j.dump(2);
}

PipelineConfig PipelineConfig::from_json(const std::string& text) {
    PipelineConfig cfg;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw config_error(std::string("bad pipeline config JSON: ") + e.what());
    }
    try {
        if (j.contains("ode")) cfg.ode = j.at("ode").get<std::string>();
        if (j.contains("order")) cfg.order = j.at("order").get<unsigned>();
        if (j.contains("precision")) cfg.precision = j.at("precision").get<long>();
        if (j.contains("pade_orders")) {
            cfg.pade_lo = j.at("pade_orders").at(0).get<unsigned>();
            cfg.pade_hi = j.at("pade_orders").at(1).get<unsigned>();
        }
        if (j.contains("bins")) cfg.bins = j.at("bins").get<std::size_t>();
        if (j.contains("transform")) {
            std::string t = j.at("transform").get<std::string>();
            if (t == "none")
                cfg.transform = PadeTransform::none;
            else if (t == "log-derivative")
                cfg.transform = PadeTransform::log_derivative;
            else
                throw config_error("transform must be none or log-derivative");
        }
        if (j.contains("window")) {
            cfg.window_lo = j.at("window").at(0).get<double>();
            cfg.window_hi = j.at("window").at(1).get<double>();
        }
        if (j.contains("im_cut")) cfg.im_cut = j.at("im_cut").get<double>();
        if (j.contains("kind")) cfg.kind = j.at("kind").get<std::string>();
        if (j.contains("nprime")) cfg.nprime = j.at("nprime").get<unsigned>();
        if (j.contains("x0")) cfg.x0 = j.at("x0").get<double>();
        if (j.contains("y_target")) cfg.y_target = j.at("y_target").get<double>();
        if (j.contains("grid")) {
            cfg.grid_lo = j.at("grid").at(0).get<double>();
            cfg.grid_hi = j.at("grid").at(1).get<double>();
            cfg.grid_step = j.at("grid").at(2).get<double>();
        }
        if (j.contains("quad_tol")) cfg.quad_tol = j.at("quad_tol").get<double>();
        if (j.contains("ref_tol")) cfg.ref_tol = j.at("ref_tol").get<double>();
        if (j.contains("outdir")) cfg.outdir = j.at("outdir").get<std::string>();
    } catch (const json::exception& e) {
        throw config_error(std::string("bad pipeline config: ") + e.what());
    }
    return cfg;
}

namespace {

NormalFormODE resolve_ode(const std::string& spec) {
    for (const auto& name : builtin_ode_names())
        if (spec == name)
            return builtin_ode(name);
    return ode_from_file(spec);
}

class Manifest {
public:
    Manifest(const PipelineConfig& cfg, const std::string& command) : cfg_(cfg) {
        j_["command"] = command;
        j_["version"] = RESURGENCE_VERSION;
        j_["config"] = json::parse(cfg.to_json());
        j_["outputs"] = json::array();
        j_["stages"] = json::array();
    }

    void stage_done(const std::string& name, double seconds) {
        j_["stages"].push_back({{"name", name}, {"seconds", seconds}});
    }
    void add_output(const std::string& path) { j_["outputs"].push_back(path); }
    void fail(const std::string& stage, const std::string& message) {
        j_["failed_stage"] = stage;
        j_["error"] = message;
    }
    void set_status(int status) { j_["status"] = status; }

    std::string write() {
        fs::create_directories(cfg_.outdir);
        fs::path final = fs::path(cfg_.outdir) / "manifest.json";
        fs::path tmp = final;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << j_.dump(2) << "\n";
        }
        fs::rename(tmp, final); // atomic on POSIX
        return final.string();
    }

private:
    const PipelineConfig& cfg_;
    json j_;
};

class StageTimer {
public:
    StageTimer(Manifest& m, std::string name)
        : m_(m), name_(std::move(name)), t0_(std::chrono::steady_clock::now()) {}
    ~StageTimer() {
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_);
        m_.stage_done(name_, dt.count());
    }

private:
    Manifest& m_;
    std::string name_;
    std::chrono::steady_clock::time_point t0_;
};

std::string out_path(const PipelineConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.outdir);
    return (fs::path(cfg.outdir) / name).string();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw config_error("cannot write output file: " + path);
    out << text;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// shared by cmd_resum and the C API: approximant kind from the structural
// exponent b = 1 - A
LatticeKind decide_kind(const PipelineConfig& cfg, const NormalFormODE& ode) {
    if (cfg.kind == "simple-pole")
        return LatticeKind::pole;
    if (cfg.kind == "branch")
        return LatticeKind::sqrt_branch;
    auto model = singularity_model(ode);
    double b = Rational(model.exponent).get_d();
    if (std::abs(b - 1.0) < 0.1)
        return LatticeKind::pole;
    if (std::abs(b - 0.5) < 0.1)
        return LatticeKind::sqrt_branch;
    throw unsupported_structure_error(
        "resummation supports b = 1 (simple poles) and b = 1/2 (square-root branch); "
        "this ODE has b = " + to_string(model.exponent));
}

int status_of(const std::exception& e) {
    if (dynamic_cast<const config_error*>(&e))
        return kConfigError;
    if (dynamic_cast<const unsupported_structure_error*>(&e))
        return kUnsupported;
    return kNumericError;
}

} // namespace

PipelineResult cmd_generate(const PipelineConfig& cfg) {
    PipelineResult res;
    Manifest manifest(cfg, "generate");
    std::string stage = "config";
    try {
        cfg.validate();
        auto ode = resolve_ode(cfg.ode);

        stage = "series";
        AsymptoticSeries series;
        {
            StageTimer t(manifest, stage);
            series = derive_coefficients(ode, cfg.order);
        }
        stage = "borel";
        BorelSeries borel;
        {
            StageTimer t(manifest, stage);
            borel = borel_transform(series);
        }

        stage = "write";
        std::string series_csv = "n,a_n\n";
        for (unsigned n = 0; n <= series.order(); ++n)
            series_csv += std::to_string(n) + "," + to_string(series.a[n]) + "\n";
        std::string p1 = out_path(cfg, "series.csv");
        write_text(p1, series_csv);
        manifest.add_output(p1);
        res.outputs.push_back(p1);

        std::string borel_csv = "n,B_n\n";
        for (unsigned n = 1; n <= borel.size(); ++n)
            borel_csv += std::to_string(n) + "," + to_string(borel.subscript(n)) + "\n";
        std::string p2 = out_path(cfg, "borel.csv");
        write_text(p2, borel_csv);
        manifest.add_output(p2);
        res.outputs.push_back(p2);

        res.message = "generated " + std::to_string(cfg.order) + " coefficients of " + cfg.ode;
        manifest.set_status(kOk);
    } catch (const std::exception& e) {
        res.status = status_of(e);
        res.message = e.what();
        manifest.fail(stage, e.what());
        manifest.set_status(res.status);
    }
    res.manifest_path = manifest.write();
    return res;
}

PipelineResult cmd_analyze(const PipelineConfig& cfg) {
    PipelineResult res;
    Manifest manifest(cfg, "analyze");
    std::string stage = "config";
    try {
        cfg.validate();
        auto ode = resolve_ode(cfg.ode);

        stage = "pole-scan";
        HistogramOptions opt;
        opt.order_lo = cfg.pade_lo;
        opt.order_hi = cfg.pade_hi;
        opt.bins = cfg.bins;
        opt.transform = cfg.transform;
        opt.window_lo = cfg.window_lo;
        opt.window_hi = cfg.window_hi;
        opt.im_cut = cfg.im_cut;
        opt.digits = cfg.precision;
        PoleScan scan;
        Histogram hist;
        {
            StageTimer t(manifest, stage);
            scan = scan_poles(ode, opt);
            hist = pole_histogram(scan, opt);
        }

        stage = "darboux";
        std::string darboux_csv = "n,b,s\n";
        {
            StageTimer t(manifest, stage);
            unsigned N = std::max(cfg.order, cfg.pade_hi);
            auto borel = borel_transform(derive_coefficients(ode, N + 1));
            for (unsigned n : {12u, 20u, 50u, 100u, N}) {
                if (n < 4 || n > N)
                    continue;
                try {
                    auto est = darboux_fit(borel, n, cfg.precision, -1.0, 2.0);
                    darboux_csv += std::to_string(n) + "," + est.b.str(12) + "," +
                                   est.s.str(12) + "\n";
                } catch (const numeric_error&) {
                    darboux_csv += std::to_string(n) + ",,\n"; // no root for this n
                }
            }
        }

        stage = "write";
        std::string hist_csv = "bin_left,bin_right,count\n";
        for (std::size_t i = 0; i < hist.counts.size(); ++i) {
            double lo = hist.lo + static_cast<double>(i) * hist.bin_width();
            hist_csv += fmt_double(lo) + "," + fmt_double(lo + hist.bin_width()) + "," +
                        std::to_string(hist.counts[i]) + "\n";
        }
        std::string p1 = out_path(cfg, "histogram.csv");
        write_text(p1, hist_csv);
        manifest.add_output(p1);
        res.outputs.push_back(p1);

        std::string poles_csv = "order,re_z,im_z,re_residue,im_residue\n";
        for (const auto& p : scan.poles) {
            poles_csv += std::to_string(p.order) + "," + p.location.re.str(17) + "," +
                         p.location.im.str(17) + "," + p.residue.re.str(17) + "," +
                         p.residue.im.str(17) + "\n";
        }
        std::string p2 = out_path(cfg, "poles.csv");
        write_text(p2, poles_csv);
        manifest.add_output(p2);
        res.outputs.push_back(p2);

        std::string p3 = out_path(cfg, "darboux.csv");
        write_text(p3, darboux_csv);
        manifest.add_output(p3);
        res.outputs.push_back(p3);

        auto model = singularity_model(ode);
        double b = Rational(model.exponent).get_d();
        std::string recommendation;
        if (std::abs(b - 1.0) < 0.1)
            recommendation = "simple-pole";
        else if (std::abs(b - 0.5) < 0.1)
            recommendation = "branch b=1/2";
        else
            recommendation = "b = " + to_string(model.exponent) + " (resummation unsupported)";

        char peak[64];
        std::snprintf(peak, sizeof(peak), "%.6f", hist.peak_center());
        res.message = "recommendation: " + recommendation + "; dominant peak near z = " + peak +
                      "; pooled " + std::to_string(hist.total) + " poles (" +
                      std::to_string(scan.failed_orders) + " orders skipped)";
        manifest.set_status(kOk);
    } catch (const std::exception& e) {
        res.status = status_of(e);
        res.message = e.what();
        manifest.fail(stage, e.what());
        manifest.set_status(res.status);
    }
    res.manifest_path = manifest.write();
    return res;
}

PipelineResult cmd_resum(const PipelineConfig& cfg) {
    PipelineResult res;
    Manifest manifest(cfg, "resum");
    std::string stage = "config";
    try {
        cfg.validate();
        auto ode = resolve_ode(cfg.ode);
        LatticeKind kind = decide_kind(cfg, ode);

        stage = "series";
        BorelSeries borel, borel_with_test;
        {
            StageTimer t(manifest, stage);
            borel = borel_transform(derive_coefficients(ode, cfg.order));
            borel_with_test = borel_transform(derive_coefficients(ode, cfg.order + 1));
        }

        stage = "approximant";
        unsigned numdeg = static_cast<unsigned>(borel.size() - 1);
        unsigned nprime;
        ResurgentApproximant ra;
        {
            StageTimer t(manifest, stage);
            if (cfg.nprime) {
                nprime = *cfg.nprime;
            } else {
                nprime = select_pole_count(borel_with_test, kind, ode.lambda,
                                           {numdeg, 16 * numdeg}, cfg.precision);
            }
            ra = build_approximant(borel, kind, nprime, ode.lambda, cfg.precision);
        }

        stage = "fit";
        auto table = solve_bridge_system(4);
        auto ladder = discontinuity_ladder(ra, 3);
        BigReal C(cfg.precision);
        {
            StageTimer t(manifest, stage);
            C = fit_transseries_constant(ra, ladder, table, BigReal(cfg.x0, cfg.precision),
                                         BigReal(cfg.y_target, cfg.precision), cfg.quad_tol);
        }

        stage = "reference";
        ODESolution ref;
        {
            StageTimer t(manifest, stage);
            ref = integrate_ode(ode, cfg.x0, cfg.y_target, std::min(cfg.grid_lo, cfg.x0),
                                std::max(cfg.grid_hi, cfg.x0), cfg.ref_tol);
        }

        stage = "curves";
        std::vector<double> xs;
        for (double x = cfg.grid_lo; x <= cfg.grid_hi + 1e-12; x += cfg.grid_step)
            xs.push_back(x);

        std::string resum_csv = "x,y_med,pv_part,exp_sector_1,exp_sector_2,exp_sector_3\n";
        std::vector<double> ymed(xs.size());
        {
            StageTimer t(manifest, stage);
            for (std::size_t i = 0; i < xs.size(); ++i) {
                BigReal x(xs[i], cfg.precision);
                BigReal pv = pv_laplace(ra, x, cfg.quad_tol);
                BigReal s1 = ladder.eval_leading(1, x);
                BigReal s2 = ladder.eval_leading(2, x);
                BigReal s3 = ladder.eval_leading(3, x);
                BigReal y = pv;
                for (const auto& e : table.entries) {
                    if (e.delta_pow < 1 || e.delta_pow > 3)
                        continue;
                    const BigReal& D = e.delta_pow == 1 ? s1 : (e.delta_pow == 2 ? s2 : s3);
                    y += BigReal(e.coeff, cfg.precision) *
                         pow_si(C, static_cast<long>(e.c_pow)) * D;
                }
                ymed[i] = y.to_double();
                resum_csv += fmt_double(xs[i]) + "," + y.str(17) + "," + pv.str(17) + "," +
                             s1.str(17) + "," + s2.str(17) + "," + s3.str(17) + "\n";
            }
        }
        std::string p1 = out_path(cfg, "resummed.csv");
        write_text(p1, resum_csv);
        manifest.add_output(p1);
        res.outputs.push_back(p1);

        std::string ref_csv = "x,y\n";
        for (double x : xs)
            ref_csv += fmt_double(x) + "," + fmt_double(ref.eval(x)) + "\n";
        std::string p2 = out_path(cfg, "reference.csv");
        write_text(p2, ref_csv);
        manifest.add_output(p2);
        res.outputs.push_back(p2);

        stage = "compare";
        std::size_t idx = 0;
        auto report = compare(
            ref, [&](double) { return ymed[idx++]; }, xs);
        std::string cmp_csv = "x,ref,candidate,abs_err,rel_err\n";
        for (const auto& row : report.rows)
            cmp_csv += fmt_double(row.x) + "," + fmt_double(row.ref) + "," +
                       fmt_double(row.cand) + "," + fmt_double(row.abs_err) + "," +
                       fmt_double(row.rel_err) + "\n";
        std::string p3 = out_path(cfg, "comparison.csv");
        write_text(p3, cmp_csv);
        manifest.add_output(p3);
        res.outputs.push_back(p3);

        char summary[256];
        std::snprintf(summary, sizeof(summary),
                      "kind=%s N'=%u C=%.8g max_abs=%.4g (x=%.3g) max_rel=%.4g scale_rel=%.4g",
                      kind == LatticeKind::pole ? "simple-pole" : "branch-1/2", nprime,
                      C.to_double(), report.max_abs, report.x_at_max_abs, report.max_rel,
                      report.scale_rel);
        res.message = summary;
        manifest.set_status(kOk);
    } catch (const std::exception& e) {
        res.status = status_of(e);
        res.message = e.what();
        manifest.fail(stage, e.what());
        manifest.set_status(res.status);
    }
    res.manifest_path = manifest.write();
    return res;
}

} // namespace resurgence
