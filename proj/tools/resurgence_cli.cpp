// Command-line front end for the resurgent-resummation pipeline. All work
// happens behind the shared-library C API; this binary only parses flags,
// assembles the config JSON, and relays the summary line and exit code.

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "resurgence.h"

namespace {

struct Flags {
    std::string ode = "euler";
    unsigned order = 9;
    long precision = 64;
    std::string kind = "auto";
    std::optional<unsigned> nprime;
    double x0 = 10.0;
    double ytarget = 0.12;
    std::string out = ".";
    std::size_t bins = 200;
    std::string pade_orders = "5:25";
    std::string transform = "none";
    double grid_lo = 5.0, grid_hi = 20.0, grid_step = 0.5;
};

std::string config_json(const Flags& f) {
    nlohmann::json j;
    j["ode"] = f.ode;
    j["order"] = f.order;
    j["precision"] = f.precision;
    j["kind"] = f.kind;
    if (f.nprime)
        j["nprime"] = *f.nprime;
    j["x0"] = f.x0;
    j["y_target"] = f.ytarget;
    j["outdir"] = f.out;
    j["bins"] = f.bins;
    j["transform"] = f.transform;
    j["grid"] = {f.grid_lo, f.grid_hi, f.grid_step};
    auto colon = f.pade_orders.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--pade-orders expects LO:HI");
    j["pade_orders"] = {std::stoul(f.pade_orders.substr(0, colon)),
                        std::stoul(f.pade_orders.substr(colon + 1))};
    return j.dump();
}

int relay(int status, char* message) {
    if (message) {
        std::printf("%s\n", message);
        rsg_string_free(message);
    } else if (status != RSG_OK) {
        std::fprintf(stderr, "error: %s\n", rsg_last_error());
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Borel-Ecalle resummation of truncated asymptotic series"};
    app.set_version_flag("--version", std::string(rsg_version()));
    app.require_subcommand(1);

    Flags f;
    unsigned nprime_flag = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--ode", f.ode,
                        "ODE spec file or built-in name (euler, ode-simple, ode-cubic, "
                        "ode-branch, prototype)");
        cmd->add_option("--order", f.order, "truncation order N");
        cmd->add_option("--precision", f.precision, "working precision in decimal digits");
        cmd->add_option("--out", f.out, "output directory");
    };

    auto* gen = app.add_subcommand("generate", "derive series coefficients and Borel table");
    add_common(gen);

    auto* ana = app.add_subcommand("analyze", "Borel-Pade pole histogram and Darboux report");
    add_common(ana);
    ana->add_option("--bins", f.bins, "histogram bin count");
    ana->add_option("--pade-orders", f.pade_orders, "diagonal Pade order range LO:HI");
    ana->add_option("--transform", f.transform, "none | log-derivative")
        ->check(CLI::IsMember({"none", "log-derivative"}));

    auto* res = app.add_subcommand("resum", "build approximant, fit C, compare to reference");
    add_common(res);
    res->add_option("--kind", f.kind, "auto | simple-pole | branch")
        ->check(CLI::IsMember({"auto", "simple-pole", "branch"}));
    auto* np = res->add_option("--nprime", nprime_flag, "lattice size N' (default: grid scan)");
    res->add_option("--x0", f.x0, "initial-condition location");
    res->add_option("--ytarget", f.ytarget, "initial-condition value y(x0)");
    res->add_option("--grid-lo", f.grid_lo, "output grid start");
    res->add_option("--grid-hi", f.grid_hi, "output grid end");
    res->add_option("--grid-step", f.grid_step, "output grid step");

    CLI11_PARSE(app, argc, argv);
    if (np->count() > 0)
        f.nprime = nprime_flag;

    std::string cfg;
    try {
        cfg = config_json(f);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return RSG_ERR_CONFIG;
    }

    char* message = nullptr;
    int rc;
    if (gen->parsed())
        rc = rsg_cmd_generate(cfg.c_str(), &message);
    else if (ana->parsed())
        rc = rsg_cmd_analyze(cfg.c_str(), &message);
    else
        rc = rsg_cmd_resum(cfg.c_str(), &message);
    return relay(rc, message);
}
