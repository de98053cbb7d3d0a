#include "resurgence.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "resurgence/alien.hpp"
#include "resurgence/approximant.hpp"
#include "resurgence/darboux.hpp"
#include "resurgence/errors.hpp"
#include "resurgence/ode.hpp"
#include "resurgence/pipeline.hpp"
#include "resurgence/reference.hpp"
#include "resurgence/resummation.hpp"
#include "resurgence/series.hpp"
#include "resurgence/version.hpp"

using namespace resurgence;

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) {
    g_last_error = what ? what : "unknown error";
}

rsg_status status_for(const std::exception& e) {
    if (dynamic_cast<const config_error*>(&e))
        return RSG_ERR_CONFIG;
    if (dynamic_cast<const unsupported_structure_error*>(&e))
        return RSG_ERR_UNSUPPORTED;
    return RSG_ERR_NUMERIC;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
auto guarded_ptr(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::exception& e) {
        set_error(e.what());
        return nullptr;
    }
}

template <typename F>
rsg_status guarded_status(F&& f) {
    try {
        f();
        return RSG_OK;
    } catch (const std::exception& e) {
        set_error(e.what());
        return status_for(e);
    }
}

LatticeKind kind_from(const char* kind) {
    std::string k = kind ? kind : "";
    if (k == "pole")
        return LatticeKind::pole;
    if (k == "sqrt-branch")
        return LatticeKind::sqrt_branch;
    throw config_error("kind must be 'pole' or 'sqrt-branch'");
}

int run_command(const char* config_json, char** message_out,
                PipelineResult (*command)(const PipelineConfig&)) {
    try {
        if (!config_json)
            throw config_error("null pipeline config");
        auto cfg = PipelineConfig::from_json(config_json);
        auto result = command(cfg);
        if (message_out)
            *message_out = dup_string(result.message);
        if (result.status != kOk)
            set_error(result.message.c_str());
        return result.status;
    } catch (const std::exception& e) {
        set_error(e.what());
        if (message_out)
            *message_out = dup_string(e.what());
        return status_for(e);
    }
}

} // namespace

struct rsg_ode {
    NormalFormODE ode;
};
struct rsg_series {
    AsymptoticSeries series;
};
struct rsg_borel {
    BorelSeries borel;
};
struct rsg_approximant {
    ResurgentApproximant ra;
};
struct rsg_resummed {
    ResummedSolution sol;
};
struct rsg_reference {
    ODESolution sol;
};

extern "C" {

const char* rsg_version(void) { return RESURGENCE_VERSION; }

const char* rsg_last_error(void) { return g_last_error.c_str(); }

void rsg_string_free(char* s) { std::free(s); }

rsg_ode* rsg_ode_from_json(const char* json_text) {
    return guarded_ptr([&]() -> rsg_ode* {
        if (!json_text)
            throw config_error("null ODE spec");
        return new rsg_ode{ode_from_json(json_text)};
    });
}

rsg_ode* rsg_ode_builtin(const char* name) {
    return guarded_ptr([&]() -> rsg_ode* {
        if (!name)
            throw config_error("null built-in name");
        return new rsg_ode{builtin_ode(name)};
    });
}

char* rsg_ode_to_json(const rsg_ode* ode) {
    return guarded_ptr([&]() -> char* {
        if (!ode)
            throw config_error("null ODE handle");
        return dup_string(ode_to_json(ode->ode));
    });
}

void rsg_ode_free(rsg_ode* ode) { delete ode; }

rsg_series* rsg_derive_coefficients(const rsg_ode* ode, unsigned order) {
    return guarded_ptr([&]() -> rsg_series* {
        if (!ode)
            throw config_error("null ODE handle");
        return new rsg_series{derive_coefficients(ode->ode, order)};
    });
}

unsigned rsg_series_order(const rsg_series* s) { return s ? s->series.order() : 0; }

char* rsg_series_coeff(const rsg_series* s, unsigned n) {
    return guarded_ptr([&]() -> char* {
        if (!s || n > s->series.order())
            throw config_error("series coefficient index out of range");
        return dup_string(to_string(s->series.a[n]));
    });
}

void rsg_series_free(rsg_series* s) { delete s; }

rsg_borel* rsg_borel_transform(const rsg_series* s) {
    return guarded_ptr([&]() -> rsg_borel* {
        if (!s)
            throw config_error("null series handle");
        return new rsg_borel{borel_transform(s->series)};
    });
}

unsigned rsg_borel_size(const rsg_borel* b) {
    return b ? static_cast<unsigned>(b->borel.size()) : 0;
}

char* rsg_borel_coeff(const rsg_borel* b, unsigned n) {
    return guarded_ptr([&]() -> char* {
        if (!b || n < 1 || n > b->borel.size())
            throw config_error("borel coefficient index out of range");
        return dup_string(to_string(b->borel.subscript(n)));
    });
}

void rsg_borel_free(rsg_borel* b) { delete b; }

rsg_status rsg_darboux_fit(const rsg_borel* b, unsigned n, long digits, double bracket_lo,
                           double bracket_hi, double* b_out, double* s_out) {
    return guarded_status([&] {
        if (!b || !b_out || !s_out)
            throw config_error("null argument");
        auto est = darboux_fit(b->borel, n, digits, bracket_lo, bracket_hi);
        *b_out = est.b.to_double();
        *s_out = est.s.to_double();
    });
}

rsg_status rsg_structural_exponent(const rsg_ode* ode, double* b_out) {
    return guarded_status([&] {
        if (!ode || !b_out)
            throw config_error("null argument");
        *b_out = Rational(singularity_model(ode->ode).exponent).get_d();
    });
}

rsg_approximant* rsg_build_approximant(const rsg_borel* b, const char* kind,
                                       const char* lambda, unsigned nprime, long digits) {
    return guarded_ptr([&]() -> rsg_approximant* {
        if (!b || !lambda)
            throw config_error("null argument");
        return new rsg_approximant{build_approximant(
            b->borel, kind_from(kind), nprime, rational_from_string(lambda), digits)};
    });
}

rsg_status rsg_select_pole_count(const rsg_borel* b, const char* kind, const char* lambda,
                                 long digits, unsigned lo, unsigned hi,
                                 unsigned* nprime_out) {
    return guarded_status([&] {
        if (!b || !lambda || !nprime_out)
            throw config_error("null argument");
        *nprime_out = select_pole_count(b->borel, kind_from(kind),
                                        rational_from_string(lambda), {lo, hi}, digits);
    });
}

char* rsg_approximant_to_json(const rsg_approximant* ra) {
    return guarded_ptr([&]() -> char* {
        if (!ra)
            throw config_error("null approximant handle");
        return dup_string(ra->ra.to_json());
    });
}

rsg_status rsg_approximant_eval(const rsg_approximant* ra, double z, double* out) {
    return guarded_status([&] {
        if (!ra || !out)
            throw config_error("null argument");
        *out = ra->ra.realified(BigReal(z, ra->ra.digits)).to_double();
    });
}

void rsg_approximant_free(rsg_approximant* ra) { delete ra; }

rsg_status rsg_pv_laplace(const rsg_approximant* ra, double x, double abs_tol, double* out) {
    return guarded_status([&] {
        if (!ra || !out)
            throw config_error("null argument");
        *out = pv_laplace(ra->ra, BigReal(x, ra->ra.digits), abs_tol).to_double();
    });
}

char* rsg_median_table_json(unsigned K) {
    return guarded_ptr([&]() -> char* { return dup_string(solve_bridge_system(K).to_json()); });
}

rsg_resummed* rsg_resum_fit(const rsg_approximant* ra, double x0, double y_target,
                            double quad_tol) {
    return guarded_ptr([&]() -> rsg_resummed* {
        if (!ra)
            throw config_error("null approximant handle");
        auto table = solve_bridge_system(4);
        auto ladder = discontinuity_ladder(ra->ra, 3);
        BigReal C = fit_transseries_constant(ra->ra, ladder, table,
                                             BigReal(x0, ra->ra.digits),
                                             BigReal(y_target, ra->ra.digits), quad_tol);
        return new rsg_resummed{
            ResummedSolution{ra->ra, std::move(ladder), std::move(table), C, quad_tol}};
    });
}

rsg_status rsg_resummed_eval(const rsg_resummed* rs, double x, double* out) {
    return guarded_status([&] {
        if (!rs || !out)
            throw config_error("null argument");
        *out = rs->sol.eval(BigReal(x, rs->sol.ra.digits)).to_double();
    });
}

double rsg_resummed_constant(const rsg_resummed* rs) {
    return rs ? rs->sol.C.to_double() : 0.0;
}

rsg_status rsg_resummed_sector(const rsg_resummed* rs, unsigned k, double x, double* out) {
    return guarded_status([&] {
        if (!rs || !out)
            throw config_error("null argument");
        *out = rs->sol.sector(k, BigReal(x, rs->sol.ra.digits)).to_double();
    });
}

void rsg_resummed_free(rsg_resummed* rs) { delete rs; }

rsg_reference* rsg_integrate_ode(const rsg_ode* ode, double x0, double y0, double x_lo,
                                 double x_hi, double tol) {
    return guarded_ptr([&]() -> rsg_reference* {
        if (!ode)
            throw config_error("null ODE handle");
        return new rsg_reference{integrate_ode(ode->ode, x0, y0, x_lo, x_hi, tol)};
    });
}

rsg_status rsg_reference_eval(const rsg_reference* ref, double x, double* out) {
    return guarded_status([&] {
        if (!ref || !out)
            throw config_error("null argument");
        *out = ref->sol.eval(x);
    });
}

void rsg_reference_free(rsg_reference* ref) { delete ref; }

int rsg_cmd_generate(const char* config_json, char** message_out) {
    return run_command(config_json, message_out, cmd_generate);
}

int rsg_cmd_analyze(const char* config_json, char** message_out) {
    return run_command(config_json, message_out, cmd_analyze);
}

int rsg_cmd_resum(const char* config_json, char** message_out) {
    return run_command(config_json, message_out, cmd_resum);
}

} // extern "C"
