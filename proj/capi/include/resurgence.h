/* C interface to the resurgent-resummation library.
 *
 * All objects are opaque handles created and released through this API.
 * Functions returning a pointer yield NULL on failure; functions returning
 * rsg_status yield a nonzero code. In both cases rsg_last_error() carries a
 * thread-local diagnostic message. Strings returned as char* are owned by
 * the caller and must be released with rsg_string_free().
 */
#ifndef RESURGENCE_C_API_H
#define RESURGENCE_C_API_H

#ifdef __cplusplus
extern "C" {
#endif

#ifndef RSG_API
#define RSG_API __attribute__((visibility("default")))
#endif

typedef enum {
    RSG_OK = 0,
    RSG_ERR_CONFIG = 1,      /* bad input / configuration */
    RSG_ERR_NUMERIC = 2,     /* a numerical stage failed */
    RSG_ERR_UNSUPPORTED = 3  /* structure outside the supported exponents */
} rsg_status;

RSG_API const char* rsg_version(void);
RSG_API const char* rsg_last_error(void);
RSG_API void rsg_string_free(char* s);

/* -- ODE specifications --------------------------------------------------- */

typedef struct rsg_ode rsg_ode;

RSG_API rsg_ode* rsg_ode_from_json(const char* json_text);
RSG_API rsg_ode* rsg_ode_builtin(const char* name);
RSG_API char* rsg_ode_to_json(const rsg_ode* ode);
RSG_API void rsg_ode_free(rsg_ode* ode);

/* -- formal series and Borel transform ------------------------------------ */

typedef struct rsg_series rsg_series;
typedef struct rsg_borel rsg_borel;

RSG_API rsg_series* rsg_derive_coefficients(const rsg_ode* ode, unsigned order);
RSG_API unsigned rsg_series_order(const rsg_series* s);
/* a_n as an exact rational string, n = 0..order */
RSG_API char* rsg_series_coeff(const rsg_series* s, unsigned n);
RSG_API void rsg_series_free(rsg_series* s);

RSG_API rsg_borel* rsg_borel_transform(const rsg_series* s);
RSG_API unsigned rsg_borel_size(const rsg_borel* b);
/* B_n = a_n/(n-1)! as an exact rational string, n = 1..size */
RSG_API char* rsg_borel_coeff(const rsg_borel* b, unsigned n);
RSG_API void rsg_borel_free(rsg_borel* b);

/* -- singularity diagnosis ------------------------------------------------- */

RSG_API rsg_status rsg_darboux_fit(const rsg_borel* b, unsigned n, long digits,
                                   double bracket_lo, double bracket_hi, double* b_out,
                                   double* s_out);

/* structural Borel exponent b = 1 - A of the ODE */
RSG_API rsg_status rsg_structural_exponent(const rsg_ode* ode, double* b_out);

/* -- resurgent approximants ------------------------------------------------ */

typedef struct rsg_approximant rsg_approximant;

/* kind: "pole" or "sqrt-branch"; lambda is the lattice spacing as a rational
 * string ("1", "3/2", ...); matches every supplied Borel coefficient */
RSG_API rsg_approximant* rsg_build_approximant(const rsg_borel* b, const char* kind,
                                               const char* lambda, unsigned nprime,
                                               long digits);
/* scans [lo, hi] using the last supplied coefficient as the test */
RSG_API rsg_status rsg_select_pole_count(const rsg_borel* b, const char* kind,
                                         const char* lambda, long digits, unsigned lo,
                                         unsigned hi, unsigned* nprime_out);
RSG_API char* rsg_approximant_to_json(const rsg_approximant* ra);
/* realified value Re(B) + Im(B) at real z off the lattice */
RSG_API rsg_status rsg_approximant_eval(const rsg_approximant* ra, double z, double* out);
RSG_API void rsg_approximant_free(rsg_approximant* ra);

/* Cauchy principal value of the Laplace integral of the approximant */
RSG_API rsg_status rsg_pv_laplace(const rsg_approximant* ra, double x, double abs_tol,
                                  double* out);

/* medianized-transseries coefficient table as JSON (K = 4 validated) */
RSG_API char* rsg_median_table_json(unsigned K);

/* -- resummed solutions ----------------------------------------------------- */

typedef struct rsg_resummed rsg_resummed;

/* fits the transseries constant so the medianized value at x0 is y_target */
RSG_API rsg_resummed* rsg_resum_fit(const rsg_approximant* ra, double x0, double y_target,
                                    double quad_tol);
RSG_API rsg_status rsg_resummed_eval(const rsg_resummed* rs, double x, double* out);
RSG_API double rsg_resummed_constant(const rsg_resummed* rs);
/* leading e^{-k lambda x} sector value, k = 1..3 */
RSG_API rsg_status rsg_resummed_sector(const rsg_resummed* rs, unsigned k, double x,
                                       double* out);
RSG_API void rsg_resummed_free(rsg_resummed* rs);

/* -- reference integration --------------------------------------------------- */

typedef struct rsg_reference rsg_reference;

RSG_API rsg_reference* rsg_integrate_ode(const rsg_ode* ode, double x0, double y0,
                                         double x_lo, double x_hi, double tol);
RSG_API rsg_status rsg_reference_eval(const rsg_reference* ref, double x, double* out);
RSG_API void rsg_reference_free(rsg_reference* ref);

/* -- pipeline commands -------------------------------------------------------
 * config_json uses the manifest "config" schema; outputs are written under
 * the configured directory. The return value doubles as the process exit
 * code (0 ok, 1 config, 2 numeric, 3 unsupported). message_out receives a
 * one-line summary (caller frees).
 */
RSG_API int rsg_cmd_generate(const char* config_json, char** message_out);
RSG_API int rsg_cmd_analyze(const char* config_json, char** message_out);
RSG_API int rsg_cmd_resum(const char* config_json, char** message_out);

#ifdef __cplusplus
}
#endif

#endif /* RESURGENCE_C_API_H */
