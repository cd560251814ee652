/*
 * sonc: a certificate engine for polynomial nonnegativity via sums of
 * nonnegative circuit polynomials.
 *
 * C API over opaque handles. Every function returns a status code; outputs
 * are passed through out-parameters. Strings returned through `char **` are
 * owned by the caller and must be released with sonc_string_free().
 * sonc_last_error() describes the most recent failure on this thread.
 */

#ifndef SONC_SONC_H
#define SONC_SONC_H

#include <stddef.h>

#if defined(_WIN32)
#define SONC_API __declspec(dllexport)
#else
#define SONC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sonc_status {
    SONC_OK = 0,
    SONC_INVALID_ARGUMENT = 1,
    SONC_PARSE_ERROR = 2,
    SONC_DIMENSION_MISMATCH = 3,
    SONC_DOMAIN_ERROR = 4,   /* simplex/interiority/denominator violations etc. */
    SONC_NOT_SYMMETRIC = 5,
    SONC_UNSUPPORTED = 6,
    SONC_INTERNAL_ERROR = 7
} sonc_status;

typedef struct sonc_poly sonc_poly;
typedef struct sonc_cert sonc_cert;

SONC_API const char *sonc_version(void);
SONC_API const char *sonc_status_name(sonc_status status);

/* Message for the most recent error on the calling thread. */
SONC_API const char *sonc_last_error(void);

SONC_API void sonc_string_free(char *s);

/* ------------------------------------------------------------------ */
/* Polynomials                                                        */
/* ------------------------------------------------------------------ */

/* Text form, e.g. "x1^4*x2^2 + x1^2*x2^4 - 3*x1^2*x2^2 + 1".
 * declared_nvars < 0 infers the variable count from the highest index. */
SONC_API sonc_status sonc_poly_parse_text(const char *text, int declared_nvars, sonc_poly **out);

/* JSON form: {"n": int, "terms": [{"exp": [int...], "coef": "p/q"}]} */
SONC_API sonc_status sonc_poly_parse_json(const char *json, sonc_poly **out);

SONC_API sonc_status sonc_poly_format_text(const sonc_poly *p, char **out);
SONC_API sonc_status sonc_poly_format_json(const sonc_poly *p, char **out);

SONC_API int sonc_poly_nvars(const sonc_poly *p);
SONC_API sonc_status sonc_poly_eval(const sonc_poly *p, const double *point, size_t len, double *out);

SONC_API sonc_status sonc_poly_is_symmetric(const sonc_poly *p, int *out);

/* mode: 0 = group sum over all n! permutations, 1 = orbit sum. */
SONC_API sonc_status sonc_poly_symmetrize(const sonc_poly *p, int mode, sonc_poly **out);

SONC_API void sonc_poly_free(sonc_poly *p);

/* ------------------------------------------------------------------ */
/* Certificates                                                       */
/* ------------------------------------------------------------------ */

/* Accepts both {"type": "sonc", ...} and {"type": "symmetric-sonc", ...}. */
SONC_API sonc_status sonc_cert_parse_json(const char *json, sonc_cert **out);
SONC_API sonc_status sonc_cert_format_json(const sonc_cert *cert, char **out);
SONC_API int sonc_cert_is_symmetric(const sonc_cert *cert);
SONC_API void sonc_cert_free(sonc_cert *cert);

/* Materializes the symmetric-group expansion of a symmetric certificate. */
SONC_API sonc_status sonc_cert_expand(const sonc_cert *cert, sonc_cert **out);

/* ------------------------------------------------------------------ */
/* Operations (JSON reports)                                          */
/* ------------------------------------------------------------------ */

/* Circuit JSON in; report out:
 * {"classification", "exact", "theta": {"log", "exact"}, "lambda": [...],
 *  "comparison"}  */
SONC_API sonc_status sonc_check_circuit(const char *circuit_json, const char *options_json, char **report_json);

/* Plain verification; the certificate must be of type "sonc". */
SONC_API sonc_status sonc_verify(const sonc_poly *p, const sonc_cert *cert, const char *options_json,
                                 char **report_json);

/* Orbit-level verification; the certificate must be "symmetric-sonc". */
SONC_API sonc_status sonc_verify_symmetric(const sonc_poly *p, const sonc_cert *cert, const char *options_json,
                                           char **report_json);

/* options_json: {"symmetric": bool, "max_iter": int, ...}. On success with a
 * certificate, *cert_out is set; when the search is inconclusive *cert_out is
 * NULL and the report says {"status": "unknown"}. */
SONC_API sonc_status sonc_decompose(const sonc_poly *p, const char *options_json, sonc_cert **cert_out,
                                    char **report_json);

/* exponent: n entries. Report: {"representative", "size", "elements"}. */
SONC_API sonc_status sonc_orbit(const int *exponent, size_t n, char **report_json);

/* request_json: {"alpha": [...], "beta": [...], "b": [...]?, "x": [[...]...]?,
 *                "samples": int?, "seed": int?}
 * Report: membership verdict, Caratheodory decomposition, min observed gap. */
SONC_API sonc_status sonc_muirhead(const char *request_json, char **report_json);

/* config_json: {"samples", "box_radius", "refine_steps", "seed",
 *               "nonnegative_orthant", "jobs"}.
 * Report: {"witness": null} or the witness point and exact value. */
SONC_API sonc_status sonc_falsify(const sonc_poly *p, const char *config_json, char **report_json);

/* Exhaustive grid minimum over [-radius, radius]^n. */
SONC_API sonc_status sonc_min_on_grid(const sonc_poly *p, double radius, int steps_per_axis, char **report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SONC_SONC_H */
