/* rootdisk — explicit containment disks for polynomial zeros.
 *
 * C interface to the rootdisk core. All functions return rd_status; every
 * non-RD_OK return leaves a thread-local message readable via
 * rd_last_error(). Out-parameters are written only on RD_OK unless noted.
 * Strings returned through char** are heap-allocated; release them with
 * rd_string_free(). Handles are released with their matching *_free(),
 * which accepts NULL.
 */
#ifndef ROOTDISK_ROOTDISK_H
#define ROOTDISK_ROOTDISK_H

#include <stddef.h>

#if defined(_WIN32)
#define RD_API __declspec(dllexport)
#else
#define RD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rd_status {
    RD_OK = 0,
    RD_ERR_INVALID_ARGUMENT = 1, /* bad parameter or polynomial */
    RD_ERR_PARSE = 2,            /* malformed JSON or inline coefficients */
    RD_ERR_INFEASIBLE = 3,       /* no feasible parameters on the search grid */
    RD_ERR_UNCONVERGED = 4,      /* root iteration did not reach tolerance */
    RD_ERR_IO = 5,               /* unreadable file */
    RD_ERR_INTERNAL = 6,         /* unexpected failure; see rd_last_error() */
} rd_status;

/* Bound selectors. Names match the CLI: ek, aziz_real, govil_rahman,
 * aziz_t, rsm_complex, rsm_parts, thm17, cor19, thm110, cor112. */
typedef enum rd_theorem {
    RD_THM_EK = 0,
    RD_THM_AZIZ_REAL = 1,
    RD_THM_GOVIL_RAHMAN = 2,
    RD_THM_AZIZ_T = 3,
    RD_THM_RSM_COMPLEX = 4,
    RD_THM_RSM_PARTS = 5,
    RD_THM_THM17 = 6,
    RD_THM_COR19 = 7,
    RD_THM_THM110 = 8,
    RD_THM_COR112 = 9,
    RD_THM_COUNT = 10,
} rd_theorem;

typedef struct rd_poly rd_poly;     /* immutable polynomial */
typedef struct rd_roots rd_roots;   /* numerically computed zeros */
typedef struct rd_report rd_report; /* hypothesis check + containment disk */

/* Message for the most recent failure on this thread ("" if none).
 * The pointer stays valid until the next rootdisk call on the thread. */
RD_API const char* rd_last_error(void);

RD_API void rd_string_free(char* s);

RD_API const char* rd_version(void);

/* ---- theorem table ---- */

RD_API const char* rd_theorem_name(rd_theorem thm); /* NULL if out of range */
RD_API rd_status rd_theorem_from_name(const char* name, rd_theorem* out);
/* 1 when the bound has free parameters (t1, t2) worth searching over. */
RD_API int rd_theorem_is_parameterized(rd_theorem thm);

/* ---- polynomials (coefficients ascending by power) ---- */

/* ims may be NULL for a real polynomial. count is the coefficient count. */
RD_API rd_status rd_poly_create(const double* res, const double* ims, int count,
                                rd_poly** out);
/* Parses {"coeffs": [[re, im], ...]} (or the real shorthand [re, ...]). */
RD_API rd_status rd_poly_from_json(const char* text, rd_poly** out);
/* Parses inline "re,im;re,im;..."; a bare "re" segment means imaginary 0. */
RD_API rd_status rd_poly_from_inline(const char* text, rd_poly** out);
RD_API rd_status rd_poly_read_file(const char* path, rd_poly** out);
RD_API void rd_poly_free(rd_poly* p);

RD_API rd_status rd_poly_degree(const rd_poly* p, int* out);
/* Coefficient of z^j; zero for j outside [0, degree]. */
RD_API rd_status rd_poly_coeff(const rd_poly* p, int j, double* re, double* im);
RD_API rd_status rd_poly_eval(const rd_poly* p, double re, double im,
                              double* out_re, double* out_im);
/* 1 + max_{j<n} |a_j| / |a_n|; requires degree >= 1. */
RD_API rd_status rd_poly_cauchy_bound(const rd_poly* p, double* out);
/* (t1 - z)(t2 + z) p(z); requires t1 > 0 and t2 >= 0. */
RD_API rd_status rd_poly_multiply_factors(const rd_poly* p, double t1, double t2,
                                          rd_poly** out);
RD_API rd_status rd_poly_to_json(const rd_poly* p, char** out);

/* ---- hypothesis checks and bounds ---- */

typedef struct rd_bound_params {
    double t1;  /* ignored by parameter-free bounds */
    double t2;
    int k;      /* explicit split index, or -1 to use the canonical one */
    int m;      /* second split index where applicable, or -1 */
    double tol; /* absolute condition tolerance; < 0 selects 1e-10 * max|a_j| */
} rd_bound_params;

/* {1.0, 0.0, -1, -1, -1.0} */
RD_API rd_bound_params rd_bound_params_default(void);

/* Evaluates the bound. Returns RD_OK even when hypotheses fail or the
 * radius is anomalous; interrogate the report. */
RD_API rd_status rd_bound(const rd_poly* p, rd_theorem thm,
                          const rd_bound_params* params, rd_report** out);

/* Hypothesis check only. ok_out may be NULL; json_out (optional) receives
 * the report {theorem, ok, t1, t2, k, m, alpha, beta, violations}. */
RD_API rd_status rd_check(const rd_poly* p, rd_theorem thm,
                          const rd_bound_params* params, int* ok_out,
                          char** json_out);

RD_API void rd_report_free(rd_report* r);

RD_API rd_status rd_report_ok(const rd_report* r, int* out);
/* 1 when the formula produced a negative radius (theorem-contradiction signal). */
RD_API rd_status rd_report_anomaly(const rd_report* r, int* out);
RD_API rd_status rd_report_theorem(const rd_report* r, rd_theorem* out);
RD_API rd_status rd_report_disk(const rd_report* r, double* center_re,
                                double* center_im, double* radius);
/* |center| + radius: radius of the origin-centered circumscribing disk. */
RD_API rd_status rd_report_enclosing(const rd_report* r, double* out);
/* t1, t2, and the split indices actually used (-1 when absent). Any
 * out-pointer may be NULL. */
RD_API rd_status rd_report_params(const rd_report* r, double* t1, double* t2,
                                  int* k, int* m);
/* Coefficient sector half-angle and axis (0 when the bound uses none). */
RD_API rd_status rd_report_wedge(const rd_report* r, double* alpha, double* beta);
RD_API rd_status rd_report_to_json(const rd_report* r, char** out);
RD_API rd_status rd_report_hypothesis_json(const rd_report* r, char** out);

/* ---- parameter search ---- */

typedef struct rd_search_config {
    double t1_max_factor; /* search t1 up to this multiple of the Cauchy bound */
    int grid_points;      /* grid intervals per axis */
    int refine_iterations;
    double tol;           /* relative condition tolerance (times max|a_j|) */
} rd_search_config;

/* {2.0, 64, 3, 1e-10} */
RD_API rd_search_config rd_search_config_default(void);

/* Parses {"t1_max_factor": f, "grid_points": i, "refine_iterations": i,
 * "tol": f}; missing keys keep their defaults, unknown keys fail. */
RD_API rd_status rd_search_config_parse(const char* text, rd_search_config* out);

/* Minimizes the enclosing radius over the bound's parameters. cfg may be
 * NULL for defaults. On success *best_out owns a report; when every grid
 * point fails the hypotheses, returns RD_ERR_INFEASIBLE with *best_out
 * NULL but still fills the statistics. */
RD_API rd_status rd_search(const rd_poly* p, rd_theorem thm,
                           const rd_search_config* cfg, rd_report** best_out,
                           long long* evaluations, double* feasible_fraction);

/* ---- numerical root oracle ---- */

/* tol < 0 selects 1e-12; max_iter <= 0 selects 500; method 0 uses the
 * coupled-correction iteration, 1 the product-form iteration. */
RD_API rd_status rd_roots_find(const rd_poly* p, double tol, int max_iter,
                               int method, rd_roots** out);
RD_API void rd_roots_free(rd_roots* r);

RD_API rd_status rd_roots_count(const rd_roots* r, int* out);
RD_API rd_status rd_roots_get(const rd_roots* r, int i, double* re, double* im);
RD_API rd_status rd_roots_residual(const rd_roots* r, int i, double* out);
RD_API rd_status rd_roots_converged(const rd_roots* r, int* out);
RD_API rd_status rd_roots_to_json(const rd_roots* r, char** out);

/* Checks every root against the disk with slack tol. worst_out (optional)
 * receives max over roots of |z - center| - radius. Fails with
 * RD_ERR_UNCONVERGED if the roots did not converge. */
RD_API rd_status rd_verify_containment(const rd_roots* r, double center_re,
                                       double center_im, double radius,
                                       double tol, int* contained,
                                       double* worst_out);
/* max |root| / enclosing: 1 means the bound is sharp. */
RD_API rd_status rd_tightness(const rd_roots* r, double enclosing, double* out);

/* ---- instance generation ---- */

/* checker is "thm17" or "thm110". m < 0 means no imaginary chain (thm110
 * only). Deterministic in all arguments. */
RD_API rd_status rd_gen(const char* checker, int n, int k, int m, double t1,
                        double t2, double alpha, unsigned long long seed,
                        rd_poly** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ROOTDISK_ROOTDISK_H */
