/* C interface for the hyptor period/torsion library.
 *
 * All functions that can fail return a hyptor_status; on failure a
 * thread-local message is available through hyptor_last_error().  Strings
 * returned through char** out parameters are heap-allocated and must be
 * released with hyptor_string_free().
 */
#ifndef HYPTOR_H
#define HYPTOR_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HYPTOR_API __declspec(dllexport)
#else
#define HYPTOR_API __attribute__((visibility("default")))
#endif

typedef enum hyptor_status {
    HYPTOR_OK = 0,
    HYPTOR_ERR_ODD_LENGTH = 1,
    HYPTOR_ERR_ENDPOINT_VIOLATION = 2,
    HYPTOR_ERR_PAIR_OVERLAP = 3,
    HYPTOR_ERR_ON_CUT = 4,
    HYPTOR_ERR_NO_CONVERGENCE = 5,
    HYPTOR_ERR_IMAG_TOO_LARGE = 6,
    HYPTOR_ERR_SINGULAR_M = 7,
    HYPTOR_ERR_NOT_GENERIC = 8,
    HYPTOR_ERR_NOT_GENUS_1 = 9,
    HYPTOR_ERR_RANK_DEFICIENT = 10,
    HYPTOR_ERR_LEFT_DOMAIN = 11,
    HYPTOR_ERR_MARGIN_TOO_SMALL = 12,
    HYPTOR_ERR_INVALID_ARGUMENT = 13,
    HYPTOR_ERR_INTERNAL = 14,
    HYPTOR_ERR_NULL_ARGUMENT = 100
} hyptor_status;

typedef struct hyptor_config hyptor_config;
typedef struct hyptor_periods hyptor_periods;
typedef struct hyptor_certificate hyptor_certificate;

HYPTOR_API const char* hyptor_version(void);

/* Message for the most recent failure on this thread ("" if none). */
HYPTOR_API const char* hyptor_last_error(void);

/* JSON {code, message} for the most recent failure on this thread. */
HYPTOR_API hyptor_status hyptor_last_error_json(char** out);

HYPTOR_API void hyptor_string_free(char* s);

/* ---- configurations -------------------------------------------------- */

/* a is the flat tuple (a_1..a_2g) of interior branch points; pairs may be
 * given in either order and may coincide. */
HYPTOR_API hyptor_status hyptor_config_create(const double* a, int n,
                                              hyptor_config** out);

/* Fully degenerate configuration from g strictly increasing double roots. */
HYPTOR_API hyptor_status hyptor_config_degenerate(const double* b, int g,
                                                  hyptor_config** out);

HYPTOR_API void hyptor_config_free(hyptor_config* c);

HYPTOR_API int hyptor_config_genus(const hyptor_config* c);

/* "GENERIC", "DEGENERATE_AT" or "FULLY_DEGENERATE" (static storage). */
HYPTOR_API const char* hyptor_config_classification(const hyptor_config* c);

/* Writes the 2g normalized values; out must hold 2*genus doubles. */
HYPTOR_API hyptor_status hyptor_config_values(const hyptor_config* c,
                                              double* out);

/* ---- periods ---------------------------------------------------------- */

HYPTOR_API hyptor_status hyptor_periods_compute(const hyptor_config* c,
                                                double tol,
                                                hyptor_periods** out);

HYPTOR_API void hyptor_periods_free(hyptor_periods* p);

HYPTOR_API int hyptor_periods_genus(const hyptor_periods* p);

/* Row-major g*g matrix; out must hold genus*genus doubles. */
HYPTOR_API hyptor_status hyptor_periods_matrix(const hyptor_periods* p,
                                               double* out);

/* out must hold genus doubles. */
HYPTOR_API hyptor_status hyptor_periods_v(const hyptor_periods* p, double* out);
HYPTOR_API hyptor_status hyptor_periods_u(const hyptor_periods* p, double* out);

HYPTOR_API double hyptor_periods_cond(const hyptor_periods* p);
HYPTOR_API double hyptor_periods_max_imag(const hyptor_periods* p);

HYPTOR_API hyptor_status hyptor_periods_to_json(const hyptor_periods* p,
                                                char** out);

/* ---- degenerate closed forms ------------------------------------------ */

/* Closed-form M, v, u, du/db on the degenerate locus plus the maximum
 * deviation of the general engine at the embedded tuple. */
HYPTOR_API hyptor_status hyptor_degenerate_json(const double* b, int g,
                                                double tol, char** out);

/* ---- Jacobian and torsion search --------------------------------------- */

HYPTOR_API hyptor_status hyptor_jacobian_json(const hyptor_config* c, double h,
                                              double tol, char** out);

/* rows x cols row-major; rank with singular values above rel_threshold times
 * the largest. */
HYPTOR_API hyptor_status hyptor_matrix_rank(const double* J, int rows,
                                            int cols, double rel_threshold,
                                            int* out);

/* Componentwise best fractions with denominator <= q_max; p_out/q_out must
 * hold g entries each. */
HYPTOR_API hyptor_status hyptor_nearest_rationals(const double* u, int g,
                                                  long long q_max,
                                                  long long* p_out,
                                                  long long* q_out);

HYPTOR_API hyptor_status hyptor_find_torsion(const hyptor_config* c,
                                             long long q_max, double tol,
                                             int max_iter,
                                             hyptor_certificate** out);

HYPTOR_API void hyptor_certificate_free(hyptor_certificate* cert);

HYPTOR_API double hyptor_certificate_residual(const hyptor_certificate* cert);
HYPTOR_API double hyptor_certificate_distance(const hyptor_certificate* cert);
HYPTOR_API int hyptor_certificate_iterations(const hyptor_certificate* cert);

/* out must hold 2*genus doubles. */
HYPTOR_API hyptor_status
hyptor_certificate_a_star(const hyptor_certificate* cert, double* out);

HYPTOR_API hyptor_status
hyptor_certificate_to_json(const hyptor_certificate* cert, char** out);

/* ---- density scan ------------------------------------------------------ */

HYPTOR_API hyptor_status hyptor_density_scan_json(int g, int grid_per_axis,
                                                  long long q_max, double tol,
                                                  int max_iter, char** out);

/* ---- oracles and verification ------------------------------------------ */

/* 1-based row i (monomial power i-1) and cut index j. */
HYPTOR_API hyptor_status hyptor_real_interval_period(const hyptor_config* c,
                                                     int i, int j, double tol,
                                                     double* out);

HYPTOR_API hyptor_status hyptor_agm_period(const hyptor_config* c,
                                           double* out);

HYPTOR_API hyptor_status hyptor_verify_json(const hyptor_config* c, double tol,
                                            unsigned long long seed,
                                            char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HYPTOR_H */
