#ifndef HODGEPOLY_H
#define HODGEPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HODGEPOLY_BUILDING)
#    define HP_API __declspec(dllexport)
#  else
#    define HP_API __declspec(dllimport)
#  endif
#else
#  define HP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hp_status {
    HP_OK = 0,
    HP_INVALID_ARGUMENT,
    HP_PARSE,
    HP_GENUS_OUT_OF_RANGE,
    HP_ON_WALL,
    HP_EMPTY_FAMILY,
    HP_EVEN_DEGREE,
    HP_RANK_MISMATCH,
    HP_WALL_AT_SIGMA_M,
    HP_DEGENERATE_POLES,
    HP_NOT_DIVISIBLE,
    HP_ORDER_EXCEEDED,
    HP_NOT_MONOMIAL,
    HP_ZERO_AT_POLE,
    HP_INTERNAL
} hp_status;

typedef struct hp_poly hp_poly;
typedef struct hp_result hp_result;
typedef struct hp_chambers hp_chambers;
typedef struct hp_report hp_report;

/* Symbolic name such as "OnWall". */
HP_API const char* hp_status_name(hp_status status);
/* Nonzero for statuses that indicate a library fault rather than bad input. */
HP_API int hp_status_is_internal(hp_status status);
/* Message of the last failure on the calling thread; "" if none. */
HP_API const char* hp_last_error(void);

/* Triples of rank (n1,n2) in {(2,1),(1,2)}. sigma is "p", "p/q", optionally suffixed by + or -. */
HP_API hp_status hp_compute_triple(long g, long n1, long n2, long d1, long d2, const char* sigma,
                                   hp_result** out);
/* Hodge polynomial summed over flip differences instead of the closed form. */
HP_API hp_status hp_compute_triple_by_flips(long g, long n1, long n2, long d1, long d2, const char* sigma,
                                            hp_result** out);
/* Rank 2 pairs of degree d; fixed_det selects fixed determinant. */
HP_API hp_status hp_compute_pair(long g, long d, const char* tau, int fixed_det, hp_result** out);
/* Rank 2 bundles of odd degree d. */
HP_API hp_status hp_compute_bundle(long g, long d, int fixed_det, hp_result** out);
/* Thaddeus' one-variable formula for fixed-determinant pairs. Result has no dimension. */
HP_API hp_status hp_compute_pair_poincare(long g, long d, const char* tau, hp_poly** out);
/* Flip difference e(S-) - e(S+) at the wall with index d_m, rank (2,1). */
HP_API hp_status hp_flip_difference(long g, long d1, long d2, long d_m, hp_poly** out);

/* Chamber index d0 of a stability value without evaluating the polynomial. */
HP_API hp_status hp_triple_chamber_index(long g, long n1, long n2, long d1, long d2, const char* sigma, long* d0);
HP_API hp_status hp_pair_chamber_index(long d, const char* tau, long* d0);

HP_API int hp_result_is_empty(const hp_result* r);
/* Complex dimension; -1 for an empty moduli space. */
HP_API long hp_result_dim(const hp_result* r);
/* Chamber index d0; 0 for bundles. */
HP_API long hp_result_chamber(const hp_result* r);
/* Canonical form of the stability value that was used; "" for bundles. */
HP_API const char* hp_result_stability(const hp_result* r);
/* Borrowed; lives as long as r. */
HP_API const hp_poly* hp_result_poly(const hp_result* r);
HP_API void hp_result_free(hp_result* r);

/* Terms in ascending canonical order. Univariate polynomials in t report the t exponent as u and v = 0. */
HP_API size_t hp_poly_term_count(const hp_poly* p);
/* coeff receives a borrowed decimal string valid until p is freed. */
HP_API hp_status hp_poly_term(const hp_poly* p, size_t i, long* u, long* v, const char** coeff);
HP_API int hp_poly_is_univariate(const hp_poly* p);
HP_API int hp_poly_is_zero(const hp_poly* p);
/* Borrowed strings valid until p is freed. */
HP_API const char* hp_poly_text(const hp_poly* p);
HP_API const char* hp_poly_latex(const hp_poly* p);
/* New univariate polynomial p(t,t). */
HP_API hp_status hp_poly_diagonal(const hp_poly* p, hp_poly** out);
/* Compares two polynomials term by term. */
HP_API int hp_poly_equal(const hp_poly* a, const hp_poly* b);
HP_API void hp_poly_free(hp_poly* p);

/* Critical values and chamber representatives. */
HP_API hp_status hp_triple_chambers(long g, long n1, long n2, long d1, long d2, hp_chambers** out);
HP_API hp_status hp_pair_chambers(long d, hp_chambers** out);
HP_API const char* hp_chambers_lower(const hp_chambers* c);
HP_API const char* hp_chambers_upper(const hp_chambers* c);
HP_API size_t hp_chambers_wall_count(const hp_chambers* c);
/* Wall i as a rational string with its d_M (pairs: the integer wall itself). */
HP_API const char* hp_chambers_wall(const hp_chambers* c, size_t i, long* d_m);
HP_API size_t hp_chambers_rep_count(const hp_chambers* c);
HP_API const char* hp_chambers_rep(const hp_chambers* c, size_t i);
HP_API void hp_chambers_free(hp_chambers* c);

typedef struct hp_verify_config {
    long g_min, g_max;
    long d1_min, d1_max;
    long d2_min, d2_max;
    long pair_d_min, pair_d_max;
    const long* bundle_degrees; /* NULL keeps the defaults */
    size_t bundle_degree_count;
    const char* checks;         /* comma separated; NULL or "" runs all */
    uint64_t seed;
    unsigned random_cases;
    const char* inject_fault;   /* NULL for none */
} hp_verify_config;

HP_API void hp_verify_config_default(hp_verify_config* config);
HP_API hp_status hp_verify_run(const hp_verify_config* config, hp_report** out);
HP_API size_t hp_report_count(const hp_report* r);
HP_API size_t hp_report_passed(const hp_report* r);
HP_API size_t hp_report_failed(const hp_report* r);
/* Borrowed strings; passed is set to 1 or 0. */
HP_API hp_status hp_report_entry(const hp_report* r, size_t i, const char** check, const char** params,
                                 int* passed, const char** detail);
HP_API void hp_report_free(hp_report* r);

/* Space separated list of check names. */
HP_API const char* hp_verify_check_names(void);

#ifdef __cplusplus
}
#endif

#endif
