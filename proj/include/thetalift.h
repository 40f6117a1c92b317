#ifndef THETALIFT_H
#define THETALIFT_H

/* C interface to the thetalift library. All handles are opaque. Functions
   returning tl_status record a message retrievable with tl_last_error(ctx). */

#include <stddef.h>
#include <stdint.h>

#if defined(THETALIFT_BUILDING_LIBRARY)
#define TL_API __attribute__((visibility("default")))
#else
#define TL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  TL_OK = 0,
  TL_INVALID_ARGUMENT = 1,
  TL_PRECISION = 2,
  TL_SERIES_RANGE = 3,
  TL_INTERNAL = 4
} tl_status;

typedef enum { TL_FAMILY_HOLO = 0, TL_FAMILY_SHADOW = 1, TL_FAMILY_R3 = 2 } tl_family;

typedef enum { TL_CONVENTION_THEOREM2 = 0, TL_CONVENTION_INTRO = 1 } tl_convention;

typedef enum { TL_ZETA_SERIES = 0, TL_ZETA_CLOSED = 1, TL_ZETA_S1 = 2 } tl_zeta_method;

typedef struct tl_context tl_context;
typedef struct tl_table tl_table;
typedef struct tl_unit tl_unit;
typedef struct tl_report tl_report;

typedef struct {
  double re;
  double im;
} tl_complex;

typedef struct {
  tl_complex value;
  double error_bound;
  double phase_residual;
  tl_zeta_method method;
  int trivial_character;
} tl_zeta_result;

typedef struct {
  double value;
  double error_bound;
} tl_real_result;

typedef struct {
  tl_complex theta;        /* Theta(tau) */
  double theta_truncation;
  tl_complex theta_half;   /* Theta(tau / 2) */
  tl_complex theta_cubed;  /* Theta(tau)^3 */
  tl_complex f;
  tl_complex f_holomorphic;
  tl_complex f_nonholomorphic;
  double f_last_term;
} tl_eval_result;

TL_API const char* tl_version(void);

TL_API tl_context* tl_context_new(void);
TL_API void tl_context_free(tl_context* ctx);
TL_API const char* tl_last_error(const tl_context* ctx);
TL_API tl_status tl_context_set_threads(tl_context* ctx, unsigned threads);
TL_API tl_status tl_context_set_tol_scale(tl_context* ctx, double scale);
TL_API tl_status tl_context_set_convention(tl_context* ctx, tl_convention conv);

/* Coefficient tables. Valid indices are first..n_max inclusive. */
TL_API tl_status tl_coeff_table(tl_context* ctx, tl_family family, int64_t n_max, tl_table** out);
TL_API tl_status tl_hecke_tp2(tl_context* ctx, const tl_table* table, int64_t p, int half_weight_k,
                              tl_table** out);
TL_API void tl_table_free(tl_table* table);
TL_API int64_t tl_table_first(const tl_table* table);
TL_API int64_t tl_table_n_max(const tl_table* table);
TL_API tl_status tl_table_get(tl_context* ctx, const tl_table* table, int64_t n, tl_complex* out);

TL_API tl_status tl_r3(tl_context* ctx, int64_t n, int64_t* out);
/* H(-N) as a reduced fraction. */
TL_API tl_status tl_hurwitz(tl_context* ctx, int64_t N, int64_t* num, int64_t* den);
/* h(D) for a fundamental discriminant D of either sign. */
TL_API tl_status tl_class_number(tl_context* ctx, int64_t D, int64_t* out);

/* Fundamental unit (x + y sqrt D) / 2. Strings are owned by the handle. */
TL_API tl_status tl_pell_unit(tl_context* ctx, int64_t D, tl_unit** out);
TL_API void tl_unit_free(tl_unit* unit);
TL_API const char* tl_unit_x(const tl_unit* unit);
TL_API const char* tl_unit_y(const tl_unit* unit);
TL_API double tl_unit_log_eps(const tl_unit* unit);
TL_API int tl_unit_norm(const tl_unit* unit);

/* L(s, chi_D). cutoff > 0 selects the direct partial sum. s == 1 uses the
   finite-sum formula. */
TL_API tl_status tl_lvalue(tl_context* ctx, int64_t D, double s, int64_t cutoff, tl_real_result* out);

TL_API tl_status tl_zeta_series(tl_context* ctx, int64_t n, double s, int64_t cutoff, tl_zeta_result* out);
/* Closed form for s > 1; s == 1 uses the class-number recipe. */
TL_API tl_status tl_zeta_closed(tl_context* ctx, int64_t n, double s, tl_zeta_result* out);

TL_API tl_status tl_eval(tl_context* ctx, double x, double y, int64_t n_max, tl_eval_result* out);

/* suite: all, classnumbers, kloosterman, shadow, hecke, multiplier. */
TL_API tl_status tl_verify(tl_context* ctx, const char* suite, int64_t n_max, tl_report** out);
TL_API void tl_report_free(tl_report* report);
TL_API int64_t tl_report_cases_run(const tl_report* report);
TL_API int64_t tl_report_cases_failed(const tl_report* report);
TL_API double tl_report_max_abs_error(const tl_report* report);
/* JSON text at the given verbosity, owned by the report. */
TL_API const char* tl_report_json(tl_report* report, int verbosity);

#ifdef __cplusplus
}
#endif

#endif
