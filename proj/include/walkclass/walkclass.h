/* C interface to the walkclass library. */
#ifndef WALKCLASS_WALKCLASS_H
#define WALKCLASS_WALKCLASS_H

#include <stddef.h>

#if defined(WALKCLASS_BUILDING_LIBRARY)
#define WC_API __attribute__((visibility("default")))
#else
#define WC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wc_status {
  WC_OK = 0,
  WC_ERR_MALFORMED_RATIONAL = 1,
  WC_ERR_MALFORMED_MODEL = 2,
  WC_ERR_NEGATIVE_WEIGHT = 3,
  WC_ERR_ALL_ZERO_WEIGHTS = 4,
  WC_ERR_INVALID_ARGUMENT = 5,
  WC_ERR_PRECONDITION = 6,
  WC_ERR_NUMERICAL = 7, /* degenerate fiber, root separation, convergence, ... */
  WC_ERR_IDENTITY_VIOLATED = 8,
  WC_ERR_IO = 9,
  WC_ERR_INTERNAL = 10
} wc_status;

typedef enum wc_verdict {
  WC_VERDICT_DEGENERATE_MODEL = 0,
  WC_VERDICT_GENUS_ZERO_OUT_OF_SCOPE = 1,
  WC_VERDICT_ALGEBRAIC = 2,
  WC_VERDICT_HOLONOMIC_NOT_ALGEBRAIC = 3,
  WC_VERDICT_DIFFERENTIALLY_TRANSCENDENTAL = 4,
  WC_VERDICT_INCONCLUSIVE = 5
} wc_verdict;

typedef struct wc_model wc_model;
typedef struct wc_report wc_report;

typedef struct wc_options {
  int cap;           /* word-length / denominator cap, default 24 */
  double tol;        /* omega3/omega2 rationality tolerance, default 1e-9 */
  double orbit_tol;  /* relative orbit-sum zero tolerance, default 1e-8 */
  int probes;        /* probe points per set, default 5 */
  int samples;       /* curve samples, default 32 */
  unsigned long long seed;
} wc_options;

/* Message of the last failure on the calling thread ("" if none). */
WC_API const char* wc_last_error(void);
WC_API const char* wc_status_string(wc_status s);
WC_API void wc_options_default(wc_options* opts);

/* Strings returned through char** are owned by the caller; release with wc_string_free. */
WC_API void wc_string_free(char* s);

WC_API wc_status wc_model_parse(const char* json_text, wc_model** out);
WC_API wc_status wc_model_load(const char* path, wc_model** out);
WC_API void wc_model_free(wc_model* m);
WC_API wc_status wc_model_canonical_json(const wc_model* m, char** out);

/* t is a rational "p/q" in (0,1). opts may be NULL. */
WC_API wc_status wc_classify(const wc_model* m, const char* t, const wc_options* opts, wc_report** out);
WC_API void wc_report_free(wc_report* r);
WC_API wc_verdict wc_report_verdict(const wc_report* r);
WC_API int wc_report_criterion(const wc_report* r); /* 0 unless differentially transcendental */
WC_API wc_status wc_report_json(const wc_report* r, char** out);
WC_API wc_status wc_report_text(const wc_report* r, char** out);

WC_API wc_status wc_uniformize_json(const wc_model* m, const char* t, char** out);
WC_API wc_status wc_series_json(const wc_model* m, const char* t, int order, char** out);
/* t may be NULL to skip the on-curve part. */
WC_API wc_status wc_orbit_sum_json(const wc_model* m, const char* t, const wc_options* opts, char** out);
WC_API wc_status wc_critical_t_json(const wc_model* m, char** out);
/* Writes four CSV files into dir; n is the number of samples per path. */
WC_API wc_status wc_emit_path_csv(const wc_model* m, const char* t, const char* dir, int n);

#ifdef __cplusplus
}
#endif

#endif /* WALKCLASS_WALKCLASS_H */
