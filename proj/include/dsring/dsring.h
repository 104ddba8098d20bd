/* C interface to the dsring engine: products of Schubert classes by DS pipe
 * dreams, the LR oracle, and juggling-pattern utilities.
 *
 * Every function returning dsr_status leaves a message retrievable with
 * dsr_last_error() on failure. Strings returned through char** are owned by
 * the caller and released with dsr_string_free(). */
#ifndef DSRING_DSRING_H
#define DSRING_DSRING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DSR_API __declspec(dllexport)
#else
#define DSR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  DSR_OK = 0,
  DSR_E_ARGUMENT = 1,
  DSR_E_INVARIANT = 2,
  DSR_E_OVERFLOW = 3,
  DSR_E_NOMEM = 4,
  DSR_E_RANGE = 5,
  DSR_E_INTERNAL = 6
} dsr_status;

typedef enum { DSR_RING_H = 0, DSR_RING_HS = 1, DSR_RING_KS = 2, DSR_RING_K = 3 } dsr_ring;
typedef enum { DSR_OUT_TEXT = 0, DSR_OUT_JSON = 1, DSR_OUT_LATEX = 2 } dsr_format;
typedef enum { DSR_HALF_LOWER = 0, DSR_HALF_UPPER = 1 } dsr_half;
typedef enum { DSR_TILES_H = 0, DSR_TILES_K = 1 } dsr_tile_mode;

typedef struct {
  /* 1: a crossing's horizontal letter may not occur in its vertical word. */
  int strict_crossings;
  /* 1: fusors in the equivariant zone carry q; 0: fusors with a nonempty
   * absorbed word carry q. */
  int fusor_weight_in_zone;
} dsr_options;

typedef struct {
  const int *parts; /* may be shorter than rows; missing parts are zero */
  size_t nparts;
  int rows;
  int cols;
} dsr_partition;

typedef struct {
  int E;
  int F;
  int fusing;
} dsr_dream_info;

typedef struct dsr_expansion dsr_expansion;
typedef struct dsr_dreams dsr_dreams;
typedef struct dsr_pattern dsr_pattern;

DSR_API const char *dsr_version(void);
DSR_API const char *dsr_last_error(void);
DSR_API const char *dsr_status_string(dsr_status status);
DSR_API void dsr_string_free(char *s);
DSR_API void dsr_options_default(dsr_options *opts);

/* Check that a partition is weakly decreasing, nonnegative and fits its box. */
DSR_API dsr_status dsr_partition_check(const dsr_partition *p);

/* Parse "2,1" (empty for the empty partition) into at most cap parts. */
DSR_API dsr_status dsr_parse_parts(const char *text, int *parts, size_t cap, size_t *count);

DSR_API dsr_status dsr_expand(dsr_ring ring, const dsr_partition *lambda, const dsr_partition *mu,
                              const dsr_options *opts, dsr_expansion **out);
DSR_API size_t dsr_expansion_term_count(const dsr_expansion *e);
DSR_API size_t dsr_expansion_dream_count(const dsr_expansion *e);
/* Term i in bit-string order: nu as a bit string and its coefficient as text. */
DSR_API dsr_status dsr_expansion_term(const dsr_expansion *e, size_t i, char **nu_bits, char **coeff);
DSR_API dsr_status dsr_expansion_format(const dsr_expansion *e, dsr_format fmt, char **out);
DSR_API void dsr_expansion_free(dsr_expansion *e);

DSR_API dsr_status dsr_dreams_enumerate(dsr_ring ring, const dsr_partition *lambda, const dsr_partition *mu,
                                        const dsr_options *opts, dsr_dreams **out);
DSR_API size_t dsr_dreams_count(const dsr_dreams *d);
DSR_API dsr_status dsr_dream_info_get(const dsr_dreams *d, size_t i, dsr_dream_info *info, char **nu_bits);
DSR_API dsr_status dsr_dream_weight(const dsr_dreams *d, size_t i, char **coeff);
/* DSR_OUT_TEXT gives the ASCII grid, DSR_OUT_JSON the cell list. */
DSR_API dsr_status dsr_dream_format(const dsr_dreams *d, size_t i, dsr_format fmt, char **out);
DSR_API void dsr_dreams_free(dsr_dreams *d);
/* Parse a rendered grid, check it, and render it again. */
DSR_API dsr_status dsr_dream_rerender(const char *rendered, const dsr_options *opts, char **out);
DSR_API dsr_status dsr_region_render(const dsr_partition *lambda, const dsr_partition *mu, char **out);

DSR_API dsr_status dsr_lr_coefficient(const int *lambda, size_t nl, const int *mu, size_t nm, const int *nu,
                                      size_t nn, int64_t *out);
DSR_API dsr_status dsr_lr_expand(const int *lambda, size_t nl, const int *mu, size_t nm, dsr_format fmt,
                                 char **out);

DSR_API dsr_status dsr_tiles_report(dsr_half half, dsr_tile_mode mode, const dsr_options *opts, dsr_format fmt,
                                    char **out);
DSR_API dsr_status dsr_tiles_count(dsr_half half, dsr_tile_mode mode, const dsr_options *opts, int *count);

DSR_API dsr_status dsr_pattern_from_window(const long *window, size_t n, dsr_pattern **out);
DSR_API dsr_status dsr_pattern_schubert(const char *bits, dsr_pattern **out);
DSR_API dsr_status dsr_pattern_sigma_prime(const dsr_partition *lambda, const dsr_partition *mu, dsr_pattern **out);
DSR_API dsr_status dsr_pattern_dual(const dsr_pattern *p, dsr_pattern **out);
DSR_API dsr_status dsr_pattern_rotate(const dsr_pattern *p, long m, dsr_pattern **out);
DSR_API dsr_status dsr_pattern_is_sorted(const dsr_pattern *p, int level, int *out);
DSR_API int dsr_pattern_n(const dsr_pattern *p);
DSR_API int dsr_pattern_ball_number(const dsr_pattern *p);
DSR_API size_t dsr_pattern_window(const dsr_pattern *p, long *out, size_t cap);
DSR_API dsr_status dsr_pattern_format(const dsr_pattern *p, dsr_format fmt, char **out);
DSR_API void dsr_pattern_free(dsr_pattern *p);

/* Run the built-in corpus. failures receives the number of failed checks. */
DSR_API dsr_status dsr_selftest(char **report, int *failures);

#ifdef __cplusplus
}
#endif

#endif
