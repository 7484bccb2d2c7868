#ifndef KRONECKER_FROBENIUS_H
#define KRONECKER_FROBENIUS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stdint.h>

// Status codes. Non-zero means the output arguments were not written.
typedef enum KfStatus {
  KF_STATUS_OK = 0,
  KF_STATUS_NULL_POINTER = 1,
  KF_STATUS_INVALID_ARGUMENT = 2,
  KF_STATUS_DOMAIN = 3,
  // The verification ran but some check failed. The report is still written.
  KF_STATUS_VERIFICATION_FAILED = 4,
  KF_STATUS_INTERNAL = 5,
} KfStatus;

// Coordinate charts: x (periods), y (cover), s (quotient), t (flat).
typedef enum KfChart {
  KF_CHART_X = 0,
  KF_CHART_Y = 1,
  KF_CHART_S = 2,
  KF_CHART_T = 3,
} KfChart;

typedef enum KfSuite {
  KF_SUITE_ALL = 0,
  KF_SUITE_AXIOMS = 1,
  KF_SUITE_DUBROVIN = 2,
  KF_SUITE_MONODROMY = 3,
  KF_SUITE_CONNECTION = 4,
} KfSuite;

// Opaque frame handle.
typedef struct KfFrame KfFrame;

typedef struct KfComplex {
  double re;
  double im;
} KfComplex;

// Scalar constants of a frame.
typedef struct KfFrameConstants {
  uint32_t ell;
  double nu;
  double rho;
  double log_rho;
  struct KfComplex h;
  // Semi-axes of the ellipse bounding the quotient chart.
  double ellipse_a;
  double ellipse_b;
} KfFrameConstants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or an empty string.
// The pointer stays valid until the next call into this library on the
// same thread.
const char *kf_last_error(void);

// Creates a frame for `ell >= 3`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum KfStatus kf_frame_new(int64_t ell, struct KfFrame **out);

// Releases a frame. Null is ignored.
//
// # Safety
// `frame` must come from [`kf_frame_new`] and not have been freed.
void kf_frame_free(struct KfFrame *frame);

// # Safety
// `frame` must be a live handle and `out` valid for one write.
enum KfStatus kf_frame_constants(const struct KfFrame *frame, struct KfFrameConstants *out);

// Maps a cover point `(y1, y2)` to the quotient chart `(s1, s2)`.
//
// # Safety
// `frame` must be a live handle and `out` valid for two writes.
enum KfStatus kf_invariant_chart(const struct KfFrame *frame,
                                 struct KfComplex y1,
                                 struct KfComplex y2,
                                 struct KfComplex *out);

// Maps `(s1, s2)` in the ellipse to its fundamental-domain lift `(y1, y2)`.
//
// # Safety
// `frame` must be a live handle and `out` valid for two writes.
enum KfStatus kf_inverse_chart(const struct KfFrame *frame,
                               struct KfComplex s1,
                               struct KfComplex s2,
                               struct KfComplex *out);

// Flat coordinates `(t1, t2)` of the point `(s1, s2)`.
//
// # Safety
// `frame` must be a live handle and `out` valid for two writes.
enum KfStatus kf_flat_coords(const struct KfFrame *frame,
                             struct KfComplex s1,
                             struct KfComplex s2,
                             struct KfComplex *out);

// Periods `(x1, x2)` at `(s1, s2)`. Fails with `DOMAIN` on the branch cut.
//
// # Safety
// `frame` must be a live handle and `out` valid for two writes.
enum KfStatus kf_periods(const struct KfFrame *frame,
                         struct KfComplex s1,
                         struct KfComplex s2,
                         struct KfComplex *out);

// Intersection form `g(dcⁱ, dcʲ)` in the given chart at `(c1, c2)`.
//
// # Safety
// `frame` must be a live handle and `out` valid for four writes.
enum KfStatus kf_intersection_form(const struct KfFrame *frame,
                                   enum KfChart chart,
                                   struct KfComplex c1,
                                   struct KfComplex c2,
                                   struct KfComplex *out);

// Potential value at flat coordinates `(t1, t2)`.
//
// # Safety
// `frame` must be a live handle and `out` valid for one write.
enum KfStatus kf_potential(const struct KfFrame *frame,
                           struct KfComplex t1,
                           struct KfComplex t2,
                           struct KfComplex *out);

// Discriminant `det(E∘)` at a point of the s or t chart.
//
// # Safety
// `frame` must be a live handle and `out` valid for one write.
enum KfStatus kf_discriminant(const struct KfFrame *frame,
                              enum KfChart chart,
                              struct KfComplex c1,
                              struct KfComplex c2,
                              struct KfComplex *out);

// Canonical coordinates `(u+, u-)` at `(s1, s2)`.
//
// # Safety
// `frame` must be a live handle and `out` valid for two writes.
enum KfStatus kf_canonical_coords(const struct KfFrame *frame,
                                  struct KfComplex s1,
                                  struct KfComplex s2,
                                  struct KfComplex *out);

// Monodromy of the periods around `s1 = 2i` (`m1`) and `s1 = -2i` (`m2`).
//
// # Safety
// `frame` must be a live handle; `m1` and `m2` valid for four writes each.
enum KfStatus kf_monodromy(const struct KfFrame *frame,
                           double radius,
                           uint32_t steps,
                           struct KfComplex *m1,
                           struct KfComplex *m2);

// Runs a verification suite and writes the JSON report to `*out`.
// Returns `VERIFICATION_FAILED` (with the report written) when a check fails.
//
// # Safety
// `frame` must be a live handle and `out` valid for one write.
enum KfStatus kf_verify_json(const struct KfFrame *frame,
                             enum KfSuite suite,
                             uint64_t samples,
                             uint64_t seed,
                             char **out);

// Positive roots up to `max_height` as a JSON document.
//
// # Safety
// `out` must be valid for one write.
enum KfStatus kf_roots_json(int64_t ell, uint64_t max_height, bool imaginary, char **out);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void kf_string_free(char *s);

// Library version as a static string.
const char *kf_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KRONECKER_FROBENIUS_H */
