#ifndef DEVSURF_H
#define DEVSURF_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DsStatus {
  DS_STATUS_OK = 0,
  DS_STATUS_NULL_POINTER = 1,
  DS_STATUS_INVALID_ARGUMENT = 2,
  DS_STATUS_GEOMETRY = 3,
  DS_STATUS_PARSE = 4,
  DS_STATUS_PANIC = 5,
} DsStatus;

typedef enum DsSurfaceClass {
  DS_SURFACE_CLASS_PLANAR = 0,
  DS_SURFACE_CLASS_CYLINDER = 1,
  DS_SURFACE_CLASS_CONE = 2,
  DS_SURFACE_CLASS_TANGENT = 3,
} DsSurfaceClass;

/**
 * Opaque Bezier curve.
 */
typedef struct DsCurve DsCurve;

/**
 * Opaque developable patch (two boundary curves plus optional certificate).
 */
typedef struct DsPatch DsPatch;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or null. The pointer
 * stays valid until the next failing call on this thread.
 */
const char *ds_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, freed once.
 */
void ds_string_free(char *s);

/**
 * Creates a curve of degree `n_points - 1` from `3 * n_points` packed
 * coordinates.
 *
 * # Safety
 * `xyz` must point to `3 * n_points` doubles; `out` must be writable.
 */
enum DsStatus ds_curve_new(const double *xyz, size_t n_points, struct DsCurve **out);

/**
 * # Safety
 * `c` must be null or a live handle from [`ds_curve_new`], freed once.
 */
void ds_curve_free(struct DsCurve *c);

/**
 * Degree of the curve, or `usize::MAX` for a null handle.
 *
 * # Safety
 * `c` must be null or a live handle.
 */
size_t ds_curve_degree(const struct DsCurve *c);

/**
 * Writes the point at parameter `u` to `out[0..3]`.
 *
 * # Safety
 * `c` must be a live handle; `out` must hold three doubles.
 */
enum DsStatus ds_curve_eval(const struct DsCurve *c, double u, double *out);

/**
 * Constant-certificate developable patch on boundary `c` with free point
 * `d0` (taken as the last point of the second boundary when `m == 0`).
 *
 * # Safety
 * `c` must be a live handle, `d0` three doubles, `out` writable.
 */
enum DsStatus ds_aumann(const struct DsCurve *c,
                        const double *d0,
                        double lambda,
                        double m,
                        struct DsPatch **out);

/**
 * Tangent-surface patch of the degree `n + 1` edge of regression `r`
 * between the rulings at `b1` and `b2`.
 *
 * # Safety
 * `r` must be a live handle and `out` writable.
 */
enum DsStatus ds_from_edge(const struct DsCurve *r, double b1, double b2, struct DsPatch **out);

/**
 * Parses a patch JSON document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` writable.
 */
enum DsStatus ds_patch_from_json(const char *json, struct DsPatch **out);

/**
 * Serializes a patch; release the string with [`ds_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum DsStatus ds_patch_to_json(const struct DsPatch *p, char **out);

/**
 * # Safety
 * `p` must be null or a live patch handle, freed once.
 */
void ds_patch_free(struct DsPatch *p);

/**
 * Degree of the boundary curves, or `usize::MAX` for a null handle.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t ds_patch_degree(const struct DsPatch *p);

/**
 * Writes `(1 - v) c(u) + v d(u)` to `out[0..3]`.
 *
 * # Safety
 * `p` must be a live handle; `out` must hold three doubles.
 */
enum DsStatus ds_patch_eval(const struct DsPatch *p, double u, double v, double *out);

/**
 * Normalized developability residual over `nu` samples and its verdict
 * against the default tolerance.
 *
 * # Safety
 * `p` must be a live handle; `residual` and `pass` writable.
 */
enum DsStatus ds_patch_developability(const struct DsPatch *p,
                                      size_t nu,
                                      double *residual,
                                      bool *pass);

/**
 * Ruling coordinate `v` of the edge of regression at `u`; needs a certificate.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum DsStatus ds_patch_edge_parameter(const struct DsPatch *p, double u, double *out);

/**
 * Degree elevation by `m`.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum DsStatus ds_patch_elevate(const struct DsPatch *p, size_t m, struct DsPatch **out);

/**
 * Restriction of the curve parameter to `[a, b]`.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum DsStatus ds_patch_restrict_u(const struct DsPatch *p,
                                  double a,
                                  double b,
                                  struct DsPatch **out);

/**
 * Restriction of the ruling parameter to `[a, b]`.
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum DsStatus ds_patch_restrict_v(const struct DsPatch *p,
                                  double a,
                                  double b,
                                  struct DsPatch **out);

/**
 * Classifies the patch; `vertex` (three doubles, may be null) receives the
 * cone vertex when the class is a cone.
 *
 * # Safety
 * `p` must be a live handle; `out` writable; `vertex` null or three doubles.
 */
enum DsStatus ds_patch_classify(const struct DsPatch *p,
                                double tol,
                                enum DsSurfaceClass *out,
                                double *vertex);

/**
 * Wavefront OBJ tessellation on an `nu` x `nv` grid; release the string with
 * [`ds_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` writable.
 */
enum DsStatus ds_patch_mesh_obj(const struct DsPatch *p, size_t nu, size_t nv, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEVSURF_H */
