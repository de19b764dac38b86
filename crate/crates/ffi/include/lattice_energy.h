/*
 * Copyright 2026 The lattice-energy authors
 *
 * Licensed under the Apache license, version 2.0 (the "license");
 * you may not use this file except in compliance with the license.
 * You may obtain a copy of the license at
 *
 *     http://www.apache.org/licenses/license-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the license is distributed on an "as is" basis,
 * without warranties or conditions of any kind, either express or implied.
 * See the license for the specific language governing permissions and
 * limitations under the license.
 */

#ifndef LATTICE_ENERGY_H
#define LATTICE_ENERGY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LeClassification {
  LE_CLASSIFICATION_TRIANGULAR = 0,
  LE_CLASSIFICATION_SQUARE = 1,
  LE_CLASSIFICATION_OTHER = 2,
} LeClassification;

typedef enum LePotential {
  LE_POTENTIAL_LENNARD_JONES = 0,
  LE_POTENTIAL_THOMAS_FERMI = 1,
} LePotential;

/**
 * Status code returned by every fallible function.
 */
typedef enum LeStatus {
  LE_STATUS_OK = 0,
  LE_STATUS_NULL_POINTER = 1,
  LE_STATUS_INVALID_LATTICE = 2,
  LE_STATUS_INVALID_SCALE = 3,
  LE_STATUS_DOMAIN = 4,
  LE_STATUS_CONVERGENCE = 5,
  LE_STATUS_CHART_DOMAIN = 6,
  LE_STATUS_SINGULARITY = 7,
  LE_STATUS_INVARIANT_VIOLATION = 8,
  LE_STATUS_BRACKET = 9,
  LE_STATUS_CONFIGURATION = 10,
  LE_STATUS_PANIC = 11,
} LeStatus;

typedef enum LeZetaMethod {
  LE_ZETA_METHOD_ACCELERATED = 0,
  LE_ZETA_METHOD_DIRECT = 1,
} LeZetaMethod;

/**
 * Opaque lattice handle.
 */
typedef struct LeLattice LeLattice;

/**
 * Tolerances of the lattice sums; see [`le_control_default`].
 */
typedef struct LeSumControl {
  double rel_tol;
  size_t max_shell;
  double quad_rel_tol;
} LeSumControl;

/**
 * Reduced basis: `0 < len_u <= len_v`, angle in `[pi/3, pi/2]` radians.
 */
typedef struct LeLatticeInfo {
  double len_u;
  double len_v;
  double angle;
  double area;
} LeLatticeInfo;

typedef struct LeMinimization {
  struct LeLatticeInfo argmin;
  double chart_u;
  double chart_v;
  double energy;
  enum LeClassification classification;
} LeMinimization;

typedef struct LeTriangularOptimum {
  double area;
  double length;
  double energy;
} LeTriangularOptimum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Default tolerances.
 */
struct LeSumControl le_control_default(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *le_version(void);

/**
 * Copy the last error message of this thread into `buf`, NUL-terminated and
 * truncated to `len` bytes. Returns the full message length without the NUL,
 * or 0 when no error has been recorded.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t le_last_error_message(char *buf, size_t len);

/**
 * Reduced lattice from two basis lengths and the angle between them (radians).
 *
 * # Safety
 * `out` must be null or writable.
 */
enum LeStatus le_lattice_new(double len_u, double len_v, double angle, struct LeLattice **out);

/**
 * # Safety
 * `out` must be null or writable.
 */
enum LeStatus le_lattice_triangular(double area, struct LeLattice **out);

/**
 * # Safety
 * `out` must be null or writable.
 */
enum LeStatus le_lattice_square(double area, struct LeLattice **out);

/**
 * Lattice at chart point `(u, v)` of the given area.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum LeStatus le_lattice_from_chart(double u, double v, double area, struct LeLattice **out);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `lat` must be null or a handle not yet freed.
 */
void le_lattice_free(struct LeLattice *lat);

/**
 * # Safety
 * `lat` must be a live handle and `out` writable.
 */
enum LeStatus le_lattice_get(const struct LeLattice *lat, struct LeLatticeInfo *out);

/**
 * Theta function `sum exp(-2 pi alpha |x|^2)` over the lattice.
 *
 * # Safety
 * `lat` must be a live handle, `ctl` null or valid, `out` writable.
 */
enum LeStatus le_theta(const struct LeLattice *lat,
                       double alpha,
                       const struct LeSumControl *ctl,
                       double *out);

/**
 * Epstein zeta function `sum_{x != 0} |x|^-s`, `s > 2`.
 *
 * # Safety
 * `lat` must be a live handle, `ctl` null or valid, `out` writable.
 */
enum LeStatus le_epstein_zeta(const struct LeLattice *lat,
                              double s,
                              enum LeZetaMethod method,
                              const struct LeSumControl *ctl,
                              double *out);

/**
 * # Safety
 * `lat` must be a live handle, `ctl` null or valid, `out` writable.
 */
enum LeStatus le_lj_energy(const struct LeLattice *lat,
                           const struct LeSumControl *ctl,
                           double *out);

/**
 * # Safety
 * `lat` must be a live handle, `ctl` null or valid, `out` writable.
 */
enum LeStatus le_tf_energy(const struct LeLattice *lat,
                           const struct LeSumControl *ctl,
                           double *out);

/**
 * Modified Bessel function `K0(x)`, `x > 0`.
 *
 * # Safety
 * `ctl` null or valid, `out` writable.
 */
enum LeStatus le_bessel_k0(double x, const struct LeSumControl *ctl, double *out);

/**
 * Energy minimizer among lattices of the given area.
 *
 * # Safety
 * `ctl` null or valid, `out` writable.
 */
enum LeStatus le_minimize_fixed_area(double area,
                                     enum LePotential potential,
                                     const struct LeSumControl *ctl,
                                     struct LeMinimization *out);

/**
 * Area of the triangular lattice with least Lennard-Jones energy.
 *
 * # Safety
 * `ctl` null or valid, `out` writable.
 */
enum LeStatus le_optimal_triangular_area(const struct LeSumControl *ctl,
                                         struct LeTriangularOptimum *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATTICE_ENERGY_H */
