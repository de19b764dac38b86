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

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "lattice_energy.h"

#define CHECK(cond)                                           \
    do {                                                      \
        if (!(cond)) {                                        \
            fprintf(stderr, "check failed: %s\n", #cond);     \
            return 1;                                         \
        }                                                     \
    } while (0)

int main(void) {
    LeLattice *tri = NULL;
    CHECK(le_lattice_triangular(1.0, &tri) == LE_STATUS_OK);

    LeLatticeInfo info;
    CHECK(le_lattice_get(tri, &info) == LE_STATUS_OK);
    CHECK(fabs(info.area - 1.0) < 1e-12);
    CHECK(fabs(info.len_u - info.len_v) < 1e-12);

    double e = 0.0;
    CHECK(le_lj_energy(tri, NULL, &e) == LE_STATUS_OK);
    double z6 = 0.0, z12 = 0.0;
    CHECK(le_epstein_zeta(tri, 6.0, LE_ZETA_METHOD_ACCELERATED, NULL, &z6) == LE_STATUS_OK);
    CHECK(le_epstein_zeta(tri, 12.0, LE_ZETA_METHOD_DIRECT, NULL, &z12) == LE_STATUS_OK);
    CHECK(fabs(e - (z12 - 2.0 * z6)) < 1e-10);

    LeLattice *bad = NULL;
    CHECK(le_lattice_square(-1.0, &bad) == LE_STATUS_DOMAIN);
    CHECK(bad == NULL);
    char msg[256];
    CHECK(le_last_error_message(msg, sizeof msg) > 0);
    CHECK(strlen(msg) > 0);

    LeSumControl ctl = le_control_default();
    ctl.rel_tol = 0.0;
    CHECK(le_theta(tri, 1.0, &ctl, &e) == LE_STATUS_CONFIGURATION);

    le_lattice_free(tri);
    printf("ok %s\n", le_version());
    return 0;
}
