/*
 * qpair - exact classification of real subspaces of quaternionic vector
 * spaces, exposed as a C shared-library API.
 *
 * All structured data crosses the boundary as JSON strings (rationals as
 * exact strings, never floats).  Every function that can fail returns a
 * qpair_status and, when a char** err slot is supplied, a malloc'd JSON
 * object {"error": "..."} that the caller releases with qpair_string_free.
 * Output strings are released the same way; pairs with qpair_pair_free.
 */

#ifndef QPAIR_H
#define QPAIR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpair_status {
    QPAIR_OK = 0,
    QPAIR_ERROR_DOMAIN = 1,   /* invalid input data */
    QPAIR_ERROR_INTERNAL = 2  /* internal consistency failure */
} qpair_status;

/* Opaque handle: a validated pair (U, H^k) in canonical form. */
typedef struct qpair_pair qpair_pair;

const char* qpair_version(void);

/* Pair construction and serialization.  Pair files carry
 * {"format_version":1, "quaternionic_dimension":k, "subspace_basis":[...]}
 * with quaternions as objects of rational strings {"r","i","j","k"}. */
qpair_status qpair_pair_from_json(const char* json, qpair_pair** out, char** err);
qpair_status qpair_pair_to_json(const qpair_pair* p, char** out, char** err);

/* type: "U" | "V" | "W" | "Ustar" | "Vstar"; support (W only): "inf",
 * "<re>" or "<re>,<im>" with exact rational parts. */
qpair_status qpair_generate(const char* type, long k, const char* support, qpair_pair** out,
                            char** err);

qpair_status qpair_dual(const qpair_pair* p, qpair_pair** out, char** err);

/* rotation: NULL for the identity, else "r,i,j,k" rational components of an
 * exactly unit-norm quaternion. */
qpair_status qpair_product(const qpair_pair* a, const qpair_pair* b, const char* rotation,
                           qpair_pair** out, char** err);

qpair_status qpair_transform(const qpair_pair* p, uint64_t seed, qpair_pair** out, char** err);

/* Classification report JSON; with_filtration adds the canonical
 * filtration (bases when exactly computable, dims otherwise). */
qpair_status qpair_classify(const qpair_pair* p, int with_filtration, int pretty, char** report,
                            char** err);

/* Full invariant suite on one pair; report JSON with per-check results.
 * Returns QPAIR_ERROR_INTERNAL when any check fails. */
qpair_status qpair_check(const qpair_pair* p, int pretty, char** report, char** err);

/* Re-verifies a stored classification report against recomputation. */
qpair_status qpair_verify_report(const char* report_json, int pretty, char** report, char** err);

/* Runs the acceptance suite; report JSON with one entry per criterion.
 * Returns QPAIR_ERROR_INTERNAL when any criterion fails. */
qpair_status qpair_selftest(int pretty, char** report, char** err);

void qpair_pair_free(qpair_pair* p);
void qpair_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QPAIR_H */
