#pragma once

#include <utility>
#include <vector>

#include "pair.hpp"

namespace qpair {

/// Homogeneous coordinates on the parameter line; [1 : zeta], [0 : 1] = inf.
struct CP1Point {
    GaussianRational z0, z1;
    CP1Point(GaussianRational a, GaussianRational b);
    static CP1Point from_zeta(const Zeta& z);
    CP1Point antipode() const { return CP1Point(-z1.conj(), z0.conj()); }
    bool proportional_to(const CP1Point& o) const { return (z0 * o.z1 - z1 * o.z0).is_zero(); }
    Zeta zeta() const;
};

/// Frame of the anti-holomorphic tautological subbundle: per quaternionic
/// slot, two sections sigma(z0, z1) = z0 v + z1 w with
///   sigma1: v = (1, I, 0, 0), w = (0, 0, I, 1)
///   sigma2: v = (0, 0, 1, I), w = (-I, -1, 0, 0)
/// in slot coordinates (1, i, j, k).  Assembled block-diagonally into
/// 4k x 2k matrices (V, W).
std::pair<MatrixG, MatrixG> eigensections(long k);

/// Verifies exactly that the evaluated sections at the point for zeta span
/// the -I eigenspace of the corresponding structure and are independent.
/// Throws internal_error on failure (a convention bug, never input data).
void eigensection_check(long k, const Zeta& z);

/// Same verification against caller-supplied section matrices; the negative
/// control fixture feeds sign-corrupted matrices through this entry point.
void eigensection_check_with(long k, const Zeta& z, const MatrixG& v, const MatrixG& w);

/// The pair's bundle morphism as a matrix pencil z0 A + z1 B over Q(i),
/// rows indexed by a canonical coordinate complement of U.
struct Pencil {
    long k = 0;       // quaternionic dimension of the source pair
    long m = 0;       // 4k - dim U
    MatrixG a, b;     // m x 2k
    Pair source;      // normalized pair the pencil was built from
};

Pencil build_pencil(const Pair& p);

/// Same pencil with caller-chosen quotient rows (kernel must be exactly U);
/// all invariants are independent of this choice.
Pencil build_pencil_with_quotient(const Pair& p, const MatrixQ& quotient_rows);

MatrixG evaluate(const Pencil& p, const CP1Point& x);

/// Per-slot antipodal twist matrix C with
/// conj(P(-conj z1, conj z0)) = P(z0, z1) * C and C conj(C) = -Id.
MatrixG reality_twist(long k);

/// Verifies the twist identities formally (coefficientwise in z0, z1).
void reality_check(const Pencil& p);

/// dim_C of the fiber kernel: 2k - rank of the evaluated pencil.
long fiber_kernel_dim(const Pencil& p, const CP1Point& x);

/// Stable maximum of evaluated ranks over 2k+1 pairwise non-antipodal
/// rational points; rank can only drop at finitely many antipodal pairs.
long generic_rank(const Pencil& p);

/// First rotation from the attempt list whose pulled-back pencil has full
/// generic rank at infinity; returns the rebuilt pencil and the rotation.
std::pair<Pencil, Rotation> rotate_generic(const Pencil& p);

/// Projective matrix of the conjugation action of g on the parameter line:
/// maps the point of zeta to the point of the rotated structure.
MatrixG moebius_matrix(const Rotation& g);

}  // namespace qpair
