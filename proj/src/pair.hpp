#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaussian.hpp"
#include "matrix.hpp"
#include "quat_matrix.hpp"
#include "quaternion.hpp"

namespace qpair {

/// Point of the parameter line Q(i) u {infinity} used to chart the sphere
/// of admissible structures; nullopt is the point at infinity.
using Zeta = std::optional<GaussianRational>;

inline Zeta zeta_infinity() { return std::nullopt; }
Zeta zeta_antipode(const Zeta& z);  // z |-> -1/conj(z), 0 <-> infinity
bool zeta_equal(const Zeta& a, const Zeta& b);
std::string zeta_to_string(const Zeta& z);
Zeta zeta_from_string(const std::string& s);  // "inf", "<re>", or "<re>,<im>"

/// Exact unit imaginary quaternion: a point of the sphere of admissible
/// linear complex structures.
struct SpherePoint {
    Quaternion u;
    explicit SpherePoint(Quaternion q);
    bool operator==(const SpherePoint& o) const { return u == o.u; }
};

SpherePoint sphere_point_from_zeta(const Zeta& z);
Zeta zeta_from_sphere_point(const SpherePoint& p);

/// Unit-norm quaternion acting on the sphere by u |-> g u g^-1.
struct Rotation {
    Quaternion g;
    Rotation() : g(1) {}
    explicit Rotation(Quaternion q);
    bool is_identity() const { return g == Quaternion(1) || g == Quaternion(-1); }
};

/// Element (a, A) of the automorphism group, acting by u |-> a u A.
struct Automorphism {
    Quaternion a;
    Matrix<Quaternion> matrix;
    Automorphism(Quaternion a_, Matrix<Quaternion> m);  // validates
};

/// A real subspace U of H^k, held as the canonical reduced echelon basis of
/// its real coordinate matrix (slot-major coordinates, 4k columns).
class Pair {
public:
    /// Normalizes and validates; throws domain_error on dependent basis
    /// or k beyond the configured cap.
    Pair(long k, const std::vector<std::vector<Quaternion>>& basis);
    Pair(long k, const MatrixQ& basis_rows);

    long k() const { return k_; }
    long dim() const { return static_cast<long>(basis_.rows()); }
    const MatrixQ& basis() const { return basis_; }
    std::vector<Quaternion> basis_row(std::size_t r) const {
        return row_to_quaternions(basis_.row(r));
    }

    bool operator==(const Pair& o) const { return k_ == o.k_ && basis_ == o.basis_; }

private:
    long k_;
    MatrixQ basis_;  // dim x 4k, reduced row echelon form
};

/// Maximum admissible quaternionic dimension (env QPAIR_MAX_K, default 16).
long max_quaternionic_dimension();

Pair dual(const Pair& p);
Pair product(const Pair& p, const Pair& q, const Rotation& t = Rotation());
Pair act(const Automorphism& phi, const Pair& p);

/// Model generators.
Pair gen_U(long k, const std::vector<Zeta>* zetas = nullptr);
Pair gen_V(long k);
Pair gen_W(long k, const SpherePoint& q);

/// dim_R (U  intersect  J U) for J = left multiplication by the sphere point.
long intersection_dim(const Pair& p, const SpherePoint& j);

/// A real subspace of C^n; coordinates (re, im) per complex slot.
class ComplexPair {
public:
    ComplexPair(long n, const MatrixQ& basis_rows);
    long n() const { return n_; }
    long dim() const { return static_cast<long>(basis_.rows()); }
    const MatrixQ& basis() const { return basis_; }

private:
    long n_;
    MatrixQ basis_;
};

struct ComplexDecomposition {
    long m = 0;  // complex factors (C, C)
    long l = 0;  // real factors (R, C)
    long z = 0;  // null factors (0, C)
};

ComplexDecomposition complex_decompose(const ComplexPair& cp);

/// View (U, H^k) with the single structure J as a complex pair: picks an
/// exact basis adapted to J and rewrites U in those coordinates.
ComplexPair complex_pair_of(const Pair& p, const SpherePoint& j);

/// Deterministic catalogue of rational unit quaternions (primitive
/// quadruples (a,b,c,d)/m with a^2+b^2+c^2+d^2 = m^2, ordered by (m,a,b,c,d)).
const std::vector<Quaternion>& unit_quaternion_table();

/// Deterministic rotation attempts: identity first, then table entries whose
/// conjugation actions move the point at infinity to pairwise distinct spots.
const std::vector<Rotation>& rotation_attempt_list();

/// Deterministic in seed: a from the unit table, matrix = identity plus a
/// sparse rational perturbation, redrawn until invertible.
Automorphism random_automorphism(long k, std::uint64_t seed);

}  // namespace qpair
