#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheaf.hpp"

namespace qpair {

enum class FactorType { U, Ustar, V, Vstar, W };

const char* factor_type_name(FactorType t);  // "U", "U*", "V", "V*", "W"

/// One indecomposable factor with multiplicity.  W factors carry the
/// antipodal support form of the torsion orbit they came from; an orbit
/// covering d antipodal pairs contributes multiplicity d per partition entry.
struct Factor {
    FactorType type = FactorType::U;
    long k = 0;
    long mult = 1;
    std::optional<BinaryForm> support;

    /// (quaternionic dimension, real subspace dimension) of one copy.
    std::pair<long, long> dims() const;
};

struct FactorSignature {
    std::vector<Factor> factors;  // canonical order, duplicates merged

    bool has(FactorType t, long k) const;
    std::pair<long, long> total_dims() const;  // (k, dim U) reconstruction
};

FactorSignature make_factor_signature(std::vector<Factor> factors);

/// Decomposition data of a pair: the sheaf invariants plus the factor
/// multiset they determine.
struct Classification {
    SheafSignature sheaf;
    FactorSignature factors;
};

/// cokernel degree 2d+2 -> U(d); cokernel pair (2d+1, 2d+1) -> V(d);
/// kernel degree -(2d+2) -> Ustar(d); kernel pair -> Vstar(d);
/// torsion orbit of degree 2m with partition (k_1 >= k_2 >= ...) ->
/// m copies of each W(k_t).
FactorSignature factor_signature(const SheafSignature& s);

/// Full pipeline: convention self-checks, pencil, signature, factors,
/// dimension reconstruction.
Classification classify(const Pair& p);

FactorSignature dual_signature(const FactorSignature& f);

bool is_augmented(const FactorSignature& f);     // no (H, H) factor
bool is_strengthened(const FactorSignature& f);  // no (0, H) factor

/// Identity-rotation product of generators matching the signature, in
/// canonical factor order; requires every W support to be rational.
Pair model_from_signature(const FactorSignature& f);

/// Torsion orbits encoded by the W factors (grouped by support form).
std::vector<TorsionOrbit> torsion_of_factors(const FactorSignature& f);

/// Exact equality: non-W factors as multisets, torsion compared locally
/// (same partitions over the same support points).
bool factors_equal(const FactorSignature& a, const FactorSignature& b);

/// Equality up to a rotation of the sphere: support positions ignored,
/// per-pair partitions compared as multisets.
bool factors_profile_equal(const FactorSignature& a, const FactorSignature& b);

struct FiltrationDims {
    long e_minus_k = 0, u_minus_dim = 0;
    long e_mid_k = 0, u_mid_dim = 0;
    bool operator==(const FiltrationDims&) const = default;
};

FiltrationDims predicted_filtration_dims(const FactorSignature& f);

/// The canonical two-step filtration: the largest sub-pair with
/// all-negative splitting, then its extension by the torsion sub-pair.
/// Bases are exact; when torsion support is irrational and quotient-ring
/// elimination hits a non-invertible pivot, the middle layer is dims-only.
struct Filtration {
    FiltrationDims dims;
    bool bases_complete = false;
    std::optional<MatrixQ> e_minus, u_minus, e_mid, u_mid;
    std::string note;
};

Filtration canonical_filtration(const Pair& p, const Classification& cls);

/// Real span closed under left multiplication by i, j, k.
MatrixQ quaternionic_span(const MatrixQ& rows, long k);
bool is_quaternionic(const MatrixQ& rows, long k);

}  // namespace qpair
