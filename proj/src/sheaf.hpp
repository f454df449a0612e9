#pragma once

#include <array>
#include <vector>

#include "binary_form.hpp"
#include "pencil.hpp"

namespace qpair {

/// Torsion summand data: a sigma-invariant support form of degree 2d
/// covering d antipodal point pairs, with identical local structure
/// (the partition) at each covered pair.
struct TorsionOrbit {
    BinaryForm support_form;
    std::vector<long> partition;  // nonincreasing, positive
    std::vector<std::array<double, 3>> numeric_support;  // reporting only

    long pair_count() const { return static_cast<long>(support_form.degree()) / 2; }
    long length() const {
        long s = 0;
        for (long p : partition) s += p;
        return static_cast<long>(support_form.degree()) * s;
    }
};

struct SheafSignature {
    long k = 0, dim_u = 0;
    std::vector<long> kernel_degrees;    // ascending, all <= -1
    std::vector<long> cokernel_degrees;  // ascending, all >= 1
    std::vector<TorsionOrbit> torsion;   // canonical order

    long torsion_length() const {
        long s = 0;
        for (const auto& o : torsion) s += o.length();
        return s;
    }
};

/// Nullity of the degree-d coefficient map of the pencil: sections of the
/// twisted source against degree-d targets; nullity(0) = 0.
long graded_nullity(const Pencil& p, long d);

/// Splitting degrees of the kernel sheaf from first differences of the
/// graded nullity scan; verified against the generic rank.
std::vector<long> kernel_splitting(const Pencil& p);

/// Free splitting degrees of the cokernel via the transposed pencil; a free
/// summand of degree e corresponds to a transposed kernel summand of
/// degree -(e+1).  Degree-0 summands are rejected as internal errors.
std::vector<long> cokernel_free_splitting(const Pencil& p);

/// Invariant-factor torsion data: Smith form in a chart made generic at
/// infinity, coprime-basis support forms grouped into antipodal orbits,
/// rational orbits split into antipodal pairs, all mapped back through the
/// rotation used.
std::vector<TorsionOrbit> torsion_invariants(const Pencil& p);

/// Assembles and verifies the full signature; throws internal_error when
/// any of the rank/degree/parity/antipodal identities fails.
SheafSignature sheaf_signature(const Pencil& p);

/// Local equality of torsion data: same partitions at the same points,
/// compared through a joint coprime refinement of the support forms
/// (no factorization needed).
bool torsion_locally_equal(const std::vector<TorsionOrbit>& a,
                           const std::vector<TorsionOrbit>& b);

/// Position-free equality: multisets of per-pair partitions agree
/// (each orbit contributes pair_count() copies of its partition).
bool torsion_profile_equal(const std::vector<TorsionOrbit>& a,
                           const std::vector<TorsionOrbit>& b);

bool signature_equal(const SheafSignature& a, const SheafSignature& b);

/// Number of signatures assembled and verified so far in this process.
long signatures_verified_count();

}  // namespace qpair
