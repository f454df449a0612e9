#pragma once

#include <vector>

#include "poly.hpp"

namespace qpair {

/// Dense matrix of univariate polynomials over Q(i).
struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Poly> entries;  // row-major

    PolyMatrix() = default;
    PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Poly& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Poly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

/// Invariant factors f_1 | f_2 | ... | f_r (r = generic rank), monic,
/// computed by exact unimodular row/column operations.
std::vector<Poly> smith_form(const PolyMatrix& m);

/// Monic gcd of all rxr minors (zero when every minor vanishes).
/// Exponential in size; intended as a cross-check oracle for small matrices.
Poly minor_gcd(const PolyMatrix& m, std::size_t r);

}  // namespace qpair
