#pragma once

#include "matrix.hpp"
#include "quaternion.hpp"

namespace qpair {

/// 4x4 real matrix of x |-> u*x in the basis (1, i, j, k).
/// Skew-symmetric with square -Id exactly when u is a unit imaginary.
MatrixQ left_mult_matrix(const Quaternion& u);

/// 4x4 real matrix of x |-> x*u in the basis (1, i, j, k).
MatrixQ right_mult_matrix(const Quaternion& u);

/// Block-diagonal left multiplication on H^k (4k x 4k), slot-major
/// coordinates: index 4*slot + component.
MatrixQ block_left_mult(const Quaternion& u, std::size_t k);

/// Real 4k x 4k matrix of the right action x |-> x A on H^k
/// (row vectors, A a k x k quaternion matrix).
MatrixQ right_action_matrix(const Matrix<Quaternion>& a);

/// Row vector in R^4k <-> k-tuple of quaternions.
std::vector<Quaternion> row_to_quaternions(const std::vector<Rational>& row);
std::vector<Rational> quaternions_to_row(const std::vector<Quaternion>& q);

}  // namespace qpair
