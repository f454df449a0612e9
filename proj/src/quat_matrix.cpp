#include "quat_matrix.hpp"

namespace qpair {

namespace {
const std::array<Quaternion, 4> kBasis = {Quaternion(1), Quaternion::unit_i(),
                                          Quaternion::unit_j(), Quaternion::unit_k()};
}

MatrixQ left_mult_matrix(const Quaternion& u) {
    MatrixQ m(4, 4);
    for (std::size_t c = 0; c < 4; ++c) {
        auto col = (u * kBasis[c]).coords();
        for (std::size_t r = 0; r < 4; ++r) m(r, c) = col[r];
    }
    return m;
}

MatrixQ right_mult_matrix(const Quaternion& u) {
    MatrixQ m(4, 4);
    for (std::size_t c = 0; c < 4; ++c) {
        auto col = (kBasis[c] * u).coords();
        for (std::size_t r = 0; r < 4; ++r) m(r, c) = col[r];
    }
    return m;
}

MatrixQ block_left_mult(const Quaternion& u, std::size_t k) {
    MatrixQ l = left_mult_matrix(u);
    MatrixQ m(4 * k, 4 * k);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m(4 * s + r, 4 * s + c) = l(r, c);
    return m;
}

MatrixQ right_action_matrix(const Matrix<Quaternion>& a) {
    std::size_t k = a.rows();
    if (a.cols() != k) throw domain_error("right action matrix must be square");
    MatrixQ m(4 * k, 4 * k);
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t c = 0; c < k; ++c) {
            if (a(s, c).is_zero()) continue;
            MatrixQ blk = right_mult_matrix(a(s, c));
            for (std::size_t rr = 0; rr < 4; ++rr)
                for (std::size_t cc = 0; cc < 4; ++cc) m(4 * c + rr, 4 * s + cc) = blk(rr, cc);
        }
    return m;
}

std::vector<Quaternion> row_to_quaternions(const std::vector<Rational>& row) {
    if (row.size() % 4 != 0) throw internal_error("row length not a multiple of 4");
    std::vector<Quaternion> q(row.size() / 4);
    for (std::size_t s = 0; s < q.size(); ++s)
        q[s] = Quaternion(row[4 * s], row[4 * s + 1], row[4 * s + 2], row[4 * s + 3]);
    return q;
}

std::vector<Rational> quaternions_to_row(const std::vector<Quaternion>& q) {
    std::vector<Rational> row(4 * q.size());
    for (std::size_t s = 0; s < q.size(); ++s) {
        auto c = q[s].coords();
        for (std::size_t t = 0; t < 4; ++t) row[4 * s + t] = c[t];
    }
    return row;
}

}  // namespace qpair
