#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "rational.hpp"

namespace qpair {

/// Quaternion with rational coefficients: r + i*i + j*j + k*k,
/// multiplication per i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
struct Quaternion {
    Rational r, i, j, k;

    Quaternion() = default;
    Quaternion(long n) : r(n) {}  // NOLINT: implicit by design
    Quaternion(Rational rr, Rational ii, Rational jj, Rational kk)
        : r(std::move(rr)), i(std::move(ii)), j(std::move(jj)), k(std::move(kk)) {}

    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return r.is_zero() && i.is_zero() && j.is_zero() && k.is_zero(); }
    bool is_real() const { return i.is_zero() && j.is_zero() && k.is_zero(); }
    bool is_imaginary() const { return r.is_zero(); }

    Quaternion conj() const { return {r, -i, -j, -k}; }
    Rational norm2() const { return r * r + i * i + j * j + k * k; }

    Quaternion operator-() const { return {-r, -i, -j, -k}; }
    Quaternion operator+(const Quaternion& o) const {
        return {r + o.r, i + o.i, j + o.j, k + o.k};
    }
    Quaternion operator-(const Quaternion& o) const {
        return {r - o.r, i - o.i, j - o.j, k - o.k};
    }
    Quaternion operator*(const Quaternion& o) const {
        return {r * o.r - i * o.i - j * o.j - k * o.k,
                r * o.i + i * o.r + j * o.k - k * o.j,
                r * o.j - i * o.k + j * o.r + k * o.i,
                r * o.k + i * o.j - j * o.i + k * o.r};
    }
    Quaternion operator*(const Rational& s) const { return {r * s, i * s, j * s, k * s}; }

    Quaternion inverse() const {
        Rational n = norm2();
        if (n.is_zero()) throw domain_error("inverse of zero quaternion");
        return conj() * n.inverse();
    }

    bool operator==(const Quaternion& o) const {
        return r == o.r && i == o.i && j == o.j && k == o.k;
    }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    /// Coordinates in the real basis (1, i, j, k).
    std::array<Rational, 4> coords() const { return {r, i, j, k}; }
    static Quaternion from_coords(const std::array<Rational, 4>& c) {
        return {c[0], c[1], c[2], c[3]};
    }

    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qpair
