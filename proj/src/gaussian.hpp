#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "rational.hpp"

namespace qpair {

/// Element of Q(i): re + I*im with exact rational parts.  I is the complex
/// unit of complexified coefficient fields and is unrelated to the
/// quaternion unit i.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(long n) : re(n) {}  // NOLINT: implicit by design
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i_unit() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }  // re^2 + im^2

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const {
        Rational n = norm();
        if (n.is_zero()) throw domain_error("inverse of zero");
        return {re / n, -im / n};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
    /// Lexicographic order on (re, im); used only for canonical sorting.
    bool operator<(const GaussianRational& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
    std::size_t bit_size() const { return re.bit_size() + im.bit_size(); }

    /// Compact string: "3", "-1/2", "I", "-I", "2I", "1/2+3/4I", "1-I".
    std::string to_string() const;
    static GaussianRational from_string(const std::string& s);
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

}  // namespace qpair
