#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include "gaussian.hpp"

namespace qpair {

/// Univariate polynomial over Q(i) in one variable t, coefficients ascending.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(GaussianRational c) { c_.push_back(std::move(c)); trim(); }
    explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly t() { return Poly({GaussianRational(0), GaussianRational(1)}); }
    static Poly one() { return Poly(GaussianRational(1)); }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const GaussianRational& coeff(std::size_t d) const {
        static const GaussianRational zero;
        return d < c_.size() ? c_[d] : zero;
    }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    const GaussianRational& leading() const { return c_.back(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const GaussianRational& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly exact_div(const Poly& d) const;  // throws internal_error on nonzero remainder
    bool divisible_by(const Poly& d) const;

    Poly monic() const;
    Poly derivative() const;
    GaussianRational eval(const GaussianRational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    std::size_t bit_size() const;
    std::string to_string(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// Extended gcd: (g, s, t) with s*a + t*b = g, g monic (or zero).
std::tuple<Poly, Poly, Poly> poly_egcd(const Poly& a, const Poly& b);

/// Largest squarefree divisor: p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace qpair
