#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace qpair {

/// Homogeneous binary form of fixed degree in (z0, z1) over Q(i).
/// coeff(t) multiplies z0^(degree-t) * z1^t.
class BinaryForm {
public:
    BinaryForm() : degree_(0), c_(1) {}  // the zero constant
    BinaryForm(std::size_t degree, std::vector<GaussianRational> coeffs);

    /// Homogenization of p to the given degree: z0^(degree - deg p) * p(z1/z0).
    static BinaryForm homogenize(const Poly& p, std::size_t degree);
    static BinaryForm z0();
    static BinaryForm z1();
    static BinaryForm constant(GaussianRational c) { return BinaryForm(0, {std::move(c)}); }

    std::size_t degree() const { return degree_; }
    const GaussianRational& coeff(std::size_t t) const { return c_[t]; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_constant() const { return degree_ == 0; }

    BinaryForm operator*(const BinaryForm& o) const;
    BinaryForm scaled(const GaussianRational& s) const;
    bool operator==(const BinaryForm& o) const { return degree_ == o.degree_ && c_ == o.c_; }

    /// Scale so that the first nonzero coefficient (highest z0 power) is 1.
    BinaryForm normalized() const;
    bool equal_up_to_scalar(const BinaryForm& o) const;

    /// f = z0^a * z1^b * interior, with interior(t) = dehomogenized kernel,
    /// interior(0) != 0 and z0 not dividing the homogenized interior.
    struct Decomposition {
        std::size_t z0_mult = 0, z1_mult = 0;
        Poly interior;  // nonzero constant for pure monomial forms
    };
    Decomposition decompose() const;

    /// Dehomogenization f(1, t).
    Poly dehomogenize() const;

    GaussianRational eval(const GaussianRational& z0, const GaussianRational& z1) const;

    /// Antipodal twist: z |-> conj(f(-conj(z1), conj(z0))).
    /// Applying it twice gives (-1)^degree times the original.
    BinaryForm sigma_twist() const;
    bool sigma_invariant() const;

    /// Substitution (z0, z1) -> (m00 z0 + m01 z1, m10 z0 + m11 z1).
    BinaryForm compose(const MatrixG& m) const;

    std::string to_string() const;
    /// Canonical order: by degree, then coefficients of the normalized form.
    bool operator<(const BinaryForm& o) const;

private:
    std::size_t degree_;
    std::vector<GaussianRational> c_;  // size degree_ + 1
};

/// Monic-normalized gcd; throws domain_error if both are zero.
BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g);

bool form_divides(const BinaryForm& d, const BinaryForm& f);
BinaryForm form_exact_div(const BinaryForm& f, const BinaryForm& d);

/// Largest exponent e with d^e | f.
std::size_t form_multiplicity(const BinaryForm& d, const BinaryForm& f);

/// Pairwise-coprime squarefree basis: every input is, up to a scalar,
/// a product of powers of basis elements.  Canonically sorted.
std::vector<BinaryForm> coprime_basis(const std::vector<BinaryForm>& inputs);

/// Verified roots in Q(i) of the interior of the (squarefree) form:
/// numeric estimates, rational reconstruction, then exact evaluation.
/// Roots at [1:0] / [0:1] are reported by the z1/z0 multiplicities instead.
std::vector<GaussianRational> rational_interior_roots(const BinaryForm& f);

/// Degree-2 form vanishing exactly at zeta and at its antipode -1/conj(zeta).
BinaryForm antipodal_pair_form(const GaussianRational& zeta);

/// Numeric roots of the dehomogenized interior (reporting only).
std::vector<std::complex<double>> numeric_interior_roots(const BinaryForm& f);

/// Yun squarefree decomposition: p = prod parts[e].first ^ parts[e].second,
/// parts pairwise coprime and squarefree.
std::vector<std::pair<Poly, std::size_t>> squarefree_decomposition(const Poly& p);

}  // namespace qpair
