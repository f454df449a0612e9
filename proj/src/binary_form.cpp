#include "binary_form.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace qpair {

BinaryForm::BinaryForm(std::size_t degree, std::vector<GaussianRational> coeffs)
    : degree_(degree), c_(std::move(coeffs)) {
    if (c_.size() != degree_ + 1) throw internal_error("binary form coefficient count mismatch");
}

BinaryForm BinaryForm::homogenize(const Poly& p, std::size_t degree) {
    if (p.degree() > static_cast<long>(degree))
        throw internal_error("homogenization degree too small");
    std::vector<GaussianRational> c(degree + 1);
    for (long t = 0; t <= p.degree(); ++t) c[t] = p.coeff(t);
    return BinaryForm(degree, std::move(c));
}

BinaryForm BinaryForm::z0() { return BinaryForm(1, {GaussianRational(1), GaussianRational(0)}); }
BinaryForm BinaryForm::z1() { return BinaryForm(1, {GaussianRational(0), GaussianRational(1)}); }

bool BinaryForm::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    std::vector<GaussianRational> c(degree_ + o.degree_ + 1);
    for (std::size_t a = 0; a <= degree_; ++a) {
        if (c_[a].is_zero()) continue;
        for (std::size_t b = 0; b <= o.degree_; ++b)
            if (!o.c_[b].is_zero()) c[a + b] += c_[a] * o.c_[b];
    }
    return BinaryForm(degree_ + o.degree_, std::move(c));
}

BinaryForm BinaryForm::scaled(const GaussianRational& s) const {
    std::vector<GaussianRational> c(c_);
    for (auto& x : c) x *= s;
    return BinaryForm(degree_, std::move(c));
}

BinaryForm BinaryForm::normalized() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return scaled(x.inverse());
    return *this;
}

bool BinaryForm::equal_up_to_scalar(const BinaryForm& o) const {
    if (degree_ != o.degree_) return false;
    return normalized() == o.normalized();
}

BinaryForm::Decomposition BinaryForm::decompose() const {
    if (is_zero()) throw domain_error("cannot decompose the zero form");
    Decomposition d;
    std::size_t lo = 0;
    while (c_[lo].is_zero()) ++lo;
    std::size_t hi = degree_;
    while (c_[hi].is_zero()) --hi;
    d.z1_mult = lo;
    d.z0_mult = degree_ - hi;
    std::vector<GaussianRational> q(c_.begin() + lo, c_.begin() + hi + 1);
    d.interior = Poly(std::move(q));
    return d;
}

Poly BinaryForm::dehomogenize() const { return Poly(std::vector<GaussianRational>(c_)); }

GaussianRational BinaryForm::eval(const GaussianRational& a, const GaussianRational& b) const {
    // Horner in two stages: sum c_t a^(d-t) b^t.
    GaussianRational acc;
    std::vector<GaussianRational> apow(degree_ + 1), bpow(degree_ + 1);
    apow[0] = GaussianRational(1);
    bpow[0] = GaussianRational(1);
    for (std::size_t t = 1; t <= degree_; ++t) {
        apow[t] = apow[t - 1] * a;
        bpow[t] = bpow[t - 1] * b;
    }
    for (std::size_t t = 0; t <= degree_; ++t)
        if (!c_[t].is_zero()) acc += c_[t] * apow[degree_ - t] * bpow[t];
    return acc;
}

BinaryForm BinaryForm::sigma_twist() const {
    std::vector<GaussianRational> c(degree_ + 1);
    for (std::size_t s = 0; s <= degree_; ++s) {
        GaussianRational v = c_[degree_ - s].conj();
        c[s] = (s % 2 == 0) ? v : -v;
    }
    return BinaryForm(degree_, std::move(c));
}

bool BinaryForm::sigma_invariant() const {
    if (is_zero()) return true;
    return sigma_twist().equal_up_to_scalar(*this);
}

BinaryForm BinaryForm::compose(const MatrixG& m) const {
    if (m.rows() != 2 || m.cols() != 2) throw internal_error("compose expects a 2x2 matrix");
    BinaryForm l0(1, {m(0, 0), m(0, 1)});
    BinaryForm l1(1, {m(1, 0), m(1, 1)});
    std::vector<BinaryForm> p0{BinaryForm::constant(GaussianRational(1))};
    std::vector<BinaryForm> p1{BinaryForm::constant(GaussianRational(1))};
    for (std::size_t t = 1; t <= degree_; ++t) {
        p0.push_back(p0.back() * l0);
        p1.push_back(p1.back() * l1);
    }
    std::vector<GaussianRational> acc(degree_ + 1);
    for (std::size_t t = 0; t <= degree_; ++t) {
        if (c_[t].is_zero()) continue;
        BinaryForm term = (p0[degree_ - t] * p1[t]).scaled(c_[t]);
        for (std::size_t s = 0; s <= degree_; ++s) acc[s] += term.coeff(s);
    }
    return BinaryForm(degree_, std::move(acc));
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t t = 0; t <= degree_; ++t) {
        if (c_[t].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[t].to_string() << ")";
        if (degree_ - t > 0) os << "z0^" << (degree_ - t);
        if (t > 0) os << "z1^" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool BinaryForm::operator<(const BinaryForm& o) const {
    if (degree_ != o.degree_) return degree_ < o.degree_;
    BinaryForm a = normalized(), b = o.normalized();
    // compare from the z1-heavy end so that z0 sorts before z1
    for (std::size_t t = degree_ + 1; t-- > 0;) {
        if (a.c_[t] == b.c_[t]) continue;
        return a.c_[t] < b.c_[t];
    }
    return false;
}

BinaryForm gcd_forms(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() && g.is_zero()) throw domain_error("gcd of two zero forms");
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    auto df = f.decompose(), dg = g.decompose();
    Poly pg = poly_gcd(df.interior, dg.interior);
    BinaryForm out = BinaryForm::homogenize(pg, pg.degree());
    std::size_t a = std::min(df.z0_mult, dg.z0_mult);
    std::size_t b = std::min(df.z1_mult, dg.z1_mult);
    for (std::size_t t = 0; t < a; ++t) out = out * BinaryForm::z0();
    for (std::size_t t = 0; t < b; ++t) out = out * BinaryForm::z1();
    return out.normalized();
}

bool form_divides(const BinaryForm& d, const BinaryForm& f) {
    if (d.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (d.degree() > f.degree()) return false;
    return gcd_forms(d, f).degree() == d.degree();
}

BinaryForm form_exact_div(const BinaryForm& f, const BinaryForm& d) {
    auto dd = d.decompose();
    auto df = f.decompose();
    if (dd.z0_mult > df.z0_mult || dd.z1_mult > df.z1_mult)
        throw internal_error("inexact form division (monomial content)");
    Poly q = df.interior.exact_div(dd.interior);
    BinaryForm out = BinaryForm::homogenize(q, q.degree());
    for (std::size_t t = 0; t < df.z0_mult - dd.z0_mult; ++t) out = out * BinaryForm::z0();
    for (std::size_t t = 0; t < df.z1_mult - dd.z1_mult; ++t) out = out * BinaryForm::z1();
    return out;
}

std::size_t form_multiplicity(const BinaryForm& d, const BinaryForm& f) {
    if (d.is_constant()) throw internal_error("multiplicity of a constant form");
    std::size_t mult = 0;
    BinaryForm rest = f;
    while (!rest.is_constant() && form_divides(d, rest)) {
        rest = form_exact_div(rest, d);
        ++mult;
    }
    return mult;
}

std::vector<std::pair<Poly, std::size_t>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, std::size_t>> parts;
    if (p.is_zero() || p.degree() == 0) return parts;
    Poly f = p.monic();
    Poly g = poly_gcd(f, f.derivative());
    Poly w = f.exact_div(g);
    std::size_t mult = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, g);
        Poly z = w.exact_div(y);
        if (z.degree() > 0) parts.emplace_back(z.monic(), mult);
        w = y;
        g = g.exact_div(y);
        ++mult;
    }
    return parts;
}

std::vector<BinaryForm> coprime_basis(const std::vector<BinaryForm>& inputs) {
    std::vector<BinaryForm> parts;
    auto push = [&](const BinaryForm& f) {
        if (f.is_constant()) return;
        BinaryForm n = f.normalized();
        for (const auto& p : parts)
            if (p == n) return;
        parts.push_back(n);
    };
    for (const auto& f : inputs) {
        if (f.is_zero()) throw domain_error("coprime basis of a zero form");
        auto d = f.decompose();
        if (d.z0_mult > 0) push(BinaryForm::z0());
        if (d.z1_mult > 0) push(BinaryForm::z1());
        for (const auto& [sq, mult] : squarefree_decomposition(d.interior))
            push(BinaryForm::homogenize(sq, sq.degree()));
    }
    // gcd refinement until pairwise coprime
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < parts.size() && !changed; ++a)
            for (std::size_t b = a + 1; b < parts.size() && !changed; ++b) {
                BinaryForm g = gcd_forms(parts[a], parts[b]);
                if (g.is_constant()) continue;
                BinaryForm qa = form_exact_div(parts[a], g).normalized();
                BinaryForm qb = form_exact_div(parts[b], g).normalized();
                std::vector<BinaryForm> next;
                for (std::size_t t = 0; t < parts.size(); ++t)
                    if (t != a && t != b) next.push_back(parts[t]);
                parts = std::move(next);
                push(g);
                push(qa);
                push(qb);
                changed = true;
            }
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

std::vector<std::complex<double>> numeric_interior_roots(const BinaryForm& f) {
    Poly p = f.decompose().interior;
    long n = p.degree();
    std::vector<std::complex<double>> roots;
    if (n <= 0) return roots;
    // Durand-Kerner iteration on the monic numeric image.
    std::vector<std::complex<double>> c(n + 1);
    std::complex<double> lead = p.coeff(n).to_complex();
    for (long t = 0; t <= n; ++t) c[t] = p.coeff(t).to_complex() / lead;
    auto evalp = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (long t = n; t >= 0; --t) acc = acc * x + c[t];
        return acc;
    };
    roots.resize(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> pw = 1.0;
    for (long e = 0; e < n; ++e) {
        pw *= seed;
        roots[e] = pw;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double delta = 0;
        for (long e = 0; e < n; ++e) {
            std::complex<double> denom = 1.0;
            for (long o = 0; o < n; ++o)
                if (o != e) denom *= roots[e] - roots[o];
            if (std::abs(denom) < 1e-300) continue;
            std::complex<double> step = evalp(roots[e]) / denom;
            roots[e] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14) break;
    }
    return roots;
}

std::vector<GaussianRational> rational_interior_roots(const BinaryForm& f) {
    std::vector<GaussianRational> found;
    Poly p = f.decompose().interior;
    if (p.degree() <= 0) return found;
    auto try_candidate = [&](const GaussianRational& cand) {
        if (!p.eval(cand).is_zero()) return;
        for (const auto& r : found)
            if (r == cand) return;
        found.push_back(cand);
    };
    for (const auto& z : numeric_interior_roots(f)) {
        for (unsigned long max_den : {16UL, 4096UL, 100000000UL}) {
            GaussianRational cand(rational_reconstruct(z.real(), max_den),
                                  rational_reconstruct(z.imag(), max_den));
            try_candidate(cand);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

BinaryForm antipodal_pair_form(const GaussianRational& zeta) {
    // (z1 - zeta z0)(conj(zeta) z1 + z0), vanishing at zeta and -1/conj(zeta)
    BinaryForm a(1, {-zeta, GaussianRational(1)});
    BinaryForm b(1, {GaussianRational(1), zeta.conj()});
    return (a * b).normalized();
}

}  // namespace qpair
