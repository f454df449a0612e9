#include "poly.hpp"

#include <ostream>
#include <sstream>

#include "errors.hpp"

namespace qpair {

Poly Poly::operator-() const {
    std::vector<GaussianRational> c(c_.size());
    for (std::size_t t = 0; t < c_.size(); ++t) c[t] = -c_[t];
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<GaussianRational> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t t = 0; t < c.size(); ++t) c[t] = coeff(t) + o.coeff(t);
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<GaussianRational> c(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero()) continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            if (!o.c_[b].is_zero()) c[a + b] += c_[a] * o.c_[b];
    }
    return Poly(std::move(c));
}

Poly Poly::operator*(const GaussianRational& s) const {
    std::vector<GaussianRational> c(c_.size());
    for (std::size_t t = 0; t < c_.size(); ++t) c[t] = c_[t] * s;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw domain_error("polynomial division by zero");
    Poly r = *this;
    if (r.degree() < d.degree()) return {Poly(), r};
    std::vector<GaussianRational> q(r.degree() - d.degree() + 1);
    GaussianRational lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        std::size_t shift = r.degree() - d.degree();
        GaussianRational f = r.leading() * lead_inv;
        q[shift] = f;
        std::vector<GaussianRational> rc = r.c_;
        for (std::size_t t = 0; t < d.c_.size(); ++t) rc[shift + t] -= f * d.c_[t];
        r = Poly(std::move(rc));
    }
    return {Poly(std::move(q)), r};
}

Poly Poly::exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw internal_error("inexact polynomial division");
    return q;
}

bool Poly::divisible_by(const Poly& d) const { return divmod(d).second.is_zero(); }

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GaussianRational> c(c_.size() - 1);
    for (std::size_t t = 1; t < c_.size(); ++t)
        c[t - 1] = c_[t] * GaussianRational(Rational(static_cast<long>(t)));
    return Poly(std::move(c));
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc;
    for (std::size_t t = c_.size(); t-- > 0;) acc = acc * x + c_[t];
    return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
    std::complex<double> acc;
    for (std::size_t t = c_.size(); t-- > 0;) acc = acc * x + c_[t].to_complex();
    return acc;
}

std::size_t Poly::bit_size() const {
    std::size_t s = 1;
    for (const auto& c : c_) s += c.bit_size();
    return s;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t t = c_.size(); t-- > 0;) {
        if (c_[t].is_zero()) continue;
        if (!first) os << " + ";
        if (t == 0 || !(c_[t].is_one())) os << "(" << c_[t].to_string() << ")";
        if (t >= 1) os << var;
        if (t >= 2) os << "^" << t;
        first = false;
    }
    return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::tuple<Poly, Poly, Poly> poly_egcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::one(), s1;
    Poly t0, t1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {Poly(), Poly(), Poly()};
    GaussianRational lead_inv = r0.leading().inverse();
    return {r0 * lead_inv, s0 * lead_inv, t0 * lead_inv};
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return p.monic();
    Poly g = poly_gcd(p, p.derivative());
    return p.exact_div(g).monic();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace qpair
