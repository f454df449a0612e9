#include "rational.hpp"

#include <cmath>
#include <ostream>

namespace qpair {

Rational::Rational(long num, long den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    v_ = mpq_class(num);
    v_ /= mpq_class(den);
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw domain_error("division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inverse() const {
    if (is_zero()) throw domain_error("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw domain_error("empty rational literal");
    std::size_t slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) throw domain_error("bad rational literal: \"" + s + "\"");
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw domain_error("bad rational literal: \"" + s + "\"");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw domain_error("bad rational literal: \"" + s + "\"");
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(mpq_class(mpz_class(s)));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw domain_error("bad rational literal: \"" + s + "\" (zero denominator)");
    return Rational(mpz_class(num), d);
}

std::string Rational::to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::size_t Rational::bit_size() const {
    return mpz_sizeinbase(num().get_mpz_t(), 2) + mpz_sizeinbase(den().get_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational rational_reconstruct(double x, unsigned long max_den) {
    if (!std::isfinite(x)) throw domain_error("cannot reconstruct non-finite value");
    bool neg = x < 0;
    double a = std::fabs(x);
    // Stern-Brocot style convergents p/q of a.
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = a;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 9e18) break;
        mpz_class ai(static_cast<unsigned long>(fl));
        mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > mpz_class(max_den)) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-14) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational();
    Rational r(p1, q1);
    return neg ? -r : r;
}

}  // namespace qpair
