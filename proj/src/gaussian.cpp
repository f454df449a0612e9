#include "gaussian.hpp"

#include <ostream>

namespace qpair {

std::string GaussianRational::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string imag;
    if (im.is_one()) imag = "I";
    else if (im == Rational(-1)) imag = "-I";
    else imag = im.to_string() + "I";
    if (re.is_zero()) return imag;
    if (im.sign() > 0) return re.to_string() + "+" + imag;
    return re.to_string() + imag;
}

GaussianRational GaussianRational::from_string(const std::string& s) {
    if (s.empty()) throw domain_error("empty Gaussian rational literal");
    // Split at the last '+' or '-' that is not the leading sign and not
    // inside a fraction (digits and '/' only, so any interior sign splits).
    std::size_t split = std::string::npos;
    for (std::size_t p = 1; p < s.size(); ++p)
        if (s[p] == '+' || s[p] == '-') split = p;
    bool has_i = s.back() == 'I' || s.back() == 'i';
    if (!has_i) {
        if (split != std::string::npos)
            throw domain_error("bad Gaussian rational literal: \"" + s + "\"");
        return {Rational::from_string(s), Rational(0)};
    }
    auto parse_im = [&](std::string t) {
        t.pop_back();  // drop trailing I
        if (t.empty() || t == "+") return Rational(1);
        if (t == "-") return Rational(-1);
        return Rational::from_string(t);
    };
    if (split == std::string::npos) return {Rational(0), parse_im(s)};
    std::string re_part = s.substr(0, split);
    std::string im_part = s.substr(split);  // keeps the sign
    return {Rational::from_string(re_part), parse_im(im_part)};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
    return os << g.to_string();
}

}  // namespace qpair
