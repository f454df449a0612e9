#include "quaternion.hpp"

#include <ostream>
#include <sstream>

namespace qpair {

std::string Quaternion::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, const char* unit) {
        if (c.is_zero()) return;
        std::string s = c.to_string();
        if (!first && s[0] != '-') os << "+";
        if (*unit && (c.is_one() || c == Rational(-1))) os << (c.is_one() ? "" : "-") << unit;
        else os << s << unit;
        first = false;
    };
    emit(r, "");
    emit(i, "i");
    emit(j, "j");
    emit(k, "k");
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.to_string(); }

}  // namespace qpair
