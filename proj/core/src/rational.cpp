#include "deltaq/rational.hpp"

#include <ostream>

#include "deltaq/error.hpp"

namespace deltaq {

Rational::Rational(long num, long den) {
    if (den == 0) throw RangeError("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw RangeError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(const std::string& s) {
    if (s.empty()) throw ParseError("Rational: empty string");
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw ParseError("Rational: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw ParseError("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    return numerator_str() + "/" + denominator_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace deltaq
