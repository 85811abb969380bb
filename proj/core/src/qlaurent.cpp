#include "deltaq/qlaurent.hpp"

#include <sstream>

#include "deltaq/error.hpp"

namespace deltaq {

QLaurent::QLaurent(const Rational& c) {
    if (!c.is_zero()) terms_[0] = c;
}

QLaurent QLaurent::monomial(int exp, const Rational& c) {
    QLaurent f;
    if (!c.is_zero()) f.terms_[exp] = c;
    return f;
}

int QLaurent::min_exp() const {
    if (terms_.empty()) throw RangeError("QLaurent: min_exp of zero polynomial");
    return terms_.begin()->first;
}

int QLaurent::max_exp() const {
    if (terms_.empty()) throw RangeError("QLaurent: max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Rational QLaurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool QLaurent::has_nonneg_int_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c.is_negative() || !c.is_integer()) return false;
    return true;
}

void QLaurent::set_coeff(int exp, const Rational& c) {
    if (c.is_zero())
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            int e = ea + eb;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (!c.is_zero()) r.terms_[e] = c;
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

QLaurent QLaurent::scaled(const Rational& c) const {
    QLaurent r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

QLaurent QLaurent::shifted(int d) const {
    QLaurent r;
    for (const auto& [e, v] : terms_) r.terms_[e + d] = v;
    return r;
}

Rational QLaurent::eval_at_one() const {
    Rational s(0);
    for (const auto& [e, v] : terms_) s += v;
    return s;
}

std::string QLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.is_integer() ? c.numerator_str() : c.str();
        bool neg = c.is_negative();
        if (first) {
            if (neg) { os << "-"; cs = (-c).is_integer() ? (-c).numerator_str() : (-c).str(); }
            first = false;
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = (-c).is_integer() ? (-c).numerator_str() : (-c).str();
        }
        if (e == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace deltaq
