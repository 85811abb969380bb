#ifndef DELTAQ_QLAURENT_HPP
#define DELTAQ_QLAURENT_HPP

#include <map>
#include <string>

#include "deltaq/rational.hpp"

namespace deltaq {

// Laurent polynomial in the single variable q with Rational coefficients.
// Stored sparsely as exponent -> coefficient with no zero coefficients kept,
// so equality of representations is equality of values.  Exponents may be
// negative; many intermediate quantities here live in Z[q, q^-1] even when
// the final assembled object is an honest polynomial.
class QLaurent {
public:
    QLaurent() = default;                       // zero
    explicit QLaurent(const Rational& c);       // constant
    QLaurent(long c) : QLaurent(Rational(c)) {}

    static QLaurent zero() { return QLaurent(); }
    static QLaurent one() { return QLaurent(Rational(1)); }
    static QLaurent monomial(int exp, const Rational& c = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }

    // Smallest / largest exponent with nonzero coefficient; RangeError on 0.
    int min_exp() const;
    int max_exp() const;

    Rational coeff(int exp) const;

    // True when no negative exponent occurs (the zero polynomial counts).
    bool is_polynomial() const { return terms_.empty() || min_exp() >= 0; }
    // True when every coefficient is a nonnegative integer.
    bool has_nonneg_int_coeffs() const;

    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    QLaurent& operator*=(const QLaurent& o) { *this = *this * o; return *this; }

    QLaurent scaled(const Rational& c) const;
    QLaurent shifted(int d) const;              // multiply by q^d

    Rational eval_at_one() const;               // substitute q = 1

    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }
    bool operator<(const QLaurent& o) const { return terms_ < o.terms_; }

    // Human-readable form, e.g. "1 + q + 2*q^2" or "q^-1"; "0" for zero.
    std::string str() const;

    void set_coeff(int exp, const Rational& c);

private:
    std::map<int, Rational> terms_;
};

} // namespace deltaq

#endif
