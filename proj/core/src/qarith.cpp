#include "deltaq/qarith.hpp"

#include <sstream>

#include "deltaq/error.hpp"

namespace deltaq {

QLaurent q_int(int n) {
    if (n < 0) throw RangeError("q_int: negative argument");
    QLaurent f;
    for (int i = 0; i < n; ++i) f.set_coeff(i, Rational(1));
    return f;
}

QLaurent q_factorial(int n) {
    if (n < 0) throw RangeError("q_factorial: negative argument");
    QLaurent f = QLaurent::one();
    for (int i = 1; i <= n; ++i) f *= q_int(i);
    return f;
}

QLaurent exact_div(const QLaurent& num, const QLaurent& den) {
    if (den.is_zero()) throw RangeError("exact_div: zero divisor");
    if (num.is_zero()) return QLaurent::zero();

    // Shift both operands into plain polynomials, divide, shift back.
    int ns = num.min_exp(), ds = den.min_exp();
    int ndeg = num.max_exp() - ns, ddeg = den.max_exp() - ds;
    if (ndeg < ddeg)
        throw InternalArithmeticError("exact_div: divisor degree exceeds dividend degree");

    std::vector<Rational> r(ndeg + 1), d(ddeg + 1), quot(ndeg - ddeg + 1);
    for (const auto& [e, c] : num.terms()) r[e - ns] = c;
    for (const auto& [e, c] : den.terms()) d[e - ds] = c;

    for (int i = ndeg - ddeg; i >= 0; --i) {
        Rational c = r[i + ddeg] / d[ddeg];
        quot[i] = c;
        if (!c.is_zero())
            for (int j = 0; j <= ddeg; ++j) r[i + j] -= c * d[j];
    }
    for (int i = 0; i < ddeg; ++i)
        if (!r[i].is_zero())
            throw InternalArithmeticError("exact_div: nonzero remainder");

    QLaurent q;
    for (int i = 0; i < static_cast<int>(quot.size()); ++i)
        q.set_coeff(i + ns - ds, quot[i]);
    return q;
}

QLaurent q_binomial(int n, int k) {
    if (n < 0) throw RangeError("q_binomial: negative upper argument");
    if (k < 0 || k > n) return QLaurent::zero();
    return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

QLaurent q_multinomial(const std::vector<int>& parts) {
    int total = 0;
    QLaurent den = QLaurent::one();
    for (int a : parts) {
        if (a < 0) throw RangeError("q_multinomial: negative entry");
        total += a;
        den *= q_factorial(a);
    }
    return exact_div(q_factorial(total), den);
}

QLaurent pochhammer(int a, int k) {
    if (k < 0) throw RangeError("pochhammer: negative length");
    QLaurent f = QLaurent::one();
    for (int i = 0; i < k; ++i) {
        QLaurent factor = QLaurent::one();
        factor -= QLaurent::monomial(a + i);
        f *= factor;
    }
    return f;
}

QLaurent reverse_coeffs(const QLaurent& f, int d) {
    if (f.is_zero()) return f;
    if (f.min_exp() < 0) {
        std::ostringstream os;
        os << "reverse_coeffs: negative exponent " << f.min_exp();
        throw DegreeOverflowError(os.str());
    }
    if (f.max_exp() > d) {
        std::ostringstream os;
        os << "reverse_coeffs: degree " << f.max_exp() << " exceeds reversal degree " << d;
        throw DegreeOverflowError(os.str());
    }
    QLaurent r;
    for (const auto& [e, c] : f.terms()) r.set_coeff(d - e, c);
    return r;
}

} // namespace deltaq
