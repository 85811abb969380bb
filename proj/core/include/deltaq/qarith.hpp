#ifndef DELTAQ_QARITH_HPP
#define DELTAQ_QARITH_HPP

#include <vector>

#include "deltaq/qlaurent.hpp"

namespace deltaq {

// [n]_q = 1 + q + ... + q^(n-1); RangeError for n < 0.
QLaurent q_int(int n);

// [n]!_q = [1]_q [2]_q ... [n]_q; RangeError for n < 0.
QLaurent q_factorial(int n);

// Gaussian binomial [n choose k]_q = [n]!_q / ([k]!_q [n-k]!_q), computed by
// exact polynomial division (a nonzero remainder is an internal error).
// Zero when k < 0 or k > n; RangeError for n < 0.
QLaurent q_binomial(int n, int k);

// q-multinomial [a_1 + ... + a_r choose a_1, ..., a_r]_q.  Entries must be
// nonnegative; zero entries are allowed and contribute a factor 1.
QLaurent q_multinomial(const std::vector<int>& parts);

// (q^a; q)_k = prod_{i=0}^{k-1} (1 - q^(a+i)) for integer a (may be
// nonpositive, giving Laurent factors or the zero polynomial when a factor
// (1 - q^0) occurs).  RangeError for k < 0.
QLaurent pochhammer(int a, int k);

// rev_q(f, d) = q^d * f(1/q): reverses the coefficient sequence of a
// polynomial of degree at most d.  DegreeOverflowError when f has a negative
// exponent or degree exceeding d.
QLaurent reverse_coeffs(const QLaurent& f, int d);

// Exact quotient num / den; InternalArithmeticError when the division leaves
// a remainder, RangeError when den is zero.  Both operands may be Laurent.
QLaurent exact_div(const QLaurent& num, const QLaurent& den);

} // namespace deltaq

#endif
