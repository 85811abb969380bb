#ifndef DELTAQ_HYPERGEO_HPP
#define DELTAQ_HYPERGEO_HPP

#include <string>
#include <vector>

#include "deltaq/qarith.hpp"
#include "deltaq/qlaurent.hpp"

namespace deltaq {

// Rational function in q represented as an unreduced fraction of Laurent
// polynomials.  Equality is decided by cross multiplication, so no gcd
// normalization is ever needed.
struct QRatFunc {
    QLaurent num;
    QLaurent den;

    QRatFunc() : num(), den(QLaurent::one()) {}
    QRatFunc(QLaurent n, QLaurent d);   // RangeError when d = 0

    static QRatFunc from_poly(const QLaurent& p) { return QRatFunc(p, QLaurent::one()); }

    bool is_zero() const { return num.is_zero(); }

    friend QRatFunc operator*(const QRatFunc& a, const QRatFunc& b) {
        return QRatFunc(a.num * b.num, a.den * b.den);
    }
    friend QRatFunc operator+(const QRatFunc& a, const QRatFunc& b) {
        return QRatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend bool operator==(const QRatFunc& a, const QRatFunc& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const QRatFunc& a, const QRatFunc& b) { return !(a == b); }
};

// Terminating basic hypergeometric series
//   3phi2(q^a1, q^a2, q^a3; q^b1, q^b2; q, q^zexp)
//     = sum_{t=0}^{j} (q^a1)_t (q^a2)_t (q^a3)_t
//         / ((q^b1)_t (q^b2)_t (q)_t) * q^(zexp * t)
// with a1 = -j forcing termination (RangeError otherwise).  The lower
// Pochhammers must be nonzero for every 0 <= t <= j;
// VanishingDenominatorError names the first offending (b, t).
QRatFunc phi32(int a1, int a2, int a3, int b1, int b2, int zexp, int j);

// Outcome of checking the two printed forms of the transformation identity
// relating the two 3phi2 series: the published statement carries the factor
// (q^(-y-z-j+1); q)_j, the derivation in the proof carries
// (q^(-x-z-j+1); q)_j.
struct Lemma32Verdict {
    bool published_holds;
    bool proof_holds;
};

// Preconditions for the transformation at integer parameters: every
// denominator Pochhammer of length j must be nonzero.  Returns the list of
// violated conditions (empty = admissible).
std::vector<std::string> lemma32_preconditions(int j, int alpha, int x, int y, int z);

// Evaluates both printed variants as exact rational functions;
// RangeError for j < 0, VanishingDenominatorError when preconditions fail.
Lemma32Verdict lemma32_check(int j, int alpha, int x, int y, int z);

// The q-binomial recursion lemma: both sides are Laurent polynomials in q;
// returns true iff they agree.  Requires 1 <= j <= k <= n and
// k-j <= p <= n-j (RangeError otherwise).
bool lemma33_check(int j, int k, int n, int p);

} // namespace deltaq

#endif
