#include "deltaq/hypergeo.hpp"

#include <sstream>

#include "deltaq/error.hpp"
#include "deltaq/partition.hpp"

namespace deltaq {

QRatFunc::QRatFunc(QLaurent n, QLaurent d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw RangeError("QRatFunc: zero denominator");
}

namespace {

// First t in [0, j] with (q^b)_t = 0, or -1 when none: the factor
// (1 - q^(b+i)) vanishes exactly when b + i = 0.
int first_vanishing(int b, int j) {
    if (b <= 0 && b + j - 1 >= 0) return -b + 1;
    return -1;
}

} // namespace

QRatFunc phi32(int a1, int a2, int a3, int b1, int b2, int zexp, int j) {
    if (j < 0) throw RangeError("phi32: negative order");
    if (a1 != -j) throw RangeError("phi32: series must terminate (a1 = -j required)");
    for (int b : {b1, b2}) {
        int t = first_vanishing(b, j);
        if (t >= 0) {
            std::ostringstream os;
            os << "phi32: denominator Pochhammer (q^" << b << "; q)_t vanishes at t = " << t;
            throw VanishingDenominatorError(os.str());
        }
    }
    // Put everything over the common denominator (q^b1)_j (q^b2)_j (q)_j by
    // completing each term's denominator: (q^b)_t * (q^(b+t))_{j-t} = (q^b)_j.
    QLaurent num;
    for (int t = 0; t <= j; ++t) {
        QLaurent term = pochhammer(a1, t) * pochhammer(a2, t) * pochhammer(a3, t);
        if (term.is_zero()) continue;
        term *= pochhammer(b1 + t, j - t) * pochhammer(b2 + t, j - t) * pochhammer(1 + t, j - t);
        term = term.shifted(zexp * t);
        num += term;
    }
    return QRatFunc(num, pochhammer(b1, j) * pochhammer(b2, j) * pochhammer(1, j));
}

std::vector<std::string> lemma32_preconditions(int j, int alpha, int x, int y, int z) {
    std::vector<std::string> bad;
    auto require_nonzero = [&](int b, const std::string& name) {
        if (first_vanishing(b, j) >= 0)
            bad.push_back("(q^" + std::to_string(b) + "; q)_" + std::to_string(j) +
                          " vanishes (" + name + ")");
    };
    require_nonzero(alpha - y - j + 1, "alpha-y-j+1");
    require_nonzero(alpha - x - j + 1, "alpha-x-j+1");
    require_nonzero(y, "y");
    require_nonzero(x, "x");
    require_nonzero(x + z, "x+z");
    return bad;
}

Lemma32Verdict lemma32_check(int j, int alpha, int x, int y, int z) {
    if (j < 0) throw RangeError("lemma32_check: negative order");
    auto bad = lemma32_preconditions(j, alpha, x, y, z);
    if (!bad.empty()) {
        std::string msg = "lemma32_check:";
        for (const auto& b : bad) msg += " " + b + ";";
        throw VanishingDenominatorError(msg);
    }

    QRatFunc lhs = phi32(-j, alpha, alpha + z, alpha - y - j + 1, alpha - x - j + 1, 1, j);
    QRatFunc inner = phi32(-j, x + y + z + j - 1, x - alpha, x, x + z, 1 + alpha - y, j);

    QLaurent den = pochhammer(alpha - y - j + 1, j) * pochhammer(alpha - x - j + 1, j) *
                   pochhammer(y, j);
    QLaurent common = pochhammer(-y - j + 1, j) * pochhammer(-x - j + 1, j);
    int shift = (alpha + x + y + z + j - 1) * j;

    auto rhs_with = [&](const QLaurent& extra) {
        QRatFunc factor(QLaurent((common * extra).shifted(shift)), den);
        return factor * inner;
    };
    QRatFunc rhs_published = rhs_with(pochhammer(-y - z - j + 1, j));
    QRatFunc rhs_proof = rhs_with(pochhammer(-x - z - j + 1, j));

    return Lemma32Verdict{lhs == rhs_published, lhs == rhs_proof};
}

namespace {

// q-binomial extended to the negative-diagonal corner that the recursion
// lemma's boundary instances reach: when p = 0 the coefficient
// [p-1 choose k-r-1] is evaluated at (-1, -1), where it must be 1 so that
// the k = r boundary term reproduces the empty-module contribution.
QLaurent qbinom_ext(int m, int r) {
    if (m < 0) return m == r ? QLaurent::one() : QLaurent::zero();
    return q_binomial(m, r);
}

} // namespace

bool lemma33_check(int j, int k, int n, int p) {
    if (!(1 <= j && j <= k && k <= n))
        throw RangeError("lemma33_check: need 1 <= j <= k <= n");
    if (!(k - j <= p && p <= n - j))
        throw RangeError("lemma33_check: need k-j <= p <= n-j");

    QLaurent lhs;
    for (int r = p; r <= p + j; ++r) {
        QLaurent term = qbinom_ext(r - 1, k - 1) * q_binomial(r, j) * q_binomial(j, r - p);
        if (term.is_zero()) continue;
        long e = choose2(r + 1) - static_cast<long>(n) * r +
                 static_cast<long>(r - p) * (n - j - p);
        term = term.shifted(static_cast<int>(e));
        if ((n - r) % 2) term = -term;
        lhs += term;
    }
    lhs = lhs.shifted(static_cast<int>(choose2(k) + choose2(j)));

    QLaurent rhs;
    for (int r = std::max(k - p, 0); r <= j; ++r) {
        QLaurent term = q_binomial(k, r) * q_binomial(k + j - r - 1, j - r) *
                        qbinom_ext(p - 1, k - r - 1);
        if (term.is_zero()) continue;
        long e = choose2(r) + choose2(k - r) + choose2(p + 1) -
                 static_cast<long>(n - j) * p;
        term = term.shifted(static_cast<int>(e));
        if ((n - j - p) % 2) term = -term;
        rhs += term;
    }
    return lhs == rhs;
}

} // namespace deltaq
