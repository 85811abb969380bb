#include "deltaq/delta.hpp"

#include <sstream>

#include "deltaq/error.hpp"
#include "deltaq/qarith.hpp"
#include "deltaq/tableaux.hpp"

namespace deltaq {

namespace {

// Shared shape of the two t = 0 expansions: a signed Laurent combination of
// reversed Q'_mu over partitions mu of n, where the mu-dependent scalar is
// supplied by the caller.  Results are checked to be honest Schur-positive
// polynomials before they leave the module.
template <typename Scalar>
SymFunc hall_littlewood_expansion(int n, Scalar&& scalar_for,
                                  const char* who) {
    if (n < 1) throw RangeError(std::string(who) + ": need n >= 1");
    SymFunc acc(n);
    for (const Partition& mu : enumerate_partitions(n)) {
        QLaurent c = scalar_for(mu);
        if (c.is_zero()) continue;
        int sign = (n - mu.length()) % 2;
        int b = b_stat(mu);
        long sq = 0;
        for (int m : mu.multiplicities()) sq += choose2(m + 1);
        int e = static_cast<int>(-n - 2L * b + sq);
        QLaurent factor = c * QLaurent::monomial(e) * q_multinomial(mu.multiplicities());
        if (sign) factor = -factor;
        acc += rev_q_sym(qprime(mu), b).scaled(factor);
    }
    for (const auto& [lam, coeff] : acc.terms()) {
        if (!coeff.is_polynomial() || !coeff.has_nonneg_int_coeffs()) {
            std::ostringstream os;
            os << who << ": coefficient of s" << lam.str()
               << " is not in Z_(>=0)[q]: " << coeff.str();
            throw NegativityError(os.str());
        }
    }
    return acc;
}

} // namespace

SymFunc delta_prime_schur_t0(const Partition& nu, int n) {
    return hall_littlewood_expansion(
        n,
        [&](const Partition& mu) {
            return principal_spec_schur(nu, mu.length() - 1, 1);
        },
        "delta_prime_schur_t0");
}

DeltaResult delta_prime_schur_result(const Partition& nu, int n) {
    SymFunc value = delta_prime_schur_t0(nu, n);
    int claimed = (n - 1) * nu.size() - b_stat(nu);
    return DeltaResult{std::move(value), nu, n, claimed};
}

SymFunc delta_prime_elem_t0(int k, int n) {
    if (k < 1 || k > n)
        throw RangeError("delta_prime_elem_t0: need 1 <= k <= n");
    QLaurent pre = QLaurent::monomial(static_cast<int>(choose2(k)));
    return hall_littlewood_expansion(
        n,
        [&](const Partition& mu) {
            return pre * q_binomial(mu.length() - 1, k - 1);
        },
        "delta_prime_elem_t0");
}

SymFunc lemma41_rhs(int k, int n) {
    if (k < 1 || k > n)
        throw RangeError("lemma41_rhs: need 1 <= k <= n");
    SymFunc acc(n);
    for (int r = k; r <= n; ++r) {
        int e = static_cast<int>(choose2(k) + choose2(r + 1) - static_cast<long>(n) * r);
        QLaurent c = QLaurent::monomial(e) * q_binomial(r - 1, k - 1);
        if ((n - r) % 2) c = -c;
        acc += d_poly(n, r).scaled(c);
    }
    return acc;
}

QLaurent p_coeff(const Partition& nu, int k) {
    if (k < nu.length() + 1 || k > nu.size() + 1)
        throw RangeError("p_coeff: need l(nu)+1 <= k <= |nu|+1");
    QLaurent acc;
    for (const Partition& rho : enumerate_partitions(nu.size(), k - 1))
        acc += QLaurent::monomial(b_stat(rho)) * q_multinomial(rho.multiplicities()) *
               kostka_foulkes(nu, rho);
    return acc * QLaurent::monomial(static_cast<int>(nu.size() - choose2(k)));
}

SymFunc theorem12_rhs(const Partition& nu, int n) {
    if (n < 1) throw RangeError("theorem12_rhs: need n >= 1");
    SymFunc acc(n);
    int kmax = std::min(nu.size() + 1, n);
    for (int k = nu.length() + 1; k <= kmax; ++k) {
        SymFunc inner(n);
        for (const Partition& mu : enumerate_partitions(n, k)) {
            QLaurent c = QLaurent::monomial(bbar_stat(mu)) * q_multinomial(mu.multiplicities());
            inner += qprime(mu).scaled(c);
        }
        acc += inner.scaled(p_coeff(nu, k));
    }
    return acc;
}

SymFunc delta_unprimed_schur_t0(const Partition& nu, int n) {
    if (n < 1) throw RangeError("delta_unprimed_schur_t0: need n >= 1");
    SymFunc acc(n);
    for (const Partition& rho : horizontal_strip_removals(nu))
        acc += delta_prime_schur_t0(rho, n);
    return acc;
}

QLaurent simple2_rhs(const Partition& nu, int j) {
    if (j < 0) throw RangeError("simple2_rhs: need j >= 0");
    QLaurent acc;
    for (const Partition& rho : enumerate_partitions(nu.size())) {
        QLaurent kf = kostka_foulkes(nu, rho);
        if (kf.is_zero()) continue;
        acc += QLaurent::monomial(b_stat(rho)) * q_binomial(j, rho.length()) *
               q_multinomial(rho.multiplicities()) * kf;
    }
    return acc;
}

namespace {

SymFunc c_or_boundary(int n, int k) {
    if (n == 0) return k == 0 ? SymFunc::one() : SymFunc::zero(0);
    if (k < 1 || k > n) return SymFunc::zero(n);
    return c_via_qprime(n, k);
}

} // namespace

BiSymFunc prop51_lhs(int m, int n) {
    if (m < 0 || n < 1) throw RangeError("prop51_lhs: need m >= 0, n >= 1");
    BiSymFunc acc(m, n);
    for (const Partition& nu : enumerate_partitions(m))
        acc += bisym_product(SymFunc::schur(nu), omega(delta_prime_schur_t0(nu, n)));
    return acc;
}

BiSymFunc prop51_rhs(int m, int n) {
    if (m < 0 || n < 1) throw RangeError("prop51_rhs: need m >= 0, n >= 1");
    BiSymFunc acc(m, n);
    for (int k = 1; k <= n; ++k) {
        SymFunc cy = c_or_boundary(m, k - 1);
        if (cy.is_zero()) continue;
        SymFunc cx = c_via_qprime(n, k);
        acc += bisym_product(omega(cy).scaled(QLaurent::monomial(m - k + 1)), omega(cx));
    }
    return acc;
}

std::pair<BiSymFunc, BiSymFunc> prop52_check(int m, int n) {
    if (m < 0 || n < 1) throw RangeError("prop52_check: need m >= 0, n >= 1");
    BiSymFunc lhs(m, n);
    for (const Partition& nu : enumerate_partitions(m)) {
        int d = (n - 1) * m - b_stat(nu);
        SymFunc rev = rev_q_sym(omega(delta_prime_schur_t0(nu, n)), d);
        lhs += bisym_product(SymFunc::schur(nu).scaled(QLaurent::monomial(b_stat(nu))), rev);
    }
    return {lhs, grfrob_V(n, m)};
}

BiSymFunc grfrob_V(int n, int m) {
    if (m < 0 || n < 1) throw RangeError("grfrob_V: need m >= 0, n >= 1");
    BiSymFunc acc(m, n);
    for (int k = 1; k <= n; ++k) {
        SymFunc dy = d_poly(m, k - 1);
        if (dy.is_zero()) continue;
        SymFunc dx = d_poly(n, k);
        if (dx.is_zero()) continue;
        long e = static_cast<long>(m) * n - static_cast<long>(k) * m -
                 static_cast<long>(k) * n + n + static_cast<long>(k) * (k - 1);
        acc += bisym_product(dy.scaled(QLaurent::monomial(static_cast<int>(e))), dx);
    }
    return acc;
}

SymFunc grfrob_R_nnu(const Partition& nu, int n) {
    if (n < 1) throw RangeError("grfrob_R_nnu: need n >= 1");
    SymFunc c = bisym_y_coefficient(grfrob_V(n, nu.size()), nu);
    return c.scaled(QLaurent::monomial(-b_stat(nu)));
}

} // namespace deltaq
