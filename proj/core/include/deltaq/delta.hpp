#ifndef DELTAQ_DELTA_HPP
#define DELTAQ_DELTA_HPP

#include <utility>

#include "deltaq/osp.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/qlaurent.hpp"
#include "deltaq/symfunc.hpp"

namespace deltaq {

// A delta operator value together with the degree data the grading claims
// attach to it: for nonzero values the top q-exponent equals
// (n-1)|nu| - b(nu).
struct DeltaResult {
    SymFunc value;
    Partition nu;
    int n;
    int claimed_qdegree;
};

// Delta'_{s_nu} e_n at t = 0: the Hall-Littlewood expansion
//   sum over mu |- n of (-1)^(n - l(mu)) * s_nu(q, ..., q^(l(mu)-1))
//     * q^(-n - 2 b(mu) + sum_i binom(m_i(mu)+1, 2))
//     * [l(mu) choose multiplicities]_q * rev_q(Q'_mu, b(mu)).
// The assembled result must be Schur positive with polynomial coefficients;
// NegativityError otherwise.  n >= 1.
SymFunc delta_prime_schur_t0(const Partition& nu, int n);

DeltaResult delta_prime_schur_result(const Partition& nu, int n);

// Delta'_{e_{k-1}} e_n at t = 0 (same expansion with the elementary
// specialization q^binom(k,2) [l(mu)-1 choose k-1]_q); 1 <= k <= n.
SymFunc delta_prime_elem_t0(int k, int n);

// q^binom(k,2) * sum_{r=k}^{n} (-1)^(n-r) q^(binom(r+1,2) - nr)
//   * [r-1 choose k-1]_q * D_{n,r}.
SymFunc lemma41_rhs(int k, int n);

// P_{nu,k-1}(q) = q^(|nu| - binom(k,2)) * sum over rho of size |nu| with
// l(rho) = k-1 of q^b(rho) [k-1 choose multiplicities]_q K_{nu,rho}(q);
// RangeError unless l(nu)+1 <= k <= |nu|+1.
QLaurent p_coeff(const Partition& nu, int k);

// sum_{k = l(nu)+1}^{min(|nu|+1, n)} P_{nu,k-1}(q) *
//   sum over mu |- n, l(mu) = k of q^bbar(mu) [k choose mult]_q Q'_mu.
// Equals omega(delta_prime_schur_t0(nu, n)).
SymFunc theorem12_rhs(const Partition& nu, int n);

// Unprimed Delta_{s_nu} e_n at t = 0: sum of delta_prime_schur_t0 over all
// horizontal strip removals of nu.
SymFunc delta_unprimed_schur_t0(const Partition& nu, int n);

// sum over rho of size |nu| of q^b(rho) [j choose l(rho)]_q
//   [l(rho) choose mult(rho)]_q K_{nu,rho}(q); equals
// principal_spec_schur(nu, j, 0) = s_nu(1, q, ..., q^(j-1)).
QLaurent simple2_rhs(const Partition& nu, int j);

// Both sides of the two graded Frobenius factorizations; m = y-degree,
// n = x-degree.
BiSymFunc prop51_lhs(int m, int n);
BiSymFunc prop51_rhs(int m, int n);
std::pair<BiSymFunc, BiSymFunc> prop52_check(int m, int n);

// grFrob of the two-sided module: sum_k q^(mn - km - kn + n + k(k-1))
//   * D_{m,k-1}(y) * D_{n,k}(x).
BiSymFunc grfrob_V(int n, int m);

// grFrob of the Hom-space module: q^(-b(nu)) times the coefficient of
// s_nu(y) in grfrob_V(n, |nu|).  Equals rev_q(omega(delta_prime_schur_t0))
// at degree (n-1)|nu| - b(nu).
SymFunc grfrob_R_nnu(const Partition& nu, int n);

} // namespace deltaq

#endif
