#ifndef DELTAQ_SYMFUNC_HPP
#define DELTAQ_SYMFUNC_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deltaq/partition.hpp"
#include "deltaq/qarith.hpp"
#include "deltaq/qlaurent.hpp"
#include "deltaq/tableaux.hpp"

namespace deltaq {

// Homogeneous symmetric function of a fixed degree, stored in the Schur
// basis with QLaurent coefficients.  Zero coefficients are never kept.
class SymFunc {
public:
    explicit SymFunc(int degree);
    static SymFunc zero(int degree) { return SymFunc(degree); }
    static SymFunc one() { return schur(Partition()); }
    static SymFunc schur(const Partition& lam);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, QLaurent>& terms() const { return terms_; }
    QLaurent coeff(const Partition& lam) const;

    void add_term(const Partition& lam, const QLaurent& c);   // accumulates

    SymFunc& operator+=(const SymFunc& o);                    // degree checked
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc scaled(const QLaurent& c) const;

    bool operator==(const SymFunc& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    // Largest / smallest q-exponent over all coefficients; RangeError on 0.
    int max_q_exp() const;
    int min_q_exp() const;

    // Every coefficient lies in Z_{>=0}[q].
    bool is_nonneg_poly() const;

    std::string str() const;

private:
    int degree_;
    std::map<Partition, QLaurent> terms_;
};

// omega involution: s_lam -> s_{lam'}.
SymFunc omega(const SymFunc& f);

// Hall inner product (Schur functions orthonormal); DegreeMismatchError
// when the degrees differ.
QLaurent hall_inner(const SymFunc& f, const SymFunc& g);

// Multiplication by e_j via the dual Pieri rule (vertical strip additions).
SymFunc e_multiply(int j, const SymFunc& f);

// Adjoint e_j^perp (vertical strip removals); degree drops by j.
SymFunc e_perp(int j, const SymFunc& f);

// Q'_mu = sum_lam K_{lam,mu}(q) s_lam (dual Hall-Littlewood at t = 0).
SymFunc qprime(const Partition& mu);

// Coefficient-wise reverse_coeffs at the common degree d;
// DegreeOverflowError names the offending partition.
SymFunc rev_q_sym(const SymFunc& f, int d);

// Monomial expansion in N variables: weak composition -> coefficient.
// Zero coefficients are omitted.
std::map<std::vector<int>, QLaurent> expand_in_vars(const SymFunc& f, int N);

// Element of Lambda(y) (x) Lambda(x), homogeneous of bidegree
// (ydegree, xdegree), in the Schur (x) Schur basis.
class BiSymFunc {
public:
    BiSymFunc(int ydegree, int xdegree);

    int ydegree() const { return ydeg_; }
    int xdegree() const { return xdeg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Partition, Partition>, QLaurent>& terms() const { return terms_; }

    void add_term(const Partition& ynu, const Partition& xmu, const QLaurent& c);

    BiSymFunc& operator+=(const BiSymFunc& o);
    friend BiSymFunc operator+(BiSymFunc a, const BiSymFunc& b) { return a += b; }

    bool operator==(const BiSymFunc& o) const {
        return ydeg_ == o.ydeg_ && xdeg_ == o.xdeg_ && terms_ == o.terms_;
    }

    std::string str() const;

private:
    int ydeg_, xdeg_;
    std::map<std::pair<Partition, Partition>, QLaurent> terms_;
};

// Outer product f(y) * g(x) as a BiSymFunc.
BiSymFunc bisym_product(const SymFunc& fy, const SymFunc& gx);

// Coefficient of s_nu(y): a SymFunc in x of degree xdegree.
SymFunc bisym_y_coefficient(const BiSymFunc& f, const Partition& nu);

} // namespace deltaq

#endif
