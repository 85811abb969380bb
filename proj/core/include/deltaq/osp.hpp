#ifndef DELTAQ_OSP_HPP
#define DELTAQ_OSP_HPP

#include <set>
#include <vector>

#include "deltaq/qlaurent.hpp"
#include "deltaq/symfunc.hpp"

namespace deltaq {

// Ordered set partition of {1, ..., n} into k nonempty blocks.  Blocks are
// stored in order; each block keeps its elements ascending.
class OrderedSetPartition {
public:
    explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);   // validates

    int n() const { return n_; }
    int k() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    std::string str() const;   // "(27|135|46)" style

private:
    std::vector<std::vector<int>> blocks_;
    int n_ = 0;
};

// All ordered set partitions of {1..n} into k blocks, deterministic order;
// RangeError unless 1 <= k <= n (or n = k = 0, giving the empty partition's
// single empty arrangement is NOT included: n >= 1 required).
std::vector<OrderedSetPartition> enumerate_osp(int n, int k);

// inv statistic: pairs i < j with the block of i strictly right of the
// block of j and i minimal in its block.
int inv(const OrderedSetPartition& sigma);

// Reading word: write each block as a column with entries increasing bottom
// to top (columns bottom-justified), then read rows top to bottom, left to
// right.  Equivalently, for each height y from the largest block size down
// to 1, emit the y-th smallest element of every block of size >= y.
std::vector<int> reading_word(const OrderedSetPartition& sigma);

// iDes(pi) = Des(pi^{-1}) for a permutation in one-line notation;
// RangeError when pi is not a permutation of {1..n}.
std::set<int> ides(const std::vector<int>& pi);

// Monomial expansion of the fundamental quasisymmetric function F_{n,S} in
// the variables x_1..x_N; S must be a subset of {1..n-1}.
std::map<std::vector<int>, QLaurent> fundamental_qsym_expand(int n, const std::set<int>& S, int N);

// C_{n,k} as a monomial table in N variables, computed from ordered set
// partitions: sum over OP_{n,k} of q^inv * F_{n, iDes(reading word)}.
std::map<std::vector<int>, QLaurent> c_via_osp(int n, int k, int N);

// C_{n,k} in the Schur basis, computed through the dual Hall-Littlewood
// route: omega of sum over mu |- n with length k of
// q^bbar(mu) * [k choose multiplicities]_q * Q'_mu.  Requires 1 <= k <= n.
SymFunc c_via_qprime(int n, int k);

// D_{n,k} = rev_q(omega C_{n,k}) at degree (k-1)n - binom(k,2).
// By convention zero when k > n or k < 1 (n >= 1), and D_{0,0} = 1.
SymFunc d_poly(int n, int k);

// <C_{n,k}, e_alpha> computed directly from ordered set partitions whose
// reading word shuffles the decreasing runs induced by the composition
// alpha; alpha must be a composition of n.
QLaurent shuffle_inner(int n, int k, const std::vector<int>& alpha);

} // namespace deltaq

#endif
