#ifndef DELTAQ_PARTITION_HPP
#define DELTAQ_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

namespace deltaq {

// Integer partition: a weakly decreasing list of positive parts.  The empty
// partition is allowed.  Ordering is the canonical listing order used for
// all serialized output: within or across weights, a partition precedes
// another when it is lexicographically larger part by part (e.g. for n = 3
// the order is (3), (2,1), (1,1,1)).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);   // validates; RangeError

    int size() const { return size_; }            // |lambda|, sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    // Part by 1-based row index; 0 beyond the last row.
    int part(int i) const;

    // Multiplicity vector (m_1, ..., m_max): m_i = number of parts equal i.
    std::vector<int> multiplicities() const;

    Partition conjugate() const;

    bool contains(const Partition& mu) const;     // Young-diagram inclusion

    // Dominance order; RangeError when sizes differ.
    bool dominates(const Partition& mu) const;

    std::strong_ordering operator<=>(const Partition& o) const;
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    // "(3,1)" or "()" for the empty partition.
    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// b(lambda) = sum_i (i-1) * lambda_i.
int b_stat(const Partition& lam);

// bbar(lambda) = b(lambda) - binom(length, 2).
int bbar_stat(const Partition& lam);

// binom(n, 2) helper used throughout the formulas; 0 for n < 2.
long choose2(long n);

// All partitions of n in canonical order; n >= 0 (RangeError otherwise).
std::vector<Partition> enumerate_partitions(int n);

// All partitions of n with exactly `length` parts, canonical order.
std::vector<Partition> enumerate_partitions(int n, int length);

// All mu obtained from lam by removing a vertical strip of size j (at most
// one cell per row).  j may be 0 (returns lam itself) up to any size; an
// empty list when no removal exists.  RangeError for j < 0.
std::vector<Partition> vertical_strip_removals(const Partition& lam, int j);

// All rho contained in nu with nu/rho a horizontal strip (at most one cell
// per column), of any size including 0.
std::vector<Partition> horizontal_strip_removals(const Partition& nu);

} // namespace deltaq

#endif
