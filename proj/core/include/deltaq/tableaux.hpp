#ifndef DELTAQ_TABLEAUX_HPP
#define DELTAQ_TABLEAUX_HPP

#include <tuple>
#include <vector>

#include "deltaq/partition.hpp"
#include "deltaq/qlaurent.hpp"

namespace deltaq {

// Semistandard Young tableau: rows weakly increase left to right, columns
// strictly increase top to bottom.  Rows are stored top to bottom.
class Tableau {
public:
    explicit Tableau(std::vector<std::vector<int>> rows);   // validates

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;

    // Rows read left to right, bottom row first.
    std::vector<int> reading_word() const;

private:
    std::vector<std::vector<int>> rows_;
};

// All SSYT of the given shape and content (content_i copies of the letter i),
// in a deterministic order.  RangeError when |shape| != |content|.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content);

// All SSYT of the given shape with entries in {1, ..., max_entry}.
std::vector<Tableau> enumerate_ssyt_bounded(const Partition& shape, int max_entry);

// Lascoux-Schutzenberger charge of a word whose content is a partition
// (weakly decreasing letter multiplicities); RangeError otherwise.
// Standard subwords are extracted cyclically right to left: take the
// rightmost available 1, then scanning leftward (wrapping) the next 2, and
// so on; within a subword index(1) = 0 and index(i+1) = index(i) + 1 exactly
// when i+1 sits to the right of i.  Charge is the sum of all indices.
int charge(const std::vector<int>& word);

// Kostka-Foulkes polynomial K_{lam,mu}(q) = sum of q^charge over SSYT of
// shape lam and content mu.  Memoized process-wide (thread safe); the memo
// is a pure cache and never changes values.
QLaurent kostka_foulkes(const Partition& lam, const Partition& mu);

// Number of SSYT of shape lam and content mu.
long kostka_number(const Partition& lam, const Partition& mu);

// Principal specialization s_nu(q^start, q^(start+1), ..., q^(start+count-1))
// as a Laurent polynomial (start may be any integer; count >= 0).
QLaurent principal_spec_schur(const Partition& nu, int count, int start);

// Process-wide Kostka-Foulkes memo control, used by the persistent cache.
std::vector<std::tuple<Partition, Partition, QLaurent>> kf_memo_snapshot();
void kf_memo_insert(const Partition& lam, const Partition& mu, const QLaurent& kf);
void kf_memo_clear();
long kf_memo_size();

} // namespace deltaq

#endif
