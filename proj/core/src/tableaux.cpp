#include "deltaq/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

#include "deltaq/error.hpp"

namespace deltaq {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].empty()) throw RangeError("Tableau: empty row");
        if (r > 0 && rows_[r].size() > rows_[r - 1].size())
            throw RangeError("Tableau: row lengths must weakly decrease");
        for (size_t c = 0; c < rows_[r].size(); ++c) {
            if (rows_[r][c] < 1) throw RangeError("Tableau: entries must be >= 1");
            if (c > 0 && rows_[r][c] < rows_[r][c - 1])
                throw RangeError("Tableau: rows must weakly increase");
            if (r > 0 && rows_[r][c] <= rows_[r - 1][c])
                throw RangeError("Tableau: columns must strictly increase");
        }
    }
}

Partition Tableau::shape() const {
    std::vector<int> lens;
    for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lens));
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> w;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

namespace {

// SSYT of shape lam correspond to chains of partitions where the cells
// holding the letter v form a horizontal strip.  The enumeration below grows
// the tableau letter by letter; `rowcount[r]` is the number of cells filled
// so far in row r.
void grow_ssyt(const Partition& shape, int letter, int max_letter,
               const std::function<int(int)>& strip_size,   // required size, -1 = free
               std::vector<int>& rowcount,
               std::vector<std::vector<int>>& rows,
               const std::function<void(const std::vector<std::vector<int>>&)>& sink) {
    if (letter > max_letter) {
        for (int r = 0; r < shape.length(); ++r)
            if (rowcount[r] != shape.parts()[r]) return;
        sink(rows);
        return;
    }
    int nrows = shape.length();
    int need = strip_size(letter);
    // Choose, bottom row upward, how many cells of `letter` to append to
    // each row so that the added cells form a horizontal strip.
    std::function<void(int, int)> place = [&](int row, int placed) {
        if (need >= 0 && placed > need) return;
        if (row < 0) {
            if (need >= 0 && placed != need) return;
            grow_ssyt(shape, letter + 1, max_letter, strip_size, rowcount, rows, sink);
            return;
        }
        int start = rowcount[row];
        // Horizontal strip condition: cells added to row `row` must not sit
        // directly below cells added to row `row` in the same step, i.e. the
        // new cells in this row must end at or before the previous fill
        // level of the row above (strict column increase handles the rest).
        int cap = shape.parts()[row];
        if (row > 0) cap = std::min(cap, rowcount[row - 1]);
        for (int add = 0; start + add <= cap; ++add) {
            for (int c = start; c < start + add; ++c) rows[row].push_back(letter);
            rowcount[row] = start + add;
            place(row - 1, placed + add);
            rowcount[row] = start;
            rows[row].resize(start);
        }
    };
    place(nrows - 1, 0);
}

std::vector<Tableau> enumerate_ssyt_impl(const Partition& shape, int max_letter,
                                         const std::function<int(int)>& strip_size) {
    std::vector<Tableau> out;
    std::vector<int> rowcount(shape.length(), 0);
    std::vector<std::vector<int>> rows(shape.length());
    if (shape.empty()) {
        out.push_back(Tableau({}));
        return out;
    }
    grow_ssyt(shape, 1, max_letter, strip_size, rowcount, rows,
              [&](const std::vector<std::vector<int>>& r) { out.push_back(Tableau(r)); });
    return out;
}

} // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, const Partition& content) {
    if (shape.size() != content.size())
        throw RangeError("enumerate_ssyt: |shape| != |content|");
    if (shape.empty()) return {Tableau({})};
    return enumerate_ssyt_impl(shape, content.length(),
                               [&](int letter) { return content.part(letter); });
}

std::vector<Tableau> enumerate_ssyt_bounded(const Partition& shape, int max_entry) {
    if (max_entry < 0) throw RangeError("enumerate_ssyt_bounded: negative bound");
    if (shape.empty()) return {Tableau({})};
    if (max_entry == 0) return {};
    return enumerate_ssyt_impl(shape, max_entry, [](int) { return -1; });
}

int charge(const std::vector<int>& word) {
    // Validate that the content is a partition.
    int maxv = 0;
    for (int v : word) {
        if (v < 1) throw RangeError("charge: letters must be >= 1");
        maxv = std::max(maxv, v);
    }
    std::vector<int> mult(maxv, 0);
    for (int v : word) ++mult[v - 1];
    for (int i = 1; i < maxv; ++i)
        if (mult[i] > mult[i - 1])
            throw RangeError("charge: content is not a partition");

    int n = static_cast<int>(word.size());
    std::vector<bool> used(n, false);
    int total = 0;
    int remaining = n;
    while (remaining > 0) {
        // Extract one standard subword: rightmost available 1, then moving
        // leftward (cyclically) the first available 2, and so on.
        int pos = -1;
        for (int i = n - 1; i >= 0; --i)
            if (!used[i] && word[i] == 1) { pos = i; break; }
        if (pos < 0) throw RangeError("charge: content is not a partition");
        used[pos] = true;
        --remaining;
        int index = 0, prev_pos = pos;
        for (int letter = 2;; ++letter) {
            int found = -1;
            for (int step = 1; step <= n; ++step) {
                int i = (prev_pos - step % n + n) % n;
                if (!used[i] && word[i] == letter) { found = i; break; }
            }
            if (found < 0) break;
            used[found] = true;
            --remaining;
            if (found > prev_pos) ++index;   // letter sits to the right
            total += index;
            prev_pos = found;
        }
    }
    return total;
}

namespace {

std::mutex kf_mutex;
std::map<std::pair<Partition, Partition>, QLaurent>& kf_memo() {
    static std::map<std::pair<Partition, Partition>, QLaurent> memo;
    return memo;
}

QLaurent kostka_foulkes_compute(const Partition& lam, const Partition& mu) {
    QLaurent f;
    for (const Tableau& t : enumerate_ssyt(lam, mu)) {
        int c = charge(t.reading_word());
        f += QLaurent::monomial(c);
    }
    return f;
}

} // namespace

QLaurent kostka_foulkes(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw RangeError("kostka_foulkes: |lam| != |mu|");
    auto key = std::make_pair(lam, mu);
    {
        std::lock_guard<std::mutex> lock(kf_mutex);
        auto it = kf_memo().find(key);
        if (it != kf_memo().end()) return it->second;
    }
    QLaurent f = kostka_foulkes_compute(lam, mu);
    std::lock_guard<std::mutex> lock(kf_mutex);
    kf_memo().emplace(std::move(key), f);
    return f;
}

long kostka_number(const Partition& lam, const Partition& mu) {
    return static_cast<long>(enumerate_ssyt(lam, mu).size());
}

QLaurent principal_spec_schur(const Partition& nu, int count, int start) {
    if (count < 0) throw RangeError("principal_spec_schur: negative variable count");
    QLaurent f;
    for (const Tableau& t : enumerate_ssyt_bounded(nu, count)) {
        int e = 0;
        for (const auto& row : t.rows())
            for (int v : row) e += start + v - 1;
        f += QLaurent::monomial(e);
    }
    return f;
}

std::vector<std::tuple<Partition, Partition, QLaurent>> kf_memo_snapshot() {
    std::lock_guard<std::mutex> lock(kf_mutex);
    std::vector<std::tuple<Partition, Partition, QLaurent>> out;
    out.reserve(kf_memo().size());
    for (const auto& [key, kf] : kf_memo())
        out.emplace_back(key.first, key.second, kf);
    return out;
}

void kf_memo_insert(const Partition& lam, const Partition& mu, const QLaurent& kf) {
    std::lock_guard<std::mutex> lock(kf_mutex);
    kf_memo().emplace(std::make_pair(lam, mu), kf);
}

void kf_memo_clear() {
    std::lock_guard<std::mutex> lock(kf_mutex);
    kf_memo().clear();
}

long kf_memo_size() {
    std::lock_guard<std::mutex> lock(kf_mutex);
    return static_cast<long>(kf_memo().size());
}

} // namespace deltaq
