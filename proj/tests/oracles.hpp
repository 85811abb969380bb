#ifndef DELTAQ_TESTS_ORACLES_HPP
#define DELTAQ_TESTS_ORACLES_HPP

// Independent reference implementations used to validate the library.  They
// deliberately use different algorithms from the production code: recurrences
// instead of factorial quotients, brute-force fills instead of row-chain
// growth, and the hook-content product instead of tableau sums.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "deltaq/partition.hpp"
#include "deltaq/qarith.hpp"
#include "deltaq/qlaurent.hpp"

namespace oracles {

// q-polynomial from integer coefficients, constant term first.
inline deltaq::QLaurent poly(std::initializer_list<long> coeffs) {
    deltaq::QLaurent f;
    int e = 0;
    for (long c : coeffs) {
        if (c) f += deltaq::QLaurent::monomial(e, deltaq::Rational(c));
        ++e;
    }
    return f;
}

// Gaussian binomial via the Pascal recurrence
// [n k] = [n-1 k-1] + q^k [n-1 k].
inline deltaq::QLaurent qbinom(int n, int k) {
    if (k < 0 || k > n) return deltaq::QLaurent::zero();
    static std::map<std::pair<int, int>, deltaq::QLaurent> memo;
    auto it = memo.find({n, k});
    if (it != memo.end()) return it->second;
    deltaq::QLaurent r;
    if (n == 0)
        r = deltaq::QLaurent::one();
    else
        r = qbinom(n - 1, k - 1) + qbinom(n - 1, k).shifted(k);
    memo[{n, k}] = r;
    return r;
}

// Stirling numbers of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline long stirling2(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n <= 0 || k <= 0 || k > n) return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

// Brute-force semistandard fillings: assign every cell a letter bounded by
// max_entry in row-major order, checking the row-weak / column-strict
// conditions cell by cell.  Returns the full list of fillings (rows top to
// bottom).
inline std::vector<std::vector<std::vector<int>>> ssyt_fillings(const deltaq::Partition& shape,
                                                                int max_entry) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= shape.length(); ++i)
        rows.push_back(std::vector<int>(shape.part(i), 0));
    int total = shape.size();
    auto cell = [&](int idx) {
        int r = 0;
        while (idx >= static_cast<int>(rows[r].size())) idx -= static_cast<int>(rows[r].size()), ++r;
        return std::pair<int, int>(r, idx);
    };
    std::vector<int> dummy;
    std::function<void(int)> walk = [&](int idx) {
        if (idx == total) {
            out.push_back(rows);
            return;
        }
        auto [r, c] = cell(idx);
        for (int v = 1; v <= max_entry; ++v) {
            if (c > 0 && v < rows[r][c - 1]) continue;          // weak rows
            if (r > 0 && v <= rows[r - 1][c]) continue;         // strict columns
            rows[r][c] = v;
            walk(idx + 1);
        }
        rows[r][c] = 0;
    };
    if (total == 0)
        out.push_back(rows);
    else
        walk(0);
    return out;
}

// Kostka number by brute force: fillings of the shape with the exact
// letter content.
inline long kostka(const deltaq::Partition& shape, const deltaq::Partition& content) {
    long count = 0;
    for (const auto& rows : ssyt_fillings(shape, content.length())) {
        std::vector<int> c(content.length(), 0);
        for (const auto& row : rows)
            for (int v : row) ++c[v - 1];
        bool ok = true;
        for (int i = 0; i < content.length(); ++i)
            if (c[i] != content.part(i + 1)) { ok = false; break; }
        if (ok) ++count;
    }
    return count;
}

// Hook-content formula: s_lam(1, q, ..., q^(m-1))
//   = q^b(lam) * prod_cells [m + j - i]_q / [hook(i,j)]_q
// with 1-based cell coordinates (i, j).
inline deltaq::QLaurent hook_content_spec(const deltaq::Partition& lam, int m) {
    if (lam.length() > m) return deltaq::QLaurent::zero();
    deltaq::QLaurent num = deltaq::QLaurent::one();
    deltaq::QLaurent den = deltaq::QLaurent::one();
    deltaq::Partition conj = lam.conjugate();
    for (int i = 1; i <= lam.length(); ++i)
        for (int j = 1; j <= lam.part(i); ++j) {
            int hook = (lam.part(i) - j) + (conj.part(j) - i) + 1;
            num *= deltaq::q_int(m + j - i);
            den *= deltaq::q_int(hook);
        }
    return deltaq::exact_div(num, den).shifted(deltaq::b_stat(lam));
}

} // namespace oracles

#endif
