#include "deltaq/osp.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "deltaq/error.hpp"

namespace deltaq {

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
    std::vector<int> seen;
    for (const auto& block : blocks_) {
        if (block.empty()) throw RangeError("OrderedSetPartition: empty block");
        for (size_t i = 0; i < block.size(); ++i) {
            if (block[i] < 1) throw RangeError("OrderedSetPartition: elements must be >= 1");
            if (i > 0 && block[i] <= block[i - 1])
                throw RangeError("OrderedSetPartition: blocks must be strictly increasing");
            seen.push_back(block[i]);
        }
    }
    n_ = static_cast<int>(seen.size());
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < n_; ++i)
        if (seen[i] != i + 1)
            throw RangeError("OrderedSetPartition: blocks must partition {1..n}");
}

std::string OrderedSetPartition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) os << "|";
        for (int v : blocks_[b]) os << v;
    }
    os << ")";
    return os.str();
}

std::vector<OrderedSetPartition> enumerate_osp(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw RangeError("enumerate_osp: need 1 <= k <= n");
    std::vector<OrderedSetPartition> out;
    std::vector<int> assign(n);
    std::vector<int> count(k, 0);
    // Surjections {1..n} -> {1..k} in lexicographic order of the assignment
    // vector; element i goes to block assign[i].
    std::function<void(int)> walk = [&](int i) {
        if (i == n) {
            std::vector<std::vector<int>> blocks(k);
            for (int e = 0; e < n; ++e) blocks[assign[e]].push_back(e + 1);
            out.push_back(OrderedSetPartition(std::move(blocks)));
            return;
        }
        int empties = 0;
        for (int b = 0; b < k; ++b)
            if (count[b] == 0) ++empties;
        if (empties > n - i) return;             // cannot fill all blocks any more
        bool must_fill = (empties == n - i);     // only empty blocks may be chosen
        for (int b = 0; b < k; ++b) {
            if (must_fill && count[b] != 0) continue;
            assign[i] = b;
            ++count[b];
            walk(i + 1);
            --count[b];
        }
    };
    walk(0);
    return out;
}

int inv(const OrderedSetPartition& sigma) {
    int n = sigma.n();
    std::vector<int> block_of(n + 1, 0);
    std::vector<bool> minimal(n + 1, false);
    for (int b = 0; b < sigma.k(); ++b) {
        const auto& block = sigma.blocks()[b];
        for (int v : block) block_of[v] = b;
        minimal[block.front()] = true;
    }
    int count = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (block_of[i] > block_of[j] && minimal[i]) ++count;
    return count;
}

std::vector<int> reading_word(const OrderedSetPartition& sigma) {
    int maxh = 0;
    for (const auto& block : sigma.blocks())
        maxh = std::max(maxh, static_cast<int>(block.size()));
    std::vector<int> word;
    word.reserve(sigma.n());
    for (int y = maxh; y >= 1; --y)
        for (const auto& block : sigma.blocks())
            if (static_cast<int>(block.size()) >= y) word.push_back(block[y - 1]);
    return word;
}

std::set<int> ides(const std::vector<int>& pi) {
    int n = static_cast<int>(pi.size());
    std::vector<int> inverse(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (pi[i] < 1 || pi[i] > n || inverse[pi[i]] != 0)
            throw RangeError("ides: not a permutation of {1..n}");
        inverse[pi[i]] = i + 1;
    }
    std::set<int> des;
    for (int i = 1; i < n; ++i)
        if (inverse[i] > inverse[i + 1]) des.insert(i);
    return des;
}

std::map<std::vector<int>, QLaurent> fundamental_qsym_expand(int n, const std::set<int>& S, int N) {
    if (n < 0 || N < 0) throw RangeError("fundamental_qsym_expand: negative argument");
    for (int s : S)
        if (s < 1 || s >= n)
            throw RangeError("fundamental_qsym_expand: descent outside {1..n-1}");
    std::map<std::vector<int>, QLaurent> table;
    std::vector<int> content(N, 0);
    // Weakly increasing sequences i_1 <= ... <= i_n <= N, strict at S.
    std::function<void(int, int)> walk = [&](int pos, int minvar) {
        if (pos == n) {
            auto it = table.find(content);
            if (it == table.end())
                table[content] = QLaurent::one();
            else
                it->second += QLaurent::one();
            return;
        }
        for (int v = minvar; v <= N; ++v) {
            ++content[v - 1];
            walk(pos + 1, S.count(pos + 1) ? v + 1 : v);
            --content[v - 1];
        }
    };
    if (n == 0) {
        table[content] = QLaurent::one();
        return table;
    }
    walk(0, 1);
    return table;
}

std::map<std::vector<int>, QLaurent> c_via_osp(int n, int k, int N) {
    if (n < 1 || k < 1 || k > n)
        throw RangeError("c_via_osp: need 1 <= k <= n");
    if (N < 0) throw RangeError("c_via_osp: negative variable count");
    // Group by inverse descent set first so each F_{n,S} is expanded once.
    std::map<std::set<int>, QLaurent> by_ides;
    for (const OrderedSetPartition& sigma : enumerate_osp(n, k)) {
        std::set<int> S = ides(reading_word(sigma));
        by_ides[S] += QLaurent::monomial(inv(sigma));
    }
    std::map<std::vector<int>, QLaurent> table;
    for (const auto& [S, coeff] : by_ides) {
        for (const auto& [content, mult] : fundamental_qsym_expand(n, S, N)) {
            auto it = table.find(content);
            if (it == table.end()) {
                QLaurent v = coeff * mult;
                if (!v.is_zero()) table[content] = v;
            } else {
                it->second += coeff * mult;
                if (it->second.is_zero()) table.erase(it);
            }
        }
    }
    return table;
}

SymFunc c_via_qprime(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw RangeError("c_via_qprime: need 1 <= k <= n");
    SymFunc acc(n);
    for (const Partition& mu : enumerate_partitions(n, k)) {
        QLaurent c = QLaurent::monomial(bbar_stat(mu)) * q_multinomial(mu.multiplicities());
        acc += qprime(mu).scaled(c);
    }
    return omega(acc);
}

SymFunc d_poly(int n, int k) {
    if (n < 0) throw RangeError("d_poly: negative n");
    if (n == 0) return k == 0 ? SymFunc::one() : SymFunc::zero(0);
    if (k < 1 || k > n) return SymFunc::zero(n);
    int d = (k - 1) * n - static_cast<int>(choose2(k));
    return rev_q_sym(omega(c_via_qprime(n, k)), d);
}

QLaurent shuffle_inner(int n, int k, const std::vector<int>& alpha) {
    if (n < 1 || k < 1 || k > n)
        throw RangeError("shuffle_inner: need 1 <= k <= n");
    int total = 0;
    for (int a : alpha) {
        if (a < 1) throw RangeError("shuffle_inner: composition parts must be >= 1");
        total += a;
    }
    if (total != n) throw RangeError("shuffle_inner: alpha must compose n");

    // run_of[v] = index of the decreasing run containing the value v.
    std::vector<int> run_of(n + 1, 0);
    int v = 1;
    for (size_t r = 0; r < alpha.size(); ++r)
        for (int i = 0; i < alpha[r]; ++i) run_of[v++] = static_cast<int>(r);

    QLaurent acc;
    for (const OrderedSetPartition& sigma : enumerate_osp(n, k)) {
        std::vector<int> word = reading_word(sigma);
        // The word is an alpha-shuffle iff within each run the values appear
        // in decreasing order.
        std::vector<int> last(alpha.size(), 0);
        bool ok = true;
        for (int w : word) {
            int r = run_of[w];
            if (last[r] != 0 && w > last[r]) { ok = false; break; }
            last[r] = w;
        }
        if (ok) acc += QLaurent::monomial(inv(sigma));
    }
    return acc;
}

} // namespace deltaq
