#include "deltaq/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "deltaq/error.hpp"

namespace deltaq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw RangeError("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw RangeError("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw RangeError("Partition: row index must be >= 1");
    return i <= length() ? parts_[i - 1] : 0;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_) ++m[p - 1];
    return m;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int col = 1; col <= (parts_.empty() ? 0 : parts_[0]); ++col) {
        int h = 0;
        for (int p : parts_)
            if (p >= col) ++h;
        c.push_back(h);
    }
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

bool Partition::dominates(const Partition& mu) const {
    if (size_ != mu.size_)
        throw RangeError("Partition::dominates: sizes differ");
    int a = 0, b = 0;
    int rows = std::max(length(), mu.length());
    for (int i = 1; i <= rows; ++i) {
        a += part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    size_t rows = std::max(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < rows; ++i) {
        int a = i < parts_.size() ? parts_[i] : 0;
        int b = i < o.parts_.size() ? o.parts_[i] : 0;
        if (a != b) return b <=> a;    // larger part sorts first
    }
    return std::strong_ordering::equal;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

int b_stat(const Partition& lam) {
    int s = 0;
    const auto& p = lam.parts();
    for (size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

int bbar_stat(const Partition& lam) {
    return b_stat(lam) - static_cast<int>(choose2(lam.length()));
}

long choose2(long n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

namespace {

void emit_partitions(int remaining, int maxpart, std::vector<int>& prefix,
                     const std::function<void(const std::vector<int>&)>& sink) {
    if (remaining == 0) {
        sink(prefix);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        prefix.push_back(p);
        emit_partitions(remaining - p, p, prefix, sink);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw RangeError("enumerate_partitions: negative weight");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, [&](const std::vector<int>& p) {
        out.push_back(Partition(p));
    });
    return out;
}

std::vector<Partition> enumerate_partitions(int n, int length) {
    if (n < 0) throw RangeError("enumerate_partitions: negative weight");
    std::vector<Partition> out;
    for (const Partition& p : enumerate_partitions(n))
        if (p.length() == length) out.push_back(p);
    return out;
}

std::vector<Partition> vertical_strip_removals(const Partition& lam, int j) {
    if (j < 0) throw RangeError("vertical_strip_removals: negative strip size");
    std::vector<Partition> out;
    int rows = lam.length();
    std::vector<int> mu(rows);
    // Each row loses 0 or 1 cells; the result must stay weakly decreasing.
    std::function<void(int, int)> walk = [&](int row, int removed) {
        if (removed > j) return;
        if (row == rows) {
            if (removed == j) out.push_back(Partition(mu));
            return;
        }
        for (int drop = 0; drop <= 1; ++drop) {
            int v = lam.parts()[row] - drop;
            if (v < 0) continue;
            if (row > 0 && v > mu[row - 1]) continue;
            mu[row] = v;
            walk(row + 1, removed + drop);
        }
    };
    walk(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> horizontal_strip_removals(const Partition& nu) {
    // rho interlaces nu: nu_1 >= rho_1 >= nu_2 >= rho_2 >= ...
    std::vector<Partition> out;
    int rows = nu.length();
    std::vector<int> rho(rows);
    std::function<void(int)> walk = [&](int row) {
        if (row == rows) {
            out.push_back(Partition(rho));
            return;
        }
        int hi = nu.parts()[row];
        int lo = row + 1 < rows ? nu.parts()[row + 1] : 0;
        for (int v = hi; v >= lo; --v) {
            rho[row] = v;
            walk(row + 1);
        }
    };
    if (rows == 0)
        out.push_back(Partition());
    else
        walk(0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace deltaq
