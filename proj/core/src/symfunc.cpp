#include "deltaq/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "deltaq/error.hpp"

namespace deltaq {

SymFunc::SymFunc(int degree) : degree_(degree) {
    if (degree < 0) throw RangeError("SymFunc: negative degree");
}

SymFunc SymFunc::schur(const Partition& lam) {
    SymFunc f(lam.size());
    f.terms_[lam] = QLaurent::one();
    return f;
}

QLaurent SymFunc::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? QLaurent::zero() : it->second;
}

void SymFunc::add_term(const Partition& lam, const QLaurent& c) {
    if (lam.size() != degree_)
        throw DegreeMismatchError("SymFunc::add_term: |lam| = " + std::to_string(lam.size()) +
                                  " != degree " + std::to_string(degree_));
    if (c.is_zero()) return;
    auto it = terms_.find(lam);
    if (it == terms_.end()) {
        terms_[lam] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (degree_ != o.degree_)
        throw DegreeMismatchError("SymFunc: adding degrees " + std::to_string(degree_) +
                                  " and " + std::to_string(o.degree_));
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (degree_ != o.degree_)
        throw DegreeMismatchError("SymFunc: subtracting degrees " + std::to_string(degree_) +
                                  " and " + std::to_string(o.degree_));
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
}

SymFunc SymFunc::scaled(const QLaurent& c) const {
    SymFunc r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [lam, v] : terms_) r.terms_[lam] = v * c;
    return r;
}

int SymFunc::max_q_exp() const {
    if (terms_.empty()) throw RangeError("SymFunc::max_q_exp: zero function");
    bool first = true;
    int m = 0;
    for (const auto& [lam, c] : terms_) {
        int e = c.max_exp();
        if (first || e > m) m = e;
        first = false;
    }
    return m;
}

int SymFunc::min_q_exp() const {
    if (terms_.empty()) throw RangeError("SymFunc::min_q_exp: zero function");
    bool first = true;
    int m = 0;
    for (const auto& [lam, c] : terms_) {
        int e = c.min_exp();
        if (first || e < m) m = e;
        first = false;
    }
    return m;
}

bool SymFunc::is_nonneg_poly() const {
    for (const auto& [lam, c] : terms_)
        if (!c.is_polynomial() || !c.has_nonneg_int_coeffs()) return false;
    return true;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*s" << lam.str();
    }
    return os.str();
}

SymFunc omega(const SymFunc& f) {
    SymFunc r(f.degree());
    for (const auto& [lam, c] : f.terms()) r.add_term(lam.conjugate(), c);
    return r;
}

QLaurent hall_inner(const SymFunc& f, const SymFunc& g) {
    if (f.degree() != g.degree())
        throw DegreeMismatchError("hall_inner: degrees " + std::to_string(f.degree()) +
                                  " and " + std::to_string(g.degree()) + " differ");
    QLaurent s;
    for (const auto& [lam, c] : f.terms()) {
        auto it = g.terms().find(lam);
        if (it != g.terms().end()) s += c * it->second;
    }
    return s;
}

namespace {

// Partitions lam obtained from mu by adding a vertical strip of size j.
std::vector<Partition> vertical_strip_additions(const Partition& mu, int j) {
    std::vector<Partition> out;
    int rows = mu.length() + j;   // at most j new rows
    std::vector<int> lam(rows);
    std::function<void(int, int)> walk = [&](int row, int added) {
        if (added > j) return;
        if (row == rows) {
            if (added == j) out.push_back(Partition(lam));
            return;
        }
        for (int add = 0; add <= 1; ++add) {
            int v = mu.part(row + 1) + add;
            if (row > 0 && v > lam[row - 1]) continue;
            lam[row] = v;
            walk(row + 1, added + add);
        }
    };
    walk(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

SymFunc e_multiply(int j, const SymFunc& f) {
    if (j < 0) throw RangeError("e_multiply: negative index");
    SymFunc r(f.degree() + j);
    for (const auto& [mu, c] : f.terms())
        for (const Partition& lam : vertical_strip_additions(mu, j))
            r.add_term(lam, c);
    return r;
}

SymFunc e_perp(int j, const SymFunc& f) {
    if (j < 0) throw RangeError("e_perp: negative index");
    if (j > f.degree()) throw RangeError("e_perp: strip size exceeds degree");
    SymFunc r(f.degree() - j);
    for (const auto& [lam, c] : f.terms())
        for (const Partition& mu : vertical_strip_removals(lam, j))
            r.add_term(mu, c);
    return r;
}

SymFunc qprime(const Partition& mu) {
    SymFunc r(mu.size());
    for (const Partition& lam : enumerate_partitions(mu.size()))
        r.add_term(lam, kostka_foulkes(lam, mu));
    return r;
}

SymFunc rev_q_sym(const SymFunc& f, int d) {
    SymFunc r(f.degree());
    for (const auto& [lam, c] : f.terms()) {
        try {
            r.add_term(lam, reverse_coeffs(c, d));
        } catch (const DegreeOverflowError& e) {
            throw DegreeOverflowError(std::string(e.what()) + " at partition " + lam.str());
        }
    }
    return r;
}

std::map<std::vector<int>, QLaurent> expand_in_vars(const SymFunc& f, int N) {
    if (N < 0) throw RangeError("expand_in_vars: negative variable count");
    std::map<std::vector<int>, QLaurent> table;
    for (const auto& [lam, c] : f.terms()) {
        for (const Tableau& t : enumerate_ssyt_bounded(lam, N)) {
            std::vector<int> content(N, 0);
            for (const auto& row : t.rows())
                for (int v : row) ++content[v - 1];
            auto it = table.find(content);
            if (it == table.end()) {
                table[content] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) table.erase(it);
            }
        }
    }
    return table;
}

BiSymFunc::BiSymFunc(int ydegree, int xdegree) : ydeg_(ydegree), xdeg_(xdegree) {
    if (ydegree < 0 || xdegree < 0) throw RangeError("BiSymFunc: negative degree");
}

void BiSymFunc::add_term(const Partition& ynu, const Partition& xmu, const QLaurent& c) {
    if (ynu.size() != ydeg_ || xmu.size() != xdeg_)
        throw DegreeMismatchError("BiSymFunc::add_term: bidegree mismatch");
    if (c.is_zero()) return;
    auto key = std::make_pair(ynu, xmu);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiSymFunc& BiSymFunc::operator+=(const BiSymFunc& o) {
    if (ydeg_ != o.ydeg_ || xdeg_ != o.xdeg_)
        throw DegreeMismatchError("BiSymFunc: adding mismatched bidegrees");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

std::string BiSymFunc::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*s" << key.first.str() << "[y]*s" << key.second.str() << "[x]";
    }
    return os.str();
}

BiSymFunc bisym_product(const SymFunc& fy, const SymFunc& gx) {
    BiSymFunc r(fy.degree(), gx.degree());
    for (const auto& [nu, cy] : fy.terms())
        for (const auto& [mu, cx] : gx.terms())
            r.add_term(nu, mu, cy * cx);
    return r;
}

SymFunc bisym_y_coefficient(const BiSymFunc& f, const Partition& nu) {
    if (nu.size() != f.ydegree())
        throw DegreeMismatchError("bisym_y_coefficient: |nu| != ydegree");
    SymFunc r(f.xdegree());
    for (const auto& [key, c] : f.terms())
        if (key.first == nu) r.add_term(key.second, c);
    return r;
}

} // namespace deltaq
