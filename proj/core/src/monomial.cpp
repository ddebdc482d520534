#include "hesscalc/monomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

namespace hesscalc {

Monomial Monomial::var(int index, int exponent) {
    if (index < 1)
        throw std::invalid_argument("variable index must be >= 1");
    if (exponent < 0)
        throw std::invalid_argument("exponent must be >= 0");
    Monomial m;
    if (exponent > 0) m.entries_.emplace_back(index, exponent);
    return m;
}

Monomial Monomial::from_entries(const std::vector<Entry>& entries) {
    std::map<int, int> merged;
    for (const auto& [index, exponent] : entries) {
        if (index < 1)
            throw std::invalid_argument("variable index must be >= 1");
        if (exponent < 0)
            throw std::invalid_argument("exponent must be >= 0");
        merged[index] += exponent;
    }
    Monomial m;
    for (const auto& [index, exponent] : merged)
        if (exponent > 0) m.entries_.emplace_back(index, exponent);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [index, exponent] : entries_) d += exponent;
    return d;
}

int Monomial::exponent(int index) const {
    for (const auto& [var, exp] : entries_)
        if (var == index) return exp;
    return 0;
}

int Monomial::max_variable() const {
    return entries_.empty() ? 0 : entries_.back().first;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + rhs.entries_.size());
    auto a = entries_.begin();
    auto b = rhs.entries_.begin();
    while (a != entries_.end() && b != rhs.entries_.end()) {
        if (a->first < b->first) out.entries_.push_back(*a++);
        else if (b->first < a->first) out.entries_.push_back(*b++);
        else {
            out.entries_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    out.entries_.insert(out.entries_.end(), a, entries_.end());
    out.entries_.insert(out.entries_.end(), b, rhs.entries_.end());
    return out;
}

bool Monomial::divides(const Monomial& m) const {
    auto a = entries_.begin();
    auto b = m.entries_.begin();
    while (a != entries_.end()) {
        while (b != m.entries_.end() && b->first < a->first) ++b;
        if (b == m.entries_.end() || b->first != a->first || b->second < a->second)
            return false;
        ++a;
    }
    return true;
}

Monomial Monomial::divide(const Monomial& d) const {
    Monomial out;
    auto b = d.entries_.begin();
    for (const auto& [var, exp] : entries_) {
        int remaining = exp;
        if (b != d.entries_.end() && b->first == var) {
            remaining -= b->second;
            ++b;
        }
        if (remaining < 0)
            throw std::logic_error("monomial division with nontrivial remainder");
        if (remaining > 0) out.entries_.emplace_back(var, remaining);
    }
    if (b != d.entries_.end())
        throw std::logic_error("monomial division with nontrivial remainder");
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto ia = a.entries_.begin();
    auto ib = b.entries_.begin();
    while (ia != a.entries_.end() && ib != b.entries_.end()) {
        if (ia->first < ib->first) out.entries_.push_back(*ia++);
        else if (ib->first < ia->first) out.entries_.push_back(*ib++);
        else {
            out.entries_.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia, ++ib;
        }
    }
    out.entries_.insert(out.entries_.end(), ia, a.entries_.end());
    out.entries_.insert(out.entries_.end(), ib, b.entries_.end());
    return out;
}

Monomial Monomial::swap_adjacent(int i) const {
    if (i < 1)
        throw std::invalid_argument("swap index must be >= 1");
    Monomial out = *this;
    for (auto& [var, exp] : out.entries_) {
        if (var == i) var = i + 1;
        else if (var == i + 1) var = i;
    }
    std::sort(out.entries_.begin(), out.entries_.end());
    return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db) return da < db;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    while (ia != a.entries().end() && ib != b.entries().end()) {
        // Whichever monomial owns the earlier variable is lex-larger.
        if (ia->first != ib->first) return ia->first > ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia, ++ib;
    }
    return ib != b.entries().end();
}

std::string Monomial::to_string() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (const auto& [var, exp] : entries_) {
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(var);
        if (exp != 1) {
            out += '^';
            out += std::to_string(exp);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    return os << m.to_string();
}

} // namespace hesscalc
