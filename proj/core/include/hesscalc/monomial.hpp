#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hesscalc {

/// A monomial in the variables x1, x2, ... — a finite map from 1-based
/// variable index to positive exponent, stored as a vector of
/// (variable, exponent) pairs sorted by variable. Zero exponents are never
/// stored, so the default-constructed Monomial is the unit monomial 1 and
/// equal monomials compare equal componentwise.
class Monomial {
public:
    using Entry = std::pair<int, int>; // {variable index, exponent > 0}

    Monomial() = default;

    /// x_index^exponent. index >= 1; exponent >= 0 (0 gives the unit).
    static Monomial var(int index, int exponent = 1);

    /// Builds a monomial from arbitrary (variable, exponent) pairs:
    /// duplicates are merged by adding exponents, zeros are dropped.
    /// Rejects variable indices < 1 and negative exponents.
    static Monomial from_entries(const std::vector<Entry>& entries);

    int degree() const;                  // total degree
    int exponent(int index) const;       // 0 when the variable is absent
    bool is_unit() const { return entries_.empty(); }
    int max_variable() const;            // 0 for the unit monomial

    Monomial operator*(const Monomial& rhs) const;

    /// True when this monomial divides m componentwise.
    bool divides(const Monomial& m) const;

    /// this / d. Precondition: d.divides(*this).
    Monomial divide(const Monomial& d) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);

    /// The monomial with the exponents of x_i and x_{i+1} exchanged.
    Monomial swap_adjacent(int i) const;

    bool operator==(const Monomial& rhs) const = default;

    const std::vector<Entry>& entries() const { return entries_; }

    std::string to_string() const;       // e.g. "x1^2*x3"; "1" for the unit

private:
    std::vector<Entry> entries_;
};

/// Graded lexicographic order with x1 > x2 > ...: compare total degree
/// first, then the earliest variable whose exponents differ.
bool grlex_less(const Monomial& a, const Monomial& b);

/// Map comparator placing the grlex-largest monomial first, so the leading
/// term of a polynomial is always begin().
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_less(b, a);
    }
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

} // namespace hesscalc
