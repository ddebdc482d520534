#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hesscalc/errors.hpp"
#include "hesscalc/monomial.hpp"
#include "hesscalc/numbers.hpp"

namespace hesscalc {

/// Sparse multivariate polynomial with exact coefficients. Terms are kept in
/// a map ordered grlex-descending, so begin() is always the leading term and
/// two polynomials are equal iff their term maps are identical. Coefficients
/// are never zero; add_term maintains that invariant.
template <class C>
class Polynomial {
public:
    using Terms = std::map<Monomial, C, GrlexGreater>;

    Polynomial() = default; // zero

    Polynomial(int constant) {
        if (constant != 0) terms_.emplace(Monomial{}, C(constant));
    }

    explicit Polynomial(C constant) {
        if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
    }

    static Polynomial variable(int index) {
        return term(Monomial::var(index), C(1));
    }

    static Polynomial term(const Monomial& m, C coeff) {
        Polynomial p;
        p.add_term(m, std::move(coeff));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial. The leading term of a
    /// grlex-descending map always carries the maximal degree.
    int degree() const {
        return terms_.empty() ? -1 : terms_.begin()->first.degree();
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    std::size_t term_count() const { return terms_.size(); }

    int max_variable() const {
        int v = 0;
        for (const auto& [m, c] : terms_) v = std::max(v, m.max_variable());
        return v;
    }

    const Terms& terms() const { return terms_; }

    const Monomial& leading_monomial() const {
        if (terms_.empty())
            throw std::invalid_argument("zero polynomial has no leading term");
        return terms_.begin()->first;
    }

    const C& leading_coefficient() const {
        if (terms_.empty())
            throw std::invalid_argument("zero polynomial has no leading term");
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, C coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, std::move(coeff));
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        for (const auto& [m, c] : rhs.terms_) add_term(m, C(-c));
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    Polynomial& operator*=(const C& scalar) {
        if (scalar == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= scalar;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
        lhs -= rhs;
        return lhs;
    }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        Polynomial out;
        for (const auto& [ma, ca] : lhs.terms_)
            for (const auto& [mb, cb] : rhs.terms_)
                out.add_term(ma * mb, C(ca * cb));
        return out;
    }

    friend Polynomial operator*(Polynomial lhs, const C& scalar) {
        lhs *= scalar;
        return lhs;
    }

    friend Polynomial operator*(const C& scalar, Polynomial rhs) {
        rhs *= scalar;
        return rhs;
    }

    // Exact-match overloads: without these, `f * 2` is ambiguous between the
    // polynomial product (via the converting constructor) and the scalar
    // product (via int -> C).
    friend Polynomial operator*(Polynomial lhs, int scalar) {
        lhs *= C(scalar);
        return lhs;
    }

    friend Polynomial operator*(int scalar, Polynomial rhs) {
        rhs *= C(scalar);
        return rhs;
    }

    Polynomial operator-() const {
        Polynomial out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, C(-c));
        return out;
    }

    bool operator==(const Polynomial& rhs) const = default;

private:
    Terms terms_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

/// f with x_i and x_{i+1} exchanged (the simple transposition acting on
/// variables). An involution that preserves coefficients.
template <class C>
Polynomial<C> swap_adjacent_vars(const Polynomial<C>& f, int i) {
    Polynomial<C> out;
    for (const auto& [m, c] : f.terms()) out.add_term(m.swap_adjacent(i), c);
    return out;
}

template <class C>
struct LinearDivision {
    Polynomial<C> quotient;
    Polynomial<C> remainder;
};

/// Division of f by the binomial (x_i - x_{i+1}) under grlex, where the
/// binomial's leading term is x_i. Each step either cancels the current
/// leading term against x_i or moves it to the remainder; the leading term
/// strictly decreases, so the loop terminates with f = q*(x_i - x_{i+1}) + r.
template <class C>
LinearDivision<C> divide_by_linear(const Polynomial<C>& f, int i) {
    if (i < 1) throw std::invalid_argument("variable index must be >= 1");
    const Monomial xi = Monomial::var(i);
    const Monomial xi1 = Monomial::var(i + 1);
    Polynomial<C> work = f;
    LinearDivision<C> out;
    while (!work.is_zero()) {
        const Monomial lm = work.leading_monomial();
        const C lc = work.leading_coefficient();
        if (xi.divides(lm)) {
            const Monomial q = lm.divide(xi);
            out.quotient.add_term(q, lc);
            work.add_term(lm, C(-lc));
            work.add_term(q * xi1, lc);
        } else {
            out.remainder.add_term(lm, lc);
            work.add_term(lm, C(-lc));
        }
    }
    return out;
}

/// Exact quotient f / (x_i - x_{i+1}). Throws DivisionError carrying the
/// nonzero remainder when the binomial does not divide f.
template <class C>
Polynomial<C> exact_divide_linear(const Polynomial<C>& f, int i) {
    auto div = divide_by_linear(f, i);
    if (!div.remainder.is_zero())
        throw DivisionError("polynomial is not divisible by (x" + std::to_string(i) +
                                " - x" + std::to_string(i + 1) + ")",
                            format(div.remainder));
    return std::move(div.quotient);
}

/// The divided difference at i: (f - s_i(f)) / (x_i - x_{i+1}), computed
/// literally as swap, subtract, divide. The numerator is always divisible;
/// a nonzero remainder indicates an arithmetic bug, not bad input.
template <class C>
Polynomial<C> divided_difference(const Polynomial<C>& f, int i) {
    if (i < 1) throw std::invalid_argument("divided difference index must be >= 1");
    auto div = divide_by_linear(f - swap_adjacent_vars(f, i), i);
    if (!div.remainder.is_zero())
        throw std::logic_error("divided difference left a remainder; "
                               "the numerator must be antisymmetric in x" +
                               std::to_string(i) + ", x" + std::to_string(i + 1));
    return std::move(div.quotient);
}

/// Exact evaluation at a rational point. Every variable appearing in f must
/// be assigned; a missing assignment is reported by name.
template <class C>
Rat evaluate(const Polynomial<C>& f, const std::map<int, Rat>& point) {
    Rat total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rat value(c);
        for (const auto& [var, exp] : m.entries()) {
            auto it = point.find(var);
            if (it == point.end())
                throw std::invalid_argument("no value assigned to variable x" +
                                            std::to_string(var));
            value *= rat_pow(it->second, exp);
        }
        total += value;
    }
    return total;
}

namespace detail {
inline std::string coeff_string(const Int& c) { return c.str(); }
inline std::string coeff_string(const Rat& c) { return c.str(); }
} // namespace detail

/// Canonical text form: terms grlex-descending joined by " + " / " - ",
/// unit coefficients omitted, "*" between factors, "^" for exponents > 1.
/// The zero polynomial prints as "0".
template <class C>
std::string format(const Polynomial<C>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c < 0;
        const C magnitude = negative ? C(-c) : c;
        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string coeff = detail::coeff_string(magnitude);
        if (m.is_unit()) {
            out += coeff;
        } else {
            if (coeff != "1") {
                out += coeff;
                out += '*';
            }
            out += m.to_string();
        }
    }
    return out;
}

template <class C>
std::ostream& operator<<(std::ostream& os, const Polynomial<C>& f) {
    return os << format(f);
}

/// Parses the canonical text form (integer coefficients; whitespace is
/// insignificant). Malformed input raises ParseError with the 1-based
/// offset of the offending character.
IntPoly parse_polynomial(std::string_view text);

inline RatPoly to_rational(const IntPoly& f) {
    RatPoly out;
    for (const auto& [m, c] : f.terms()) out.add_term(m, Rat(c));
    return out;
}

} // namespace hesscalc
