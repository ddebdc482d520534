#include "hesscalc/hessenberg.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "hesscalc/errors.hpp"
#include "hesscalc/schubert.hpp"

namespace hesscalc {

HessenbergFunction::HessenbergFunction(std::vector<int> values)
    : values_(std::move(values)) {
    const int n = size();
    if (n < 1)
        throw std::invalid_argument("a Hessenberg function needs size >= 1");
    for (int j = 1; j <= n; ++j) {
        const int v = values_[static_cast<std::size_t>(j - 1)];
        if (v < j)
            throw std::invalid_argument("h(" + std::to_string(j) + ") = " +
                                        std::to_string(v) + " violates h(j) >= j");
        if (v > n)
            throw std::invalid_argument("h(" + std::to_string(j) + ") = " +
                                        std::to_string(v) + " exceeds n = " +
                                        std::to_string(n));
        if (j > 1 && v < values_[static_cast<std::size_t>(j - 2)])
            throw std::invalid_argument("h is not weakly increasing at j = " +
                                        std::to_string(j));
    }
}

int HessenbergFunction::operator()(int j) const {
    if (j < 1 || j > size())
        throw std::invalid_argument("Hessenberg function applied outside 1..n");
    return values_[static_cast<std::size_t>(j - 1)];
}

int HessenbergFunction::dimension() const {
    int d = 0;
    for (int j = 1; j <= size(); ++j)
        d += values_[static_cast<std::size_t>(j - 1)] - j;
    return d;
}

bool HessenbergFunction::is_corner(int i, int j) const {
    if (j < 1 || j > size() || i < 1 || i > size()) return false;
    if (values_[static_cast<std::size_t>(j - 1)] != i) return false;
    return j == 1 || values_[static_cast<std::size_t>(j - 2)] <= i - 1;
}

std::vector<Corner> HessenbergFunction::corners() const {
    std::vector<Corner> out;
    for (int j = 1; j <= size(); ++j) {
        const int i = values_[static_cast<std::size_t>(j - 1)];
        if (is_corner(i, j)) out.push_back(Corner{i, j});
    }
    return out;
}

HessenbergFunction HessenbergFunction::remove_corner(const Corner& c) const {
    if (!is_corner(c.row, c.col))
        throw std::invalid_argument("(" + std::to_string(c.row) + "," +
                                    std::to_string(c.col) + ") is not a corner of " +
                                    to_string());
    if (c.row <= c.col)
        throw std::invalid_argument("corner (" + std::to_string(c.row) + "," +
                                    std::to_string(c.col) +
                                    ") sits on the diagonal and cannot be removed");
    std::vector<int> values = values_;
    values[static_cast<std::size_t>(c.col - 1)] = c.row - 1;
    return HessenbergFunction(std::move(values));
}

std::string HessenbergFunction::render_grid() const {
    const int n = size();
    std::string out;
    for (int i = 1; i <= n; ++i) {
        if (i > 1) out += '\n';
        for (int j = 1; j <= n; ++j)
            out += i <= values_[static_cast<std::size_t>(j - 1)] ? '#' : '.';
    }
    return out;
}

std::string HessenbergFunction::to_string() const {
    std::string out = "(";
    for (int j = 0; j < size(); ++j) {
        if (j > 0) out += ',';
        out += std::to_string(values_[static_cast<std::size_t>(j)]);
    }
    out += ')';
    return out;
}

HessenbergFunction HessenbergFunction::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw ParseError(what, pos + 1);
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<int> values;
    for (;;) {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a positive integer");
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) fail("value too large");
            ++pos;
        }
        values.push_back(static_cast<int>(value));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            break;
        }
        fail("expected ',' or ')'");
    }
    skip_ws();
    if (pos != text.size()) fail("trailing characters after ')'");
    return HessenbergFunction(std::move(values));
}

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
    if (n < 1)
        throw std::invalid_argument("a Hessenberg function needs size >= 1");
    std::vector<HessenbergFunction> out;
    std::vector<int> values(static_cast<std::size_t>(n));
    // Choose h(1) <= h(2) <= ... with h(j) in [max(h(j-1), j), n]; picking
    // values in ascending order yields the lexicographic enumeration.
    auto extend = [&](auto&& self, int j) -> void {
        if (j > n) {
            out.push_back(HessenbergFunction(values));
            return;
        }
        const int lowest = std::max(j, j > 1 ? values[static_cast<std::size_t>(j - 2)] : 1);
        for (int v = lowest; v <= n; ++v) {
            values[static_cast<std::size_t>(j - 1)] = v;
            self(self, j + 1);
        }
    };
    extend(extend, 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const HessenbergFunction& h) {
    return os << h.to_string();
}

IntPoly generator_poly(int i, int j) {
    if (j < 1 || j > i)
        throw std::invalid_argument("generator indices need 1 <= j <= i");
    IntPoly out;
    for (int k = 1; k <= j; ++k) {
        IntPoly summand = IntPoly::variable(k);
        for (int l = j + 1; l <= i; ++l)
            summand *= IntPoly::variable(k) - IntPoly::variable(l);
        out += summand;
    }
    return out;
}

IntPoly top_generator(int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    IntPoly out = IntPoly::variable(1);
    for (int l = 2; l <= n; ++l)
        out *= IntPoly::variable(1) - IntPoly::variable(l);
    return out;
}

std::vector<IntPoly> ideal_generators(const HessenbergFunction& h) {
    std::vector<IntPoly> out;
    out.reserve(static_cast<std::size_t>(h.size()));
    for (int j = 1; j <= h.size(); ++j) out.push_back(generator_poly(h(j), j));
    return out;
}

Permutation minimal_cell_permutation(int i, int j, int k) {
    if (j < 1 || j >= i)
        throw std::invalid_argument("indices need 1 <= j < i");
    if (k < 1 || k > i - j)
        throw std::invalid_argument("k = " + std::to_string(k) +
                                    " outside 1.." + std::to_string(i - j));
    Permutation w = Permutation::identity(i);
    for (int t = i - k; t >= j; --t) w = w * Permutation::simple(t, i);
    for (int t = i - k + 1; t <= i - 1; ++t) w = w * Permutation::simple(t, i);
    return w;
}

IntPoly alternating_schubert_sum(int i, int j) {
    if (j < 1 || j >= i)
        throw std::invalid_argument("indices need 1 <= j < i");
    IntPoly out;
    for (int k = 1; k <= i - j; ++k) {
        IntPoly term = schubert(minimal_cell_permutation(i, j, k));
        if (k % 2 == 0) term = -term;
        out += term;
    }
    return out;
}

IntPoly generator_by_ddo_chain(int i, int j, int n) {
    if (j < 1 || j > i || i > n)
        throw std::invalid_argument("indices need 1 <= j <= i <= n");
    IntPoly f = top_generator(n);
    for (int t = 1; t <= j - 1; ++t) f = divided_difference(f, t);
    for (int t = n; t >= i + 1; --t) f = divided_difference(f, t);
    if ((n - i) % 2 != 0) f = -f;
    return f;
}

bool cell_intersects(const HessenbergFunction& h, const Permutation& w) {
    const int n = h.size();
    if (w.degree() != n)
        throw std::invalid_argument("permutation degree " + std::to_string(w.degree()) +
                                    " does not match n = " + std::to_string(n));
    const Permutation inv = w.inverse();
    for (int r = 1; r <= n; ++r) {
        const int value = w(r);
        if (value >= 2 && inv(value - 1) > h(r)) return false;
    }
    return true;
}

std::vector<Permutation> minimal_missing_cells(const HessenbergFunction& h,
                                               const Corner& c) {
    const HessenbergFunction reduced = h.remove_corner(c);
    std::vector<Permutation> minimal;
    int best = std::numeric_limits<int>::max();
    for (const Permutation& w : symmetric_group(h.size())) {
        if (!cell_intersects(h, w) || cell_intersects(reduced, w)) continue;
        const int len = w.length();
        if (len < best) {
            best = len;
            minimal.clear();
        }
        if (len == best) minimal.push_back(w);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

} // namespace hesscalc
