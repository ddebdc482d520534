#include "hesscalc/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "hesscalc/errors.hpp"

namespace hesscalc {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    if (n < 1)
        throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : images_) {
        if (v < 1 || v > n)
            throw std::invalid_argument("one-line notation value " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("one-line notation repeats the value " +
                                        std::to_string(v));
        seen[static_cast<std::size_t>(v - 1)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::simple(int r, int n) {
    if (r < 1 || r >= n)
        throw std::invalid_argument("simple transposition index " + std::to_string(r) +
                                    " outside 1.." + std::to_string(n - 1));
    return transposition(r, r + 1, n);
}

Permutation Permutation::transposition(int p, int q, int n) {
    if (!(1 <= p && p < q && q <= n))
        throw std::invalid_argument("transposition needs 1 <= p < q <= n");
    Permutation w = identity(n);
    std::swap(w.images_[static_cast<std::size_t>(p - 1)],
              w.images_[static_cast<std::size_t>(q - 1)]);
    return w;
}

Permutation Permutation::longest(int n) {
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(images));
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > degree())
        throw std::invalid_argument("permutation applied outside 1..n");
    return images_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
    std::vector<int> images(images_.size());
    for (int i = 1; i <= degree(); ++i)
        images[static_cast<std::size_t>(images_[static_cast<std::size_t>(i - 1)] - 1)] = i;
    return Permutation(std::move(images));
}

int Permutation::length() const {
    int inversions = 0;
    const int n = degree();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)])
                ++inversions;
    return inversions;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if (images_[static_cast<std::size_t>(i - 1)] != i) return false;
    return true;
}

bool Permutation::has_descent(int i) const {
    if (i < 1 || i >= degree())
        throw std::invalid_argument("descent position outside 1..n-1");
    return images_[static_cast<std::size_t>(i - 1)] > images_[static_cast<std::size_t>(i)];
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> word;
    std::vector<int> current = images_;
    const int n = degree();
    for (;;) {
        int descent = 0;
        for (int i = 1; i < n; ++i) {
            if (current[static_cast<std::size_t>(i - 1)] > current[static_cast<std::size_t>(i)]) {
                descent = i;
                break;
            }
        }
        if (descent == 0) break;
        std::swap(current[static_cast<std::size_t>(descent - 1)],
                  current[static_cast<std::size_t>(descent)]);
        word.push_back(descent);
    }
    // Each recorded step multiplied on the right, so the word reads in
    // reverse: w = s_{word[r-1]} * ... * s_{word[0]} before the flip.
    std::reverse(word.begin(), word.end());
    return word;
}

Permutation Permutation::embed(int m) const {
    if (m < degree())
        throw std::invalid_argument("cannot embed into a smaller degree");
    std::vector<int> images = images_;
    for (int i = degree() + 1; i <= m; ++i) images.push_back(i);
    return Permutation(std::move(images));
}

Permutation Permutation::stabilized() const {
    std::vector<int> images = images_;
    while (images.size() > 1 && images.back() == static_cast<int>(images.size()))
        images.pop_back();
    return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw ParseError(what, pos + 1);
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    std::vector<int> images;
    for (;;) {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a positive integer");
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > 1'000'000) fail("one-line notation value too large");
            ++pos;
        }
        images.push_back(static_cast<int>(value));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
            break;
        }
        fail("expected ',' or ']'");
    }
    skip_ws();
    if (pos != text.size()) fail("trailing characters after ']'");
    return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (int i = 0; i < degree(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(images_[static_cast<std::size_t>(i)]);
    }
    out += ']';
    return out;
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree())
        throw std::invalid_argument("cannot compose permutations of degrees " +
                                    std::to_string(u.degree()) + " and " +
                                    std::to_string(v.degree()));
    std::vector<int> images(static_cast<std::size_t>(u.degree()));
    for (int i = 1; i <= u.degree(); ++i)
        images[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation(std::move(images));
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> group;
    do {
        group.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return group;
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) {
    return os << w.to_string();
}

} // namespace hesscalc
