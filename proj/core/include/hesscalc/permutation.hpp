#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hesscalc {

/// A permutation of {1..n} in one-line notation: images_[i-1] = w(i).
/// Immutable value type; every operation returns a new permutation.
///
/// Composition convention: (u * v)(i) = u(v(i)). Consequently w * simple(i)
/// exchanges positions i and i+1 of w's one-line notation, and
/// w * transposition(p, q) exchanges positions p and q.
class Permutation {
public:
    /// Validates that images is a bijection on {1..n}, n >= 1.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    /// The simple transposition s_r = (r, r+1), as an element of degree n.
    static Permutation simple(int r, int n);

    /// The transposition exchanging p and q (p < q), fixing everything else.
    static Permutation transposition(int p, int q, int n);

    /// The longest element [n, n-1, ..., 1].
    static Permutation longest(int n);

    /// Parses one-line notation "[3,1,2]". Whitespace-insensitive;
    /// malformed text raises ParseError, invalid images invalid_argument.
    static Permutation parse(std::string_view text);

    int degree() const { return static_cast<int>(images_.size()); }

    /// w(i) for 1 <= i <= degree().
    int operator()(int i) const;

    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    /// Coxeter length = number of inversions.
    int length() const;

    bool is_identity() const;

    /// True when w(i) > w(i+1), for 1 <= i < degree().
    bool has_descent(int i) const;

    /// The lexicographically determined reduced word: repeatedly strip the
    /// smallest-index descent. Multiplying simple(word[0]) * simple(word[1])
    /// * ... recovers w; the word length equals length().
    std::vector<int> reduced_word() const;

    /// The same permutation regarded in degree m >= degree(), fixing the
    /// added points.
    Permutation embed(int m) const;

    /// Strips trailing fixed points down to degree >= 1; the canonical
    /// representative of w under adding/removing fixed points at the end.
    Permutation stabilized() const;

    std::string to_string() const; // "[3,1,2]"

    bool operator==(const Permutation& rhs) const = default;
    auto operator<=>(const Permutation& rhs) const = default;

private:
    std::vector<int> images_;
};

Permutation operator*(const Permutation& u, const Permutation& v);

/// All permutations of degree n in lexicographic one-line order.
std::vector<Permutation> symmetric_group(int n);

std::ostream& operator<<(std::ostream& os, const Permutation& w);

} // namespace hesscalc
