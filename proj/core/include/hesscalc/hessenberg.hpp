#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hesscalc/permutation.hpp"
#include "hesscalc/polynomial.hpp"

namespace hesscalc {

/// A box (row, col) of the shaded staircase diagram of a Hessenberg
/// function; used to address corners. Rows count from the top, so box
/// (i, j) is shaded exactly when i <= h(j).
struct Corner {
    int row = 0;
    int col = 0;

    bool operator==(const Corner&) const = default;
    auto operator<=>(const Corner&) const = default;
};

/// A nondecreasing function h : {1..n} -> {1..n} with h(j) >= j, the
/// combinatorial datum of a regular nilpotent Hessenberg variety.
/// Immutable value type.
class HessenbergFunction {
public:
    /// Validates size >= 1, j <= h(j) <= n, and monotonicity.
    explicit HessenbergFunction(std::vector<int> values);

    /// Parses "(3,3,4,5,5)". Whitespace-insensitive; malformed text raises
    /// ParseError, invalid values invalid_argument.
    static HessenbergFunction parse(std::string_view text);

    int size() const { return static_cast<int>(values_.size()); }

    /// h(j) for 1 <= j <= size().
    int operator()(int j) const;

    const std::vector<int>& values() const { return values_; }

    /// The dimension of the associated variety: sum of h(j) - j.
    int dimension() const;

    /// True when box (i, j) is a corner of the diagram: it is the lowest
    /// shaded box of its column and the box to its left is unshaded
    /// (out-of-grid boxes count as unshaded). Equivalently h(j) = i and
    /// either j = 1 or h(j-1) <= i - 1.
    bool is_corner(int i, int j) const;

    /// All corners, sorted by column.
    std::vector<Corner> corners() const;

    /// The function with corner c removed: h'(col) = h(col) - 1. Only
    /// corners strictly above the diagonal (row > col) are removable;
    /// removing a diagonal corner would violate h(j) >= j.
    HessenbergFunction remove_corner(const Corner& c) const;

    /// ASCII rendering of the shaded diagram, rows top to bottom, '#' for
    /// shaded and '.' for unshaded, rows joined by '\n'.
    std::string render_grid() const;

    std::string to_string() const; // "(3,3,4,5,5)"

    bool operator==(const HessenbergFunction&) const = default;
    auto operator<=>(const HessenbergFunction&) const = default;

private:
    std::vector<int> values_;
};

/// All Hessenberg functions on {1..n} in lexicographic order of their value
/// tuples. The counts over n = 1, 2, 3, ... are the Catalan numbers.
std::vector<HessenbergFunction> enumerate_hessenberg(int n);

std::ostream& operator<<(std::ostream& os, const HessenbergFunction& h);

/// The (i, j) generator polynomial of the Hessenberg presentation ideal,
/// for 1 <= j <= i:
///
///   sum over k = 1..j of  x_k * product over l = j+1..i of (x_k - x_l),
///
/// homogeneous of degree i - j + 1 (the product is empty when j = i, so
/// the diagonal generators are x1 + ... + xi).
IntPoly generator_poly(int i, int j);

/// The top generator x1 * (x1 - x2)(x1 - x3)...(x1 - xn), built directly
/// from its product form; equals generator_poly(n, 1).
IntPoly top_generator(int n);

/// The generators [generator_poly(h(1), 1), ..., generator_poly(h(n), n)]
/// of the presentation ideal attached to h.
std::vector<IntPoly> ideal_generators(const HessenbergFunction& h);

/// The k-th permutation of the alternating Schubert decomposition for the
/// pair (i, j): the product of simple transpositions
/// (s_{i-k} s_{i-k-1} ... s_j)(s_{i-k+1} s_{i-k+2} ... s_{i-1}),
/// of degree i and length i - j. Valid for 1 <= j < i and 1 <= k <= i - j.
/// These are exactly the minimal-length witnesses of minimal_missing_cells.
Permutation minimal_cell_permutation(int i, int j, int k);

/// sum over k = 1..i-j of (-1)^{k-1} * schubert(minimal_cell_permutation):
/// equals generator_poly(i-1, j).
IntPoly alternating_schubert_sum(int i, int j);

/// generator_poly(i, j) recovered from the top generator of degree n by a
/// divided-difference chain: apply the chain at 1..j-1, then at n down to
/// i+1, and fix the sign by (-1)^{n-i}. An independent route to the same
/// polynomial, used for cross-checking.
IntPoly generator_by_ddo_chain(int i, int j, int n);

/// The open-cell intersection criterion: the cell of w meets the variety
/// of h exactly when, for every position r whose value exceeds 1, the
/// preimage of w(r) - 1 sits weakly below h(r).
bool cell_intersects(const HessenbergFunction& h, const Permutation& w);

/// Among permutations whose cell meets the variety of h but not of
/// h' = remove_corner(c), the ones of minimal length (brute force over the
/// full symmetric group, sorted). Requires a removable corner (row > col).
std::vector<Permutation> minimal_missing_cells(const HessenbergFunction& h,
                                               const Corner& c);

} // namespace hesscalc
