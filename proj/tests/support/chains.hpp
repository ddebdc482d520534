#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hesscalc/permutation.hpp"
#include "hesscalc/schubert.hpp"

namespace hesscalc::testing {

/// Applies divided differences to the staircase monomial of S_n along the
/// given index sequence, first element first.  Independent of the cached
/// recursion in schubert(), so the two can be compared.
inline IntPoly schubert_along(int n, const std::vector<int>& word) {
    IntPoly f = staircase_monomial(n);
    for (int i : word) f = divided_difference(f, i);
    return f;
}

/// Reduced word that strips the largest descent first; a different reduced
/// word for the same permutation than Permutation::reduced_word() in general.
inline std::vector<int> reduced_word_largest_descent(Permutation w) {
    std::vector<int> word;
    while (!w.is_identity()) {
        int descent = 0;
        for (int i = w.degree() - 1; i >= 1; --i) {
            if (w.has_descent(i)) {
                descent = i;
                break;
            }
        }
        if (descent == 0) throw std::logic_error("non-identity permutation without descent");
        word.push_back(descent);
        w = w * Permutation::simple(descent, w.degree());
    }
    std::reverse(word.begin(), word.end());
    return word;
}

/// Index sequence that carries the staircase monomial of S_n down to the
/// Schubert polynomial of w (embedded in S_n): a reduced word for w_0 w,
/// whose first letter is applied first.
inline std::vector<int> descent_chain(const Permutation& w, int n,
                                      bool largest_first = false) {
    const Permutation rest = Permutation::longest(n) * w.embed(n);
    return largest_first ? reduced_word_largest_descent(rest) : rest.reduced_word();
}

} // namespace hesscalc::testing
