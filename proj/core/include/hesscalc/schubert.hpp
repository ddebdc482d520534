#pragma once

#include <cstddef>
#include <vector>

#include "hesscalc/permutation.hpp"
#include "hesscalc/polynomial.hpp"

namespace hesscalc {

/// The staircase monomial x1^{n-1} x2^{n-2} ... x_{n-1}: the Schubert
/// polynomial of the longest element of degree n (1 for n = 1).
IntPoly staircase_monomial(int n);

/// The Schubert polynomial of w, computed by walking divided differences
/// down a strictly length-decreasing chain from the longest element: the
/// chain is generated by repeatedly descending through the smallest ascent.
/// Results are memoized per stability-normalized permutation (trailing
/// fixed points never change the polynomial), and the cache is safe to
/// share across threads.
IntPoly schubert(const Permutation& w);

/// Drops every memoized Schubert polynomial (mainly for benchmarks).
void clear_schubert_cache();

std::size_t schubert_cache_size();

/// The support of the product of the r-th degree-one Schubert polynomial
/// with the Schubert polynomial of `base`: `terms` lists the permutations
/// whose Schubert polynomials sum to the product, each exactly one longer
/// than `base`. Terms are distinct, sorted, and share one ambient degree
/// large enough that no admissible transposition is truncated.
struct MonkExpansion {
    Permutation base;
    int index = 0;
    std::vector<Permutation> terms;
};

/// Expands the product rule for multiplication by x1 + ... + x_r: the terms
/// are base * t_{p,q} over all p <= r < q with base(p) < base(q) and no
/// intermediate position mapping into the open value interval.
MonkExpansion monk_expand(int r, const Permutation& w);

} // namespace hesscalc
