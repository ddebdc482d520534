#pragma once

#include "hesscalc/report.hpp"

namespace hesscalc {

/// Sweep execution options. jobs <= 0 means one worker per hardware thread;
/// results are aggregated in case order, so the report is identical for any
/// worker count.
struct SweepOptions {
    int jobs = 0;
};

/// check "theorem": generator_poly(i-1, j) == alternating_schubert_sum(i, j)
/// for all 1 <= j < i <= n. Requires n >= 2.
VerificationReport verify_schubert_sum_identity(int n, SweepOptions opts = {});

/// check "ddo": the divided-difference moves on the generator family —
/// dd_j generator(i, j) == generator(i, j+1) and
/// dd_i generator(i, j) == -generator(i-1, j) for all 1 <= j < i <= n.
VerificationReport verify_generator_ddo(int n, SweepOptions opts = {});

/// check "chain": generator_by_ddo_chain(i, j, n) == generator_poly(i, j)
/// for all 1 <= j <= i <= n.
VerificationReport verify_generator_chain(int n, SweepOptions opts = {});

/// check "monk": schubert(s_r) * schubert(w) equals the sum of the Schubert
/// polynomials of the expansion terms, for every w of degree n and every
/// r in 1..n-1. Requires n >= 2.
VerificationReport verify_monk_rule(int n, SweepOptions opts = {});

/// check "lemma42": for every Hessenberg function h on {1..n} and every
/// removable corner (i, j), the brute-force minimal_missing_cells set
/// equals { minimal_cell_permutation(i, j, k) : 1 <= k <= i-j }.
VerificationReport verify_minimal_cells(int n, SweepOptions opts = {});

/// check "nonvanish": for every h on {1..n}, the Hilbert series of the
/// presentation quotient has top degree == dimension(h); and for every
/// removable corner (i, j) with h' = remove_corner: generator_poly(i-1, j)
/// lies outside the ideal of h, inside the ideal of h', and the alternating
/// Schubert sum reduces to zero against the basis of h'.
VerificationReport verify_ideal_membership(int n, SweepOptions opts = {});

/// The descent rule for Schubert polynomials: for every w of degree n and
/// every position i, dd_i schubert(w) equals schubert(w * s_i) when w has a
/// descent at i and zero otherwise. (Exercised by the test suites; not one
/// of the CLI check names.)
VerificationReport verify_schubert_descent_rule(int n, SweepOptions opts = {});

} // namespace hesscalc
