#pragma once

#include <iosfwd>
#include <vector>

#include "hesscalc/hessenberg.hpp"
#include "hesscalc/polynomial.hpp"

namespace hesscalc {

/// A reduced Groebner basis under grlex (x1 > x2 > ...): every generator is
/// monic, no term of any generator is divisible by the leading monomial of
/// another, and the list is sorted by descending leading monomial.
struct GroebnerBasis {
    std::vector<RatPoly> generators;
    int nvars = 0;
};

/// Buchberger's algorithm with the coprime-leading-term pair criterion,
/// followed by interreduction to the unique reduced basis. `nvars` bounds
/// the variables the generators may mention.
GroebnerBasis groebner(const std::vector<RatPoly>& generators, int nvars);

/// The remainder of f under full multivariate division by the basis: no
/// term of the result is divisible by any leading monomial. For a Groebner
/// basis this is the canonical normal form, so f is in the ideal iff the
/// result is zero.
RatPoly normal_form(const RatPoly& f, const GroebnerBasis& basis);

bool contains(const GroebnerBasis& basis, const RatPoly& f);

/// The S-polynomial of f and g (both nonzero).
RatPoly s_polynomial(const RatPoly& f, const RatPoly& g);

/// The monomials outside the leading-term ideal, sorted grlex-ascending.
/// Requires the quotient to be finite-dimensional (some pure power of every
/// variable must appear among the leading monomials).
std::vector<Monomial> standard_monomials(const GroebnerBasis& basis);

/// Counts of standard monomials by degree, lowest degree first.
std::vector<long long> hilbert_series(const GroebnerBasis& basis);

/// The Hilbert series of the quotient by the presentation ideal of h.
std::vector<long long> hilbert_series(const HessenbergFunction& h);

/// A generator list read from the ideal file format: a "vars: n" header
/// line followed by one polynomial per line in the canonical text form.
/// Blank lines are ignored.
struct IdealFile {
    int nvars = 0;
    std::vector<IntPoly> polynomials;
};

IdealFile read_ideal_file(std::istream& in);

} // namespace hesscalc
