#include "hesscalc/groebner.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "hesscalc/errors.hpp"

namespace hesscalc {

namespace {

RatPoly monic(RatPoly f) {
    if (f.is_zero()) return f;
    const Rat inverse_lc = Rat(1) / f.leading_coefficient();
    f *= inverse_lc;
    return f;
}

// Full division by an arbitrary generator list (first divisor in list order
// wins, which is deterministic). Returns the remainder.
RatPoly reduce(const RatPoly& f, const std::vector<RatPoly>& gens) {
    RatPoly remainder;
    RatPoly work = f;
    while (!work.is_zero()) {
        const Monomial lm = work.leading_monomial();
        const Rat lc = work.leading_coefficient();
        bool divided = false;
        for (const RatPoly& g : gens) {
            const Monomial& glm = g.leading_monomial();
            if (!glm.divides(lm)) continue;
            const Rat scale = lc / g.leading_coefficient();
            work -= g * RatPoly::term(lm.divide(glm), scale);
            divided = true;
            break;
        }
        if (!divided) {
            remainder.add_term(lm, lc);
            work.add_term(lm, Rat(-lc));
        }
    }
    return remainder;
}

} // namespace

RatPoly s_polynomial(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("S-polynomial of a zero polynomial");
    const Monomial& lf = f.leading_monomial();
    const Monomial& lg = g.leading_monomial();
    const Monomial l = Monomial::lcm(lf, lg);
    RatPoly a = f * RatPoly::term(l.divide(lf), Rat(1) / f.leading_coefficient());
    RatPoly b = g * RatPoly::term(l.divide(lg), Rat(1) / g.leading_coefficient());
    return a - b;
}

GroebnerBasis groebner(const std::vector<RatPoly>& generators, int nvars) {
    if (nvars < 1)
        throw std::invalid_argument("the variable count must be >= 1");
    std::vector<RatPoly> basis;
    for (const RatPoly& g : generators) {
        if (g.is_zero()) continue;
        if (g.max_variable() > nvars)
            throw std::invalid_argument("generator mentions x" +
                                        std::to_string(g.max_variable()) +
                                        " beyond the declared " +
                                        std::to_string(nvars) + " variables");
        basis.push_back(monic(g));
    }
    if (basis.empty())
        throw std::invalid_argument("the generator list has no nonzero entry");

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        const auto [i, j] = pairs.front();
        pairs.pop_front();
        const Monomial& li = basis[i].leading_monomial();
        const Monomial& lj = basis[j].leading_monomial();
        // Coprime leading terms: the S-polynomial reduces to zero, skip it.
        if (Monomial::lcm(li, lj) == li * lj) continue;
        RatPoly r = reduce(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero()) continue;
        basis.push_back(monic(std::move(r)));
        for (std::size_t k = 0; k + 1 < basis.size(); ++k)
            pairs.emplace_back(k, basis.size() - 1);
    }

    // Minimalize: drop any generator whose leading monomial another kept
    // generator's leading monomial divides. Sorting ascending first makes
    // the survivor of duplicate leading monomials well defined.
    std::sort(basis.begin(), basis.end(), [](const RatPoly& a, const RatPoly& b) {
        return grlex_less(a.leading_monomial(), b.leading_monomial());
    });
    std::vector<RatPoly> minimal;
    for (const RatPoly& g : basis) {
        bool redundant = false;
        for (const RatPoly& kept : minimal)
            if (kept.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(g);
    }

    // Interreduce the tails: replace each generator by its normal form
    // against the others. Leading monomials are untouched (none divides
    // another), so one pass reaches the reduced basis.
    std::vector<RatPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<RatPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(others.empty() ? minimal[i] : monic(reduce(minimal[i], others)));
    }

    std::sort(reduced.begin(), reduced.end(), [](const RatPoly& a, const RatPoly& b) {
        return grlex_less(b.leading_monomial(), a.leading_monomial());
    });
    return GroebnerBasis{std::move(reduced), nvars};
}

RatPoly normal_form(const RatPoly& f, const GroebnerBasis& basis) {
    if (f.max_variable() > basis.nvars)
        throw std::invalid_argument("polynomial mentions x" +
                                    std::to_string(f.max_variable()) +
                                    " beyond the basis variables");
    return reduce(f, basis.generators);
}

bool contains(const GroebnerBasis& basis, const RatPoly& f) {
    return normal_form(f, basis).is_zero();
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& basis) {
    // A finite-dimensional quotient forces a pure power of every variable
    // into the leading-term ideal: those powers box the search space.
    std::vector<int> caps(static_cast<std::size_t>(basis.nvars), -1);
    for (const RatPoly& g : basis.generators) {
        const Monomial& lm = g.leading_monomial();
        if (lm.entries().size() == 1) {
            const auto& [var, exp] = lm.entries().front();
            auto& cap = caps[static_cast<std::size_t>(var - 1)];
            if (cap < 0 || exp < cap) cap = exp;
        }
        if (lm.is_unit()) return {}; // the whole ring is the ideal
    }
    for (int v = 1; v <= basis.nvars; ++v)
        if (caps[static_cast<std::size_t>(v - 1)] < 0)
            throw std::invalid_argument(
                "the quotient is not finite-dimensional: no leading monomial "
                "is a pure power of x" + std::to_string(v));

    std::vector<Monomial> out;
    std::vector<int> exps(static_cast<std::size_t>(basis.nvars), 0);
    for (;;) {
        std::vector<Monomial::Entry> entries;
        for (int v = 1; v <= basis.nvars; ++v)
            if (exps[static_cast<std::size_t>(v - 1)] > 0)
                entries.emplace_back(v, exps[static_cast<std::size_t>(v - 1)]);
        const Monomial m = Monomial::from_entries(entries);
        bool standard = true;
        for (const RatPoly& g : basis.generators)
            if (g.leading_monomial().divides(m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(m);
        // Odometer over the box [0, cap_v) per variable.
        int v = 0;
        while (v < basis.nvars) {
            if (++exps[static_cast<std::size_t>(v)] < caps[static_cast<std::size_t>(v)]) break;
            exps[static_cast<std::size_t>(v)] = 0;
            ++v;
        }
        if (v == basis.nvars) break;
    }
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

std::vector<long long> hilbert_series(const GroebnerBasis& basis) {
    const std::vector<Monomial> standard = standard_monomials(basis);
    if (standard.empty()) return {};
    int top = 0;
    for (const Monomial& m : standard) top = std::max(top, m.degree());
    std::vector<long long> counts(static_cast<std::size_t>(top + 1), 0);
    for (const Monomial& m : standard)
        ++counts[static_cast<std::size_t>(m.degree())];
    return counts;
}

std::vector<long long> hilbert_series(const HessenbergFunction& h) {
    std::vector<RatPoly> gens;
    for (const IntPoly& g : ideal_generators(h)) gens.push_back(to_rational(g));
    return hilbert_series(groebner(gens, h.size()));
}

IdealFile read_ideal_file(std::istream& in) {
    IdealFile out;
    std::string line;
    std::size_t line_number = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (!have_header) {
            std::istringstream header(line);
            std::string tag;
            header >> tag;
            int n = 0;
            if (tag != "vars:" || !(header >> n) || n < 1)
                throw std::invalid_argument("line " + std::to_string(line_number) +
                                            ": expected a \"vars: <n>\" header");
            std::string rest;
            if (header >> rest)
                throw std::invalid_argument("line " + std::to_string(line_number) +
                                            ": trailing text after the variable count");
            out.nvars = n;
            have_header = true;
            continue;
        }
        IntPoly p;
        try {
            p = parse_polynomial(line);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_number) + ": " + e.what(),
                             e.position());
        }
        if (p.max_variable() > out.nvars)
            throw std::invalid_argument("line " + std::to_string(line_number) +
                                        ": polynomial mentions x" +
                                        std::to_string(p.max_variable()) +
                                        " beyond the declared " +
                                        std::to_string(out.nvars) + " variables");
        out.polynomials.push_back(std::move(p));
    }
    if (!have_header)
        throw std::invalid_argument("the ideal file has no \"vars: <n>\" header");
    return out;
}

} // namespace hesscalc
