#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "hesscalc/errors.hpp"
#include "hesscalc/groebner.hpp"
#include "support/graded_oracle.hpp"

using namespace hesscalc;

namespace {

RatPoly rat(const std::string& text) { return to_rational(parse_polynomial(text)); }

std::vector<std::string> formatted(const GroebnerBasis& basis) {
    std::vector<std::string> out;
    for (const RatPoly& g : basis.generators) out.push_back(format(g));
    return out;
}

GroebnerBasis hessenberg_basis(const HessenbergFunction& h) {
    std::vector<RatPoly> gens;
    for (const IntPoly& g : ideal_generators(h)) gens.push_back(to_rational(g));
    return groebner(gens, h.size());
}

RatPoly s_pair(const RatPoly& f, const RatPoly& g) {
    const Monomial lcm = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    const RatPoly left =
        RatPoly::term(lcm.divide(f.leading_monomial()), Rat(1) / f.leading_coefficient());
    const RatPoly right =
        RatPoly::term(lcm.divide(g.leading_monomial()), Rat(1) / g.leading_coefficient());
    return left * f - right * g;
}

} // namespace

TEST_CASE("a dependent linear pair collapses") {
    const GroebnerBasis basis = groebner({rat("x1 + x2"), rat("x2")}, 2);
    CHECK(formatted(basis) == std::vector<std::string>{"x1", "x2"});
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(groebner({}, 2), std::invalid_argument);
    CHECK_THROWS_AS(groebner({RatPoly()}, 2), std::invalid_argument);
    CHECK_THROWS_AS(groebner({rat("x3")}, 2), std::invalid_argument);
    const GroebnerBasis unit = groebner({rat("2")}, 2);
    CHECK(formatted(unit) == std::vector<std::string>{"1"});
}

TEST_CASE("reduced basis for a hand-worked quotient") {
    const GroebnerBasis basis = hessenberg_basis(HessenbergFunction({2, 3, 3}));
    CHECK(formatted(basis) ==
          std::vector<std::string>{"x3^3", "x2^2 + 2*x3^2", "x2*x3 - x3^2",
                                   "x1 + x2 + x3"});

    std::vector<std::string> standard;
    for (const Monomial& m : standard_monomials(basis)) standard.push_back(m.to_string());
    CHECK(standard == std::vector<std::string>{"1", "x3", "x2", "x3^2"});
    CHECK(hilbert_series(basis) == std::vector<long long>{1, 2, 1});

    CHECK(normal_form(rat("x1^2"), basis) == rat("x3^2"));
    CHECK_FALSE(contains(basis, rat("x1^2")));
    CHECK(contains(basis, rat("x1 + x2 + x3")));
    CHECK(contains(basis, rat("x3^3")));
}

TEST_CASE("the staircase function cuts the quotient to a point") {
    const GroebnerBasis basis = hessenberg_basis(HessenbergFunction({1, 2, 3}));
    CHECK(formatted(basis) == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(hilbert_series(basis) == std::vector<long long>{1});
}

TEST_CASE("the unit ideal has no standard monomials") {
    const GroebnerBasis basis = groebner({rat("x1"), rat("x1 - 1")}, 1);
    CHECK(formatted(basis) == std::vector<std::string>{"1"});
    CHECK(standard_monomials(basis).empty());
    CHECK(hilbert_series(basis).empty());
}

TEST_CASE("an ideal with an infinite quotient is rejected by standard_monomials") {
    const GroebnerBasis basis = groebner({rat("x1")}, 2);
    CHECK_THROWS_AS(standard_monomials(basis), std::invalid_argument);
}

TEST_CASE("every S-pair reduces to zero modulo the basis") {
    for (const char* text : {"(2,3,3)", "(3,3,3)", "(2,3,4,4)"}) {
        const GroebnerBasis basis =
            hessenberg_basis(HessenbergFunction::parse(text));
        for (std::size_t a = 0; a < basis.generators.size(); ++a) {
            for (std::size_t b = a + 1; b < basis.generators.size(); ++b) {
                const RatPoly s = s_pair(basis.generators[a], basis.generators[b]);
                CHECK(normal_form(s, basis).is_zero());
            }
        }
    }
}

TEST_CASE("normal forms are linear and vanish exactly on members") {
    const GroebnerBasis basis = hessenberg_basis(HessenbergFunction({3, 3, 3}));
    const RatPoly f = rat("x1^2*x2 - 4*x3");
    const RatPoly g = rat("x2*x3 + x1");
    CHECK(normal_form(f + g, basis) == normal_form(f, basis) + normal_form(g, basis));
    CHECK(normal_form(normal_form(f, basis), basis) == normal_form(f, basis));
    for (const RatPoly& gen : basis.generators)
        CHECK(normal_form(f + gen * g, basis) == normal_form(f, basis));
    CHECK_THROWS_AS(normal_form(rat("x4"), basis), std::invalid_argument);
}

TEST_CASE("quotient dimensions factor over the columns") {
    for (int n = 1; n <= 4; ++n) {
        for (const HessenbergFunction& h : enumerate_hessenberg(n)) {
            std::vector<long long> expected = {1};
            for (int j = 1; j <= n; ++j) {
                std::vector<long long> next(expected.size() + h(j) - j, 0);
                for (std::size_t d = 0; d < expected.size(); ++d)
                    for (int e = 0; e <= h(j) - j; ++e) next[d + e] += expected[d];
                expected = std::move(next);
            }
            CHECK(hilbert_series(h) == expected);
        }
    }
}

TEST_CASE("ranks of graded pieces agree with the basis computation") {
    for (int n = 1; n <= 3; ++n) {
        for (const HessenbergFunction& h : enumerate_hessenberg(n)) {
            std::vector<RatPoly> gens;
            for (const IntPoly& g : ideal_generators(h)) gens.push_back(to_rational(g));
            const GroebnerBasis basis = groebner(gens, n);
            CHECK(hilbert_series(basis) ==
                  testing::hilbert_by_linear_algebra(gens, n));
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= i; ++j) {
                    const RatPoly f = to_rational(generator_poly(i, j));
                    CHECK(contains(basis, f) ==
                          testing::member_by_linear_algebra(f, gens, n));
                }
            }
        }
    }
}

TEST_CASE("ideal files carry a variable count and one polynomial per line") {
    std::istringstream in("vars: 3\nx1 + x2\n\nx3^2 - x1*x2\n");
    const IdealFile file = read_ideal_file(in);
    CHECK(file.nvars == 3);
    REQUIRE(file.polynomials.size() == 2);
    CHECK(file.polynomials[0] == parse_polynomial("x1 + x2"));
    CHECK(file.polynomials[1] == parse_polynomial("x3^2 - x1*x2"));

    std::istringstream missing_header("x1 + x2\n");
    CHECK_THROWS_AS(read_ideal_file(missing_header), std::invalid_argument);
    std::istringstream bad_line("vars: 2\nx1 + @\n");
    CHECK_THROWS_AS(read_ideal_file(bad_line), ParseError);
    std::istringstream out_of_range("vars: 2\nx3\n");
    CHECK_THROWS_AS(read_ideal_file(out_of_range), std::invalid_argument);
}
