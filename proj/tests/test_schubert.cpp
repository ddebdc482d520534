#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hesscalc/schubert.hpp"
#include "support/chains.hpp"
#include "support/monk_cases.hpp"

using namespace hesscalc;

namespace {

IntPoly x(int i) { return IntPoly::variable(i); }

std::set<std::vector<int>> image_set(const std::vector<Permutation>& perms) {
    std::set<std::vector<int>> out;
    for (const Permutation& w : perms) out.insert(w.stabilized().images());
    return out;
}

std::set<std::vector<int>> image_set(const std::vector<std::string>& one_line) {
    std::set<std::vector<int>> out;
    for (const std::string& text : one_line)
        out.insert(Permutation::parse(text).stabilized().images());
    return out;
}

} // namespace

TEST_CASE("staircase monomials") {
    CHECK(staircase_monomial(1) == IntPoly(1));
    CHECK(format(staircase_monomial(4)) == "x1^3*x2^2*x3");
}

TEST_CASE("all six polynomials for degree three") {
    CHECK(schubert(Permutation({1, 2, 3})) == IntPoly(1));
    CHECK(schubert(Permutation({2, 1, 3})) == x(1));
    CHECK(schubert(Permutation({1, 3, 2})) == x(1) + x(2));
    CHECK(schubert(Permutation({3, 1, 2})) == x(1) * x(1));
    CHECK(schubert(Permutation({2, 3, 1})) == x(1) * x(2));
    CHECK(schubert(Permutation({3, 2, 1})) == x(1) * x(1) * x(2));
}

TEST_CASE("longest element gives the staircase, adjacent swaps give partial sums") {
    for (int n = 2; n <= 6; ++n) {
        CHECK(schubert(Permutation::longest(n)) == staircase_monomial(n));
    }
    for (int r = 1; r <= 5; ++r) {
        IntPoly sum;
        for (int i = 1; i <= r; ++i) sum += x(i);
        CHECK(schubert(Permutation::simple(r, r + 1)) == sum);
    }
}

TEST_CASE("divided differences walk down exactly at descents") {
    for (const Permutation& w : symmetric_group(4)) {
        const IntPoly f = schubert(w);
        for (int i = 1; i < 4; ++i) {
            if (w.has_descent(i)) {
                CHECK(divided_difference(f, i) ==
                      schubert(w * Permutation::simple(i, 4)));
            } else {
                CHECK(divided_difference(f, i) == IntPoly());
            }
        }
    }
}

TEST_CASE("the polynomial does not depend on the ambient degree") {
    for (const Permutation& w : symmetric_group(4)) {
        CHECK(testing::schubert_along(6, testing::descent_chain(w, 6)) == schubert(w));
    }
}

TEST_CASE("different reduced words give the same polynomial") {
    for (const Permutation& w : symmetric_group(5)) {
        const IntPoly via_smallest =
            testing::schubert_along(5, testing::descent_chain(w, 5, false));
        const IntPoly via_largest =
            testing::schubert_along(5, testing::descent_chain(w, 5, true));
        CHECK(via_smallest == via_largest);
        CHECK(via_smallest == schubert(w));
    }
}

TEST_CASE("coefficients are positive and degree equals length") {
    for (const Permutation& w : symmetric_group(5)) {
        const IntPoly f = schubert(w);
        CHECK(f.degree() == w.length());
        CHECK(f.is_homogeneous());
        for (const auto& [mono, coeff] : f.terms()) CHECK(coeff > 0);
    }
}

TEST_CASE("multiplication by x1+...+xr expands with hand-checked terms") {
    const MonkExpansion e = monk_expand(1, Permutation({2, 1, 3}));
    CHECK(image_set(e.terms) == image_set(std::vector<std::string>{"[3,1,2]"}));
    for (int n : {4, 5}) {
        for (const testing::MonkCase& c : testing::monk_fixture_cases(n)) {
            const MonkExpansion got = monk_expand(c.r, Permutation::parse(c.w));
            CHECK(image_set(got.terms) == image_set(c.expected));
        }
    }
}

TEST_CASE("the expansion reproduces the product over all of S_4") {
    for (const Permutation& w : symmetric_group(4)) {
        for (int r = 1; r <= 3; ++r) {
            const MonkExpansion e = monk_expand(r, w);
            IntPoly lhs = schubert(Permutation::simple(r, r + 1)) * schubert(w);
            for (const Permutation& term : e.terms) lhs -= schubert(term);
            CHECK(lhs == IntPoly());
            for (const Permutation& term : e.terms)
                CHECK(term.length() == e.base.length() + 1);
        }
    }
}

TEST_CASE("golden values for degrees three and four") {
    std::ifstream in(std::string(HESSCALC_FIXTURE_DIR) + "/schubert_s3_s4.txt");
    REQUIRE(in.is_open());
    std::string line;
    int checked = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto split = line.find(' ');
        REQUIRE(split != std::string::npos);
        const Permutation w = Permutation::parse(line.substr(0, split));
        const std::string expected = line.substr(split + 1);
        CHECK(format(schubert(w)) == expected);
        CHECK(parse_polynomial(expected) == schubert(w));
        ++checked;
    }
    CHECK(checked == 30);
}

TEST_CASE("the cache fills once and concurrent lookups agree") {
    clear_schubert_cache();
    CHECK(schubert_cache_size() == 0);
    schubert(Permutation::longest(4));
    const std::size_t after_longest = schubert_cache_size();
    CHECK(after_longest >= 1);
    schubert(Permutation::longest(4));
    CHECK(schubert_cache_size() == after_longest);

    std::vector<IntPoly> serial;
    for (const Permutation& w : symmetric_group(5)) serial.push_back(schubert(w));
    clear_schubert_cache();
    std::vector<std::vector<IntPoly>> parallel(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&parallel, t] {
            for (const Permutation& w : symmetric_group(5))
                parallel[t].push_back(schubert(w));
        });
    }
    for (std::thread& worker : workers) worker.join();
    for (int t = 0; t < 4; ++t) CHECK(parallel[t] == serial);
}
