#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "hesscalc/errors.hpp"
#include "hesscalc/permutation.hpp"

using namespace hesscalc;

TEST_CASE("constructor accepts exactly the bijections on 1..n") {
    CHECK_NOTHROW(Permutation({1}));
    CHECK_NOTHROW(Permutation({2, 1, 3}));
    CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 2, 2}), std::invalid_argument);
}

TEST_CASE("named permutations") {
    CHECK(Permutation::identity(3).images() == std::vector<int>{1, 2, 3});
    CHECK(Permutation::simple(1, 3).images() == std::vector<int>{2, 1, 3});
    CHECK(Permutation::simple(2, 3).images() == std::vector<int>{1, 3, 2});
    CHECK(Permutation::transposition(1, 3, 4).images() == std::vector<int>{3, 2, 1, 4});
    CHECK(Permutation::longest(4).images() == std::vector<int>{4, 3, 2, 1});
    CHECK_THROWS_AS(Permutation::simple(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::transposition(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::transposition(3, 1, 3), std::invalid_argument);
}

TEST_CASE("composition applies the right factor first") {
    const Permutation s1 = Permutation::simple(1, 3);
    const Permutation s2 = Permutation::simple(2, 3);
    CHECK((s2 * s1).images() == std::vector<int>{3, 1, 2});
    CHECK((s1 * s2).images() == std::vector<int>{2, 3, 1});
    const Permutation w({2, 1, 3});
    CHECK((w * Permutation::transposition(1, 3, 3)).images() == std::vector<int>{3, 1, 2});
    CHECK_THROWS_AS(w * Permutation::identity(4), std::invalid_argument);
}

TEST_CASE("inverse and group laws over all of S_4") {
    CHECK(Permutation({3, 1, 2}).inverse().images() == std::vector<int>{2, 3, 1});
    const auto group = symmetric_group(4);
    const Permutation id = Permutation::identity(4);
    for (const Permutation& u : group) {
        CHECK(u * u.inverse() == id);
        CHECK(u.inverse() * u == id);
        for (const Permutation& v : group) {
            CHECK((u * v).inverse() == v.inverse() * u.inverse());
        }
    }
}

TEST_CASE("length counts inversions and steps by one under simples") {
    CHECK(Permutation::identity(5).length() == 0);
    CHECK(Permutation({3, 1, 2}).length() == 2);
    CHECK(Permutation::longest(5).length() == 10);
    for (const Permutation& w : symmetric_group(4)) {
        for (int i = 1; i < 4; ++i) {
            const int step = (w * Permutation::simple(i, 4)).length() - w.length();
            CHECK(step == (w.has_descent(i) ? -1 : 1));
        }
    }
}

TEST_CASE("descents match value drops") {
    const Permutation w({2, 4, 1, 3});
    CHECK(w.has_descent(1) == false);
    CHECK(w.has_descent(2) == true);
    CHECK(w.has_descent(3) == false);
    CHECK_THROWS_AS(w.has_descent(0), std::invalid_argument);
    CHECK_THROWS_AS(w.has_descent(4), std::invalid_argument);
}

TEST_CASE("reduced words multiply back to the permutation") {
    CHECK(Permutation({3, 1, 2}).reduced_word() == std::vector<int>{2, 1});
    for (const Permutation& w : symmetric_group(5)) {
        const std::vector<int> word = w.reduced_word();
        CHECK(static_cast<int>(word.size()) == w.length());
        Permutation product = Permutation::identity(5);
        for (int i : word) product = product * Permutation::simple(i, 5);
        CHECK(product == w);
    }
}

TEST_CASE("embed and stabilized are inverse on the stable range") {
    const Permutation w({3, 1, 2});
    CHECK(w.embed(5).images() == std::vector<int>{3, 1, 2, 4, 5});
    CHECK(w.embed(3) == w);
    CHECK_THROWS_AS(w.embed(2), std::invalid_argument);
    CHECK(w.embed(6).stabilized() == w);
    CHECK(Permutation::identity(4).stabilized() == Permutation::identity(1));
    CHECK(Permutation({2, 1, 3, 4}).stabilized() == Permutation({2, 1}));
}

TEST_CASE("parse round-trips to_string and rejects malformed input") {
    CHECK(Permutation::parse("[3,1,2]") == Permutation({3, 1, 2}));
    CHECK(Permutation::parse(" [ 2 , 1 ] ") == Permutation({2, 1}));
    CHECK(Permutation({4, 2, 1, 3}).to_string() == "[4,2,1,3]");
    CHECK(Permutation::parse(Permutation({4, 2, 1, 3}).to_string()) ==
          Permutation({4, 2, 1, 3}));
    CHECK_THROWS_AS(Permutation::parse("3,1,2"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("[3,1,2"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("[3,1,2]x"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("[]"), ParseError);
    CHECK_THROWS_AS(Permutation::parse("[1,1]"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("[0,1]"), std::invalid_argument);
}

TEST_CASE("symmetric_group enumerates n! permutations in lexicographic order") {
    const auto group = symmetric_group(4);
    REQUIRE(group.size() == 24);
    CHECK(group.front() == Permutation::identity(4));
    CHECK(group.back() == Permutation::longest(4));
    CHECK(std::is_sorted(group.begin(), group.end(),
                         [](const Permutation& a, const Permutation& b) {
                             return a.images() < b.images();
                         }));
    const std::set<Permutation> distinct(group.begin(), group.end());
    CHECK(distinct.size() == 24);
}
