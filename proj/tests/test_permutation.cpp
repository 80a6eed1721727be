#include "doctest.h"
#include "shoda/errors.hpp"
#include "shoda/permutation.hpp"

using namespace shoda;

TEST_CASE("identity and validation") {
    Perm id = Perm::identity(4);
    CHECK(id.is_identity());
    CHECK(id.degree() == 4);
    CHECK(to_cycle_string(id) == "()");
    CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Perm({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("composition applies the right factor first") {
    Perm a = perm_from_cycles("(0 1)", 3);
    Perm b = perm_from_cycles("(1 2)", 3);
    Perm ab = a * b;  // apply b, then a: 0->1? b fixes 0, a sends 0->1
    CHECK(ab(0) == 1);
    CHECK(ab(1) == 2);  // b: 1->2, a fixes 2
    CHECK(ab(2) == 0);
    CHECK((a * a).is_identity());
    CHECK(ab.inverse() * ab == Perm::identity(3));
}

TEST_CASE("order is the lcm of cycle lengths") {
    CHECK(perm_from_cycles("(0 1)(2 3 4)", 5).order() == 6);
    CHECK(perm_from_cycles("(0 1 2 3 4)", 5).order() == 5);
    CHECK(Perm::identity(7).order() == 1);
}

TEST_CASE("cycle notation round trip") {
    for (const char* text : {"(0 1 2 3)", "(0 1)(2 3)", "(1 4)(2 3)", "()"}) {
        Perm p = perm_from_cycles(text, 5);
        CHECK(perm_from_cycles(to_cycle_string(p), 5) == p);
    }
    CHECK(to_cycle_string(perm_from_cycles("(3 4)(0 1)", 5)) == "(0 1)(3 4)");
}

TEST_CASE("cycle parse errors") {
    CHECK_THROWS_AS(perm_from_cycles("(0 5)", 4), ParseError);
    CHECK_THROWS_AS(perm_from_cycles("(0 1)(1 2)", 4), ParseError);
    CHECK_THROWS_AS(perm_from_cycles("(0 1", 4), ParseError);
    CHECK_THROWS_AS(perm_from_cycles("0 1)", 4), ParseError);
    CHECK_THROWS_AS(perm_from_cycles("", 4), ParseError);
}

TEST_CASE("lexicographic order puts the identity first") {
    Perm id = Perm::identity(4);
    CHECK(id < perm_from_cycles("(2 3)", 4));
    CHECK(id < perm_from_cycles("(0 1 2 3)", 4));
}
