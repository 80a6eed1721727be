#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "shoda/group_spec.hpp"
#include "shoda/subgroup.hpp"

using namespace shoda;

TEST_CASE("builtin families") {
    CHECK(parse_group("cyclic:1").order() == 1);
    CHECK(parse_group("cyclic:17").order() == 17);
    CHECK(parse_group("dihedral:8").order() == 8);
    CHECK(all_subgroups(parse_group("dihedral:8")).size() == 10);
    CHECK(parse_group("dihedral:2").order() == 2);
    CHECK(parse_group("dihedral:4").order() == 4);
    CHECK_FALSE(parse_group("dihedral:4").conjugacy_classes().size() != 4);  // C2 x C2
    CHECK(parse_group("symmetric:4").order() == 24);
    CHECK(parse_group("alternating:4").order() == 12);
    CHECK(parse_group("alternating:5").order() == 60);
    CHECK(parse_group("alternating:2").order() == 1);
    CHECK(parse_group("elementary_abelian:2^3").order() == 8);
    CHECK(parse_group("elementary_abelian:5").order() == 5);
}

TEST_CASE("dicyclic groups") {
    FiniteGroup Q8 = parse_group("dicyclic:8");
    CHECK(Q8.order() == 8);
    CHECK_FALSE(Q8.is_abelian());
    // Q8 signature: a unique involution
    int involutions = 0;
    for (uint32_t x = 0; x < Q8.order(); ++x)
        if (Q8.element_order(x) == 2) ++involutions;
    CHECK(involutions == 1);

    FiniteGroup dic12 = parse_group("dicyclic:12");
    CHECK(dic12.order() == 12);
    CHECK_FALSE(dic12.is_abelian());
    CHECK(center(dic12).order() == 2);
}

TEST_CASE("elementary abelian groups have prime exponent") {
    FiniteGroup G = parse_group("elementary_abelian:3^3");
    CHECK(G.order() == 27);
    CHECK(G.is_abelian());
    for (uint32_t x = 1; x < G.order(); ++x) CHECK(G.element_order(x) == 3);
}

TEST_CASE("direct products") {
    FiniteGroup C6 = parse_group("direct_product(cyclic:2,cyclic:3)");
    CHECK(C6.order() == 6);
    bool has6 = false;
    for (uint32_t x = 0; x < C6.order(); ++x)
        if (C6.element_order(x) == 6) has6 = true;
    CHECK(has6);  // C2 x C3 is cyclic of order 6

    FiniteGroup D12 = parse_group("direct_product(symmetric:3,cyclic:2)");
    CHECK(D12.order() == 12);
    CHECK_FALSE(D12.is_abelian());

    FiniteGroup nested = parse_group("direct_product(cyclic:2,direct_product(cyclic:2,cyclic:2))");
    CHECK(nested.order() == 8);
}

TEST_CASE("perm specs") {
    FiniteGroup D8 = parse_group("perm:4:(0 1 2 3),(0 2)");
    CHECK(D8.order() == 8);
    FiniteGroup trivial = parse_group("perm:3:");
    CHECK(trivial.order() == 1);
    CHECK(trivial.degree() == 3);
}

TEST_CASE("group files") {
    const char* path = "test_group_d10.grp";
    {
        std::ofstream out(path);
        out << "# a dihedral group of order 10\n";
        out << "degree: 5\n";
        out << "(0 1 2 3 4)\n";
        out << "(1 4)(2 3)\n";
    }
    FiniteGroup D10 = parse_group(path);
    CHECK(D10.order() == 10);
    FiniteGroup same = parse_group(std::string("@") + path);
    CHECK(same.order() == 10);
    std::remove(path);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_group(""), ParseError);
    CHECK_THROWS_AS(parse_group("frobnicate:8"), ParseError);
    CHECK_THROWS_AS(parse_group("cyclic:x"), ParseError);
    CHECK_THROWS_AS(parse_group("cyclic:0"), ParseError);
    CHECK_THROWS_AS(parse_group("dihedral:7"), ParseError);
    CHECK_THROWS_AS(parse_group("dicyclic:10"), ParseError);
    CHECK_THROWS_AS(parse_group("elementary_abelian:4^2"), ParseError);
    CHECK_THROWS_AS(parse_group("perm:4:(0 5)"), ParseError);
    CHECK_THROWS_AS(parse_group("direct_product(cyclic:2"), ParseError);
    CHECK_THROWS_AS(parse_group("@/nonexistent/file.grp"), ParseError);
}

TEST_CASE("file format errors") {
    const char* path = "test_group_bad.grp";
    {
        std::ofstream out(path);
        out << "(0 1 2)\n";  // missing degree line
    }
    CHECK_THROWS_AS(parse_group(path), ParseError);
    std::remove(path);
}

TEST_CASE("size caps map to SizeLimitError") {
    Limits tiny;
    tiny.max_order = 100;
    CHECK_THROWS_AS(parse_group("symmetric:5", tiny), SizeLimitError);
}

TEST_CASE("constructions are deterministic") {
    FiniteGroup a = parse_group("dicyclic:16");
    FiniteGroup b = parse_group("dicyclic:16");
    CHECK(a.elements() == b.elements());
    for (std::size_t i = 0; i < a.generators().size(); ++i)
        CHECK(a.generators()[i] == b.generators()[i]);
}
