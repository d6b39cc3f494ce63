#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ghkit/field.hpp"
#include "oracle.hpp"

using namespace ghkit;

TEST_CASE("table arithmetic matches direct polynomial arithmetic") {
    const int pe[][2] = {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3}, {2, 4},
                         {3, 2}, {3, 3}, {5, 2}, {11, 1}, {13, 1}};
    for (auto [p, e] : pe) {
        FieldPtr f = field_new(p, e);
        FieldOracle o(*f);
        CAPTURE(p);
        CAPTURE(e);
        REQUIRE(f->q() == o.q);
        for (int a = 0; a < f->q(); ++a)
            for (int b = 0; b < f->q(); ++b) {
                REQUIRE(int(f->add(Elem(a), Elem(b))) == o.add(a, b));
                REQUIRE(int(f->mul(Elem(a), Elem(b))) == o.mul(a, b));
                REQUIRE(int(f->sub(Elem(a), Elem(b))) == o.sub(a, b));
            }
        for (int a = 0; a < f->q(); ++a) REQUIRE(int(f->neg(Elem(a))) == o.neg(a));
    }
}

TEST_CASE("field axioms hold elementwise") {
    for (int q : {4, 9, 8, 27, 25}) {
        int p = 2;
        while (q % p) ++p;
        int e = 0;
        for (int t = 1; t < q; t *= p) ++e;
        FieldPtr f = field_new(p, e);
        for (int a = 1; a < q; ++a) {
            Elem ia = f->inv(Elem(a));
            REQUIRE(f->mul(Elem(a), ia) == 1);
            REQUIRE(f->pow(Elem(a), q - 1) == 1);
            REQUIRE(f->pow(Elem(a), -1) == ia);
        }
    }
}

TEST_CASE("log and pow are inverse through omega") {
    for (int q : {5, 8, 9}) {
        int p = 2;
        while (q % p) ++p;
        int e = 0;
        for (int t = 1; t < q; t *= p) ++e;
        FieldPtr f = field_new(p, e);
        for (int a = 1; a < q; ++a) REQUIRE(f->pow(f->omega(), f->log(Elem(a))) == Elem(a));
        REQUIRE_THROWS_AS((void)f->log(0), std::invalid_argument);
        REQUIRE_THROWS_AS((void)f->inv(0), std::invalid_argument);
        REQUIRE_THROWS_AS((void)f->pow(0, -1), std::invalid_argument);
        REQUIRE(f->pow(0, 0) == 1);
    }
}

TEST_CASE("canonical element order enumerates omega powers") {
    FieldPtr f7 = field_new(7, 1);
    REQUIRE(f7->elem_order() == std::vector<Elem>{0, 1, 3, 2, 6, 4, 5});
    FieldPtr f9 = field_new(3, 2);
    REQUIRE(f9->elem_order() == std::vector<Elem>{0, 1, 3, 4, 7, 2, 6, 8, 5});
    for (int q : {4, 5, 16, 27}) {
        int p = 2;
        while (q % p) ++p;
        int e = 0;
        for (int t = 1; t < q; t *= p) ++e;
        FieldPtr f = field_new(p, e);
        const std::vector<Elem>& eo = f->elem_order();
        REQUIRE(int(eo.size()) == q);
        REQUIRE(eo[0] == 0);
        REQUIRE(eo[1] == 1);
        std::vector<bool> seen(size_t(q), false);
        for (Elem x : eo) {
            REQUIRE(!seen[x]);
            seen[x] = true;
        }
        for (int i = 1; i < q; ++i) REQUIRE(eo[size_t(i)] == f->pow(f->omega(), i - 1));
    }
}

TEST_CASE("sum of squares over the whole field") {
    REQUIRE(field_new(2, 1)->sum_of_squares() == 1);
    REQUIRE(field_new(3, 1)->sum_of_squares() == 2);
    for (int q : {4, 5, 7, 9}) {
        int p = 2;
        while (q % p) ++p;
        int e = 0;
        for (int t = 1; t < q; t *= p) ++e;
        REQUIRE(field_new(p, e)->sum_of_squares() == 0);
    }
}

TEST_CASE("explicit defining polynomials are vetted") {
    // x^2 + x + 1 is primitive over GF(2)
    FieldPtr f4 = field_new(2, 2, {1, 1, 1});
    REQUIRE(f4->q() == 4);
    REQUIRE(f4->same_as(*field_new(2, 2)));
    // x^2 + 1 is reducible over GF(2) and irreducible but imprimitive over GF(3)
    REQUIRE_THROWS_AS(field_new(2, 2, {1, 0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(field_new(3, 2, {1, 0, 1}), std::invalid_argument);
    // not monic / wrong degree / coefficient out of range
    REQUIRE_THROWS_AS(field_new(3, 2, {2, 2, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(field_new(3, 2, {1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(field_new(3, 2, {3, 0, 1}), std::invalid_argument);
}

TEST_CASE("constructor rejections") {
    REQUIRE_THROWS_AS(field_new(6, 1), std::invalid_argument);  // composite characteristic
    REQUIRE_THROWS_AS(field_new(4, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(field_new(3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(field_new(2, 30), std::invalid_argument); // no built-in polynomial
}

TEST_CASE("prime subfield shares the characteristic arithmetic") {
    FieldPtr f9 = field_new(3, 2);
    FieldPtr f3 = prime_subfield(*f9);
    REQUIRE(f3->q() == 3);
    REQUIRE(f3->e() == 1);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) REQUIRE(int(f3->add(Elem(a), Elem(b))) == (a + b) % 3);
    FieldPtr f101 = prime_subfield(*field_new(101, 1));
    REQUIRE(f101->q() == 101);
}
