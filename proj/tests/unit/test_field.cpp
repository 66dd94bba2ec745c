#include "doctest.h"

#include <random>

#include "ffdyn/error.hpp"
#include "ffdyn/field.hpp"

using namespace ffdyn;

TEST_CASE("prime field arithmetic") {
    auto F = GaloisField::prime(5);
    CHECK(F->order() == 5);
    CHECK(F->add(3, 4) == 2);
    CHECK(F->mul(3, 4) == 2);
    CHECK(F->inv(2) == 3);
    CHECK(F->neg(1) == 4);
    CHECK(F->from_int(-1) == 4);
    CHECK(F->spec() == "p=5");
}

TEST_CASE("field spec parsing") {
    auto F = GaloisField::parse("q=25;modulus=2,0,1");  // x^2 + 2 irreducible mod 5
    CHECK(F->order() == 25);
    CHECK(F->spec() == "q=25;modulus=2,0,1");
    CHECK(same_field(F, GaloisField::parse(F->spec())));
    CHECK_THROWS_AS(GaloisField::parse("q=25;modulus=1,0,1"), Error);  // x^2+1 = (x-2)(x-3)
    CHECK_THROWS_AS(GaloisField::parse("p=6"), Error);
    CHECK(GaloisField::parse("q=7")->order() == 7);
}

TEST_CASE("extension field axioms hold exhaustively") {
    for (auto spec : {"q=25;modulus=2,0,1", "q=8;modulus=1,1,0,1", "q=27;modulus=1,2,0,1"}) {
        auto F = GaloisField::parse(spec);
        std::uint32_t q = F->order();
        for (Elem a = 0; a < q; ++a) {
            CHECK(F->add(a, F->neg(a)) == 0);
            if (a) {
                CHECK(F->mul(a, F->inv(a)) == 1);
                CHECK(F->pow(a, q - 1) == 1);
            }
            CHECK(F->frobenius(F->pth_root(a)) == a);
            for (Elem b = 0; b < q; b += 3) {
                CHECK(F->mul(a, b) == F->mul(b, a));
                // distributivity against a third element
                Elem c = (a * 7 + b) % q;
                CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            }
        }
    }
}

TEST_CASE("extension embeds the parent as a subfield") {
    auto F = GaloisField::prime(5);
    auto E = F->extension(2);
    CHECK(E->order() == 25);
    CHECK(E->extension(1) == E);
    CHECK(F->extension(2) == E);  // cached
    auto E2 = E->extension(2);
    CHECK(E2->order() == 625);
    // embedding is a ring homomorphism
    for (Elem a = 0; a < 25; ++a)
        for (Elem b = 0; b < 25; ++b) {
            CHECK(E2->embed(E->add(a, b)) == E2->add(E2->embed(a), E2->embed(b)));
            CHECK(E2->embed(E->mul(a, b)) == E2->mul(E2->embed(a), E2->embed(b)));
        }
    for (Elem a = 0; a < 5; ++a) {
        Elem up = E2->lift_from(*F, a);
        CHECK(E2->descend_to(*F, up) == a);
    }
    // an element outside the subfield does not descend
    int outside = 0;
    for (Elem a = 0; a < 625; ++a)
        if (!E2->descend_to(*E, a)) ++outside;
    CHECK(outside == 600);
    CHECK(larger_field(F, E2) == E2);
}
