#include "doctest.h"

#include "kchar/sl3_root.hpp"

using namespace kchar;
using namespace kchar::sl3_root;

TEST_CASE("validity per sign") {
    CHECK(is_valid({+1, 0, Rational(1, 2)}));
    CHECK_FALSE(is_valid({+1, 2, Rational(3)}));
    CHECK(is_valid({+1, 2, Rational(-3)}));
    CHECK(is_valid({-1, 1, Rational(1)}));        // -a-b = -2 not in Z_{>=0}
    CHECK_FALSE(is_valid({-1, 1, Rational(-1)}));  // -a-b = 0
}

TEST_CASE("generic branch closed form") {
    auto c = character({+1, 0, Rational(1, 2)});
    CHECK(c.equals(RationalChar(LaurentPoly::one(), {1})));

    auto e = character({+1, 2, Rational(-1, 2)}).expand(10);
    CHECK(e.coeff(0) == 1);
    CHECK(e.coeff(1) == 2);
    for (long long i = 2; i <= 10; ++i) CHECK(e.coeff(i) == 3);
}

TEST_CASE("generic branch equals the induced-module oracle") {
    const long long order = 64;
    Rational bs[] = {Rational(1, 2), Rational(-1, 2), Rational(1, 3),
                     Rational(-13, 5), Rational(7, 2)};
    for (long long a = 0; a <= 8; ++a)
        for (const auto& b : bs) {
            Params p{+1, a, b};
            REQUIRE(branch(p) == Branch::Generic);
            auto closed = character(p).expand(order);
            auto oracle = induced_char_oracle(a, order);
            CHECK(closed == oracle);
        }
}

TEST_CASE("quotient branch via the exact sequence") {
    // c(L^+_{a,b}) = Eq81(a) - Eq81(-b-2) when -b in Z_{>=2}, a+b >= -1
    for (long long mb = 2; mb <= 8; ++mb)
        for (long long a = mb - 1; a <= 8; ++a) {
            Params p{+1, a, Rational(-mb)};
            REQUIRE(branch(p) == Branch::Quotient);
            auto lhs = character(p);
            auto full = character({+1, a, Rational(1, 2)});
            auto sub = character({+1, mb - 2, Rational(1, 2)});
            CHECK(lhs.equals(full - sub));
        }
}

TEST_CASE("specific quotient example a=1, b=-2") {
    auto e = character({+1, 1, Rational(-2)}).expand(8);
    CHECK(e.coeff(0) == 0);
    for (long long i = 1; i <= 8; ++i) CHECK(e.coeff(i) == 1);
}

TEST_CASE("minus sign is the substitution b -> -a-b") {
    for (long long a = 0; a <= 6; ++a)
        for (long long bm = -8; bm <= 8; ++bm) {
            Params minus{-1, a, Rational(bm)};
            if (!is_valid(minus)) continue;
            Params plus{+1, a, Rational(-a - bm)};
            CHECK(character(minus).equals(character(plus)));
        }
    // Eq. 83 shape: minimal type at a+b-1, plateau 2-b
    auto e = character({-1, 3, Rational(1)}).expand(12);
    CHECK(e.min_support() == 3);
    for (long long i = 3; i <= 12; ++i) CHECK(e.coeff(i) == 1);

    auto e2 = character({-1, 4, Rational(-1)}).expand(12);
    CHECK(e2.min_support() == 2);  // a+b-1 = 2
    CHECK(e2.coeff(2) == 1);
    CHECK(e2.coeff(3) == 2);
    for (long long i = 4; i <= 12; ++i) CHECK(e2.coeff(i) == 3);  // 2-b = 3
}

TEST_CASE("minimal types and multiplicity-free census") {
    auto m = minimal_type_and_mfree({+1, 0, Rational(1, 2)});
    CHECK(m.index == 0);
    CHECK(m.multiplicity == 1);
    CHECK(m.multiplicity_free);

    m = minimal_type_and_mfree({+1, 2, Rational(-1, 2)});
    CHECK(m.index == 0);
    CHECK_FALSE(m.multiplicity_free);

    m = minimal_type_and_mfree({+1, 3, Rational(-4)});
    CHECK(m.index == 3);  // -b-1
    CHECK(m.multiplicity_free);  // a+b = -1

    // census against expansions over a <= 8 and assorted b
    std::vector<Rational> bs = {Rational(1, 2), Rational(-1, 2), Rational(1), Rational(-1),
                                Rational(-2),   Rational(-3),    Rational(-5), Rational(-9),
                                Rational(3),    Rational(5, 3)};
    for (int sign : {+1, -1})
        for (long long a = 0; a <= 8; ++a)
            for (const auto& b : bs) {
                Params p{sign, a, b};
                if (!is_valid(p)) continue;
                auto e = character(p).expand(80);
                auto mt = minimal_type_and_mfree(p);
                CHECK(e.min_support() == mt.index);
                CHECK(e.coeff(mt.index) == 1);
                CHECK((e.max_coeff() <= 1) == mt.multiplicity_free);
                // multiplicities grow by one per step and stay constant from
                // z^a on: a+1 generically, a+b+2 resp. 2-b in the quotient
                // branches (wrt the normalized parameter)
                Rational bn = sign > 0 ? b : -a - b;
                Rational cap = branch(p) == Branch::Generic ? Rational(a + 1)
                                                            : Rational(a) + bn + 2;
                for (long long i = 0; i <= 80; ++i) {
                    CHECK(e.coeff(i) >= 0);
                    CHECK(e.coeff(i) <= cap);
                }
                for (long long i = a; i <= 80; ++i) CHECK(e.coeff(i) == cap);
            }
}
