#include "doctest.h"

#include "kchar/laurent.hpp"
#include "kchar/rational_char.hpp"
#include "kchar/series.hpp"

using namespace kchar;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long long, long long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

}  // namespace

TEST_CASE("pi projection acts termwise") {
    CHECK(pi_project(LaurentPoly::monomial(3)) == LaurentPoly::monomial(3));
    CHECK(pi_project(LaurentPoly::monomial(-1)).is_zero());
    CHECK(pi_project(LaurentPoly::monomial(-2)) == LaurentPoly::monomial(0, -1));
    CHECK(pi_project(LaurentPoly::monomial(-5)) == LaurentPoly::monomial(3, -1));
}

TEST_CASE("pi projection of z^-3/(1-z^2) equals expansion of z^3/(1-z^2)") {
    const long long order = 41;
    auto neg = RationalChar(LaurentPoly::monomial(-3), {2}).expand_laurent(order);
    auto pos = RationalChar(LaurentPoly::monomial(3), {2}).expand_laurent(order);
    CHECK(pi_project(neg).terms() == pos.terms());
}

TEST_CASE("pi is idempotent and fixes nonnegative input") {
    LaurentPoly f = poly({{-7, 2}, {-4, 1}, {-1, 5}, {0, 3}, {2, -1}, {9, 4}});
    CHECK(pi_project(pi_project(f)) == pi_project(f));
    LaurentPoly g = poly({{0, 1}, {3, 2}, {8, 1}});
    CHECK(pi_project(g) == g);
}

TEST_CASE("Clebsch-Gordan product basics") {
    CHECK(cg_product(3, 2) == poly({{5, 1}, {3, 1}, {1, 1}}));
    CHECK(cg_product(0, 0) == LaurentPoly::one());
    CHECK(cg_product(2, 2) == poly({{4, 1}, {2, 1}, {0, 1}}));
    CHECK(dimension_weight(cg_product(2, 2)) == 9);
    CHECK(cg_product(4, 7) == cg_product(7, 4));
    CHECK_THROWS_AS(cg_product(-1, 2), std::invalid_argument);
}

TEST_CASE("Clebsch-Gordan dimension identity up to 30") {
    for (long long p = 0; p <= 30; ++p)
        for (long long q = 0; q <= 30; ++q)
            CHECK(dimension_weight(cg_product(p, q)) == Rational((p + 1) * (q + 1)));
}

TEST_CASE("Clebsch-Gordan product is associative on the character ring") {
    for (long long p = 0; p <= 12; ++p)
        for (long long q = p; q <= 12; ++q)
            for (long long r = q; r <= 12; ++r) {
                LaurentPoly left = cg_product(cg_product(p, q), LaurentPoly::monomial(r));
                LaurentPoly right = cg_product(LaurentPoly::monomial(p), cg_product(q, r));
                CHECK(left == right);
            }
}

TEST_CASE("multiply-then-project computes the Clebsch-Gordan product") {
    for (long long p = 0; p <= 10; ++p)
        for (long long q = 0; q <= 10; ++q) {
            LaurentPoly via_pi = pi_project(LaurentPoly::monomial(p) * weight_char(q));
            CHECK(via_pi == cg_product(p, q));
        }
}

TEST_CASE("expansion of simple closed forms") {
    auto geo = RationalChar(LaurentPoly::one(), {2}).expand(6);
    for (long long i = 0; i <= 6; ++i) CHECK(geo.coeff(i) == (i % 2 == 0 ? 1 : 0));

    auto s0 = RationalChar(LaurentPoly::one(), {6}).expand(12);
    for (long long i = 0; i <= 12; ++i) CHECK(s0.coeff(i) == (i % 6 == 0 ? 1 : 0));
}

TEST_CASE("expansion of 1/((1-z^2)^2 (1-z^4)(1-z^6)) against direct multiplication") {
    auto k = RationalChar(LaurentPoly::one(), {2, 2, 4, 6}).expand(6);
    CHECK(k.coeffs() == std::vector<Rational>{1, 0, 2, 0, 4, 0, 7});

    // independent oracle: multiply four truncated geometric series directly
    const long long N = 40;
    std::vector<Rational> acc(N + 1, 0);
    acc[0] = 1;
    for (int d : {2, 2, 4, 6}) {
        std::vector<Rational> next(N + 1, 0);
        for (long long i = 0; i <= N; ++i) {
            if (acc[i] == 0) continue;
            for (long long j = i; j <= N; j += d) next[j] += acc[i];
        }
        acc = std::move(next);
    }
    auto full = RationalChar(LaurentPoly::one(), {2, 2, 4, 6}).expand(N);
    for (long long i = 0; i <= N; ++i) CHECK(full.coeff(i) == acc[i]);
}

TEST_CASE("rational char equality by cross multiplication") {
    // (1-z^4)/((1-z^2)(1-z^4)) == 1/(1-z^2)
    LaurentPoly num = poly({{0, 1}, {4, -1}});
    RationalChar a(num, {2, 4});
    RationalChar b(LaurentPoly::one(), {2});
    CHECK(a.equals(b));
    CHECK_FALSE(a.equals(RationalChar(LaurentPoly::one(), {4})));
}

TEST_CASE("rational char sum and difference") {
    RationalChar a = RationalChar::monomial_over(0, {4});
    RationalChar b = RationalChar::monomial_over(4, {2});
    auto s = (a + b).expand(12);
    auto ea = a.expand(12);
    auto eb = b.expand(12);
    for (long long i = 0; i <= 12; ++i) CHECK(s.coeff(i) == ea.coeff(i) + eb.coeff(i));
    CHECK((a - a).expand(8).max_coeff() == 0);
}

TEST_CASE("expand distributes over sum and product") {
    RationalChar a(poly({{1, 2}, {3, -1}}), {2, 6});
    RationalChar b(poly({{0, 1}, {2, 1}}), {4});
    const long long N = 30;
    auto sum = (a + b).expand_laurent(N);
    auto prod = (a * b).expand_laurent(N);
    for (long long i = 0; i <= N; ++i) {
        CHECK(sum.coeff(i) == a.expand_laurent(N).coeff(i) + b.expand_laurent(N).coeff(i));
    }
    // product check via convolution of the two expansions
    auto ea = a.expand_laurent(N);
    auto eb = b.expand_laurent(N);
    for (long long i = 0; i <= 10; ++i) {
        Rational conv = 0;
        for (long long j = 0; j <= i; ++j) conv += ea.coeff(j) * eb.coeff(i - j);
        CHECK(prod.coeff(i) == conv);
    }
}

TEST_CASE("tensor_char on closed forms") {
    // trivial module tensored with V_4
    KCharacter one(10);
    one.set(0, 1);
    auto t = tensor_char(one, 4);
    CHECK(t.order() == 6);
    CHECK(t.coeff(4) == 1);
    CHECK(t.min_support() == 4);

    // tensoring with V_0 changes nothing
    auto c = RationalChar::monomial_over(3, {2}).expand(15);
    auto t0 = tensor_char(c, 0);
    for (long long i = 0; i <= 15; ++i) CHECK(t0.coeff(i) == c.coeff(i));

    CHECK_THROWS_AS(tensor_char(KCharacter(2), 5), std::invalid_argument);
}

TEST_CASE("tensor_char agrees with the brute-force bilinear sum") {
    const long long order = 20, i = 3;
    auto c = RationalChar(LaurentPoly::one(), {4}).expand(order);
    auto fast = tensor_char(c, i);
    KCharacter brute(order - i);
    for (long long m = 0; m <= order; ++m) {
        if (c.coeff(m) == 0) continue;
        LaurentPoly cg = cg_product(m, i);
        for (const auto& [e, w] : cg.terms())
            if (e <= brute.order()) brute.add(e, w * c.coeff(m));
    }
    CHECK(fast == brute);
}
