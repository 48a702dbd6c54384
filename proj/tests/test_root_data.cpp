#include "doctest.h"

#include "kchar/root_data.hpp"

using namespace kchar;

namespace {

Weight w(std::initializer_list<long long> cs) {
    Weight out;
    for (auto c : cs) out.emplace_back(c);
    return out;
}

}  // namespace

TEST_CASE("positive root counts and rho pairing") {
    for (auto [fam, rank] : std::vector<std::pair<Family, int>>{{Family::A, 1},
                                                                {Family::A, 5},
                                                                {Family::B, 4},
                                                                {Family::C, 3},
                                                                {Family::D, 6},
                                                                {Family::G2, 2},
                                                                {Family::F4, 4},
                                                                {Family::E6, 6},
                                                                {Family::E7, 7}}) {
        auto d = RootDatum::build(fam, rank);
        CHECK(d.algebra_dim() == family_dim(fam, rank));
        // dim of the trivial weight is 1, i.e. (rho, alpha)/(rho, alpha) products collapse
        CHECK(d.weyl_dim(Weight(rank, Rational(0))) == 1);
    }
}

TEST_CASE("weyl_dim on known modules") {
    auto a2 = RootDatum::build(Family::A, 2);
    CHECK(a2.weyl_dim(w({1, 0})) == 3);
    CHECK(a2.weyl_dim(w({0, 1})) == 3);
    CHECK(a2.weyl_dim(w({1, 1})) == 8);

    // dim V_{2 omega_1} = m(m+1)/2 for sl(m)
    for (int m = 2; m <= 7; ++m) {
        auto d = RootDatum::build(Family::A, m - 1);
        Weight lambda(m - 1, Rational(0));
        lambda[0] = 2;
        CHECK(d.weyl_dim(lambda) == Int(m) * (m + 1) / 2);
    }

    auto g2 = RootDatum::build(Family::G2, 2);
    CHECK(g2.weyl_dim(w({1, 0})) == 7);
    CHECK(g2.weyl_dim(w({0, 1})) == 14);

    auto c2 = RootDatum::build(Family::C, 2);
    CHECK(c2.weyl_dim(w({1, 0})) == 4);
    CHECK(c2.weyl_dim(w({0, 1})) == 5);

    auto b4 = RootDatum::build(Family::B, 4);
    CHECK(b4.weyl_dim(w({1, 0, 0, 0})) == 9);
    CHECK(b4.weyl_dim(w({0, 0, 0, 1})) == 16);

    auto f4 = RootDatum::build(Family::F4, 4);
    CHECK(f4.weyl_dim(w({1, 0, 0, 0})) == 26);

    auto e6 = RootDatum::build(Family::E6, 6);
    CHECK(e6.weyl_dim(w({1, 0, 0, 0, 0, 0})) == 27);
    CHECK(e6.weyl_dim(w({0, 0, 0, 0, 0, 1})) == 27);

    auto e7 = RootDatum::build(Family::E7, 7);
    CHECK(e7.weyl_dim(w({0, 0, 0, 0, 0, 0, 1})) == 56);

    auto d5 = RootDatum::build(Family::D, 5);
    CHECK(d5.weyl_dim(w({0, 0, 0, 1, 0})) == 16);
    CHECK(d5.weyl_dim(w({0, 0, 0, 0, 1})) == 16);

    CHECK_THROWS_AS(a2.weyl_dim(w({-1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(a2.weyl_dim(Weight{Rational(1, 2), Rational(0)}), std::invalid_argument);
}

TEST_CASE("weyl_dim matches explicit basis counting for A1, A2, C2") {
    // A1: dim V_n = n + 1
    auto a1 = RootDatum::build(Family::A, 1);
    for (long long n = 0; n <= 49; ++n) CHECK(a1.weyl_dim({Rational(n)}) == n + 1);

    // A2: count Gelfand-Tsetlin patterns with top row (p+q, q, 0)
    auto gt_count_a2 = [](long long p, long long q) {
        long long l1 = p + q, l2 = q, count = 0;
        for (long long x1 = l2; x1 <= l1; ++x1)
            for (long long x2 = 0; x2 <= l2; ++x2) count += x1 - x2 + 1;
        return count;
    };
    auto a2 = RootDatum::build(Family::A, 2);
    for (long long p = 0; p <= 8; ++p)
        for (long long q = 0; q <= 8; ++q) {
            Int dim = a2.weyl_dim(w({p, q}));
            if (dim > 50) continue;
            CHECK(dim == gt_count_a2(p, q));
        }

    // C2: count symplectic tableaux of shape (p+q, q), entries 1<2<3<4,
    // rows weak, columns strict, row-2 entries >= 3
    auto sp4_tableaux = [](long long p, long long q) {
        long long count = 0;
        long long len1 = p + q;
        for (long long t = 0; t <= q; ++t) {  // row 2 = 3^t 4^(q-t)
            // row 1: counts (n1,n2,n3,n4), n1+n2 >= t, n1+n2+n3 >= q
            for (long long n1 = 0; n1 <= len1; ++n1)
                for (long long n2 = 0; n1 + n2 <= len1; ++n2)
                    for (long long n3 = 0; n1 + n2 + n3 <= len1; ++n3) {
                        if (n1 + n2 < t) continue;
                        if (n1 + n2 + n3 < q) continue;
                        ++count;  // n4 is determined
                    }
        }
        return count;
    };
    auto c2 = RootDatum::build(Family::C, 2);
    for (long long p = 0; p <= 8; ++p)
        for (long long q = 0; q <= 8; ++q) {
            Int dim = c2.weyl_dim(w({p, q}));
            if (dim > 50) continue;
            CHECK(dim == sp4_tableaux(p, q));
        }
}

TEST_CASE("enumeration of dominant weights under a dimension bound") {
    auto a1 = RootDatum::build(Family::A, 1);
    CHECK(a1.enumerate_dominant_dim_at_most(3) ==
          std::vector<Weight>{w({0}), w({1}), w({2})});

    auto a2 = RootDatum::build(Family::A, 2);
    CHECK(a2.enumerate_dominant_dim_at_most(3) ==
          std::vector<Weight>{w({0, 0}), w({0, 1}), w({1, 0})});

    auto c2 = RootDatum::build(Family::C, 2);
    CHECK(c2.enumerate_dominant_dim_at_most(5) ==
          std::vector<Weight>{w({0, 0}), w({0, 1}), w({1, 0})});

    // brute-force oracle over the box (lambda_i <= C-1)
    auto brute = [](const RootDatum& d, long long C) {
        std::vector<Weight> out;
        for (long long x = 0; x < C; ++x)
            for (long long y = 0; y < C; ++y) {
                Weight lam = {Rational(x), Rational(y)};
                if (d.weyl_dim(lam) <= C) out.push_back(lam);
            }
        std::sort(out.begin(), out.end());
        return out;
    };
    for (long long C : {1, 2, 3, 8, 21}) {
        CHECK(a2.enumerate_dominant_dim_at_most(C) == brute(a2, C));
        CHECK(c2.enumerate_dominant_dim_at_most(C) == brute(c2, C));
    }
}

TEST_CASE("enumeration output is closed under the diagram involution") {
    for (auto [fam, rank, C] : std::vector<std::tuple<Family, int, long long>>{
             {Family::A, 3, 20}, {Family::A, 4, 15}, {Family::D, 5, 30}, {Family::E6, 6, 30}}) {
        auto d = RootDatum::build(fam, rank);
        auto list = d.enumerate_dominant_dim_at_most(C);
        for (const auto& lam : list) {
            auto dual = d.dual_weight(lam);
            CHECK(std::find(list.begin(), list.end(), dual) != list.end());
        }
    }
}

TEST_CASE("self-duality via the diagram involution") {
    auto a2 = RootDatum::build(Family::A, 2);
    CHECK_FALSE(a2.is_self_dual(w({1, 0})));
    CHECK(a2.is_self_dual(w({1, 1})));

    auto c2 = RootDatum::build(Family::C, 2);
    CHECK(c2.is_self_dual(w({1, 0})));

    auto d5 = RootDatum::build(Family::D, 5);
    CHECK_FALSE(d5.is_self_dual(w({0, 0, 0, 0, 1})));
    CHECK_FALSE(d5.is_self_dual(w({0, 0, 0, 1, 0})));

    auto d4 = RootDatum::build(Family::D, 4);
    CHECK(d4.is_self_dual(w({0, 0, 0, 1})));

    auto e6 = RootDatum::build(Family::E6, 6);
    CHECK_FALSE(e6.is_self_dual(w({1, 0, 0, 0, 0, 0})));
}

TEST_CASE("r_g table and borel dimension") {
    CHECK(r_g(Family::A, 2) == 2);
    CHECK(r_g(Family::A, 1) == 1);
    CHECK(r_g(Family::C, 2) == 2);
    CHECK(r_g(Family::B, 2) == 2);  // so(5) ~ sp(4)
    CHECK(r_g(Family::B, 3) == 4);
    CHECK(r_g(Family::D, 4) == 5);
    CHECK(r_g(Family::D, 3) == 3);  // so(6) ~ sl(4)
    CHECK(r_g(Family::G2, 2) == 3);
    CHECK(r_g(Family::F4, 4) == 8);
    CHECK(r_g(Family::E6, 6) == 11);
    CHECK(r_g(Family::E7, 7) == 17);
    CHECK(r_g(Family::E8, 8) == 29);

    CHECK(borel_dim(3, 1) == 2);    // sl(2)
    CHECK(borel_dim(10, 2) == 6);   // so(5)
    CHECK(borel_dim(4, 2) == 3);    // gl(2)

    SubalgebraDescriptor sl2{{{Family::A, 1}}, 0, "sl2"};
    CHECK(sl2.borel_dim() == 2);
    SubalgebraDescriptor gl2{{{Family::A, 1}}, 1, "gl2"};
    CHECK(gl2.borel_dim() == 3);
}
