#include "kchar/verify.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "kchar/gate.hpp"
#include "kchar/sl2sl2.hpp"
#include "kchar/sl3_principal.hpp"
#include "kchar/sl3_root.hpp"
#include "kchar/sp4_principal.hpp"
#include "kchar/sp4_root.hpp"

namespace kchar {
namespace verify {

namespace {

// collects failures with printable context
struct Checker {
    SuiteReport report;

    void expect(bool ok, const std::string& where, const std::string& expected,
                const std::string& actual) {
        ++report.checked;
        if (!ok) report.failures.push_back({where, expected, actual});
    }

    void expect_eq(const Rational& actual, const Rational& expected, const std::string& where) {
        expect(actual == expected, where, to_string(expected), to_string(actual));
    }

    void expect_true(bool ok, const std::string& where) {
        expect(ok, where, "true", ok ? "true" : "false");
    }
};

std::string fmt(const char* label, long long v) {
    return std::string(label) + "=" + std::to_string(v);
}

// ---- series_core ----------------------------------------------------------

void suite_series_core(Checker& c) {
    for (long long p = 0; p <= 30; ++p)
        for (long long q = 0; q <= 30; ++q)
            c.expect_eq(dimension_weight(cg_product(p, q)), Rational((p + 1) * (q + 1)),
                        "cg dimension " + fmt("p", p) + " " + fmt("q", q));
    for (long long p = 0; p <= 10; ++p)
        for (long long q = 0; q <= 10; ++q) {
            bool same = pi_project(LaurentPoly::monomial(p) * weight_char(q)) == cg_product(p, q);
            c.expect_true(same, "pi vs cg " + fmt("p", p) + " " + fmt("q", q));
        }
    // pi idempotence on assorted Laurent data
    for (long long lo = -9; lo <= 0; ++lo) {
        LaurentPoly f;
        for (long long e = lo; e <= lo + 12; ++e) f.set(e, Rational(((e % 3) + 3) % 3 + 1));
        c.expect_true(pi_project(pi_project(f)) == pi_project(f), "pi idempotent " + fmt("lo", lo));
    }
}

// ---- sl(2)+sl(2) ----------------------------------------------------------

void suite_sl2sl2(Checker& c) {
    for (long long n = 0; n <= 20; ++n) {
        c.expect_true(sl2sl2::character(n).equals(RationalChar::monomial_over(n, {2})),
                      "sct closed form " + fmt("n", n));
        auto e = sl2sl2::character(n).expand(n + 20);
        c.expect_true(e.min_support() == n, "sct minimal type " + fmt("n", n));
        c.expect_eq(e.coeff(n), 1, "sct minimal multiplicity " + fmt("n", n));
        c.expect_true(e.max_coeff() <= 1, "sct multiplicity free " + fmt("n", n));
    }
    for (long long a = 1; a <= 12; ++a)
        for (long long n = a + 1; n <= 12; ++n)
            c.expect_true(sl2sl2::finite_dim_char(a, n) == cg_product(a - 1, n - a - 1),
                          "finite companion " + fmt("a", a) + " " + fmt("n", n));
}

// ---- sl(3) root -----------------------------------------------------------

void suite_sl3_root_induced(Checker& c) {
    const long long order = 64;
    const Rational bs[] = {Rational(1, 2), Rational(-1, 2), Rational(5, 3), Rational(-7, 3)};
    for (long long a = 0; a <= 8; ++a) {
        auto oracle = sl3_root::induced_char_oracle(a, order);
        for (const auto& b : bs) {
            auto closed = sl3_root::character({+1, a, b}).expand(order);
            c.expect_true(closed == oracle, "induced character " + fmt("a", a) + " b=" + to_string(b));
        }
    }
}

void suite_sl3_root_quotient(Checker& c) {
    for (long long mb = 2; mb <= 8; ++mb)
        for (long long a = mb - 1; a <= 8; ++a) {
            auto lhs = sl3_root::character({+1, a, Rational(-mb)});
            auto full = sl3_root::character({+1, a, Rational(1, 2)});
            auto sub = sl3_root::character({+1, mb - 2, Rational(1, 2)});
            c.expect_true(lhs.equals(full - sub), "quotient " + fmt("a", a) + " " + fmt("-b", mb));
        }
}

void suite_sl3_root_mfree(Checker& c) {
    const std::vector<Rational> bs = {Rational(1, 2), Rational(-1, 2), Rational(1),
                                      Rational(-1),   Rational(-2),    Rational(-4),
                                      Rational(-9),   Rational(7, 2),  Rational(2)};
    for (int sign : {+1, -1})
        for (long long a = 0; a <= 8; ++a)
            for (const auto& b : bs) {
                sl3_root::Params p{sign, a, b};
                if (!sl3_root::is_valid(p)) continue;
                auto e = sl3_root::character(p).expand(90);
                auto mt = sl3_root::minimal_type_and_mfree(p);
                std::string tag = std::string("sl3-root ") + (sign > 0 ? "+" : "-") + " " +
                                  fmt("a", a) + " b=" + to_string(b);
                c.expect_true(e.min_support() == mt.index, "minimal type " + tag);
                c.expect_eq(e.coeff(mt.index), 1, "minimal multiplicity " + tag);
                c.expect_true((e.max_coeff() <= 1) == mt.multiplicity_free, "mfree " + tag);
            }
}

// ---- sl(3) principal ------------------------------------------------------

const std::vector<Rational>& sl3_grid_u() {
    static const std::vector<Rational> grid = {Rational(1, 3), Rational(1, 2),  Rational(3, 2),
                                               Rational(-3, 2), Rational(0),    Rational(1),
                                               Rational(2),     Rational(3),    Rational(-2),
                                               Rational(-3),    Rational(-4),   Rational(5)};
    return grid;
}

void suite_sl3_principal_sym(Checker& c) {
    for (long long n = 0; n <= 12; ++n) {
        LaurentPoly w;
        for (long long i = 0; i <= n; ++i)
            for (long long j = 0; i + j <= n; ++j) w.add_term(2 * i - 2 * (n - i - j), 1);
        LaurentPoly expect;
        for (const auto& [e, cc] : w.terms()) {
            if (e < 0) continue;
            Rational m = cc - w.coeff(e + 2);
            if (m != 0) expect.set(e, m);
        }
        c.expect_true(sl3_principal::restrict_sym_v2(n) == expect,
                      "sym power restriction " + fmt("n", n));
    }
}

void suite_sl3_principal_blocks(Checker& c) {
    const long long order = 48;
    for (long long n = 0; n <= 8; ++n)
        for (long long a : {0, 1, 2, 3, 4, 5, 7, 10}) {
            c.expect_true(sl3_principal::kappa(n, a).expand(order) ==
                              sl3_principal::kappa_defining(n, a, order),
                          "kappa " + fmt("n", n) + " " + fmt("a", a));
            if (a >= 2)
                c.expect_true(sl3_principal::mu(n, a).expand(order) ==
                                  sl3_principal::mu_defining(n, a, order),
                              "mu " + fmt("n", n) + " " + fmt("a", a));
        }
}

void suite_sl3_principal_recursion(Checker& c) {
    using namespace sl3_principal;
    const long long order = 80;
    for (const auto& u : sl3_grid_u())
        for (long long n = 0; n <= 10; ++n)
            for (Fam fam : {Fam::IPlus, Fam::IMinus, Fam::J}) {
                Id id{fam, u, n};
                if (!is_valid(id)) continue;
                auto closed = character(id).expand(order);
                auto rec = recursion_oracle(id, order);
                c.expect_true(closed == rec, "recursion " + fam_name(fam) + " u=" + to_string(u) +
                                                 " " + fmt("n", n));
            }
    for (long long n = 0; n <= 10; ++n)
        for (auto [twisted, plain] : {std::pair{Fam::IPlusTau, Fam::IPlus},
                                      std::pair{Fam::IMinusTau, Fam::IMinus}}) {
            Id id{twisted, Rational(-2), n};
            c.expect_true(character(id).equals(character({plain, Rational(-2), n})),
                          "tau twist " + fam_name(twisted) + " " + fmt("n", n));
        }
}

void suite_sl3_principal_asymptotics(Checker& c) {
    using namespace sl3_principal;
    const long long order = 100;
    for (const auto& u : sl3_grid_u())
        for (long long n = 0; n <= 10; ++n)
            for (Fam fam : {Fam::IPlus, Fam::IMinus, Fam::J}) {
                Id id{fam, u, n};
                if (!is_valid(id)) continue;
                auto e = character(id).expand(order);
                auto table = asymptotic_mults(id);
                std::string tag =
                    fam_name(fam) + " u=" + to_string(u) + " " + fmt("n", n);
                for (long long i = order - 12; i <= order - 4; ++i) {
                    c.expect_eq(e.coeff(i), e.coeff(i + 4), "period 4 " + tag + " " + fmt("i", i));
                    c.expect_eq(e.coeff(i), table[static_cast<size_t>(i % 4)],
                                "plateau " + tag + " " + fmt("i", i));
                }
                c.expect_eq(e.coeff(e.min_support()), 1, "minimal multiplicity " + tag);
                c.expect_true((e.max_coeff() <= 1) == is_multiplicity_free(id), "mfree " + tag);
            }
}

// ---- sp(4) root -----------------------------------------------------------

void suite_sp4_root_weyl(Checker& c) {
    const long long order = 40;
    for (long long a2 = 3; a2 <= 9; a2 += 2)
        for (long long b2 = -a2 + 2; b2 <= a2 - 2; b2 += 2) {
            sp4_root::Params p{a2, b2};
            auto closed = sp4_root::character(p).expand(order);
            auto oracle = sp4_root::weyl_h_char_oracle(p, order);
            std::string tag = fmt("a2", a2) + " " + fmt("b2", b2);
            c.expect_true(closed == oracle, "weyl oracle " + tag);
            auto mt = sp4_root::minimal_type(p);
            c.expect_true(closed.min_support() == mt.index, "minimal type " + tag);
            c.expect_eq(closed.coeff(mt.index), mt.multiplicity, "minimal multiplicity " + tag);
            c.expect_true((closed.max_coeff() <= 1) == sp4_root::is_multiplicity_free(p),
                          "mfree " + tag);
            long long parity = ((a2 - b2) / 2 - 1) % 2;
            for (long long i = 0; i <= order; ++i)
                if (i % 2 != parity)
                    c.expect_eq(closed.coeff(i), 0, "parity " + tag + " " + fmt("i", i));
            c.expect_eq(closed.coeff(order - 2 + ((parity + order) % 2)), sp4_root::plateau(p),
                        "plateau " + tag);
        }
}

// ---- sp(4) principal ------------------------------------------------------

void suite_sp4_principal_base(Checker& c) {
    auto e0 = sp4_principal::phi({3, 1, 0}, 60);
    for (long long i = 0; i <= 60; ++i)
        c.expect_eq(e0.coeff(i), i % 6 == 0 ? 1 : 0, "phi(3/2,1/2,0) " + fmt("i", i));
    auto e1 = sp4_principal::phi({3, -1, 1}, 60);
    for (long long i = 0; i <= 60; ++i)
        c.expect_eq(e1.coeff(i), i % 6 == 4 ? 1 : 0, "phi(3/2,-1/2,1) " + fmt("i", i));
}

void suite_sp4_principal_psi(Checker& c) {
    using namespace sp4_principal;
    LaurentPoly S, T;
    for (long long e : {-3LL, -1LL, 1LL, 3LL}) S.set(e, 1);
    for (long long e : {-4LL, -2LL, 0LL, 2LL, 4LL}) T.set(e, 1);
    for (int s = 0; s <= 1; ++s) {
        c.expect_true(psi_closed({3, 1, s}).equals(RationalChar::monomial_over(s, {6})),
                      "psi base (3/2,1/2) s=" + std::to_string(s));
        c.expect_true(psi_closed({3, -1, s}).equals(RationalChar::monomial_over(3 + s, {6})),
                      "psi base (3/2,-1/2) s=" + std::to_string(s));
        for (long long a2 = -21; a2 <= 21; a2 += 2)
            for (long long b2 = -21; b2 <= 21; b2 += 2) {
                std::string tag = fmt("a2", a2) + " " + fmt("b2", b2) + " s=" + std::to_string(s);
                auto base = psi_closed({a2, b2, s});
                c.expect_true(base.equals(-psi_closed({b2, a2, s})), "(c3) swap " + tag);
                c.expect_true(base.equals(psi_closed({-a2, -b2, s})), "(c3) negate " + tag);
                auto c1_rhs = psi_closed({a2 + 2, b2, s}) + psi_closed({a2 - 2, b2, s}) +
                              psi_closed({a2, b2 + 2, s}) + psi_closed({a2, b2 - 2, s});
                c.expect_true((base * S).equals(c1_rhs), "(c1) " + tag);
                auto c2_rhs = psi_closed({a2 + 2, b2 + 2, s}) + psi_closed({a2 + 2, b2 - 2, s}) +
                              psi_closed({a2 - 2, b2 + 2, s}) + psi_closed({a2 - 2, b2 - 2, s}) +
                              base;
                c.expect_true((base * T).equals(c2_rhs), "(c2) " + tag);
            }
    }
    PsiRecursion rec(21);
    for (int s = 0; s <= 1; ++s)
        for (long long a2 = -21; a2 <= 21; a2 += 2)
            for (long long b2 = -21; b2 <= 21; b2 += 2)
                c.expect_true(rec.value(a2, b2, s).equals(psi_closed({a2, b2, s})),
                              "recursion vs closed " + fmt("a2", a2) + " " + fmt("b2", b2) +
                                  " s=" + std::to_string(s));
}

void suite_sp4_principal_delta(Checker& c) {
    using namespace sp4_principal;
    auto series = RationalChar(LaurentPoly::one(), {2, 2, 4, 6}).expand(130);
    for (long long n = 0; n <= 60; ++n)
        c.expect_eq(gamma_coeff(Rational(n)), series.coeff(2 * n), "gamma " + fmt("n", n));
    for (int s = 0; s <= 1; ++s)
        for (long long a2 = 3; a2 <= 21; a2 += 2)
            for (long long b2 = -a2 + 2; b2 <= a2 - 2; b2 += 2) {
                Id id{a2, b2, s};
                auto e = phi(id, 100);
                for (long long i = 0; i <= 100; ++i)
                    c.expect_eq(coeff_c(id, i), e.coeff(i),
                                "delta " + fmt("a2", a2) + " " + fmt("b2", b2) + " s=" +
                                    std::to_string(s) + " " + fmt("i", i));
            }
}

void suite_sp4_principal_asymptotics(Checker& c) {
    using namespace sp4_principal;
    for (int s = 0; s <= 1; ++s)
        for (long long a2 = 3; a2 <= 21; a2 += 2)
            for (long long b2 = -a2 + 2; b2 <= a2 - 2; b2 += 2) {
                Id id{a2, b2, s};
                auto table = asymptotic_c6(id);
                long long parity = (((a2 + b2) / 2 + s) % 2 + 2) % 2;
                std::string tag =
                    fmt("a2", a2) + " " + fmt("b2", b2) + " s=" + std::to_string(s);
                for (long long i = 0; i <= 100; ++i)
                    if (i % 2 != parity)
                        c.expect_eq(coeff_c(id, i), 0, "parity " + tag + " " + fmt("i", i));
                for (long long i = plateau_threshold(id); i <= plateau_threshold(id) + 12; ++i) {
                    c.expect_eq(coeff_c(id, i), coeff_c(id, i + 6),
                                "period 6 " + tag + " " + fmt("i", i));
                    c.expect_eq(coeff_c(id, i), table[static_cast<size_t>(i % 6)],
                                "plateau " + tag + " " + fmt("i", i));
                }
            }
}

void suite_sp4_principal_mfree(Checker& c) {
    auto hits = sp4_principal::multiplicity_free_scan(41);
    c.expect(hits.size() == 16, "census size", "16", std::to_string(hits.size()));
    const std::vector<std::pair<long long, long long>> expected = {
        {3, 1}, {3, -1}, {5, 3}, {5, -3}, {5, 1}, {5, -1}, {7, 5}, {7, -5}};
    for (const auto& [a2, b2] : expected)
        for (int s = 0; s <= 1; ++s) {
            bool found = false;
            for (const auto& id : hits)
                if (id == sp4_principal::Id{a2, b2, s}) found = true;
            c.expect_true(found, "census contains " + fmt("a2", a2) + " " + fmt("b2", b2) +
                                     " s=" + std::to_string(s));
        }
}

void suite_sp4_principal_minimal_types(Checker& c) {
    using namespace sp4_principal;
    for (int s = 0; s <= 1; ++s)
        for (long long a2 = 3; a2 <= 21; a2 += 2)
            for (long long b2 = -a2 + 2; b2 <= a2 - 2; b2 += 2) {
                Id id{a2, b2, s};
                bool even = ((a2 + b2) / 2 + s) % 2 == 0;
                std::string tag =
                    fmt("a2", a2) + " " + fmt("b2", b2) + " s=" + std::to_string(s);
                long long mt = minimal_type(id);
                if (even) {
                    c.expect_true(mt == 0 || mt == 2 || mt == 4, "even minimal type " + tag);
                    c.expect_eq(eval_e(id), coeff_c(id, 0) + coeff_c(id, 2) + coeff_c(id, 4),
                                "eval " + tag);
                    c.expect_eq(eval_e(id), eval_e_branch(id), "eval branch " + tag);
                    Rational c0 = coeff_c(id, 0);
                    c.expect_eq(c0_exact(id), c0, "c0 exact " + tag);
                    bool close = false;
                    for (const auto& pred : c0_predictions(id))
                        if (abs(c0 - pred) < 1) close = true;
                    c.expect_true(close, "c0 predictor " + tag);
                } else {
                    c.expect_true(mt == 1 || mt == 3, "odd minimal type " + tag);
                    c.expect_eq(dval(id), coeff_c(id, 1) + coeff_c(id, 3), "dval " + tag);
                    c.expect_eq(dval(id), dval_branch(id), "dval branch " + tag);
                    Rational c1 = coeff_c(id, 1);
                    c.expect_eq(c1_exact(id), c1, "c1 exact " + tag);
                    bool close = false;
                    for (const auto& pred : c1_predictions(id))
                        if (abs(c1 - pred) < 1) close = true;
                    c.expect_true(close, "c1 predictor " + tag);
                }
            }
}

// ---- root data / gate -----------------------------------------------------

void suite_root_data_dims(Checker& c) {
    auto a1 = RootDatum::build(Family::A, 1);
    for (long long n = 0; n <= 49; ++n)
        c.expect_true(a1.weyl_dim({Rational(n)}) == n + 1, "A1 dim " + fmt("n", n));
    auto a2 = RootDatum::build(Family::A, 2);
    for (long long p = 0; p <= 8; ++p)
        for (long long q = 0; q <= 8; ++q) {
            Int dim = a2.weyl_dim({Rational(p), Rational(q)});
            if (dim > 50) continue;
            long long count = 0;
            for (long long x1 = q; x1 <= p + q; ++x1)
                for (long long x2 = 0; x2 <= q; ++x2) count += x1 - x2 + 1;
            c.expect_true(dim == count, "A2 dim " + fmt("p", p) + " " + fmt("q", q));
        }
    auto c2 = RootDatum::build(Family::C, 2);
    for (long long p = 0; p <= 8; ++p)
        for (long long q = 0; q <= 8; ++q) {
            Int dim = c2.weyl_dim({Rational(p), Rational(q)});
            if (dim > 50) continue;
            long long count = 0;
            for (long long t = 0; t <= q; ++t)
                for (long long n1 = 0; n1 <= p + q; ++n1)
                    for (long long n2 = 0; n1 + n2 <= p + q; ++n2)
                        for (long long n3 = 0; n1 + n2 + n3 <= p + q; ++n3)
                            if (n1 + n2 >= t && n1 + n2 + n3 >= q) ++count;
            c.expect_true(dim == count, "C2 dim " + fmt("p", p) + " " + fmt("q", q));
        }
}

void suite_gate_tables(Checker& c) {
    c.expect_true(r_g(Family::A, 2) == 2, "r_g sl3");
    c.expect_true(r_g(Family::C, 2) == 2, "r_g sp4");
    c.expect_true(r_g(Family::B, 3) == 4, "r_g so7");
    c.expect_true(r_g(Family::D, 4) == 5, "r_g so8");
    c.expect_true(r_g(Family::G2, 2) == 3, "r_g G2");
    c.expect_true(r_g(Family::F4, 4) == 8, "r_g F4");
    c.expect_true(r_g(Family::E6, 6) == 11, "r_g E6");
    c.expect_true(r_g(Family::E7, 7) == 17, "r_g E7");
    c.expect_true(r_g(Family::E8, 8) == 29, "r_g E8");

    SubalgebraDescriptor sl2{{{Family::A, 1}}, 0, "sl2"};
    c.expect_true(necessary_condition({{Family::A, 2}}, sl2, true), "gate sl3");
    c.expect_true(necessary_condition({{Family::C, 2}}, sl2, true), "gate sp4");
    c.expect_true(necessary_condition({{Family::A, 1}, {Family::A, 1}}, sl2, true),
                  "gate sl2+sl2");
    c.expect_true(!necessary_condition({{Family::G2, 2}}, sl2, false), "gate G2");
    for (auto [f, r] : std::vector<std::pair<Family, int>>{
             {Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::F4, 4}})
        c.expect_true(!necessary_condition({{f, r}}, sl2, false),
                      "gate rejects " + family_name(f) + std::to_string(r));

    // fundamental spinor dimensions against the golden tables
    for (int m : {5, 7, 9}) {
        auto d = RootDatum::build(Family::B, m / 2);
        Weight spin(m / 2, Rational(0));
        spin.back() = 1;
        c.expect_true(d.weyl_dim(spin) == Int(1) << (m / 2), "spinor so" + std::to_string(m));
    }
    auto e6 = RootDatum::build(Family::E6, 6);
    auto ce6 = thA_candidates(e6);
    c.expect(ce6.size() == 2, "E6 candidates", "2", std::to_string(ce6.size()));
    for (const auto& lam : ce6)
        c.expect_true(e6.weyl_dim(lam) == 27, "E6 candidate dim 27");
    auto e7 = RootDatum::build(Family::E7, 7);
    auto ce7 = thA_candidates(e7);
    c.expect(ce7.size() == 1, "E7 candidates", "1", std::to_string(ce7.size()));
    for (const auto& lam : ce7)
        c.expect_true(e7.weyl_dim(lam) == 56, "E7 candidate dim 56");

    // thA candidate sets across the supported families
    auto weight_of = [](int rank, int node, long long mult) {
        Weight w(rank, Rational(0));
        w[static_cast<size_t>(node - 1)] = mult;
        return w;
    };
    auto same_set = [](std::vector<Weight> a, std::vector<Weight> b) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    };
    for (int m = 3; m <= 6; ++m) {
        auto d = RootDatum::build(Family::A, m - 1);
        std::vector<Weight> expect = {weight_of(m - 1, 1, 1),     weight_of(m - 1, m - 1, 1),
                                      weight_of(m - 1, 2, 1),     weight_of(m - 1, m - 2, 1),
                                      weight_of(m - 1, 1, 2),     weight_of(m - 1, m - 1, 2)};
        if (m == 6) expect.push_back(weight_of(5, 3, 1));  // binom(6,3) = 20 <= 21
        std::sort(expect.begin(), expect.end());
        expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
        c.expect_true(same_set(thA_candidates(d), expect), "thA sl(" + std::to_string(m) + ")");
    }
    for (int m = 5; m <= 12; ++m) {
        bool odd = m % 2 == 1;
        int rank = m / 2;
        auto d = RootDatum::build(odd ? Family::B : Family::D, rank);
        std::vector<Weight> expect = {weight_of(rank, 1, 1)};
        if (m == 6) {
            expect = {weight_of(3, 1, 1), weight_of(3, 2, 1), weight_of(3, 3, 1),
                      weight_of(3, 2, 2), weight_of(3, 3, 2)};
        } else if (odd && m <= 9) {
            expect.push_back(weight_of(rank, rank, 1));
        } else if (!odd) {
            expect.push_back(weight_of(rank, rank - 1, 1));
            expect.push_back(weight_of(rank, rank, 1));
        }
        c.expect_true(same_set(thA_candidates(d), expect), "thA so(" + std::to_string(m) + ")");
    }
    for (int p = 2; p <= 4; ++p) {
        auto d = RootDatum::build(Family::C, p);
        std::vector<Weight> expect = {weight_of(p, 1, 1)};
        if (p == 2) expect.push_back(weight_of(2, 2, 1));  // sp(4) ~ so(5)
        c.expect_true(same_set(thA_candidates(d), expect), "thA sp(" + std::to_string(2 * p) + ")");
    }
    auto g2 = RootDatum::build(Family::G2, 2);
    c.expect_true(same_set(thA_candidates(g2), {weight_of(2, 1, 1)}), "thA G2");
    auto f4 = RootDatum::build(Family::F4, 4);
    auto f4c = thA_candidates(f4);
    c.expect_true(f4c.size() == 1 && f4.weyl_dim(f4c[0]) == 26, "thA F4");

    // le52: the three families
    auto a2d = RootDatum::build(Family::A, 2);
    c.expect(le52_filter(a2d, thA_candidates(a2d)).size() == 4, "le52 sl3", "4",
             std::to_string(le52_filter(a2d, thA_candidates(a2d)).size()));
    auto c2d = RootDatum::build(Family::C, 2);
    c.expect_true(le52_filter(c2d, thA_candidates(c2d)).empty(), "le52 sp4 empty");
    auto d5 = RootDatum::build(Family::D, 5);
    c.expect(le52_filter(d5, thA_candidates(d5)).size() == 2, "le52 so10", "2",
             std::to_string(le52_filter(d5, thA_candidates(d5)).size()));

    // th51 families over 3 <= n <= 20
    for (long long n = 3; n <= 20; ++n) {
        SubalgebraDescriptor so_n;
        if (n == 3)
            so_n.summands = {{Family::A, 1}};
        else if (n == 4)
            so_n.summands = {{Family::A, 1}, {Family::A, 1}};
        else if (n == 6)
            so_n.summands = {{Family::A, 3}};
        else
            so_n.summands = {n % 2 ? std::pair{Family::B, int(n / 2)}
                                   : std::pair{Family::D, int(n / 2)}};
        c.expect_true(sl_n_maximal_bounded(so_n, n), "th51 so(n) n=" + std::to_string(n));
        if (n % 2 == 0)
            c.expect_true(sl_n_maximal_bounded({{{Family::C, int(n / 2)}}, 0, ""}, n),
                          "th51 sp(n) n=" + std::to_string(n));
    }
    for (int r = 2; r <= 4; ++r)
        for (int s = r; s <= 5; ++s)
            c.expect_true(sl_n_maximal_bounded({{{Family::A, r - 1}, {Family::A, s - 1}}, 0, ""},
                                               static_cast<long long>(r) * s),
                          "th51 sl(r)+sl(s) r=" + std::to_string(r) + " s=" + std::to_string(s));
}

void suite_harness_selftest(Checker& c) {
    auto clean = cg_dimension_audit(20);
    c.expect_true(clean.pass(), "clean audit passes");
    FaultSpec fault{7, 4, 5, Rational(1)};
    auto faulty = cg_dimension_audit(20, fault);
    c.expect_true(!faulty.pass(), "seeded mutation is caught");
    bool located = false;
    for (const auto& f : faulty.failures)
        if (f.where.find("p=7") != std::string::npos && f.where.find("q=4") != std::string::npos)
            located = true;
    c.expect_true(located, "seeded mutation is located");
}

using SuiteFn = std::function<void(Checker&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"series-core", suite_series_core},
        {"sl2sl2-characters", suite_sl2sl2},
        {"sl3-root-induced", suite_sl3_root_induced},
        {"sl3-root-quotient", suite_sl3_root_quotient},
        {"sl3-root-mfree", suite_sl3_root_mfree},
        {"sl3-principal-sym", suite_sl3_principal_sym},
        {"sl3-principal-blocks", suite_sl3_principal_blocks},
        {"sl3-principal-recursion", suite_sl3_principal_recursion},
        {"sl3-principal-asymptotics", suite_sl3_principal_asymptotics},
        {"sp4-root-weyl", suite_sp4_root_weyl},
        {"sp4-principal-base", suite_sp4_principal_base},
        {"sp4-principal-recursion", suite_sp4_principal_psi},
        {"sp4-principal-delta", suite_sp4_principal_delta},
        {"sp4-principal-asymptotics", suite_sp4_principal_asymptotics},
        {"sp4-principal-mfree", suite_sp4_principal_mfree},
        {"sp4-principal-minimal-types", suite_sp4_principal_minimal_types},
        {"root-data-dims", suite_root_data_dims},
        {"gate-tables", suite_gate_tables},
        {"harness-selftest", suite_harness_selftest},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

SuiteReport run_suite(const std::string& name) {
    for (const auto& [n, fn] : registry())
        if (n == name) {
            Checker c;
            c.report.name = name;
            fn(c);
            return std::move(c.report);
        }
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_all() {
    std::vector<SuiteReport> reports;
    for (const auto& [name, fn] : registry()) reports.push_back(run_suite(name));
    return reports;
}

SuiteReport cg_dimension_audit(long long limit, const std::optional<FaultSpec>& fault) {
    Checker c;
    c.report.name = "cg-dimension-audit";
    for (long long p = 0; p <= limit; ++p)
        for (long long q = 0; q <= limit; ++q) {
            LaurentPoly table = cg_product(p, q);
            if (fault && fault->p == p && fault->q == q)
                table.add_term(fault->exponent, fault->delta);
            c.expect_eq(dimension_weight(table), Rational((p + 1) * (q + 1)),
                        "audit p=" + std::to_string(p) + " q=" + std::to_string(q));
        }
    return std::move(c.report);
}

}  // namespace verify
}  // namespace kchar
