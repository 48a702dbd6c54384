#include "doctest.h"

#include "kchar/emit.hpp"
#include "kchar/sl3_root.hpp"
#include "kchar/sp4_principal.hpp"
#include "kchar/sp4_root.hpp"

using namespace kchar;
using nlohmann::json;

TEST_CASE("pi of a closed form is a closed form") {
    // psi of the base module folds to 1/(1-z^6)
    auto psi = sp4_principal::psi_closed({3, 1, 0});
    auto folded = pi_project(psi);
    CHECK(folded.equals(RationalChar::monomial_over(0, {6})));

    // and in general the fold reproduces the projected expansion
    for (long long a2 : {5, 7, 9, 13})
        for (long long b2 = -a2 + 2; b2 <= a2 - 2; b2 += 2)
            for (int s = 0; s <= 1; ++s) {
                auto raw = sp4_principal::psi_closed({a2, b2, s});
                auto fold = pi_project(raw);
                CHECK(fold.min_support() >= 0);
                auto direct = sp4_principal::phi({a2, b2, s}, 70);
                CHECK(fold.expand(70) == direct);
            }
}

TEST_CASE("json round trip: parse and re-expand the closed form") {
    std::vector<RationalChar> forms = {
        sl3_root::character({+1, 3, Rational(-1, 2)}),
        sp4_root::character({7, 3}),
        pi_project(sp4_principal::psi_closed({9, -5, 1})),
        RationalChar(LaurentPoly::monomial(2, Rational(3, 7)), {2, 4}),
    };
    for (const auto& closed : forms) {
        const long long order = 40;
        json payload = emit::character_payload(json{{"case", "test"}}, closed, order);
        auto reparsed = emit::parse_closed_form(payload.at("closed_form"));
        auto expansion = reparsed.expand(order);
        REQUIRE(static_cast<long long>(payload.at("coeffs").size()) == order + 1);
        for (const auto& row : payload.at("coeffs")) {
            long long i = row.at(0).get<long long>();
            auto c = parse_rational(row.at(1).get<std::string>());
            REQUIRE(c.has_value());
            CHECK(expansion.coeff(i) == *c);
        }
        CHECK(reparsed.equals(closed));
    }
}

TEST_CASE("csv shape") {
    auto k = RationalChar::monomial_over(1, {2}).expand(4);
    CHECK(emit::character_csv(k) == "exponent,multiplicity\n0,0\n1,1\n2,0\n3,1\n4,0\n");
}
