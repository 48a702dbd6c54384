#include "kchar/emit.hpp"

#include <sstream>

namespace kchar {
namespace emit {

json closed_form_json(const RationalChar& r) {
    json numerator = json::array();
    for (const auto& [e, c] : r.numerator().terms())
        numerator.push_back(json::array({e, to_string(c)}));
    json dens = json::array();
    for (int d : r.denominator_degrees()) dens.push_back(d);
    return json{{"numerator", numerator}, {"denominator_factors", dens}};
}

RationalChar parse_closed_form(const json& j) {
    LaurentPoly num;
    for (const auto& term : j.at("numerator")) {
        auto coeff = parse_rational(term.at(1).get<std::string>());
        if (!coeff) throw std::invalid_argument("parse_closed_form: bad coefficient");
        num.add_term(term.at(0).get<long long>(), *coeff);
    }
    std::vector<int> dens;
    for (const auto& d : j.at("denominator_factors")) dens.push_back(d.get<int>());
    return RationalChar(std::move(num), std::move(dens));
}

json character_payload(json module_desc, const RationalChar& closed, long long order) {
    auto coeffs = closed.expand(order);
    json rows = json::array();
    for (long long i = 0; i <= order; ++i)
        rows.push_back(json::array({i, to_string(coeffs.coeff(i))}));
    return json{{"module", std::move(module_desc)},
                {"order", order},
                {"coeffs", std::move(rows)},
                {"closed_form", closed_form_json(closed)}};
}

std::string character_csv(const KCharacter& k) {
    std::ostringstream out;
    out << "exponent,multiplicity\n";
    for (long long i = 0; i <= k.order(); ++i) out << i << "," << to_string(k.coeff(i)) << "\n";
    return out.str();
}

std::string character_text(const json& payload) {
    std::ostringstream out;
    out << "module: " << payload.at("module").dump() << "\n";
    out << "closed form: numerator";
    for (const auto& term : payload.at("closed_form").at("numerator"))
        out << " + " << term.at(1).get<std::string>() << "*z^" << term.at(0).get<long long>();
    out << " over";
    for (const auto& d : payload.at("closed_form").at("denominator_factors"))
        out << " (1-z^" << d.get<int>() << ")";
    out << "\ncoefficients to order " << payload.at("order").get<long long>() << ":";
    for (const auto& row : payload.at("coeffs")) {
        if (row.at(1).get<std::string>() == "0") continue;
        out << " " << row.at(1).get<std::string>() << "*z^" << row.at(0).get<long long>();
    }
    out << "\n";
    return out.str();
}

}  // namespace emit
}  // namespace kchar
