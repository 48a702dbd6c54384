#include "kchar/sl3_root.hpp"

#include <stdexcept>

namespace kchar {
namespace sl3_root {

namespace {

bool in_z_geq(const Rational& r, long long lo) { return is_integer(r) && r >= lo; }

// The minus family is the plus family with b replaced by -a-b; all closed
// forms below are stated for the normalized parameter.
Rational normalized_b(const Params& p) { return p.sign > 0 ? p.b : -p.a - p.b; }

void require_valid(const Params& p) {
    if (p.sign != 1 && p.sign != -1) throw std::invalid_argument("sl3_root: sign must be +1 or -1");
    if (p.a < 0) throw std::invalid_argument("sl3_root: a must be a nonnegative integer");
    if (!is_valid(p))
        throw std::invalid_argument("sl3_root: parameters give a finite-dimensional module");
}

}  // namespace

bool is_valid(const Params& p) {
    if (p.a < 0) return false;
    return !in_z_geq(normalized_b(p), 0);
}

Branch branch(const Params& p) {
    require_valid(p);
    Rational b = normalized_b(p);
    if (in_z_geq(-b, 2) && in_z_geq(Rational(p.a) + b, -1)) return Branch::Quotient;
    return Branch::Generic;
}

RationalChar character(const Params& p) {
    Branch br = branch(p);
    Rational b = normalized_b(p);
    LaurentPoly num;
    long long lo = br == Branch::Generic ? 0 : to_long(-b - 1);
    for (long long j = lo; j <= p.a; ++j) num.set(j, 1);
    return RationalChar(std::move(num), {1});
}

KCharacter induced_char_oracle(long long a, long long order) {
    if (a < 0) throw std::invalid_argument("induced_char_oracle: a must be >= 0");
    KCharacter out(order);
    for (long long n = 0; n <= order + a; ++n) {
        LaurentPoly cg = cg_product(n, a);
        for (const auto& [e, c] : cg.terms())
            if (e <= order) out.add(e, c);
    }
    return out;
}

MinimalType minimal_type_and_mfree(const Params& p) {
    Branch br = branch(p);
    Rational b = normalized_b(p);
    MinimalType m;
    m.index = br == Branch::Generic ? 0 : to_long(-b - 1);
    m.multiplicity = 1;
    m.multiplicity_free =
        p.a == 0 || (br == Branch::Quotient && Rational(p.a) + b == -1);
    return m;
}

}  // namespace sl3_root
}  // namespace kchar
