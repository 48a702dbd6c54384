#include "kchar/sp4_root.hpp"

#include <stdexcept>

namespace kchar {
namespace sp4_root {

namespace {

void require_valid(const Params& p) {
    if (!is_valid(p))
        throw std::invalid_argument("sp4_root: requires a > |b| with a, b in 1/2 + Z");
}

long long ab_sum(const Params& p) { return (p.a2 + p.b2) / 2; }       // a + b
long long x_width(const Params& p) { return (p.a2 - p.b2) / 2 - 1; }  // a - b - 1

// x^(2k) + x^(2k-4) + ... + x^(-2k)
LaurentPoly w_poly(long long k) {
    LaurentPoly w;
    for (long long e = -2 * k; e <= 2 * k; e += 4) w.set(e, 1);
    return w;
}

}  // namespace

bool is_valid(const Params& p) {
    if (p.a2 % 2 == 0 || p.b2 % 2 == 0) return false;
    return p.a2 > std::llabs(p.b2);
}

RationalChar character(const Params& p) {
    require_valid(p);
    long long w = x_width(p);
    Rational scale(p.a2 + p.b2, 4);  // (a+b)/2
    // pi(weight_char(w) / (1-z^2)) folds the negative half onto z^|j|
    LaurentPoly num;
    for (long long j = -w; j <= w; j += 2) num.add_term(std::llabs(j), 1);
    num *= scale;
    return RationalChar(std::move(num), {2});
}

KCharacter weyl_h_char_oracle(const Params& p, long long order) {
    require_valid(p);
    const long long s = ab_sum(p);   // window length in the y direction
    const long long w = x_width(p);  // z^(a-b-1) factor
    KCharacter out(order);
    LaurentPoly zw;
    for (long long e = -w; e <= w; e += 2) zw.set(e, 1);

    // Slices are indexed by the largest k contributing; k runs down the
    // window.  Deeper slices only contain k-types above 2*k_lo - w - 2.
    for (long long k_top = 0;; ++k_top) {
        long long k_lo = std::max<long long>(0, k_top - s + 1);
        if (k_lo > 0 && 2 * k_lo - w - 2 > order) break;
        LaurentPoly acc;
        for (long long k = k_lo; k <= k_top; ++k) acc += w_poly(k);
        LaurentPoly slice = zw * acc;
        for (const auto& [e, c] : slice.terms()) {
            if (e < 0) continue;
            Rational mult = c - slice.coeff(e + 2);
            if (mult < 0) throw std::logic_error("weyl_h_char_oracle: slice is not a character");
            if (mult != 0 && e <= order) out.add(e, mult);
        }
    }
    return out;
}

MinimalType minimal_type(const Params& p) {
    require_valid(p);
    MinimalType m;
    if ((p.a2 - p.b2) / 2 % 2 == 0) {
        m.index = 1;
        m.multiplicity = Rational(p.a2 + p.b2, 2);
    } else {
        m.index = 0;
        m.multiplicity = Rational(p.a2 + p.b2, 4);
    }
    return m;
}

bool is_multiplicity_free(const Params& p) {
    require_valid(p);
    return p.a2 == 3;
}

Rational plateau(const Params& p) {
    require_valid(p);
    return Rational(p.a2 * p.a2 - p.b2 * p.b2, 8);
}

}  // namespace sp4_root
}  // namespace kchar
