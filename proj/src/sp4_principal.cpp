#include "kchar/sp4_principal.hpp"

#include <stdexcept>

namespace kchar {
namespace sp4_principal {

namespace {

void require_odd(const Id& id) {
    if (id.a2 % 2 == 0 || id.b2 % 2 == 0)
        throw std::invalid_argument("sp4_principal: a and b must lie in 1/2 + Z");
    if (id.s != 0 && id.s != 1) throw std::invalid_argument("sp4_principal: s must be 0 or 1");
}

void require_valid(const Id& id) {
    require_odd(id);
    if (!is_valid(id))
        throw std::invalid_argument("sp4_principal: module parameters need a > |b|");
}

// the four numerator exponents z^(3a+b) - z^(a+3b) - z^(-a-3b) + z^(-3a-b),
// from doubled parameters
LaurentPoly antisym_quad(long long a2, long long b2) {
    LaurentPoly p;
    p.add_term((3 * a2 + b2) / 2, 1);
    p.add_term((a2 + 3 * b2) / 2, -1);
    p.add_term((-a2 - 3 * b2) / 2, -1);
    p.add_term((-3 * a2 - b2) / 2, 1);
    return p;
}

int sign_pow(long long k) { return k % 2 == 0 ? 1 : -1; }

// (-1)^(a+b)
int parity_ab(const Id& id) { return sign_pow((id.a2 + id.b2) / 2); }

long long sigma_ab(const Id& id) {
    bool a3 = id.a2 % 3 == 0;
    bool b3 = id.b2 % 3 == 0;
    if (a3 && !b3) return 1;
    if (b3 && !a3) return -1;
    return 0;
}

// gamma', sigma' and gamma'', sigma'' helpers behind the exact c_0/c_1 sums
Rational gamma_prime(const Rational& n) {
    if (!is_integer(n) || n < 0) return 0;
    long long m = to_long(n);
    Rational v = Rational(m * m, 12) + Rational(m, 2) + Rational(94, 144) +
                 Rational(sign_pow(m), 8);
    v += Rational(m % 3 == 0 ? 2 : -1, 9);
    return v;
}

Rational gamma_second(const Rational& n) {
    if (!is_integer(n) || n < 0) return 0;
    long long m = to_long(n);
    Rational v = Rational(m * m, 6) + Rational(5 * m, 6) + Rational(8, 9);
    v += Rational(m % 3 == 2 ? -2 : 1, 9);
    return v;
}

Rational theta(const Rational& n) {
    if (!is_integer(n) || n < 0) return 0;
    long long m = to_long(n);
    return Rational(3 * m * m, 4) + Rational(3 * m, 2) + Rational(7, 8) +
           Rational(sign_pow(m), 8);
}

// The eight exponent combinations 3a+b, a+3b, -a-3b, -3a-b | 3a-b, -a+3b,
// a-3b, -3a+b (doubled halves), with the signs they carry.
struct Term {
    long long e2;  // twice the exponent combination
    int sign;
    int group;  // 0 for the first four, 1 for the last four
};

std::array<Term, 8> exponent_terms(const Id& id) {
    long long a2 = id.a2, b2 = id.b2;
    return {{{3 * a2 + b2, +1, 0},
             {a2 + 3 * b2, -1, 0},
             {-a2 - 3 * b2, -1, 0},
             {-3 * a2 - b2, +1, 0},
             {3 * a2 - b2, -1, 1},
             {-a2 + 3 * b2, +1, 1},
             {a2 - 3 * b2, +1, 1},
             {-3 * a2 + b2, -1, 1}}};
}

// generic 8-term evaluation: sum of sign * f((n - E - off_group - s)/2)
template <typename F>
Rational eight_sum(const Id& id, long long n, long long off0, long long off1, F&& f) {
    Rational acc = 0;
    for (const auto& t : exponent_terms(id)) {
        long long off = t.group == 0 ? off0 : off1;
        Rational arg = Rational(2 * n - t.e2 - 2 * off - 2 * id.s, 4);
        acc += Rational(t.sign) * f(arg);
    }
    return acc;
}

}  // namespace

bool is_valid(const Id& id) {
    if (id.a2 % 2 == 0 || id.b2 % 2 == 0 || (id.s != 0 && id.s != 1)) return false;
    return id.a2 > std::llabs(id.b2);
}

RationalChar psi_closed(const Id& id) {
    require_odd(id);
    LaurentPoly num = antisym_quad(id.a2, id.b2).shifted(5 + id.s) -
                      antisym_quad(id.a2, -id.b2).shifted(6 + id.s);
    return RationalChar(std::move(num), {2, 2, 4, 6});
}

PsiRecursion::PsiRecursion(long long max_a2) : max_a2_(max_a2) {
    if (max_a2 < 3 || max_a2 % 2 == 0)
        throw std::invalid_argument("PsiRecursion: max_a2 must be an odd integer >= 3");
    LaurentPoly S;  // z^3 + z + z^-1 + z^-3
    for (long long e : {-3LL, -1LL, 1LL, 3LL}) S.set(e, 1);
    LaurentPoly T;  // z^4 + z^2 + 1 + z^-2 + z^-4
    for (long long e : {-4LL, -2LL, 0LL, 2LL, 4LL}) T.set(e, 1);
    LaurentPoly T1 = T;
    T1.add_term(0, -1);

    for (int s = 0; s <= 1; ++s) {
        auto& tab = table_[s];
        tab[{3, 1}] = RationalChar::monomial_over(s, {6});
        tab[{3, -1}] = RationalChar::monomial_over(3 + s, {6});
        for (long long L = 3; L + 2 <= max_a2; L += 2) {
            // (c1) centered at (L/2, b) for |b| <= L/2 - 1
            for (long long b2 = -(L - 2); b2 <= L - 2; b2 += 2) {
                RationalChar next = tab.at({L, b2}) * S - value(L - 2, b2, s) -
                                    value(L, b2 + 2, s) - value(L, b2 - 2, s);
                tab[{L + 2, b2}] = std::move(next);
            }
            // (c2) centered at (L/2, L/2 - 1) determines the upper boundary
            tab[{L + 2, L}] = tab.at({L, L - 2}) * T1 - value(L + 2, L - 4, s) -
                              value(L - 2, L, s) - value(L - 2, L - 4, s);
            // (c2) centered at (L/2, 1 - L/2) determines the lower boundary
            tab[{L + 2, -L}] = tab.at({L, -L + 2}) * T1 - value(L + 2, -L + 4, s) -
                               value(L - 2, -L + 4, s) - value(L - 2, -L, s);
        }
    }
}

RationalChar PsiRecursion::value(long long a2, long long b2, int s) const {
    if (a2 % 2 == 0 || b2 % 2 == 0)
        throw std::invalid_argument("PsiRecursion::value: parameters must be odd");
    if (std::llabs(a2) == std::llabs(b2)) return RationalChar::zero();
    // reduce to the stored chamber a > |b| through
    // psi_{a,b} = -psi_{b,a} = -psi_{-b,-a} = psi_{-a,-b}
    struct Red {
        long long a2, b2;
        int sign;
    };
    const Red reds[4] = {{a2, b2, +1}, {b2, a2, -1}, {-b2, -a2, -1}, {-a2, -b2, +1}};
    for (const auto& r : reds) {
        if (r.a2 > std::llabs(r.b2)) {
            if (r.a2 > max_a2_)
                throw std::out_of_range("PsiRecursion::value: beyond the built range");
            RationalChar v = table_[s].at({r.a2, r.b2});
            return r.sign > 0 ? v : -v;
        }
    }
    throw std::logic_error("PsiRecursion::value: unreachable");
}

KCharacter phi(const Id& id, long long order) {
    require_odd(id);
    return pi_project(psi_closed(id).expand_laurent(order)).to_kcharacter();
}

Rational gamma_coeff(const Rational& n) {
    if (!is_integer(n) || n < 0) return 0;
    Rational v = (Rational(119) * binomial(n + 3, 3) - Rational(179) * binomial(n + 2, 3) +
                  Rational(109) * binomial(n + 1, 3) - Rational(25) * binomial(n, 3)) /
                 144;
    long long m = to_long(n);
    v += Rational(sign_pow(m), 16);
    long long r = m % 3;
    v += Rational(r == 0 ? 1 : (r == 1 ? 0 : -1), 9);
    return v;
}

Rational delta(const Id& id, long long n) {
    require_odd(id);
    return eight_sum(id, n, 5, 6, gamma_coeff);
}

Rational coeff_c(const Id& id, long long i) { return delta(id, i) - delta(id, -i - 2); }

std::array<Rational, 6> asymptotic_c6(const Id& id) {
    require_valid(id);
    Rational A(id.a2 * id.a2 - id.b2 * id.b2, 8);  // (a^2 - b^2)/2
    Rational sig(sigma_ab(id));
    int t = parity_ab(id);
    std::array<Rational, 6> out;
    auto put = [&](long long r, const Rational& v) {
        out[static_cast<size_t>((r + id.s) % 6)] = v;
    };
    put(0, Rational(1 + t) * (A + 2 * sig) / 6);
    put(1, Rational(1 - t) * (A - sig) / 6);
    put(5, Rational(1 - t) * (A - sig) / 6);
    put(2, Rational(1 + t) * (A - sig) / 6);
    put(4, Rational(1 + t) * (A - sig) / 6);
    put(3, Rational(1 - t) * (A + 2 * sig) / 6);
    return out;
}

// Beyond every numerator exponent of psi (3a + |b| + 6 + s), the delta
// arguments are all in the pure quasi-polynomial regime and the reflected
// part vanishes, so the coefficients are 6-periodic.
long long plateau_threshold(const Id& id) { return (3 * id.a2 + std::llabs(id.b2)) / 2 + 7; }

Rational dval(const Id& id) {
    require_valid(id);
    // constant term of (z^-1(1-z^4) + z^-3(1-z^8)) psi, through 1/(1-z^2)^3
    return eight_sum(id, 0, -2, -1, [](const Rational& n) { return binomial(n, 2); });
}

Rational dval_branch(const Id& id) {
    require_valid(id);
    if ((id.a2 + id.b2) / 2 % 2 == 0 ? id.s == 0 : id.s == 1) return 0;  // even module
    long long bsign = id.s == 0 ? 1 : -1;
    Rational a = from_doubled(id.a2), b = from_doubled(id.b2);
    if (id.a2 + bsign * 3 * id.b2 >= 0) return (a - Rational(bsign) * b) / 2;
    return a + Rational(bsign) * b;
}

Rational eval_e(const Id& id) {
    require_valid(id);
    return eight_sum(id, 0, 1, 2, theta);
}

Rational eval_e_branch(const Id& id) {
    require_valid(id);
    if ((id.a2 + id.b2) / 2 % 2 == 0 ? id.s == 1 : id.s == 0) return 0;  // odd module
    long long bsign = id.s == 0 ? 1 : -1;
    Rational a = from_doubled(id.a2), b = from_doubled(id.b2);
    if (id.a2 + bsign * 3 * id.b2 >= 0) {
        Rational u = a - Rational(bsign) * b;  // a + (-1)^(s+1) b, an odd integer here
        long long exp = (to_long(u) - 1) / 2;
        return Rational(3) / 4 * u + Rational(sign_pow(exp), 4);
    }
    return Rational(3) / 2 * (a + Rational(bsign) * b);
}

Rational c0_exact(const Id& id) {
    require_valid(id);
    return eight_sum(id, 0, 5, 6, gamma_prime);
}

Rational c1_exact(const Id& id) {
    require_valid(id);
    return eight_sum(id, 0, 4, 5, gamma_second);
}

std::vector<Rational> c0_predictions(const Id& id) {
    require_valid(id);
    long long bsign = id.s == 0 ? 1 : -1;
    Rational a = from_doubled(id.a2), b = from_doubled(id.b2);
    long long disc = id.a2 + bsign * 3 * id.b2;
    std::vector<Rational> out;
    if (disc <= 0) out.push_back((a + Rational(bsign) * b) / 6);
    if (disc >= 0) out.push_back((a - Rational(bsign) * b) / 12);
    return out;
}

std::vector<Rational> c1_predictions(const Id& id) {
    require_valid(id);
    long long bsign = id.s == 0 ? 1 : -1;
    Rational a = from_doubled(id.a2), b = from_doubled(id.b2);
    long long disc = id.a2 + bsign * 3 * id.b2;
    std::vector<Rational> out;
    if (disc >= 0) out.push_back((a - Rational(bsign) * b) / 6);
    if (disc <= 0) out.push_back((a + Rational(bsign) * b) / 3);
    return out;
}

long long minimal_type(const Id& id) {
    require_valid(id);
    for (long long i = 0; i <= plateau_threshold(id) + 6; ++i) {
        if (coeff_c(id, i) <= 0) continue;
        bool even = ((id.a2 + id.b2) / 2 + id.s) % 2 == 0;
        bool in_range = even ? (i == 0 || i == 2 || i == 4) : (i == 1 || i == 3);
        if (!in_range) throw std::logic_error("minimal_type: type outside {V0,V2,V4}/{V1,V3}");
        return i;
    }
    throw std::logic_error("minimal_type: empty character");
}

std::vector<Summand> tensor_decomp(TensorFactor which, const Id& id) {
    require_valid(id);
    auto mk = [&](long long a2, long long b2) {
        Summand s;
        s.id = {a2, b2, id.s};
        s.zero = a2 <= std::llabs(b2);
        return s;
    };
    long long a2 = id.a2, b2 = id.b2;
    if (which == TensorFactor::V10)
        return {mk(a2 + 2, b2), mk(a2, b2 + 2), mk(a2 - 2, b2), mk(a2, b2 - 2)};
    if (a2 == b2 + 2 && b2 > 0)
        return {mk(a2 + 2, b2 + 2), mk(a2 + 2, b2 - 2), mk(a2 - 2, b2 - 2)};
    if (a2 == -b2 + 2 && b2 < 0)
        return {mk(a2 + 2, b2 + 2), mk(a2 + 2, b2 - 2), mk(a2 - 2, b2 + 2)};
    return {mk(a2 + 2, b2 + 2), mk(a2, b2), mk(a2 - 2, b2 + 2), mk(a2 + 2, b2 - 2),
            mk(a2 - 2, b2 - 2)};
}

bool is_multiplicity_free(const Id& id) {
    require_valid(id);
    for (const auto& v : asymptotic_c6(id))
        if (v > 1) return false;
    for (long long i = 0; i <= plateau_threshold(id); ++i)
        if (coeff_c(id, i) > 1) return false;
    return true;
}

std::vector<Id> multiplicity_free_scan(long long a2max) {
    if (a2max < 7) throw std::invalid_argument("multiplicity_free_scan: scan at least up to a = 7/2");
    std::vector<Id> out;
    for (long long a2 = 3; a2 <= a2max; a2 += 2)
        for (long long b2 = -a2 + 2; b2 <= a2 - 2; b2 += 2)
            for (int s = 0; s <= 1; ++s) {
                Id id{a2, b2, s};
                if (is_multiplicity_free(id)) out.push_back(id);
            }
    return out;
}

}  // namespace sp4_principal
}  // namespace kchar
