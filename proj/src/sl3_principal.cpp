#include "kchar/sl3_principal.hpp"

#include <stdexcept>

namespace kchar {
namespace sl3_principal {

namespace {

bool is_int(const Rational& r) { return is_integer(r); }

// weight character of S^n(V_2) from the power-sum recursion
// n s_n = sum_{k=1..n} p_k s_{n-k},  p_k = z^{2k} + 1 + z^{-2k}
LaurentPoly sym_power_weights(long long n) {
    std::vector<LaurentPoly> s(static_cast<size_t>(n) + 1);
    s[0] = LaurentPoly::one();
    for (long long m = 1; m <= n; ++m) {
        LaurentPoly acc;
        for (long long k = 1; k <= m; ++k) {
            LaurentPoly pk;
            pk.set(2 * k, 1);
            pk.set(0, 1);
            pk.set(-2 * k, 1);
            acc += pk * s[static_cast<size_t>(m - k)];
        }
        acc *= Rational(1, m);
        s[static_cast<size_t>(m)] = std::move(acc);
    }
    return s[static_cast<size_t>(n)];
}

// decompose a symmetric weight character into k-types: m_j = w_j - w_{j+2}
LaurentPoly strip_weights(const LaurentPoly& w) {
    LaurentPoly out;
    for (const auto& [e, c] : w.terms()) {
        if (e < 0) continue;
        Rational m = c - w.coeff(e + 2);
        if (m < 0) throw std::logic_error("strip_weights: not a module character");
        if (m != 0) out.set(e, m);
    }
    return out;
}

// series (x) finite k-character, exact to the requested order
KCharacter cg_with_module(const RationalChar& series, const LaurentPoly& ktypes,
                          long long order) {
    KCharacter out(order);
    if (ktypes.is_zero()) return out;
    auto expanded = series.expand(order + ktypes.max_exp());
    for (long long m = 0; m <= expanded.order(); ++m) {
        const Rational& cm = expanded.coeff(m);
        if (cm == 0) continue;
        for (const auto& [j, mult] : ktypes.terms()) {
            // z^m (x) z^j truncated to the output order
            long long lo = std::abs(m - j);
            long long hi = std::min(m + j, order);
            for (long long e = lo; e <= hi; e += 2) out.add(e, cm * mult);
        }
    }
    return out;
}

RationalChar geometric4(long long exp) { return RationalChar::monomial_over(exp, {4}); }

Fam untwisted(Fam f) {
    if (f == Fam::IPlusTau) return Fam::IPlus;
    if (f == Fam::IMinusTau) return Fam::IMinus;
    return f;
}

Fam recursion_partner(Fam f) {
    switch (f) {
        case Fam::IPlus: return Fam::IMinus;
        case Fam::IMinus: return Fam::IPlus;
        default: return Fam::J;
    }
}

}  // namespace

std::string fam_name(Fam f) {
    switch (f) {
        case Fam::IPlus: return "I+";
        case Fam::IMinus: return "I-";
        case Fam::J: return "J";
        case Fam::IPlusTau: return "I+tau";
        case Fam::IMinusTau: return "I-tau";
    }
    throw std::logic_error("fam_name");
}

bool is_valid(const Id& id) {
    if (id.n < 0) return false;
    if (id.fam == Fam::IPlusTau || id.fam == Fam::IMinusTau) return id.u == -2;
    if (id.fam == Fam::J && !is_half_odd_integer(id.u)) return false;
    if (is_int(id.u)) {
        Int u = numerator(id.u);
        if (u >= -1 && u <= id.n - 1) return false;  // translation step undefined
    }
    return true;
}

LaurentPoly restrict_sym_v2(long long n) {
    if (n < 0) throw std::invalid_argument("restrict_sym_v2: negative power");
    return strip_weights(sym_power_weights(n));
}

RationalChar kappa(long long n, long long a) {
    if (n < 0 || a < 0) throw std::invalid_argument("kappa: requires n >= 0, a >= 0");
    long long p = n / 2;
    if (n % 2 == 0) {
        RationalChar r = geometric4(a);
        for (long long j = 1; j <= p; ++j)
            r = r + RationalChar::monomial_over(std::abs(a - 4 * j), {2});
        return r;
    }
    RationalChar r = RationalChar::zero();
    for (long long j = 0; j <= p; ++j)
        r = r + RationalChar::monomial_over(std::abs(a - 4 * j - 2), {2});
    return r;
}

RationalChar mu(long long n, long long a) {
    if (n < 0 || a < 2) throw std::invalid_argument("mu: requires n >= 0, a >= 2");
    long long p = n / 2;
    if (n % 2 == 0) {
        RationalChar r = geometric4(a);
        for (long long j = 1; j <= p; ++j)
            r = r + RationalChar::monomial_over(a - 2 + 4 * j, {2});
        return r;
    }
    RationalChar r = RationalChar::zero();
    for (long long j = 0; j <= p; ++j) r = r + RationalChar::monomial_over(a + 4 * j, {2});
    return r;
}

KCharacter kappa_defining(long long n, long long a, long long order) {
    if (n < 0 || a < 0) throw std::invalid_argument("kappa_defining: requires n >= 0, a >= 0");
    KCharacter first = cg_with_module(geometric4(a), restrict_sym_v2(n), order);
    if (n == 0) return first;
    KCharacter second = cg_with_module(geometric4(a + 2), restrict_sym_v2(n - 1), order);
    for (long long i = 0; i <= order; ++i) first.add(i, -second.coeff(i));
    return first;
}

KCharacter mu_defining(long long n, long long a, long long order) {
    if (n < 0 || a < 2) throw std::invalid_argument("mu_defining: requires n >= 0, a >= 2");
    KCharacter first = cg_with_module(geometric4(a), restrict_sym_v2(n), order);
    if (n == 0) return first;
    KCharacter second = cg_with_module(geometric4(a - 2), restrict_sym_v2(n - 1), order);
    for (long long i = 0; i <= order; ++i) first.add(i, -second.coeff(i));
    return first;
}

RationalChar base_char(Fam fam, const Rational& u) {
    if (fam == Fam::IPlusTau || fam == Fam::IMinusTau) {
        if (u != -2)
            throw std::invalid_argument("base_char: tau-twisted families exist only at u = -2");
        return base_char(untwisted(fam), u);
    }
    if (fam == Fam::J) {
        if (!is_half_odd_integer(u))
            throw std::invalid_argument("base_char: J requires u in 1/2 + Z");
        long long e = u > 0 ? to_long(4 + 2 * u) : to_long(2 - 2 * u);
        return geometric4(e);
    }
    bool plus = fam == Fam::IPlus;
    if (!is_int(u)) return plus ? geometric4(0) : geometric4(2);
    long long ui = to_long(u);
    bool even = (ui % 2) == 0;
    if (ui >= 0)
        return plus ? geometric4(even ? 2 * ui + 4 : 0) : geometric4(even ? 2 : 2 * ui + 4);
    if (ui == -1) return plus ? geometric4(0) : geometric4(2);
    return plus ? geometric4(even ? 0 : -2 - 2 * ui) : geometric4(even ? -2 - 2 * ui : 2);
}

RationalChar character(const Id& id) {
    if (!is_valid(id)) throw std::invalid_argument("sl3_principal::character: invalid id");
    Fam fam = untwisted(id.fam);
    const Rational& u = id.u;
    long long n = id.n;
    if (fam == Fam::J)
        return u >= Rational(-1, 2) ? kappa(n, to_long(4 + 2 * u)) : mu(n, to_long(2 - 2 * u));
    bool plus = fam == Fam::IPlus;
    if (!is_int(u)) return plus ? kappa(n, 0) : mu(n, 2);
    long long ui = to_long(u);
    bool even = (ui % 2) == 0;
    if (ui >= 0) {
        if (plus) return even ? kappa(n, 2 * ui + 4) : kappa(n, 0);
        return even ? mu(n, 2) : kappa(n, 2 * ui + 4);
    }
    // ui <= -2 here: ui = -1 ids are never valid
    if (plus) return even ? kappa(n, 0) : mu(n, -2 - 2 * ui);
    return even ? mu(n, -2 - 2 * ui) : mu(n, 2);
}

KCharacter recursion_oracle(const Id& id, long long order) {
    if (!is_valid(id)) throw std::invalid_argument("recursion_oracle: invalid id");
    Fam fam = untwisted(id.fam);
    KCharacter first = cg_with_module(base_char(fam, id.u), restrict_sym_v2(id.n), order);
    if (id.n == 0) return first;
    KCharacter second = cg_with_module(base_char(recursion_partner(fam), id.u + 1),
                                       restrict_sym_v2(id.n - 1), order);
    for (long long i = 0; i <= order; ++i) first.add(i, -second.coeff(i));
    return first;
}

std::vector<Id> classify_chi(const Rational& u, long long n) {
    if (n < 0) throw std::invalid_argument("classify_chi: n must be >= 0");
    if (u == -2) return {{Fam::IPlus, u, n}, {Fam::IMinus, u, n}};
    if (!is_int(u)) {
        std::vector<Id> out = {{Fam::IPlus, u, n}, {Fam::IMinus, u, n}};
        if (is_half_odd_integer(u)) out.push_back({Fam::J, u, n});
        return out;
    }
    long long ui = to_long(u);
    if (ui >= n)
        return {{Fam::IPlus, u, n},
                {Fam::IMinus, u, n},
                {Fam::IPlus, Rational(-n - 3), ui - n},
                {Fam::IMinus, Rational(-n - 3), ui - n}};
    if (ui == n - 1) return {{Fam::IPlusTau, Rational(-2), n}, {Fam::IMinusTau, Rational(-2), n}};
    throw std::invalid_argument("classify_chi: central character chi(" + to_string(u + 1 - n) +
                                "," + std::to_string(n + 1) + ") admits no bounded module");
}

std::array<Rational, 4> asymptotic_mults(const Id& id) {
    if (!is_valid(id)) throw std::invalid_argument("asymptotic_mults: invalid id");
    std::array<Rational, 4> out = {0, 0, 0, 0};
    long long p = id.n / 2;
    Fam fam = untwisted(id.fam);
    if (fam == Fam::J) {
        if (id.n % 2 == 1) {
            out[1] = out[3] = p + 1;
        } else {
            long long r = static_cast<long long>(((to_long(2 * id.u) % 4) + 4) % 4);
            out[static_cast<size_t>(r)] = p + 1;
            out[static_cast<size_t>((r + 2) % 4)] = p;
        }
        return out;
    }
    if (id.n % 2 == 1) {
        out[0] = out[2] = p + 1;
    } else if (fam == Fam::IPlus) {
        out[0] = p + 1;
        out[2] = p;
    } else {
        out[2] = p + 1;
        out[0] = p;
    }
    return out;
}

bool is_multiplicity_free(const Id& id) {
    if (!is_valid(id)) throw std::invalid_argument("is_multiplicity_free: invalid id");
    return id.n <= 1;
}

}  // namespace sl3_principal
}  // namespace kchar
