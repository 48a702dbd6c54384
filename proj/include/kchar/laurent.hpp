#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "kchar/rational.hpp"

namespace kchar {

// Laurent polynomial with exact rational coefficients, kept canonical:
// no stored coefficient is zero.
class LaurentPoly {
public:
    using Terms = std::map<long long, Rational>;

    LaurentPoly() = default;

    static LaurentPoly monomial(long long exp, Rational coeff = 1) {
        LaurentPoly p;
        p.set(exp, std::move(coeff));
        return p;
    }

    static LaurentPoly one() { return monomial(0); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(long long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void set(long long exp, Rational c) {
        if (c == 0)
            terms_.erase(exp);
        else
            terms_[exp] = std::move(c);
    }

    void add_term(long long exp, const Rational& c) {
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(exp, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    long long min_exp() const {
        if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
        return terms_.begin()->first;
    }

    long long max_exp() const {
        if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    LaurentPoly& operator+=(const LaurentPoly& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& other) {
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    LaurentPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r = a;
        return r *= Rational(-1);
    }

    // multiplication by z^k
    LaurentPoly shifted(long long k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    bool operator==(const LaurentPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const LaurentPoly& other) const { return !(*this == other); }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += to_string(c);
            if (e != 0) out += "*" + var + "^" + std::to_string(e);
        }
        return out;
    }

private:
    Terms terms_;
};

// Projection of C((z)) onto C[[z]] along the span of z^j + z^{-j-2}:
// z^j stays put for j >= 0, z^{-1} dies, and z^j maps to -z^{-j-2} for j <= -2.
inline LaurentPoly pi_project(const LaurentPoly& f) {
    LaurentPoly r;
    for (const auto& [e, c] : f.terms()) {
        if (e >= 0)
            r.add_term(e, c);
        else if (e <= -2)
            r.add_term(-e - 2, -c);
    }
    return r;
}

// Character of the (j+1)-dimensional sl(2)-module as a weight polynomial:
// z^j + z^{j-2} + ... + z^{-j}.
inline LaurentPoly weight_char(long long j) {
    if (j < 0) throw std::invalid_argument("weight_char: negative index");
    LaurentPoly r;
    for (long long e = -j; e <= j; e += 2) r.set(e, 1);
    return r;
}

// z^p (x) z^q = sum of z^(p+q-2k) over 0 <= k <= min(p,q); the sl(2)
// Clebsch-Gordan decomposition at the character level.
inline LaurentPoly cg_product(long long p, long long q) {
    if (p < 0 || q < 0) throw std::invalid_argument("cg_product: negative inputs");
    LaurentPoly r;
    long long m = std::min(p, q);
    for (long long k = 0; k <= m; ++k) r.set(p + q - 2 * k, 1);
    return r;
}

// Bilinear extension of the Clebsch-Gordan product to polynomials with
// nonnegative support.
inline LaurentPoly cg_product(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            LaurentPoly t = cg_product(ea, eb);
            t *= ca * cb;
            r += t;
        }
    return r;
}

// sum of coeff_j * (j+1); the dimension of the module a character denotes.
inline Rational dimension_weight(const LaurentPoly& p) {
    Rational s = 0;
    for (const auto& [e, c] : p.terms()) s += c * Rational(e + 1);
    return s;
}

}  // namespace kchar
