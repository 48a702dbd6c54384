#pragma once

#include <vector>

#include "kchar/laurent.hpp"

namespace kchar {

// Truncated power series with nonnegative exponents; coeffs[i] is the exact
// coefficient of z^i for every i <= order().
class KCharacter {
public:
    KCharacter() = default;
    explicit KCharacter(long long order) : coeffs_(static_cast<size_t>(order) + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("KCharacter: negative order");
    }

    long long order() const { return static_cast<long long>(coeffs_.size()) - 1; }

    const Rational& coeff(long long i) const {
        if (i < 0 || i > order()) throw std::out_of_range("KCharacter::coeff: index beyond valid order");
        return coeffs_[static_cast<size_t>(i)];
    }

    void set(long long i, Rational c) { coeffs_.at(static_cast<size_t>(i)) = std::move(c); }
    void add(long long i, const Rational& c) { coeffs_.at(static_cast<size_t>(i)) += c; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const KCharacter& other) const { return coeffs_ == other.coeffs_; }

    // smallest index with nonzero coefficient, or -1 if none up to the order
    long long min_support() const {
        for (long long i = 0; i <= order(); ++i)
            if (coeffs_[static_cast<size_t>(i)] != 0) return i;
        return -1;
    }

    Rational max_coeff() const {
        Rational m = 0;
        for (const auto& c : coeffs_)
            if (c > m) m = c;
        return m;
    }

    KCharacter truncated(long long new_order) const {
        if (new_order > order()) throw std::invalid_argument("KCharacter::truncated: cannot extend");
        KCharacter r(new_order);
        for (long long i = 0; i <= new_order; ++i) r.set(i, coeff(i));
        return r;
    }

private:
    std::vector<Rational> coeffs_;
};

// Truncated Laurent series: every nonzero coefficient with exponent <= order
// is stored exactly, so the (finite) negative support is always complete.
class LaurentSeries {
public:
    LaurentSeries(LaurentPoly terms, long long order) : terms_(std::move(terms)), order_(order) {
        for (const auto& [e, c] : terms_.terms())
            if (e > order_) throw std::invalid_argument("LaurentSeries: term beyond declared order");
    }

    static LaurentSeries from_kcharacter(const KCharacter& k) {
        LaurentPoly p;
        for (long long i = 0; i <= k.order(); ++i) p.set(i, k.coeff(i));
        return LaurentSeries(std::move(p), k.order());
    }

    const LaurentPoly& terms() const { return terms_; }
    long long order() const { return order_; }
    Rational coeff(long long e) const {
        if (e > order_) throw std::out_of_range("LaurentSeries::coeff: beyond valid order");
        return terms_.coeff(e);
    }

    // Result is exact up to order + min_exp(p): deeper coefficients would
    // need series terms beyond the truncation.
    LaurentSeries multiplied(const LaurentPoly& p) const {
        if (p.is_zero()) return LaurentSeries(LaurentPoly(), order_);
        long long new_order = order_ + p.min_exp();
        LaurentPoly prod;
        for (const auto& [ep, cp] : p.terms())
            for (const auto& [es, cs] : terms_.terms()) {
                long long e = ep + es;
                if (e <= new_order) prod.add_term(e, cp * cs);
            }
        return LaurentSeries(std::move(prod), new_order);
    }

    LaurentSeries& operator-=(const LaurentSeries& other) {
        if (other.order_ < order_) order_ = other.order_;
        LaurentPoly t;
        for (const auto& [e, c] : terms_.terms())
            if (e <= order_) t.add_term(e, c);
        for (const auto& [e, c] : other.terms_.terms())
            if (e <= order_) t.add_term(e, -c);
        terms_ = std::move(t);
        return *this;
    }

    KCharacter to_kcharacter() const {
        if (!terms_.is_zero() && terms_.min_exp() < 0)
            throw std::logic_error("to_kcharacter: negative exponents present");
        KCharacter k(order_);
        for (const auto& [e, c] : terms_.terms()) k.set(e, c);
        return k;
    }

private:
    LaurentPoly terms_;
    long long order_;
};

inline LaurentSeries pi_project(const LaurentSeries& s) {
    return LaurentSeries(pi_project(s.terms()), s.order());
}

// c(M (x) V_i) = pi(c(M) * (z^i + z^(i-2) + ... + z^-i)); the result is
// claimed only to order N - i.
inline KCharacter tensor_char(const KCharacter& c, long long i) {
    if (i < 0) throw std::invalid_argument("tensor_char: negative index");
    if (c.order() < i) throw std::invalid_argument("tensor_char: order underflow (N < i)");
    LaurentSeries s = LaurentSeries::from_kcharacter(c);
    return pi_project(s.multiplied(weight_char(i))).to_kcharacter();
}

}  // namespace kchar
