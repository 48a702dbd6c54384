#pragma once

#include <algorithm>
#include <vector>

#include "kchar/series.hpp"

namespace kchar {

// Character in closed form: a Laurent-polynomial numerator over a multiset
// of factors (1 - z^d).  Every closed form in this library fits this shape,
// so equality is decidable by cross-multiplying numerators.
class RationalChar {
public:
    RationalChar() = default;
    RationalChar(LaurentPoly num, std::vector<int> denominator_degrees)
        : num_(std::move(num)), den_(std::move(denominator_degrees)) {
        for (int d : den_)
            if (d < 1) throw std::invalid_argument("RationalChar: factor degree must be >= 1");
        std::sort(den_.begin(), den_.end());
    }

    static RationalChar zero() { return RationalChar(); }

    // z^exp / prod (1 - z^d)
    static RationalChar monomial_over(long long exp, std::vector<int> dens) {
        return RationalChar(LaurentPoly::monomial(exp), std::move(dens));
    }

    const LaurentPoly& numerator() const { return num_; }
    const std::vector<int>& denominator_degrees() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    LaurentPoly denominator_poly() const {
        LaurentPoly p = LaurentPoly::one();
        for (int d : den_) {
            LaurentPoly f = LaurentPoly::one();
            f.add_term(d, -1);
            p = p * f;
        }
        return p;
    }

    RationalChar& operator*=(const Rational& s) {
        num_ *= s;
        return *this;
    }

    friend RationalChar operator*(RationalChar a, const Rational& s) { return a *= s; }

    friend RationalChar operator*(const RationalChar& a, const LaurentPoly& p) {
        return RationalChar(a.num_ * p, a.den_);
    }

    friend RationalChar operator*(const RationalChar& a, const RationalChar& b) {
        std::vector<int> dens = a.den_;
        dens.insert(dens.end(), b.den_.begin(), b.den_.end());
        return RationalChar(a.num_ * b.num_, std::move(dens));
    }

    friend RationalChar operator-(const RationalChar& a) { return RationalChar(-a.num_, a.den_); }

    friend RationalChar operator+(const RationalChar& a, const RationalChar& b) {
        // common denominator: per-degree max multiplicity
        std::vector<int> dens = merged_degrees(a.den_, b.den_);
        LaurentPoly na = a.num_ * complement_poly(dens, a.den_);
        LaurentPoly nb = b.num_ * complement_poly(dens, b.den_);
        return RationalChar(na + nb, std::move(dens));
    }

    friend RationalChar operator-(const RationalChar& a, const RationalChar& b) { return a + (-b); }

    // Exact equality of the rational functions, via cross-multiplication
    // after cancelling shared factors.
    bool equals(const RationalChar& other) const {
        std::vector<int> da, db;
        cancel_common(den_, other.den_, da, db);
        // num_/da == other.num_/db  <=>  num_ * prod(db) == other.num_ * prod(da)
        return num_ * RationalChar(LaurentPoly::one(), db).denominator_poly() ==
               other.num_ * RationalChar(LaurentPoly::one(), da).denominator_poly();
    }

    // Exact expansion to the requested order; negative exponents of the
    // numerator are preserved.
    LaurentSeries expand_laurent(long long order) const {
        if (num_.is_zero()) return LaurentSeries(LaurentPoly(), order);
        long long lo = std::min<long long>(num_.min_exp(), 0);
        if (order < lo) return LaurentSeries(LaurentPoly(), order);
        size_t n = static_cast<size_t>(order - lo) + 1;
        std::vector<Rational> v(n, Rational(0));
        for (const auto& [e, c] : num_.terms())
            if (e <= order) v[static_cast<size_t>(e - lo)] = c;
        for (int d : den_)
            for (size_t i = static_cast<size_t>(d); i < n; ++i) v[i] += v[i - d];
        LaurentPoly p;
        for (size_t i = 0; i < n; ++i)
            if (v[i] != 0) p.set(lo + static_cast<long long>(i), v[i]);
        return LaurentSeries(std::move(p), order);
    }

    KCharacter expand(long long order) const { return expand_laurent(order).to_kcharacter(); }

    // smallest exponent in the expansion; the numerator's lowest term never
    // cancels since every denominator factor expands as 1 + O(z)
    long long min_support() const { return num_.is_zero() ? 0 : num_.min_exp(); }

private:
    static std::vector<int> merged_degrees(const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i] < b[j])) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j] < a[i]) {
                out.push_back(b[j++]);
            } else {
                out.push_back(a[i]);
                ++i;
                ++j;
            }
        }
        return out;
    }

    // product of (1 - z^d) over the degrees in `full` not matched in `sub`
    static LaurentPoly complement_poly(const std::vector<int>& full, const std::vector<int>& sub) {
        LaurentPoly p = LaurentPoly::one();
        size_t i = 0, j = 0;
        while (i < full.size()) {
            if (j < sub.size() && full[i] == sub[j]) {
                ++i;
                ++j;
                continue;
            }
            LaurentPoly f = LaurentPoly::one();
            f.add_term(full[i], -1);
            p = p * f;
            ++i;
        }
        return p;
    }

    static void cancel_common(const std::vector<int>& a, const std::vector<int>& b,
                              std::vector<int>& ra, std::vector<int>& rb) {
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                ++i;
                ++j;
            } else if (a[i] < b[j]) {
                ra.push_back(a[i++]);
            } else {
                rb.push_back(b[j++]);
            }
        }
        for (; i < a.size(); ++i) ra.push_back(a[i]);
        for (; j < b.size(); ++j) rb.push_back(b[j]);
    }

    LaurentPoly num_;
    std::vector<int> den_;
};

// pi applied to a closed form stays a closed form over the same denominator:
// the finitely many negative-exponent coefficients of the expansion fold
// onto a Laurent-polynomial correction.
inline RationalChar pi_project(const RationalChar& r) {
    if (r.is_zero() || r.numerator().min_exp() >= 0) return r;
    auto negative_part = r.expand_laurent(-1);
    LaurentPoly correction;
    for (const auto& [e, c] : negative_part.terms().terms()) {
        correction.add_term(e, -c);  // remove z^e
        if (e <= -2) correction.add_term(-e - 2, -c);
    }
    return r + RationalChar(std::move(correction), {});
}

}  // namespace kchar
