#pragma once

#include "kchar/rational_char.hpp"

namespace kchar {
namespace sl2sl2 {

// Central character chi(a, a-n) of a simple infinite-dimensional module for
// the diagonal sl(2) in sl(2)+sl(2).
struct SctParams {
    Rational a;
    long long n = 0;  // >= 0
};

// a not a negative integer; for integral a additionally a >= 0 and a <= n.
bool is_valid(const SctParams& p);

// c(W_{a,a-n}) = z^n + z^(n+2) + ... = z^n / (1 - z^2)
RationalChar character(long long n);

// k-character of the finite-dimensional module with the same central
// character (integral a >= 1, n >= a+1): the Clebsch-Gordan product of the
// two factors' characters.
LaurentPoly finite_dim_char(long long a, long long n);

}  // namespace sl2sl2
}  // namespace kchar
