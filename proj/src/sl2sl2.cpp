#include "kchar/sl2sl2.hpp"

#include <stdexcept>

namespace kchar {
namespace sl2sl2 {

bool is_valid(const SctParams& p) {
    if (p.n < 0) return false;
    if (is_integer(p.a)) {
        Int a = numerator(p.a);
        return a >= 0 && a - p.n <= 0;
    }
    return true;
}

RationalChar character(long long n) {
    if (n < 0) throw std::invalid_argument("sl2sl2::character: n must be >= 0");
    return RationalChar::monomial_over(n, {2});
}

LaurentPoly finite_dim_char(long long a, long long n) {
    if (a < 1 || n < a + 1)
        throw std::invalid_argument(
            "finite_dim_char: requires a >= 1 and n >= a+1 so both tensor factors exist");
    return cg_product(a - 1, n - a - 1);
}

}  // namespace sl2sl2
}  // namespace kchar
