#pragma once

#include "kchar/rational_char.hpp"

namespace kchar {
namespace sl3_root {

// Parameters of the highest/lowest weight modules over the parabolic
// attached to a root sl(2) in sl(3).
struct Params {
    int sign = +1;  // +1 or -1
    long long a = 0;
    Rational b;
};

// Infinite-dimensionality: sign + needs b not in Z_{>=0}; sign - needs
// -a-b not in Z_{>=0}.
bool is_valid(const Params& p);

// Which closed form applies: the generic induced-module character, or the
// proper-quotient character.
enum class Branch { Generic, Quotient };
Branch branch(const Params& p);

// The k-character in closed form, numerator over a single factor (1 - z).
RationalChar character(const Params& p);

// Brute-force character of the induced module S(V_1) (x) V_a, summed k-type
// by k-type; the oracle for the generic branch.
KCharacter induced_char_oracle(long long a, long long order);

struct MinimalType {
    long long index = 0;
    Rational multiplicity;
    bool multiplicity_free = false;
};

MinimalType minimal_type_and_mfree(const Params& p);

}  // namespace sl3_root
}  // namespace kchar
