#pragma once

#include "kchar/rational_char.hpp"

namespace kchar {
namespace sp4_root {

// Highest weight (a, b) of a bounded simple module for the short-root sl(2)
// in sp(4); half-integers stored doubled.  dual selects the lowest-weight
// partner L'_{-a,-b}, whose k-character is the same.
struct Params {
    long long a2 = 0;
    long long b2 = 0;
    bool dual = false;
};

// bounded simple iff a > |b| with a, b in 1/2 + Z
bool is_valid(const Params& p);

// c(L_{a,b}) = (a+b)/2 * z^(a-b-1) (x) 1/(1-z^2), in closed form over (1-z^2).
RationalChar character(const Params& p);

// Independent evaluation from the h-character: the weight lattice is sliced
// along the direction fixed by k, each slice is a finite k-module, and the
// slice characters are summed.  Exact to the requested order.
KCharacter weyl_h_char_oracle(const Params& p, long long order);

struct MinimalType {
    long long index = 0;
    Rational multiplicity;
};

// V_1 with multiplicity a+b when a-b is even; V_0 with multiplicity (a+b)/2
// when a-b is odd.
MinimalType minimal_type(const Params& p);

bool is_multiplicity_free(const Params& p);

// Eventual multiplicity (a^2-b^2)/2 on the parity class of a-b-1.
Rational plateau(const Params& p);

}  // namespace sp4_root
}  // namespace kchar
