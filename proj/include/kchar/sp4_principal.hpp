#pragma once

#include <array>
#include <map>
#include <vector>

#include "kchar/rational_char.hpp"

namespace kchar {
namespace sp4_principal {

// M^s_{a,b} for the principal sl(2) in sp(4): a, b in 1/2 + Z stored
// doubled, s in {0,1}.  Module semantics need a > |b|; the psi/phi values
// extend to all (a,b) through the antisymmetry relations.
struct Id {
    long long a2 = 0;
    long long b2 = 0;
    int s = 0;

    bool operator==(const Id&) const = default;
    bool operator<(const Id& o) const {
        return std::tie(a2, b2, s) < std::tie(o.a2, o.b2, o.s);
    }
};

bool is_valid(const Id& id);

// Closed form of psi^s_{a,b} over (1-z^2)^2 (1-z^4)(1-z^6); defined for all
// odd doubled parameters.
RationalChar psi_closed(const Id& id);

// psi rebuilt from the base cases by the translation recursion: level a+1
// from level a via (c1) for interior b and (c2) at the two boundaries, with
// the antisymmetry relations supplying reflected values.
class PsiRecursion {
public:
    explicit PsiRecursion(long long max_a2);

    // value for arbitrary odd (a2, b2) with |a2|, |b2| within the built
    // range, via the symmetry reduction
    RationalChar value(long long a2, long long b2, int s) const;

private:
    long long max_a2_;
    std::map<std::pair<long long, long long>, RationalChar> table_[2];
};

// phi = pi(psi): the actual k-character coefficients up to the given order.
KCharacter phi(const Id& id, long long order);

// coefficient of z^(2n) in 1/((1-z^2)^2 (1-z^4)(1-z^6)) for integer n >= 0,
// zero otherwise; evaluated by the closed form.
Rational gamma_coeff(const Rational& n);

// the 8-term gamma combination delta^s_{a,b}(n)
Rational delta(const Id& id, long long n);

// c_i(M^s_{a,b}) = delta(i) - delta(-i-2)
Rational coeff_c(const Id& id, long long i);

// Eventual multiplicities per residue class mod 6 (index = residue).
std::array<Rational, 6> asymptotic_c6(const Id& id);

// exponent i >= 3a + b + 6 guarantees the plateau
long long plateau_threshold(const Id& id);

// c_1 + c_3 via the binomial form, and its piecewise-linear closed form
Rational dval(const Id& id);
Rational dval_branch(const Id& id);

// c_0 + c_2 + c_4 via the theta sum, and its closed form
Rational eval_e(const Id& id);
Rational eval_e_branch(const Id& id);

// exact c_0 and c_1 from the gamma'/gamma'' sums
Rational c0_exact(const Id& id);
Rational c1_exact(const Id& id);

// the coarse linear predictors (exact value is within 1); two candidates on
// the branch boundary
std::vector<Rational> c0_predictions(const Id& id);
std::vector<Rational> c1_predictions(const Id& id);

long long minimal_type(const Id& id);

enum class TensorFactor { V10, V11 };

struct Summand {
    Id id;
    bool zero = false;  // a <= |b|, the zero module by convention
};

std::vector<Summand> tensor_decomp(TensorFactor which, const Id& id);

bool is_multiplicity_free(const Id& id);

// all multiplicity-free ids with a <= a2max/2, both s
std::vector<Id> multiplicity_free_scan(long long a2max);

}  // namespace sp4_principal
}  // namespace kchar
