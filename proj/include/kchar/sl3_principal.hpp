#pragma once

#include <array>
#include <vector>

#include "kchar/rational_char.hpp"

namespace kchar {
namespace sl3_principal {

enum class Fam { IPlus, IMinus, J, IPlusTau, IMinusTau };

std::string fam_name(Fam f);

struct Id {
    Fam fam = Fam::IPlus;
    Rational u;
    long long n = 0;

    bool operator==(const Id&) const = default;
};

// The translation step behind X_{u,n} needs u outside {-1, 0, ..., n-1};
// J additionally needs u in 1/2+Z, and the tau families live at u = -2.
bool is_valid(const Id& id);

// k-character of S^n(V_2) (the restriction of the n-th symmetric power of
// the natural sl(3)-module), via the symmetric-power recursion on weight
// characters.
LaurentPoly restrict_sym_v2(long long n);

// Closed forms of the two building blocks (kappa for a >= 0, mu for a >= 2).
RationalChar kappa(long long n, long long a);
RationalChar mu(long long n, long long a);

// Defining-formula evaluations, used as oracles against the closed forms.
KCharacter kappa_defining(long long n, long long a, long long order);
KCharacter mu_defining(long long n, long long a, long long order);

// n = 0 characters per family and u; rejects invalid (family, u) combos.
RationalChar base_char(Fam fam, const Rational& u);

// Closed-form character of a valid module id.
RationalChar character(const Id& id);

// c(X_{u,n}) = c(X_{u,0} (x) V_{n,0}) - c(Y_{u+1,0} (x) V_{n-1,0}) with Y
// the partner family; evaluated with tensor products of expansions only.
KCharacter recursion_oracle(const Id& id, long long order);

// All simple bounded modules with central character chi(u+1-n, n+1).
std::vector<Id> classify_chi(const Rational& u, long long n);

// Eventual multiplicities per residue class mod 4 (index = residue).
std::array<Rational, 4> asymptotic_mults(const Id& id);

bool is_multiplicity_free(const Id& id);

}  // namespace sl3_principal
}  // namespace kchar
