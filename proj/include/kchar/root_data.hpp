#pragma once

#include <string>
#include <vector>

#include "kchar/rational.hpp"

namespace kchar {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

std::string family_name(Family f);

// Weight in fundamental-weight coordinates.
using Weight = std::vector<Rational>;

// Root system of a simple Lie algebra, built from the Cartan matrix.
// Positive roots are stored in simple-root coordinates; the invariant form
// is normalized so long roots have square length 2.
class RootDatum {
public:
    static RootDatum build(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    const std::vector<std::vector<long long>>& positive_roots() const { return positive_roots_; }
    // (alpha_i, alpha_i)/2 for each simple root
    const std::vector<Rational>& half_lengths() const { return half_len_; }

    long long algebra_dim() const {
        return 2 * static_cast<long long>(positive_roots_.size()) + rank_;
    }

    bool is_dominant_integral(const Weight& lambda) const;

    // Weyl dimension formula: prod over positive roots of
    // (lambda + rho, alpha) / (rho, alpha); exact.
    Int weyl_dim(const Weight& lambda) const;

    // All dominant integral weights of dimension <= C.  Complete because the
    // dimension is strictly monotone in every fundamental coordinate, which
    // bounds the search box by (lambda + rho, alpha_i~) <= C.
    std::vector<Weight> enumerate_dominant_dim_at_most(const Int& C) const;

    // -w0(lambda) == lambda, decided through the diagram involution.
    bool is_self_dual(const Weight& lambda) const;

    Weight dual_weight(const Weight& lambda) const;

private:
    RootDatum() = default;

    Family family_ = Family::A;
    int rank_ = 0;
    std::vector<std::vector<long long>> cartan_;  // cartan_[i][j] = <alpha_i, alpha_j~>
    std::vector<Rational> half_len_;
    std::vector<std::vector<long long>> positive_roots_;
};

// Half-dimension of the minimal nilpotent orbit; table lookup per family.
long long r_g(Family family, int rank);

// b_k = (dim k + rk k)/2, the dimension of a Borel subalgebra of k.
Rational borel_dim(long long dim_k, long long rank_k);

// Reductive subalgebra described by its simple summands plus an abelian part.
struct SubalgebraDescriptor {
    std::vector<std::pair<Family, int>> summands;
    int central_dim = 0;
    std::string embedding_tag;

    long long dim() const;
    long long rank() const;
    Rational borel_dim() const { return kchar::borel_dim(dim(), rank()); }
};

long long family_dim(Family f, int rank);
long long family_rank(Family f, int rank);

}  // namespace kchar
