#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kchar/root_data.hpp"

namespace kchar {

// Necessary condition for k to admit an infinite-dimensional simple bounded
// module inside g: r_g <= b_k.  With strict=true the summed form
// r_{g_1} + ... + r_{g_s} <= b_k is checked instead.
bool necessary_condition(const std::vector<std::pair<Family, int>>& g,
                         const SubalgebraDescriptor& k, bool strict);

// Nontrivial dominant weights lambda with dim V_lambda - 1 <= b_k.
std::vector<Weight> thA_candidates(const RootDatum& k);

// Keep the candidates carrying no invariant bilinear form (not self-dual).
std::vector<Weight> le52_filter(const RootDatum& k, const std::vector<Weight>& candidates);

// Criterion for a maximal reductive k in sl(n): bounded iff b_k >= n-1.
bool sl_n_maximal_bounded(const SubalgebraDescriptor& k, long long n);

// One row of the rank-2 classification: which reductive subalgebras of the
// rank-2 semisimple algebras are bounded.
struct Rank2Pair {
    std::string algebra;     // "sl2+sl2", "sl3", "sp4", "g2"
    std::string subalgebra;  // embedding tag
};

// The complete list of bounded pairs in rank 2; anything absent is not
// bounded.
const std::vector<Rank2Pair>& rank2_bounded_pairs();

// nullopt when the algebra name is unknown
std::optional<bool> rank2_is_bounded(const std::string& algebra, const std::string& subalgebra);

// Known bounded subalgebras of sl(n) that are not maximal: recorded data
// (smallest concrete instance per family), no decision procedure.
struct NonMaximalRow {
    std::string subalgebra;
    std::string ambient;
    SubalgebraDescriptor k;
    long long n;
};

const std::vector<NonMaximalRow>& sl_n_nonmaximal_bounded_examples();

}  // namespace kchar
