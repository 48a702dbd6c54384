#include "kchar/gate.hpp"

#include <algorithm>
#include <stdexcept>

namespace kchar {

bool necessary_condition(const std::vector<std::pair<Family, int>>& g,
                         const SubalgebraDescriptor& k, bool strict) {
    if (g.empty()) throw std::invalid_argument("necessary_condition: empty algebra");
    Rational bk = k.borel_dim();
    if (strict) {
        long long sum = 0;
        for (const auto& [f, r] : g) sum += r_g(f, r);
        return Rational(sum) <= bk;
    }
    // the minimal nilpotent orbit of a direct sum lies in a single summand
    long long rg = r_g(g.front().first, g.front().second);
    for (const auto& [f, r] : g) rg = std::min(rg, r_g(f, r));
    return Rational(rg) <= bk;
}

std::vector<Weight> thA_candidates(const RootDatum& k) {
    Rational bound = borel_dim(k.algebra_dim(), k.rank()) + 1;
    if (!is_integer(bound)) throw std::logic_error("thA_candidates: non-integral bound");
    auto all = k.enumerate_dominant_dim_at_most(numerator(bound));
    std::vector<Weight> out;
    Weight trivial(k.rank(), Rational(0));
    for (auto& lam : all)
        if (lam != trivial) out.push_back(std::move(lam));
    return out;
}

std::vector<Weight> le52_filter(const RootDatum& k, const std::vector<Weight>& candidates) {
    std::vector<Weight> out;
    for (const auto& lam : candidates)
        if (!k.is_self_dual(lam)) out.push_back(lam);
    return out;
}

bool sl_n_maximal_bounded(const SubalgebraDescriptor& k, long long n) {
    if (n < 2) throw std::invalid_argument("sl_n_maximal_bounded: n must be >= 2");
    return k.borel_dim() >= Rational(n - 1);
}

const std::vector<Rank2Pair>& rank2_bounded_pairs() {
    static const std::vector<Rank2Pair> table = {
        {"sl2+sl2", "gl2"},
        {"sl2+sl2", "diagonal-sl2"},
        {"sl2+sl2", "toral"},
        {"sl3", "root-sl2"},
        {"sl3", "root-gl2"},
        {"sl3", "principal-sl2"},
        {"sl3", "cartan"},
        {"sp4", "sl2+sl2"},
        {"sp4", "gl2"},
        {"sp4", "short-root-sl2"},
        {"sp4", "principal-sl2"},
        {"sp4", "cartan"},
        {"g2", "sl3"},
        {"g2", "sl2+sl2"},
        {"g2", "gl2"},
    };
    return table;
}

const std::vector<NonMaximalRow>& sl_n_nonmaximal_bounded_examples() {
    static const std::vector<NonMaximalRow> rows = {
        {"sl(k+1) acting by natural + its dual, k >= 2", "sl(2k+2)",
         {{{Family::A, 2}}, 0, "natural+dual"}, 6},
        {"so(7) via the 8-dimensional spinor module", "sl(8)",
         {{{Family::B, 3}}, 0, "spinor"}, 8},
        {"g2 via the 7-dimensional module", "sl(7)", {{{Family::G2, 2}}, 0, "fundamental"}, 7},
    };
    return rows;
}

std::optional<bool> rank2_is_bounded(const std::string& algebra, const std::string& subalgebra) {
    static const std::vector<std::string> algebras = {"sl2+sl2", "sl3", "sp4", "g2"};
    if (std::find(algebras.begin(), algebras.end(), algebra) == algebras.end())
        return std::nullopt;
    for (const auto& row : rank2_bounded_pairs())
        if (row.algebra == algebra && row.subalgebra == subalgebra) return true;
    return false;
}

}  // namespace kchar
