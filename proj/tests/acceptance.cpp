// Acceptance suite: every check is exact; one line per criterion.

#include <iostream>
#include <vector>

#include "kchar/verify.hpp"

using kchar::verify::SuiteReport;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::vector<std::string> suites;
};

const std::vector<Criterion> kCriteria = {
    {1, "sp(4) principal base characters (orders to 60)", {"sp4-principal-base"}},
    {2, "psi existence/uniqueness: (c1)-(c4) and recursion vs closed form, |2a|,|2b| <= 21",
     {"sp4-principal-recursion"}},
    {3, "delta machinery: coefficients to i <= 100 over a <= 21/2; gamma to n <= 60",
     {"sp4-principal-delta"}},
    {4, "mod-6 periodicity, residue table, parity vanishing", {"sp4-principal-asymptotics"}},
    {5, "multiplicity-free census over a <= 41/2 is the 16 known modules",
     {"sp4-principal-mfree"}},
    {6, "minimal k-types in {V0,V2,V4}/{V1,V3}; exact c0/c1 sums; linear predictors within 1",
     {"sp4-principal-minimal-types"}},
    {7, "sl(3) principal: closed forms vs translation recursion to order 80; plateaus; "
        "multiplicity-free list",
     {"sl3-principal-sym", "sl3-principal-blocks", "sl3-principal-recursion",
      "sl3-principal-asymptotics"}},
    {8, "sl(3) root: induced-module oracle to order 64; quotient identity; census",
     {"sl3-root-induced", "sl3-root-quotient", "sl3-root-mfree"}},
    {9, "sp(4) root: Weyl-character oracle to order 40; minimal types; plateau (a^2-b^2)/2",
     {"sp4-root-weyl"}},
    {10, "sl(2)+sl(2): z^n/(1-z^2) for n <= 20 with minimal type V_n", {"sl2sl2-characters"}},
    {11, "gate and enumerations: r_g rows, rank-2 admissibility, candidate tables, sl(n) criterion",
     {"series-core", "root-data-dims", "gate-tables"}},
    {12, "harness integrity: a seeded coefficient mutation is caught", {"harness-selftest"}},
};

}  // namespace

int main() {
    bool all_pass = true;
    for (const auto& criterion : kCriteria) {
        long long checked = 0;
        std::vector<kchar::verify::Failure> failures;
        for (const auto& suite : criterion.suites) {
            SuiteReport r = kchar::verify::run_suite(suite);
            checked += r.checked;
            failures.insert(failures.end(), r.failures.begin(), r.failures.end());
        }
        bool pass = failures.empty();
        all_pass = all_pass && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion.number << ": "
                  << criterion.description << " [" << checked << " exact checks]\n";
        if (!pass)
            std::cout << "     first failure: " << failures.front().where << " expected "
                      << failures.front().expected << " got " << failures.front().actual << "\n";
    }
    std::cout << (all_pass ? "ACCEPTANCE: all criteria pass\n"
                           : "ACCEPTANCE: criteria failed\n");
    return all_pass ? 0 : 1;
}
