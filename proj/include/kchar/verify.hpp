#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kchar/rational.hpp"

namespace kchar {
namespace verify {

struct Failure {
    std::string where;
    std::string expected;
    std::string actual;
};

struct SuiteReport {
    std::string name;
    long long checked = 0;
    std::vector<Failure> failures;

    bool pass() const { return failures.empty(); }
};

// registered suite names, in execution order
std::vector<std::string> suite_names();

// runs one registered suite; throws std::invalid_argument for unknown names
SuiteReport run_suite(const std::string& name);

std::vector<SuiteReport> run_all();

// Dimension bookkeeping audit over the Clebsch-Gordan table, with an
// optional injected coefficient mutation so the harness can prove it
// notices broken tables.
struct FaultSpec {
    long long p = 0;
    long long q = 0;
    long long exponent = 0;
    Rational delta;
};

SuiteReport cg_dimension_audit(long long limit, const std::optional<FaultSpec>& fault = {});

}  // namespace verify
}  // namespace kchar
