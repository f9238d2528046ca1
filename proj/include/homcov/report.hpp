#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace homcov {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the full acceptance table (ten criteria: compositions, optimizer
/// lower-bound consistency, bound reproduction, illumination counts, and
/// the verifier soundness fuzz). One line per criterion is written to
/// `progress` as results arrive when it is non-null.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream* progress);

}  // namespace homcov
