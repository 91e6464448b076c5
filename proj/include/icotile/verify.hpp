#pragma once

// The acceptance checks A1..A12 as library functions, shared by the `verify`
// subcommand and the acceptance test binary.

#include "icotile/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace icotile {

struct CriterionResult {
    std::string id;    // "A1" .. "A12"
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    /// Fault injection: flips the sign of one sign-table entry before A1.
    bool corrupt_sign_table = false;
    /// A9..A12 in addition to A1..A8.
    bool extended = true;
    std::size_t weak_starts = 200;
};

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt = {});

/// One line per criterion: "PASS A1 sign/value table (0.01 s): ...".
std::string format_results(const std::vector<CriterionResult>& results);
io::json results_to_json(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace icotile
