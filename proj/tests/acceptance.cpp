// Acceptance suite: one PASS/FAIL line per criterion A1..A12, nonzero exit on any failure.

#include "icotile/verify.hpp"

#include <iostream>

int main() {
    icotile::VerifyOptions opt;
    opt.extended = true;
    const auto results = icotile::run_acceptance(opt);
    std::cout << icotile::format_results(results);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.passed ? 0 : 1;
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
