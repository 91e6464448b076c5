#include "icotile/verify.hpp"

#include <doctest.h>

using namespace icotile;

namespace {

const CriterionResult& find(const std::vector<CriterionResult>& rs, const std::string& id) {
    for (const auto& r : rs)
        if (r.id == id) return r;
    throw std::runtime_error("missing " + id);
}

}  // namespace

TEST_CASE("corrupted sign table fails A1") {
    VerifyOptions opt;
    opt.extended = false;
    opt.weak_starts = 20;
    opt.corrupt_sign_table = true;
    const auto rs = run_acceptance(opt);
    CHECK(rs.size() == 8);
    CHECK(!find(rs, "A1").passed);
    CHECK(find(rs, "A2").passed);
    CHECK(!all_passed(rs));
    CHECK(format_results(rs).find("FAIL A1") != std::string::npos);
    const auto j = results_to_json(rs);
    CHECK(j.at("all_passed") == false);
}

TEST_CASE("default run reports every criterion") {
    VerifyOptions opt;
    opt.weak_starts = 20;
    const auto rs = run_acceptance(opt);
    REQUIRE(rs.size() == 12);
    for (std::size_t n = 0; n < rs.size(); ++n) CHECK(rs[n].id == "A" + std::to_string(n + 1));
    CHECK(find(rs, "A1").passed);
    CHECK(find(rs, "A7").passed);
    const std::string text = format_results(rs);
    std::size_t lines = 0;
    for (char c : text) lines += c == '\n' ? 1 : 0;
    CHECK(lines == 12);
}
