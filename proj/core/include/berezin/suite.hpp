#ifndef BEREZIN_SUITE_HPP
#define BEREZIN_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace berezin {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // deterministic (no timings, no addresses)
    double seconds = 0.; // measured; enforced against each criterion's budget
                         // internally, never rendered into reports
};

// Runs the full identity-check suite (13 criteria) with seeds derived from
// `seed`. Every check is exact; a criterion with a stated runtime budget
// also fails when the budget is exceeded.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

// "  3 PASS <title> -- <detail>" lines plus a summary line; byte-identical
// across runs with the same seed.
std::string render_acceptance(const std::vector<CriterionResult>& results);

} // namespace berezin

#endif
