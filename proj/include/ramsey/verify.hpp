#ifndef RAMSEY_VERIFY_HPP
#define RAMSEY_VERIFY_HPP

#include <string>
#include <vector>

namespace ramsey {

struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    std::string details;  // deterministic: never includes timings
};

struct VerifyOptions {
    bool full = false;     // include the long exhaustive searches
    bool stretch = false;  // include the hours-long q = 15 sweep
    int threads = 1;
};

/// The built-in verification suite: witness arrowings, exact values by full
/// search, connected pack sweeps, the period-3 coloring property, the inequality term
/// table, and enumeration counts. Output is independent of thread count.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace ramsey

#endif
