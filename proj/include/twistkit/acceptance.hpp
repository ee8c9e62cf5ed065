#ifndef TWISTKIT_ACCEPTANCE_HPP
#define TWISTKIT_ACCEPTANCE_HPP

// End-to-end verification suite: reproduces the published point listings,
// scans, bound chains and constant audits, one criterion at a time.

#include <string>
#include <vector>

namespace twistkit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
};

struct VerifyOptions {
    // quick mode shrinks the D-sweeps for a fast smoke signal; the full run
    // is the actual gate.
    bool quick = false;
    int jobs = 0;  // 0 = hardware parallelism
};

// Runs criterion `id` (1..9).
CriterionResult run_criterion(int id, const VerifyOptions& opt = {});

// Runs all criteria in order.
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opt = {});

}  // namespace twistkit

#endif
