#pragma once

#include "liar/evolution.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace liar {

/// The sixteen cycle states of the 8-sentence preset and their embedded indices
/// in the 16^8-dimensional space, in cycle order.
extern const std::array<std::array<int, 8>, 16> kEightLiarTuples;
extern const std::array<std::uint64_t, 16> kEightLiarEmbedded;

struct VerifyOptions {
    int m_max = 8;
    PhaseBranch branch = PhaseBranch::Principal;
    bool corrupt_kappa_reference = false;  // negative control: must FAIL the pairing check
    double tolerance = 1e-10;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
};

/// Runs the invariant suite over every paradoxical configuration for m <= 4 and a
/// fixed deterministic sample for larger m. Throws Error{OutOfRange} unless 1 <= m_max <= 8.
VerifyReport run_verification(const VerifyOptions& options = {});

} // namespace liar
