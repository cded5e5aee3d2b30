#pragma once

// Machine verification driver: runs every library invariant and theorem
// check against one input graph and produces a deterministic report.

#include <string>
#include <vector>

#include "temperley/action.hpp"
#include "temperley/document.hpp"

namespace temperley {

inline constexpr const char* kToolVersion = "temperley 1.0.0";

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string id;
    CheckStatus status;
    std::string detail; // counts, or a counterexample payload on failure
};

struct VerificationReport {
    std::string graph_name;
    std::string digest;
    std::string tool;
    std::vector<CheckResult> checks;

    bool pass() const;
    int failed() const;
};

struct VerifyOptions {
    int exhaustion_bound = kOrientationExhaustionBound;
    // Full m^4 reference-independence sweep up to this many matchings;
    // larger instances fall back to a seeded sample of cells.
    int independence_full_limit = 80;
    uint64_t seed = 0x5eed;
};

VerificationReport verify_graph(const EmbeddedPlanarGraph& g, const VerifyOptions& options = {});

std::string report_text(const VerificationReport& report);
std::string report_json(const VerificationReport& report);

} // namespace temperley
