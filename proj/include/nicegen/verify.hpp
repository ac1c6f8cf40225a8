#ifndef NICEGEN_VERIFY_HPP
#define NICEGEN_VERIFY_HPP

#include <string>
#include <vector>

#include "nicegen/bundle.hpp"

namespace nicegen {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool passed = true;  // conjunction of the checks

    const CheckResult* find(const std::string& name) const;
};

/// Re-verifies a bundle against the properties its kind claims. Stored
/// derived fields (product, inverse, rref, R, ...) are recomputed from the
/// sources and cross-checked, so a corrupted bundle cannot self-certify.
/// Failures are report entries, never exceptions.
VerificationReport verify_bundle(const ProblemBundle& bundle);

/// Arithmetic-friction measurements over the displayed matrices and the
/// worked-solution trace.
struct NicenessMetrics {
    Rational max_abs_entry;
    std::size_t non_integer_count = 0;     // non-integer entries across displays
    std::size_t trace_fraction_steps = 0;  // steps whose state shows a fraction
};

NicenessMetrics niceness_metrics(const ProblemBundle& bundle);

}  // namespace nicegen

#endif
