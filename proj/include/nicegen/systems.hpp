#ifndef NICEGEN_SYSTEMS_HPP
#define NICEGEN_SYSTEMS_HPP

#include <optional>
#include <vector>

#include "nicegen/generators.hpp"
#include "nicegen/matrix.hpp"
#include "nicegen/rng.hpp"

namespace nicegen {

enum class SystemKind { unique, infinite, inconsistent };

/// Ax = b with integer data and a construction-controlled solution set.
/// The order of construction matters: A first, then x, then b from A and x.
/// There is deliberately no operation that solves for A given (x, b).
struct LinearSystemProblem {
    ExactMatrix A;                 // integer, n x n
    ExactMatrix b;                 // integer column
    SystemKind kind;
    ExactMatrix x;                 // chosen solution / combination coefficients
    // Column-combination coefficients, one vector per dependent column
    // (empty for unique systems; a single length n-1 vector by default).
    std::vector<std::vector<std::int64_t>> dependence;
    std::optional<ExactMatrix> y;  // left-nullspace perturbation (inconsistent only)
    ExactMatrix rref_augmented;    // rref of [A | b]
    RowOpTrace trace;              // the [A | b] reduction

    friend bool operator==(const LinearSystemProblem&, const LinearSystemProblem&) = default;
};

LinearSystemProblem gen_unique_system(const GenConfig& config, SplitMix64& rng);
LinearSystemProblem gen_infinite_system(const GenConfig& config, SplitMix64& rng);
LinearSystemProblem gen_inconsistent_system(const GenConfig& config, SplitMix64& rng);

}  // namespace nicegen

#endif
