#ifndef NICEGEN_BUNDLE_HPP
#define NICEGEN_BUNDLE_HPP

#include <string>
#include <variant>

#include "nicegen/generators.hpp"
#include "nicegen/qr.hpp"
#include "nicegen/systems.hpp"

namespace nicegen {

inline constexpr const char* kSchemaVersion = "nicegen/1";

enum class ProblemKind {
    lu_full,
    lu_deficient,
    unimodular_inverse,
    qr,
    system_unique,
    system_infinite,
    system_inconsistent,
};

const char* to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(const std::string& name);

struct LUProblem {
    LUPair pair;
    std::size_t rank;  // n for the full-rank kind
    std::vector<std::vector<std::int64_t>> dependence;  // empty when full rank

    friend bool operator==(const LUProblem&, const LUProblem&) = default;
};

struct InverseProblem {
    LUPair pair;
    ExactMatrix inverse;
    RowOpTrace trace;

    friend bool operator==(const InverseProblem&, const InverseProblem&) = default;
};

/// One generated problem with everything needed to re-render, re-verify and
/// regenerate it: (seed, config, version) reproduces the bundle exactly.
struct ProblemBundle {
    ProblemKind kind;
    std::variant<LUProblem, InverseProblem, QRTriple, LinearSystemProblem> payload;
    std::uint64_t seed = 0;
    GenConfig config;
    std::string version = kSchemaVersion;

    friend bool operator==(const ProblemBundle&, const ProblemBundle&) = default;
};

/// Runs the generator selected by `kind` with an rng seeded from config.seed.
ProblemBundle make_bundle(ProblemKind kind, const GenConfig& config);

}  // namespace nicegen

#endif
