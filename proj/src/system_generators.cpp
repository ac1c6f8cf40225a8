#include "nicegen/systems.hpp"

#include <utility>

#include "nicegen/errors.hpp"

namespace nicegen {

namespace {

ExactMatrix sample_solution(std::size_t n, std::int64_t max_coeff, SplitMix64& rng) {
    ExactMatrix x(n, 1);
    for (std::size_t i = 0; i < n; ++i) x(i, 0) = Rational(rng.uniform_int(-max_coeff, max_coeff));
    return x;
}

// Rank defaults to n-1 (one dependent column) for the non-unique kinds.
GenConfig deficient_config(GenConfig config) {
    if (!config.rank) config.rank = config.n - 1;
    return config;
}

}  // namespace

LinearSystemProblem gen_unique_system(const GenConfig& config, SplitMix64& rng) {
    config.validate();
    LUPair pair = gen_full_rank(config, rng);
    ExactMatrix x = sample_solution(config.n, config.max_coeff, rng);
    ExactMatrix b = matmul(pair.product, x);  // b = sum_j x_j * v_j
    RrefResult red = rref_with_trace(hconcat(pair.product, b));
    return {std::move(pair.product), std::move(b), SystemKind::unique,
            std::move(x),            {},           std::nullopt,
            std::move(red.rref),     std::move(red.trace)};
}

LinearSystemProblem gen_infinite_system(const GenConfig& config, SplitMix64& rng) {
    const GenConfig cfg = deficient_config(config);
    cfg.validate();
    DeficientLU deficient = gen_rank_deficient(cfg, rng);
    ExactMatrix x = sample_solution(cfg.n, cfg.max_coeff, rng);
    ExactMatrix b = matmul(deficient.pair.product, x);
    RrefResult red = rref_with_trace(hconcat(deficient.pair.product, b));
    return {std::move(deficient.pair.product),
            std::move(b),
            SystemKind::infinite,
            std::move(x),
            std::move(deficient.dependence),
            std::nullopt,
            std::move(red.rref),
            std::move(red.trace)};
}

LinearSystemProblem gen_inconsistent_system(const GenConfig& config, SplitMix64& rng) {
    const GenConfig cfg = deficient_config(config);
    cfg.validate();
    DeficientLU deficient = gen_rank_deficient(cfg, rng);
    const std::vector<ExactMatrix> nullspace = left_nullspace_basis(deficient.pair.product);
    if (nullspace.empty())
        throw generation_failed("gen_inconsistent_system: empty left nullspace");
    ExactMatrix y = nullspace.front();
    ExactMatrix x = sample_solution(cfg.n, cfg.max_coeff, rng);
    ExactMatrix b = matmul(deficient.pair.product, x);
    for (std::size_t i = 0; i < cfg.n; ++i) b(i, 0) += y(i, 0);  // push b out of C(A)
    RrefResult red = rref_with_trace(hconcat(deficient.pair.product, b));
    return {std::move(deficient.pair.product),
            std::move(b),
            SystemKind::inconsistent,
            std::move(x),
            std::move(deficient.dependence),
            std::move(y),
            std::move(red.rref),
            std::move(red.trace)};
}

}  // namespace nicegen
