#ifndef NICEGEN_GENERATORS_HPP
#define NICEGEN_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "nicegen/matrix.hpp"
#include "nicegen/rng.hpp"

namespace nicegen {

/// Knobs shared by every generator. Validation happens before any sampling.
struct GenConfig {
    std::size_t n = 3;
    std::uint64_t seed = 0;
    std::int64_t max_coeff = 5;                 // bound on sampled integers
    std::optional<std::size_t> rank;            // target rank, r <= n
    bool rational_mode = false;                 // allow rational pivots/columns
    std::optional<std::vector<std::int64_t>> dependence;  // length n-1, only for r = n-1
    unsigned max_retries = 64;

    void validate() const;

    friend bool operator==(const GenConfig&, const GenConfig&) = default;
};

/// A = L * U with the factors retained as construction provenance.
struct LUPair {
    ExactMatrix L;        // lower triangular
    ExactMatrix U;        // upper triangular
    ExactMatrix product;  // matmul(L, U), computed once at construction

    static LUPair from_factors(ExactMatrix L, ExactMatrix U);

    friend bool operator==(const LUPair&, const LUPair&) = default;
};

struct DeficientLU {
    LUPair pair;
    std::size_t rank = 0;
    // One coefficient vector per dependent column j in [rank, n), each of
    // length rank: col_j = sum_i dep[i] * col_i.
    std::vector<std::vector<std::int64_t>> dependence;

    friend bool operator==(const DeficientLU&, const DeficientLU&) = default;
};

struct UnimodularResult {
    LUPair pair;
    ExactMatrix inverse;
    RowOpTrace trace;     // the [A|I] -> [I|A^-1] reduction

    friend bool operator==(const UnimodularResult&, const UnimodularResult&) = default;
};

/// Row of integer multiples of q = lcd(l_col), aligned so that entries before
/// the first nonzero of l_col are zero and the entry at that index is nonzero.
/// outer_product(l_col, row) is then an integer matrix.
std::vector<Rational> constrain_row_to_multiples(const std::vector<Rational>& l_col,
                                                 std::int64_t max_coeff, SplitMix64& rng);

LUPair gen_full_rank(const GenConfig& config, SplitMix64& rng);
DeficientLU gen_rank_deficient(const GenConfig& config, SplitMix64& rng);
UnimodularResult gen_unimodular(const GenConfig& config, SplitMix64& rng);

}  // namespace nicegen

#endif
