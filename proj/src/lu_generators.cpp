#include "nicegen/generators.hpp"

#include <string>
#include <utility>

#include "nicegen/errors.hpp"

namespace nicegen {

namespace {

std::string describe(const GenConfig& c) {
    std::string s = "n=" + std::to_string(c.n) + " seed=" + std::to_string(c.seed) +
                    " max_coeff=" + std::to_string(c.max_coeff);
    if (c.rank) s += " rank=" + std::to_string(*c.rank);
    if (c.rational_mode) s += " rational";
    return s;
}

[[noreturn]] void fail(const char* generator, const GenConfig& c) {
    throw generation_failed(std::string(generator) + " exhausted retries (" + describe(c) + ")");
}

// Positive rational pivot p/q with p, q in [1, max_coeff]; q != 1 half the time.
Rational sample_rational_pivot(std::int64_t max_coeff, SplitMix64& rng) {
    Int p = rng.uniform_int(1, max_coeff);
    Int q = 1;
    if (max_coeff > 1 && rng.coin_flip()) q = rng.uniform_int(2, max_coeff);
    return Rational(std::move(p), std::move(q));
}

// Off-diagonal entry of a rational column: integer half the time, else a
// fraction with a small denominator.
Rational sample_rational_entry(std::int64_t max_coeff, SplitMix64& rng) {
    Int num = rng.uniform_int(-max_coeff, max_coeff);
    Int den = 1;
    if (max_coeff > 1 && rng.coin_flip()) den = rng.uniform_int(2, max_coeff);
    return Rational(std::move(num), std::move(den));
}

}  // namespace

void GenConfig::validate() const {
    if (n < 2) throw contract_violation("config: n must be at least 2");
    if (max_coeff < 1) throw contract_violation("config: max_coeff must be positive");
    if (max_retries < 1) throw contract_violation("config: max_retries must be positive");
    if (rank && (*rank < 1 || *rank > n))
        throw contract_violation("config: rank must satisfy 1 <= rank <= n");
    if (dependence) {
        if (dependence->size() != n - 1)
            throw contract_violation("config: dependence must have n-1 coefficients");
        bool any = false;
        for (std::int64_t c : *dependence) any = any || c != 0;
        if (!any) throw contract_violation("config: dependence must not be all zero");
    }
}

LUPair LUPair::from_factors(ExactMatrix L, ExactMatrix U) {
    if (!L.is_square() || !U.is_square() || L.rows() != U.rows())
        throw contract_violation("LU factors must be square and of equal size");
    if (!L.is_lower_triangular()) throw contract_violation("L is not lower triangular");
    if (!U.is_upper_triangular()) throw contract_violation("U is not upper triangular");
    ExactMatrix product = matmul(L, U);
    return {std::move(L), std::move(U), std::move(product)};
}

std::vector<Rational> constrain_row_to_multiples(const std::vector<Rational>& l_col,
                                                 std::int64_t max_coeff, SplitMix64& rng) {
    if (l_col.empty()) throw contract_violation("constrain_row_to_multiples: empty column");
    std::size_t diag = 0;
    while (diag < l_col.size() && l_col[diag].is_zero()) ++diag;
    if (diag == l_col.size())
        throw contract_violation("constrain_row_to_multiples: zero column");
    const Rational q{lcd(l_col)};
    std::vector<Rational> row(l_col.size());
    for (std::size_t j = diag; j < row.size(); ++j) {
        const std::int64_t m =
            j == diag ? rng.nonzero_int(max_coeff) : rng.uniform_int(-max_coeff, max_coeff);
        row[j] = q * Rational(m);
    }
    return row;
}

LUPair gen_full_rank(const GenConfig& config, SplitMix64& rng) {
    config.validate();
    if (config.rank && *config.rank != config.n)
        throw contract_violation("gen_full_rank: rank must be absent or equal to n");
    const std::size_t n = config.n;
    const std::int64_t B = config.max_coeff;

    for (unsigned attempt = 0; attempt < config.max_retries; ++attempt) {
        ExactMatrix L(n, n);
        ExactMatrix U(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            if (config.rational_mode) {
                L(k, k) = sample_rational_pivot(B, rng);
                for (std::size_t i = k + 1; i < n; ++i) L(i, k) = sample_rational_entry(B, rng);
            } else {
                L(k, k) = Rational(1);
                for (std::size_t i = k + 1; i < n; ++i) L(i, k) = Rational(rng.uniform_int(-B, B));
            }
            const std::vector<Rational> row = constrain_row_to_multiples(L.col_values(k), B, rng);
            for (std::size_t j = k; j < n; ++j) U(k, j) = row[j];
        }
        LUPair pair = LUPair::from_factors(std::move(L), std::move(U));
        if (pair.product.is_integer() && rank(pair.product) == n) return pair;
    }
    fail("gen_full_rank", config);
}

DeficientLU gen_rank_deficient(const GenConfig& config, SplitMix64& rng) {
    config.validate();
    if (!config.rank || *config.rank >= config.n)
        throw contract_violation("gen_rank_deficient: rank r < n is required");
    const std::size_t n = config.n;
    const std::size_t r = *config.rank;
    const std::int64_t B = config.max_coeff;
    if (config.dependence && r != n - 1)
        throw contract_violation("config: explicit dependence requires rank = n-1");

    for (unsigned attempt = 0; attempt < config.max_retries; ++attempt) {
        std::vector<std::vector<std::int64_t>> dependence;
        for (std::size_t j = r; j < n; ++j) {
            if (config.dependence) {
                dependence.push_back(*config.dependence);
            } else {
                std::vector<std::int64_t> combo(r);
                for (std::size_t i = 0; i < r; ++i) combo[i] = rng.nonzero_int(B);
                dependence.push_back(std::move(combo));
            }
        }

        ExactMatrix L = ExactMatrix::identity(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = k + 1; i < n; ++i) L(i, k) = Rational(rng.uniform_int(-B, B));

        ExactMatrix U(n, n);
        for (std::size_t j = 0; j < r; ++j) {
            U(j, j) = Rational(rng.nonzero_int(B));
            for (std::size_t i = 0; i < j; ++i) U(i, j) = Rational(rng.uniform_int(-B, B));
        }
        for (std::size_t j = r; j < n; ++j)
            for (std::size_t i = 0; i < r; ++i) {
                const Rational coeff{dependence[j - r][i]};
                for (std::size_t k = 0; k <= i; ++k) U(k, j) += coeff * U(k, i);
            }

        LUPair pair = LUPair::from_factors(std::move(L), std::move(U));
        if (pair.product.is_integer() && rank(pair.product) == r)
            return {std::move(pair), r, std::move(dependence)};
    }
    fail("gen_rank_deficient", config);
}

UnimodularResult gen_unimodular(const GenConfig& config, SplitMix64& rng) {
    config.validate();
    const std::size_t n = config.n;
    const std::int64_t B = config.max_coeff;

    for (unsigned attempt = 0; attempt < config.max_retries; ++attempt) {
        ExactMatrix L(n, n);
        ExactMatrix U(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const Rational u_ii = config.rational_mode ? sample_rational_pivot(B, rng)
                                                       : Rational(rng.coin_flip() ? 1 : -1);
            U(i, i) = u_ii;
            L(i, i) = u_ii.reciprocal();
            // Column i of L: integer multiples of l_ii. Row i of U: multiples
            // of num(u_ii), so every outer-product term stays integer.
            for (std::size_t k = i + 1; k < n; ++k)
                L(k, i) = Rational(rng.uniform_int(-B, B)) * L(i, i);
            const Rational row_unit{u_ii.num()};
            for (std::size_t j = i + 1; j < n; ++j)
                U(i, j) = Rational(rng.uniform_int(-B, B)) * row_unit;
        }
        LUPair pair = LUPair::from_factors(std::move(L), std::move(U));
        if (!pair.product.is_integer()) continue;
        const Rational det = determinant(pair.product);
        if (det != Rational(1) && det != Rational(-1)) continue;
        InverseResult inv = inverse_via_row_reduction(pair.product);
        if (!inv.inverse.is_integer()) continue;
        return {std::move(pair), std::move(inv.inverse), std::move(inv.trace)};
    }
    fail("gen_unimodular", config);
}

}  // namespace nicegen
