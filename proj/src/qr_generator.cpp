#include "nicegen/qr.hpp"

#include <utility>

#include "nicegen/errors.hpp"

namespace nicegen {

ExactMatrix householder_from_vector(const ExactMatrix& v) {
    if (v.cols() != 1) throw contract_violation("householder vector must be a column");
    Rational norm_sq(0);
    for (std::size_t i = 0; i < v.rows(); ++i) norm_sq += v(i, 0) * v(i, 0);
    if (norm_sq.is_zero()) throw contract_violation("householder vector must be nonzero");

    const std::size_t n = v.rows();
    ExactMatrix q = ExactMatrix::identity(n);
    const Rational factor = Rational(2) / norm_sq;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) -= factor * v(i, 0) * v(j, 0);
    return q;
}

ExactMatrix solve_lower_parameters(const ExactMatrix& Q, const ExactMatrix& U) {
    if (!Q.is_square() || !U.is_square() || Q.rows() != U.rows())
        throw contract_violation("Q and U must be square and of equal size");
    if (!U.is_upper_triangular()) throw contract_violation("U is not upper triangular");
    const std::size_t n = U.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (U(i, i).is_zero()) throw contract_violation("U has a zero diagonal entry");

    // Unknowns are the strictly-lower entries of L, ordered row by row; the
    // equations are r_ab = 0 for a > b with
    //   r_ab = sum_k Q(k,a) * U(k,b) + sum_{k>j} Q(k,a) * U(j,b) * l_kj.
    const std::size_t m = n * (n - 1) / 2;
    const auto unknown_index = [](std::size_t k, std::size_t j) { return k * (k - 1) / 2 + j; };

    ExactMatrix system(m == 0 ? 1 : m, m == 0 ? 1 : m + 1);
    if (m > 0) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < a; ++b) {
                const std::size_t eq = unknown_index(a, b);
                Rational rhs(0);
                for (std::size_t k = 0; k < n; ++k) rhs -= Q(k, a) * U(k, b);
                system(eq, m) = rhs;
                for (std::size_t k = 1; k < n; ++k)
                    for (std::size_t j = 0; j < k; ++j)
                        system(eq, unknown_index(k, j)) = Q(k, a) * U(j, b);
            }
        }
    }

    ExactMatrix L = ExactMatrix::identity(n);
    if (m == 0) return L;

    const RrefResult red = rref_with_trace(system);
    for (std::size_t c : red.pivot_cols)
        if (c == m) throw no_solution("triangularity constraints are inconsistent");
    if (red.pivot_cols.size() < m)
        throw no_solution("triangularity constraints are underdetermined");

    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t j = 0; j < k; ++j) L(k, j) = red.rref(unknown_index(k, j), m);
    return L;
}

QRTriple gen_qr(const GenConfig& config, SplitMix64& rng) {
    config.validate();
    const std::size_t n = config.n;
    const std::int64_t B = config.max_coeff;

    ExactMatrix U(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        U(i, i) = Rational(rng.nonzero_int(B));
        for (std::size_t j = i + 1; j < n; ++j) U(i, j) = Rational(rng.uniform_int(-B, B));
    }

    for (unsigned attempt = 0; attempt < config.max_retries; ++attempt) {
        // Integer reflection vector, gcd-reduced: Q depends only on the
        // direction of v. ||v||^2 = 2 needs a pivoted factorization, so
        // those vectors are rejected up front.
        ExactMatrix v(n, 1);
        Int g = 0;
        Int norm_sq = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Int e = rng.uniform_int(-B, B);
            g = boost::multiprecision::gcd(g, e < 0 ? Int(-e) : e);
            v(i, 0) = Rational(std::move(e));
        }
        if (g == 0) continue;
        if (g > 1)
            for (std::size_t i = 0; i < n; ++i) v(i, 0) /= Rational(g);
        for (std::size_t i = 0; i < n; ++i) norm_sq += v(i, 0).num() * v(i, 0).num();
        if (norm_sq == 2) continue;

        const ExactMatrix Q = householder_from_vector(v);
        ExactMatrix L;
        try {
            L = solve_lower_parameters(Q, U);
        } catch (const no_solution&) {
            continue;  // degenerate pivot in Q; resample v
        }

        IntegerScaleResult scl = integer_scale(matmul(L, U));
        ExactMatrix A = std::move(scl.scaled);
        ExactMatrix R = matmul(Q.transpose(), A);
        if (!R.is_upper_triangular() || !A.is_integer() || matmul(Q, R) != A) continue;
        return {std::move(A), Q, std::move(R), std::move(v), std::move(scl.scale),
                std::move(L), std::move(U)};
    }

    throw generation_failed("gen_qr exhausted retries (n=" + std::to_string(n) +
                            " seed=" + std::to_string(config.seed) + ")");
}

}  // namespace nicegen
