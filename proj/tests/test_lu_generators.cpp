#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nicegen/generators.hpp"

using namespace nicegen;

namespace {

GenConfig config(std::size_t n, std::uint64_t seed) {
    GenConfig c;
    c.n = n;
    c.seed = seed;
    return c;
}

bool is_multiple_of(const Rational& value, const Int& q) {
    return value.is_integer() && value.num() % q == 0;
}

}  // namespace

TEST_CASE("config validation") {
    CHECK_THROWS_AS(config(1, 0).validate(), contract_violation);
    GenConfig bad_rank = config(3, 0);
    bad_rank.rank = 4;
    CHECK_THROWS_AS(bad_rank.validate(), contract_violation);
    GenConfig bad_dep = config(3, 0);
    bad_dep.dependence = std::vector<std::int64_t>{1};
    CHECK_THROWS_AS(bad_dep.validate(), contract_violation);
    GenConfig zero_dep = config(3, 0);
    zero_dep.dependence = std::vector<std::int64_t>{0, 0};
    CHECK_THROWS_AS(zero_dep.validate(), contract_violation);
}

TEST_CASE("from_factors reproduces the fixed matrices") {
    const LUPair full = LUPair::from_factors(
        ExactMatrix{{1, 0, 0}, {2, 1, 0}, {3, 4, 1}},
        ExactMatrix{{-1, 2, 3}, {0, 1, 4}, {0, 0, -1}});
    const ExactMatrix a_full{{-1, 2, 3}, {-2, 5, 10}, {-3, 10, 24}};
    CHECK(full.product == a_full);
    CHECK(rank(full.product) == 3);

    const LUPair deficient = LUPair::from_factors(
        ExactMatrix{{1, 0, 0}, {2, 1, 0}, {3, 4, 1}},
        ExactMatrix{{1, 2, 3}, {0, 1, 1}, {0, 0, 0}});
    const ExactMatrix a_def{{1, 2, 3}, {2, 5, 7}, {3, 10, 13}};
    CHECK(deficient.product == a_def);
    CHECK(rank(deficient.product) == 2);
    // Third column is the sum of the first two.
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(a_def(i, 2) == a_def(i, 0) + a_def(i, 1));

    // Rational l_21 = 5/2 still gives an integer product.
    const LUPair rational2x2 = LUPair::from_factors(
        ExactMatrix{{1, 0}, {Rational(5, 2), 1}}, ExactMatrix{{2, 4}, {0, 1}});
    CHECK(rational2x2.product.is_integer());

    CHECK_THROWS_AS(LUPair::from_factors(ExactMatrix{{1, 1}, {0, 1}},
                                         ExactMatrix{{1, 0}, {0, 1}}),
                    contract_violation);
}

TEST_CASE("constrain_row_to_multiples") {
    SplitMix64 rng(5);
    const std::vector<Rational> l_col{Rational(5, 9), Rational(3, 2)};
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<Rational> row = constrain_row_to_multiples(l_col, 5, rng);
        REQUIRE(row.size() == 2);
        CHECK(!row[0].is_zero());
        for (const Rational& e : row) CHECK(is_multiple_of(e, 18));
        CHECK(outer_product(ExactMatrix::column(l_col), ExactMatrix::column(row)).is_integer());
    }

    // Integer column: q = 1, any integers allowed, diagonal nonzero.
    const std::vector<Rational> int_col{Rational(0), Rational(3), Rational(-2)};
    const std::vector<Rational> row = constrain_row_to_multiples(int_col, 5, rng);
    CHECK(row[0].is_zero());  // aligned before the first nonzero entry
    CHECK(!row[1].is_zero());
    CHECK(row[1].is_integer());

    CHECK_THROWS_AS(constrain_row_to_multiples({}, 5, rng), contract_violation);
}

TEST_CASE("gen_full_rank produces integer full-rank matrices") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenConfig cfg = config(2 + seed % 4, seed);
        SplitMix64 rng(cfg.seed);
        const LUPair pair = gen_full_rank(cfg, rng);
        CHECK(pair.product.is_integer());
        CHECK(pair.product == matmul(pair.L, pair.U));
        CHECK(rank(pair.product) == cfg.n);
        CHECK(pair.L.is_lower_triangular());
        CHECK(pair.U.is_upper_triangular());
        for (std::size_t i = 0; i < cfg.n; ++i) {
            CHECK(!pair.L(i, i).is_zero());
            CHECK(!pair.U(i, i).is_zero());
        }
    }
}

TEST_CASE("gen_full_rank rational mode keeps the divisibility condition") {
    bool saw_rational_column = false;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenConfig cfg = config(3, seed);
        cfg.rational_mode = true;
        SplitMix64 rng(cfg.seed);
        const LUPair pair = gen_full_rank(cfg, rng);
        CHECK(pair.product.is_integer());
        CHECK(rank(pair.product) == cfg.n);
        for (std::size_t k = 0; k < cfg.n; ++k) {
            const std::vector<Rational> col = pair.L.col_values(k);
            const Int q = lcd(col);
            if (q == 1) continue;
            saw_rational_column = true;
            for (const Rational& e : pair.U.row_values(k)) CHECK(is_multiple_of(e, q));
        }
    }
    CHECK(saw_rational_column);
}

TEST_CASE("gen_rank_deficient hits the target rank and records the dependence") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 3 + seed % 2;
        GenConfig cfg = config(n, seed);
        cfg.rank = 1 + seed % (n - 1);
        SplitMix64 rng(cfg.seed);
        const DeficientLU result = gen_rank_deficient(cfg, rng);
        const ExactMatrix& a = result.pair.product;
        CHECK(a.is_integer());
        CHECK(rank(a) == *cfg.rank);
        REQUIRE(result.dependence.size() == n - *cfg.rank);

        // Each dependent column of the product is the recorded combination.
        for (std::size_t t = 0; t < result.dependence.size(); ++t) {
            const auto& combo = result.dependence[t];
            REQUIRE(combo.size() == *cfg.rank);
            for (std::size_t i = 0; i < n; ++i) {
                Rational expect(0);
                for (std::size_t k = 0; k < combo.size(); ++k)
                    expect += Rational(combo[k]) * a(i, k);
                CHECK(a(i, *cfg.rank + t) == expect);
            }
        }

        // The combination shows up verbatim in the rref's non-pivot columns.
        const RrefResult red = rref_with_trace(a);
        REQUIRE(red.pivot_cols.size() == *cfg.rank);
        for (std::size_t t = 0; t < result.dependence.size(); ++t)
            for (std::size_t i = 0; i < *cfg.rank; ++i)
                CHECK(red.rref(i, *cfg.rank + t) == Rational(result.dependence[t][i]));
    }
}

TEST_CASE("gen_rank_deficient honours an explicit dependence") {
    GenConfig cfg = config(3, 17);
    cfg.rank = 2;
    cfg.dependence = std::vector<std::int64_t>{1, 2};
    SplitMix64 rng(cfg.seed);
    const DeficientLU result = gen_rank_deficient(cfg, rng);
    REQUIRE(result.dependence.size() == 1);
    CHECK((result.dependence[0] == std::vector<std::int64_t>{1, 2}));
    const RrefResult red = rref_with_trace(result.pair.product);
    CHECK(red.rref(0, 2) == Rational(1));
    CHECK(red.rref(1, 2) == Rational(2));

    GenConfig missing_rank = config(3, 17);
    SplitMix64 rng2(17);
    CHECK_THROWS_AS(gen_rank_deficient(missing_rank, rng2), contract_violation);
}

TEST_CASE("rank-deficient fixture of the infinite-system example") {
    // Dependence (1, 2) with the fixed factors gives the reference matrix.
    const LUPair pair = LUPair::from_factors(
        ExactMatrix{{1, 0, 0}, {-1, 1, 0}, {2, 2, 1}},
        ExactMatrix{{2, 4, 10}, {0, 3, 6}, {0, 0, 0}});
    const ExactMatrix expected{{2, 4, 10}, {-2, -1, -4}, {4, 14, 32}};
    CHECK(pair.product == expected);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(pair.product(i, 2) ==
              Rational(1) * pair.product(i, 0) + Rational(2) * pair.product(i, 1));
}

TEST_CASE("gen_unimodular fixed-factor fixtures") {
    // Integer diagonal: the inverse comes out integer with det 1.
    const LUPair full = LUPair::from_factors(
        ExactMatrix{{1, 0, 0}, {2, 1, 0}, {3, 4, 1}},
        ExactMatrix{{-1, 2, 3}, {0, 1, 4}, {0, 0, -1}});
    const InverseResult inv = inverse_via_row_reduction(full.product);
    const ExactMatrix expected_inverse{{20, -18, 5}, {18, -15, 4}, {-5, 4, -1}};
    CHECK(inv.inverse == expected_inverse);

    // Rational pivot u22 = 1/2 compensated by l22 = 2, l32 = 4.
    const LUPair b = LUPair::from_factors(
        ExactMatrix{{1, 0, 0}, {2, 2, 0}, {3, 4, 1}},
        ExactMatrix{{-1, 2, 3}, {0, Rational(1, 2), 4}, {0, 0, -1}});
    const ExactMatrix expected_b{{-1, 2, 3}, {-2, 5, 14}, {-3, 8, 24}};
    CHECK(b.product == expected_b);
    CHECK(determinant(b.product) == Rational(1));
    CHECK(inverse_via_row_reduction(b.product).inverse.is_integer());
}

TEST_CASE("gen_unimodular output is unimodular with integer inverse") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenConfig cfg = config(2 + seed % 4, seed);
        cfg.rational_mode = (seed % 2) == 1;
        SplitMix64 rng(cfg.seed);
        const UnimodularResult result = gen_unimodular(cfg, rng);
        const ExactMatrix& a = result.pair.product;
        CHECK(a.is_integer());
        CHECK(a == matmul(result.pair.L, result.pair.U));
        const Rational det = determinant(a);
        CHECK((det == Rational(1) || det == Rational(-1)));
        CHECK(result.inverse.is_integer());
        CHECK(matmul(a, result.inverse) == ExactMatrix::identity(cfg.n));

        // Every pivot pair multiplies to one, so the worked reduction of
        // [A|I] never leaves the integers.
        const ExactMatrix initial = hconcat(a, ExactMatrix::identity(cfg.n));
        for (const ExactMatrix& state : replay_snapshots(initial, result.trace))
            CHECK(state.is_integer());
        for (const RowOp& op : result.trace.steps)
            if (op.kind == RowOp::Kind::scale)
                CHECK(op.c.is_integer());
    }
}

TEST_CASE("gen_unimodular exercises non-unit rational pivots") {
    // In rational mode pivots p/q with p != 1 appear; integrality of the
    // product is still guaranteed because row i of U carries multiples of p.
    bool saw_p_not_1 = false;
    for (std::uint64_t seed = 0; seed < 80 && !saw_p_not_1; ++seed) {
        GenConfig cfg = config(3, seed);
        cfg.rational_mode = true;
        SplitMix64 rng(cfg.seed);
        const UnimodularResult result = gen_unimodular(cfg, rng);
        for (std::size_t i = 0; i < 3; ++i) {
            const Rational& u_ii = result.pair.U(i, i);
            if (!u_ii.is_integer() && u_ii.num() != 1 && u_ii.num() != -1) saw_p_not_1 = true;
        }
        CHECK(result.pair.product.is_integer());
    }
    CHECK(saw_p_not_1);
}
