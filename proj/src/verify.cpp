#include "nicegen/verify.hpp"

#include <algorithm>

namespace nicegen {

namespace {

class Checker {
public:
    void check(std::string name, bool ok, std::string detail = "") {
        report_.checks.push_back({std::move(name), ok, std::move(detail)});
        report_.passed = report_.passed && ok;
    }

    VerificationReport take() { return std::move(report_); }

private:
    VerificationReport report_;
};

Rational dot(const ExactMatrix& u, const ExactMatrix& v) {
    Rational s(0);
    for (std::size_t i = 0; i < u.rows(); ++i) s += u(i, 0) * v(i, 0);
    return s;
}

// A trace from an untrusted bundle may carry an illegal step; that is a
// failed check, not an error.
bool trace_reaches(const ExactMatrix& initial, const RowOpTrace& trace,
                   const ExactMatrix& expected) {
    try {
        return replay(initial, trace) == expected;
    } catch (const contract_violation&) {
        return false;
    }
}

bool divides_all(const Int& q, const std::vector<Rational>& row) {
    return std::all_of(row.begin(), row.end(), [&](const Rational& x) {
        return x.is_integer() && x.num() % q == 0;
    });
}

// col_j == sum_i combo[i] * col_i, checked on the given matrix.
bool dependence_holds(const ExactMatrix& m, std::size_t j,
                      const std::vector<std::int64_t>& combo) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational s(0);
        for (std::size_t k = 0; k < combo.size(); ++k) s += Rational(combo[k]) * m(i, k);
        if (s != m(i, j)) return false;
    }
    return true;
}

void check_lu_shapes(Checker& c, const LUPair& pair) {
    c.check("L_lower_triangular", pair.L.is_lower_triangular());
    c.check("U_upper_triangular", pair.U.is_upper_triangular());
    c.check("product_equals_LU", pair.product == matmul(pair.L, pair.U),
            "stored product must equal the recomputed L*U");
    c.check("product_integer", pair.product.is_integer());
}

// Columns of L that carry denominators force the matching row of U to be
// divisible by the column's lcd.
void check_divisibility(Checker& c, const LUPair& pair) {
    bool ok = true;
    for (std::size_t k = 0; k < pair.L.cols(); ++k) {
        const std::vector<Rational> col = pair.L.col_values(k);
        if (std::all_of(col.begin(), col.end(),
                        [](const Rational& x) { return x.is_integer(); }))
            continue;
        ok = ok && divides_all(lcd(col), pair.U.row_values(k));
    }
    c.check("rational_column_divisibility", ok,
            "lcd of each non-integer column of L must divide the matching row of U");
}

void verify_lu(Checker& c, const LUProblem& p, bool full_rank) {
    check_lu_shapes(c, p.pair);
    c.check("rank_exact", rank(p.pair.product) == p.rank);
    if (full_rank) {
        bool diag_ok = true;
        for (std::size_t i = 0; i < p.pair.L.rows(); ++i)
            diag_ok = diag_ok && !p.pair.L(i, i).is_zero() && !p.pair.U(i, i).is_zero();
        c.check("diagonals_nonzero", diag_ok);
        check_divisibility(c, p.pair);
    } else {
        const std::size_t r = p.rank;
        bool deps_ok = p.dependence.size() == p.pair.product.cols() - r;
        for (std::size_t t = 0; deps_ok && t < p.dependence.size(); ++t)
            deps_ok = p.dependence[t].size() == r &&
                      dependence_holds(p.pair.product, r + t, p.dependence[t]) &&
                      dependence_holds(p.pair.U, r + t, p.dependence[t]);
        c.check("column_dependence", deps_ok,
                "each dependent column must be the recorded combination");

        const RrefResult red = rref_with_trace(p.pair.product);
        bool rref_ok = red.pivot_cols.size() == r &&
                       p.dependence.size() == p.pair.product.cols() - r;
        for (std::size_t i = 0; rref_ok && i < r; ++i) rref_ok = red.pivot_cols[i] == i;
        for (std::size_t t = 0; rref_ok && t < p.dependence.size(); ++t) {
            for (std::size_t i = 0; rref_ok && i < red.rref.rows(); ++i) {
                const Rational expected = i < r ? Rational(p.dependence[t][i]) : Rational(0);
                rref_ok = red.rref(i, r + t) == expected;
            }
        }
        c.check("rref_shows_dependence", rref_ok,
                "non-pivot rref columns must display the combination coefficients");
    }
}

void verify_inverse(Checker& c, const InverseProblem& p) {
    check_lu_shapes(c, p.pair);
    const ExactMatrix& a = p.pair.product;
    const std::size_t n = a.rows();
    const Rational det = determinant(a);
    c.check("determinant_unimodular", det == Rational(1) || det == Rational(-1),
            "det(A) = " + det.to_string());
    c.check("inverse_integer", p.inverse.is_integer());
    const ExactMatrix identity = ExactMatrix::identity(n);
    c.check("inverse_product",
            matmul(a, p.inverse) == identity && matmul(p.inverse, a) == identity);

    bool recomputed_ok = false;
    try {
        recomputed_ok = inverse_via_row_reduction(a).inverse == p.inverse;
    } catch (const not_invertible&) {
    }
    c.check("inverse_recomputed", recomputed_ok);

    const ExactMatrix initial = hconcat(a, identity);
    const bool replays = trace_reaches(initial, p.trace, hconcat(identity, p.inverse));
    c.check("trace_replays", replays);

    // "No fractions" in the worked reduction: whenever every pivot was +-1
    // (equivalently every scale step has c = +-1), all intermediate states of
    // [A|I] stay integer.
    const bool unit_pivots =
        std::all_of(p.trace.steps.begin(), p.trace.steps.end(), [](const RowOp& op) {
            return op.kind != RowOp::Kind::scale || op.c == Rational(1) || op.c == Rational(-1);
        });
    if (replays && unit_pivots) {
        const std::vector<ExactMatrix> states = replay_snapshots(initial, p.trace);
        c.check("integer_snapshots",
                std::all_of(states.begin(), states.end(),
                            [](const ExactMatrix& m) { return m.is_integer(); }),
                "reduction with unit pivots must stay integer");
    }
}

void verify_qr(Checker& c, const QRTriple& t) {
    const std::size_t n = t.A.rows();
    const ExactMatrix identity = ExactMatrix::identity(n);
    c.check("Q_orthogonal", matmul(t.Q.transpose(), t.Q) == identity);
    c.check("Q_symmetric", t.Q == t.Q.transpose());

    bool q_from_v = false;
    try {
        q_from_v = householder_from_vector(t.v) == t.Q && t.v.is_integer();
    } catch (const contract_violation&) {
    }
    c.check("Q_from_v", q_from_v, "Q must be the reflection of the stored integer v");

    c.check("R_upper_triangular", t.R.is_upper_triangular());
    c.check("R_recomputed", t.R == matmul(t.Q.transpose(), t.A));
    c.check("QR_equals_A", matmul(t.Q, t.R) == t.A);
    c.check("A_integer", t.A.is_integer());

    bool l_unit = t.L.is_lower_triangular();
    for (std::size_t i = 0; l_unit && i < n; ++i) l_unit = t.L(i, i) == Rational(1);
    c.check("L_unit_lower_triangular", l_unit);
    c.check("U_integer_upper_triangular", t.U.is_upper_triangular() && t.U.is_integer());

    const ExactMatrix lu = matmul(t.L, t.U);
    bool scale_ok = t.c > 0;
    if (scale_ok) {
        const Rational factor{t.c};
        ExactMatrix scaled = lu;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= factor;
        scale_ok = scaled == t.A;
    }
    c.check("A_equals_cLU", scale_ok);
    c.check("scale_minimal", integer_scale(lu).scale == t.c);
}

void verify_system(Checker& c, const LinearSystemProblem& p) {
    const std::size_t n = p.A.rows();
    c.check("A_integer", p.A.is_integer());
    c.check("b_integer", p.b.is_integer());
    c.check("x_integer", p.x.is_integer());

    const RrefResult red = rref_with_trace(hconcat(p.A, p.b));
    const bool augmented_pivot =
        !red.pivot_cols.empty() && red.pivot_cols.back() == n;
    const std::size_t coeff_rank = red.pivot_cols.size() - (augmented_pivot ? 1 : 0);

    c.check("stored_rref_matches", p.rref_augmented == red.rref,
            "stored rref of [A|b] must equal the recomputed one");
    c.check("trace_replays", trace_reaches(hconcat(p.A, p.b), p.trace, p.rref_augmented));

    // b must be the recorded combination of the columns (plus y when the
    // system is deliberately inconsistent).
    ExactMatrix expected_b = matmul(p.A, p.x);
    if (p.kind == SystemKind::inconsistent && p.y)
        for (std::size_t i = 0; i < n; ++i) expected_b(i, 0) += (*p.y)(i, 0);
    c.check("b_construction", expected_b == p.b);

    switch (p.kind) {
        case SystemKind::unique: {
            c.check("classification_unique", !augmented_pivot && coeff_rank == n);
            c.check("rref_recovers_x", !augmented_pivot && red.rref.slice_cols(n, n + 1) == p.x);
            break;
        }
        case SystemKind::infinite: {
            c.check("classification_infinite", !augmented_pivot && coeff_rank < n);
            const std::size_t r = n - p.dependence.size();
            bool deps_ok = !p.dependence.empty() && coeff_rank == r;
            for (std::size_t t = 0; deps_ok && t < p.dependence.size(); ++t) {
                deps_ok = p.dependence[t].size() == r &&
                          dependence_holds(p.A, r + t, p.dependence[t]);
                for (std::size_t i = 0; deps_ok && i < n; ++i) {
                    const Rational expected = i < r ? Rational(p.dependence[t][i]) : Rational(0);
                    deps_ok = red.rref(i, r + t) == expected;
                }
            }
            c.check("dependence_in_rref", deps_ok,
                    "chosen column dependence must appear in the rref of [A|b]");
            break;
        }
        case SystemKind::inconsistent: {
            c.check("classification_inconsistent", augmented_pivot);
            bool y_ok = p.y.has_value() && !p.y->is_zero() && p.y->is_integer() &&
                        matmul(p.A.transpose(), *p.y).is_zero();
            c.check("y_in_left_nullspace", y_ok, "A^T y must vanish for a nonzero integer y");
            c.check("y_detects_inconsistency", y_ok && !dot(*p.y, p.b).is_zero(),
                    "y^T b must be nonzero exactly because b was pushed out of C(A)");
            break;
        }
    }
}

void collect(const ExactMatrix& m, NicenessMetrics& metrics) {
    for (const Rational& e : m.entries()) {
        if (!e.is_integer()) ++metrics.non_integer_count;
        if (e.abs() > metrics.max_abs_entry) metrics.max_abs_entry = e.abs();
    }
}

void collect_trace(const ExactMatrix& initial, const RowOpTrace& trace,
                   NicenessMetrics& metrics) {
    try {
        for (const ExactMatrix& state : replay_snapshots(initial, trace))
            if (!state.is_integer()) ++metrics.trace_fraction_steps;
    } catch (const contract_violation&) {
        // unreplayable trace contributes nothing
    }
}

}  // namespace

const CheckResult* VerificationReport::find(const std::string& name) const {
    for (const CheckResult& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

VerificationReport verify_bundle(const ProblemBundle& bundle) {
    Checker c;
    switch (bundle.kind) {
        case ProblemKind::lu_full:
            verify_lu(c, std::get<LUProblem>(bundle.payload), /*full_rank=*/true);
            break;
        case ProblemKind::lu_deficient:
            verify_lu(c, std::get<LUProblem>(bundle.payload), /*full_rank=*/false);
            break;
        case ProblemKind::unimodular_inverse:
            verify_inverse(c, std::get<InverseProblem>(bundle.payload));
            break;
        case ProblemKind::qr:
            verify_qr(c, std::get<QRTriple>(bundle.payload));
            break;
        case ProblemKind::system_unique:
        case ProblemKind::system_infinite:
        case ProblemKind::system_inconsistent:
            verify_system(c, std::get<LinearSystemProblem>(bundle.payload));
            break;
    }
    return c.take();
}

NicenessMetrics niceness_metrics(const ProblemBundle& bundle) {
    NicenessMetrics m;
    if (const auto* lu = std::get_if<LUProblem>(&bundle.payload)) {
        collect(lu->pair.L, m);
        collect(lu->pair.U, m);
        collect(lu->pair.product, m);
    } else if (const auto* inv = std::get_if<InverseProblem>(&bundle.payload)) {
        collect(inv->pair.L, m);
        collect(inv->pair.U, m);
        collect(inv->pair.product, m);
        collect(inv->inverse, m);
        const std::size_t n = inv->pair.product.rows();
        collect_trace(hconcat(inv->pair.product, ExactMatrix::identity(n)), inv->trace, m);
    } else if (const auto* qr = std::get_if<QRTriple>(&bundle.payload)) {
        collect(qr->A, m);
        collect(qr->Q, m);
        collect(qr->R, m);
        collect(qr->v, m);
    } else if (const auto* sys = std::get_if<LinearSystemProblem>(&bundle.payload)) {
        collect(sys->A, m);
        collect(sys->b, m);
        collect(sys->x, m);
        collect(sys->rref_augmented, m);
        collect_trace(hconcat(sys->A, sys->b), sys->trace, m);
    }
    return m;
}

}  // namespace nicegen
