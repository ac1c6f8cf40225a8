#include "nicegen/matrix.hpp"

#include <algorithm>
#include <utility>

namespace nicegen {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    if (rows_ == 0) throw contract_violation("matrix needs at least one row");
    cols_ = rows.begin()->size();
    if (cols_ == 0) throw contract_violation("matrix needs at least one column");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw contract_violation("ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::column(const std::vector<Rational>& entries) {
    ExactMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

bool ExactMatrix::is_integer() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rational& r) { return r.is_integer(); });
}

bool ExactMatrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < std::min(i, cols_); ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool ExactMatrix::is_lower_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Rational> ExactMatrix::row_values(std::size_t i) const {
    std::vector<Rational> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

std::vector<Rational> ExactMatrix::col_values(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

ExactMatrix ExactMatrix::col(std::size_t j) const { return column(col_values(j)); }

ExactMatrix ExactMatrix::slice_cols(std::size_t c0, std::size_t c1) const {
    if (c0 >= c1 || c1 > cols_) throw contract_violation("bad column slice");
    ExactMatrix m(rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = c0; j < c1; ++j) m(i, j - c0) = (*this)(i, j);
    return m;
}

ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows()) throw contract_violation("hconcat row mismatch");
    ExactMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

void apply_row_op(ExactMatrix& m, const RowOp& op) {
    switch (op.kind) {
        case RowOp::Kind::swap:
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(op.i, k), m(op.j, k));
            break;
        case RowOp::Kind::scale:
            if (op.c.is_zero()) throw contract_violation("scale step with c = 0");
            for (std::size_t k = 0; k < m.cols(); ++k) m(op.i, k) *= op.c;
            break;
        case RowOp::Kind::add_multiple:
            for (std::size_t k = 0; k < m.cols(); ++k) m(op.i, k) += op.c * m(op.j, k);
            break;
    }
}

ExactMatrix replay(ExactMatrix initial, const RowOpTrace& trace) {
    for (const RowOp& op : trace.steps) apply_row_op(initial, op);
    return initial;
}

std::vector<ExactMatrix> replay_snapshots(ExactMatrix initial, const RowOpTrace& trace) {
    std::vector<ExactMatrix> states;
    states.reserve(trace.steps.size());
    for (const RowOp& op : trace.steps) {
        apply_row_op(initial, op);
        states.push_back(initial);
    }
    return states;
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw contract_violation("matmul dimension mismatch");
    ExactMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ExactMatrix outer_product(const ExactMatrix& u, const ExactMatrix& v) {
    if (u.cols() != 1 || v.cols() != 1)
        throw contract_violation("outer_product expects column vectors");
    ExactMatrix m(u.rows(), v.rows());
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < v.rows(); ++j) m(i, j) = u(i, 0) * v(j, 0);
    return m;
}

// Gauss-Jordan with the fixed pivot rule: first nonzero entry in the current
// column, scanning top-down. Exact arithmetic needs no magnitude pivoting and
// deterministic traces require a fixed rule.
RrefResult rref_with_trace(const ExactMatrix& a) {
    RrefResult res{a, {}, {}};
    ExactMatrix& m = res.rref;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row) {
            RowOp op = RowOp::swap(pivot_row, sel);
            apply_row_op(m, op);
            res.trace.steps.push_back(op);
        }
        if (m(pivot_row, col) != Rational(1)) {
            RowOp op = RowOp::scale(pivot_row, m(pivot_row, col).reciprocal());
            apply_row_op(m, op);
            res.trace.steps.push_back(op);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m(r, col).is_zero()) continue;
            RowOp op = RowOp::add_multiple(r, pivot_row, -m(r, col));
            apply_row_op(m, op);
            res.trace.steps.push_back(op);
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return res;
}

Rational determinant(const ExactMatrix& a) {
    if (!a.is_square()) throw contract_violation("determinant of a non-square matrix");
    ExactMatrix m = a;
    const std::size_t n = m.rows();
    bool negate = false;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col).is_zero()) ++sel;
        if (sel == n) return Rational(0);
        if (sel != col) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(sel, k), m(col, k));
            negate = !negate;
        }
        const Rational pivot = m(col, col);
        det *= pivot;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const Rational f = m(r, col) / pivot;
            for (std::size_t k = col; k < n; ++k) m(r, k) -= f * m(col, k);
        }
    }
    return negate ? -det : det;
}

std::size_t rank(const ExactMatrix& a) { return rref_with_trace(a).pivot_cols.size(); }

namespace {

// Clear denominators, divide by the gcd of entries, make the first nonzero
// entry positive.
ExactMatrix canonical_integer_vector(const ExactMatrix& v) {
    std::vector<Rational> vals = v.col_values(0);
    Int m = lcd(vals);
    Int g = 0;
    for (Rational& x : vals) {
        x *= Rational(m);
        g = boost::multiprecision::gcd(g, x.num() < 0 ? Int(-x.num()) : x.num());
    }
    if (g > 1)
        for (Rational& x : vals) x /= Rational(g);
    for (const Rational& x : vals) {
        if (x.is_zero()) continue;
        if (x.is_negative())
            for (Rational& y : vals) y = -y;
        break;
    }
    return ExactMatrix::column(vals);
}

}  // namespace

std::vector<ExactMatrix> left_nullspace_basis(const ExactMatrix& a) {
    const ExactMatrix at = a.transpose();
    RrefResult red = rref_with_trace(at);
    std::vector<bool> is_pivot(at.cols(), false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

    std::vector<ExactMatrix> basis;
    for (std::size_t f = 0; f < at.cols(); ++f) {
        if (is_pivot[f]) continue;
        ExactMatrix y(at.cols(), 1);
        y(f, 0) = Rational(1);
        for (std::size_t p = 0; p < red.pivot_cols.size(); ++p)
            y(red.pivot_cols[p], 0) = -red.rref(p, f);
        basis.push_back(canonical_integer_vector(y));
    }
    return basis;
}

InverseResult inverse_via_row_reduction(const ExactMatrix& a) {
    if (!a.is_square()) throw contract_violation("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RrefResult red = rref_with_trace(hconcat(a, ExactMatrix::identity(n)));
    for (std::size_t i = 0; i < n; ++i)
        if (i >= red.pivot_cols.size() || red.pivot_cols[i] != i)
            throw not_invertible("matrix is singular: pivot missing in column " +
                                 std::to_string(i));
    return {red.rref.slice_cols(n, 2 * n), std::move(red.trace)};
}

IntegerScaleResult integer_scale(const ExactMatrix& a) {
    Int c = lcd(a.entries());
    ExactMatrix scaled(a.rows(), a.cols());
    const Rational factor{c};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) scaled(i, j) = a(i, j) * factor;
    return {std::move(c), std::move(scaled)};
}

}  // namespace nicegen
