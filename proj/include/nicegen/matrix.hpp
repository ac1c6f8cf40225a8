#ifndef NICEGEN_MATRIX_HPP
#define NICEGEN_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "nicegen/rational.hpp"

namespace nicegen {

/// Dense row-major matrix of exact rationals. Column vectors are n x 1
/// matrices; there is no separate vector type.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw contract_violation("matrix dimensions must be positive");
    }
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix column(const std::vector<Rational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return data_; }

    bool is_square() const { return rows_ == cols_; }
    bool is_integer() const;
    bool is_upper_triangular() const;   // strictly-lower entries all zero
    bool is_lower_triangular() const;   // strictly-upper entries all zero
    bool is_zero() const;

    ExactMatrix transpose() const;
    std::vector<Rational> row_values(std::size_t i) const;
    std::vector<Rational> col_values(std::size_t j) const;
    ExactMatrix col(std::size_t j) const;

    /// Columns [c0, c1) as a new matrix.
    ExactMatrix slice_cols(std::size_t c0, std::size_t c1) const;

    friend ExactMatrix hconcat(const ExactMatrix& a, const ExactMatrix& b);

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// One elementary row operation.
struct RowOp {
    enum class Kind { swap, scale, add_multiple };
    Kind kind;
    std::size_t i = 0;   // swap: first row; scale/add_multiple: target row
    std::size_t j = 0;   // swap: second row; add_multiple: source row
    Rational c;          // scale factor (nonzero) or multiple added

    static RowOp swap(std::size_t i, std::size_t j) { return {Kind::swap, i, j, Rational(0)}; }
    static RowOp scale(std::size_t i, Rational c) { return {Kind::scale, i, 0, std::move(c)}; }
    static RowOp add_multiple(std::size_t target, std::size_t source, Rational c) {
        return {Kind::add_multiple, target, source, std::move(c)};
    }

    friend bool operator==(const RowOp& a, const RowOp& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j && a.c == b.c;
    }
};

/// Ordered list of elementary operations. Replaying the steps from the
/// initial matrix reproduces the final matrix exactly; per-step snapshots are
/// regenerated on demand by replaying rather than stored.
struct RowOpTrace {
    std::vector<RowOp> steps;

    friend bool operator==(const RowOpTrace& a, const RowOpTrace& b) {
        return a.steps == b.steps;
    }
};

void apply_row_op(ExactMatrix& m, const RowOp& op);
ExactMatrix replay(ExactMatrix initial, const RowOpTrace& trace);
/// States after each step (length == steps.size()); initial state excluded.
std::vector<ExactMatrix> replay_snapshots(ExactMatrix initial, const RowOpTrace& trace);

struct RrefResult {
    ExactMatrix rref;
    RowOpTrace trace;
    std::vector<std::size_t> pivot_cols;
};

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix outer_product(const ExactMatrix& u, const ExactMatrix& v);
RrefResult rref_with_trace(const ExactMatrix& a);
Rational determinant(const ExactMatrix& a);
std::size_t rank(const ExactMatrix& a);
/// Basis of { y : A^T y = 0 }, each vector cleared to coprime integers with
/// the first nonzero entry positive. Empty iff the rows of A are independent.
std::vector<ExactMatrix> left_nullspace_basis(const ExactMatrix& a);

struct InverseResult {
    ExactMatrix inverse;
    RowOpTrace trace;   // the [A|I] -> [I|A^-1] reduction
};
InverseResult inverse_via_row_reduction(const ExactMatrix& a);

struct IntegerScaleResult {
    Int scale;          // minimal positive c with c*A integer
    ExactMatrix scaled;
};
IntegerScaleResult integer_scale(const ExactMatrix& a);

}  // namespace nicegen

#endif
