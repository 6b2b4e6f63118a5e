#pragma once

#include <utility>
#include <vector>

#include "holseries/errors.hpp"
#include "holseries/rational.hpp"

namespace holseries {

// One matrix row in sparse form: (column, value) pairs, columns strictly
// increasing, no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Incremental exact row-echelon eliminator. Pivot rows are kept monic and
// rows are reduced as they arrive; this keeps intermediate fractions small
// on the incidence-style matrices this library produces.
class Eliminator {
  public:
    explicit Eliminator(int cols) : cols_(cols) {}

    // Reduce r against the stored pivot rows (r is consumed).
    SparseRow reduce(SparseRow r) const;
    // Reduce and, if nonzero remains, store as a new monic pivot row.
    // Returns true when the rank grew.
    bool insert(SparseRow r);

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    // Clear entries above every pivot, producing reduced row echelon form.
    void back_substitute();

    const std::vector<SparseRow>& pivot_rows() const { return rows_; }
    // pivot column -> index into pivot_rows(), -1 when the column is free
    const std::vector<int>& pivot_of_col() const { return pivot_of_col_; }

  private:
    int cols_;
    std::vector<SparseRow> rows_;
    std::vector<int> pivot_of_col_ = std::vector<int>(cols_, -1);
};

// r -= c * p, merging sparse rows.
SparseRow row_axpy(SparseRow r, const Rational& c, const SparseRow& p);

// Dense exact rational matrix with rank / kernel / image computations
// backed by the sparse eliminator.
class RationalMatrix {
  public:
    RationalMatrix(int rows = 0, int cols = 0)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return a_[static_cast<size_t>(r) * cols_ + c];
    }

    SparseRow sparse_row(int r) const;
    SparseRow sparse_col(int c) const;

    static RationalMatrix identity(int n);
    RationalMatrix transpose() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

int rank(const RationalMatrix& m);
// Basis of { v : m v = 0 }, deterministic (one vector per free column,
// ascending).
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);
// Columns of m forming a basis of the column space, in ascending original
// column order.
std::vector<std::vector<Rational>> image_basis(const RationalMatrix& m);

// Rank of a matrix handed over as sparse rows (consumed).
int sparse_rank(int cols, std::vector<SparseRow>&& rows);

}  // namespace holseries
