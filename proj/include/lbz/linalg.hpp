#pragma once

#include "lbz/rational.hpp"

#include <vector>

namespace lbz {

// Sparse exact row vector: (column, coefficient) pairs, strictly increasing
// columns, no zero coefficients.
struct SparseVec {
    std::vector<std::pair<int, Rat>> entries;
    bool is_zero() const { return entries.empty(); }
    void add(int col, const Rat& c); // accumulate; keeps the invariant
    bool operator==(const SparseVec&) const = default;
};

SparseVec sparse_from_dense(const std::vector<Rat>& v);

struct RationalMatrix {
    int cols = 0;
    std::vector<std::vector<Rat>> rows; // each row has exactly `cols` entries
};

// Row space in reduced row echelon form: rows ordered by pivot column, each
// pivot coefficient 1, pivot columns eliminated from every other row. This
// form is unique for the row space, so equality of subspaces is structural
// equality of the representation.
class Subspace {
public:
    Subspace() = default;
    // `rref_rows` must already be in reduced row echelon form (as produced by
    // EchelonBasis::to_subspace).
    Subspace(int cols, std::vector<SparseVec> rref_rows);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SparseVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Row index owning pivot column `col`, or -1.
    int pivot_row(int col) const;
    // Non-pivot columns, ascending; they index a basis of the quotient.
    std::vector<int> complement_columns() const;

    // Residual of v after eliminating all pivot columns; supported on
    // non-pivot columns only. contains(v) iff the residual is zero.
    SparseVec reduce(const SparseVec& v) const;
    bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

    bool operator==(const Subspace&) const = default;

private:
    int cols_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<int> pivots_;
    std::vector<int> row_of_pivot_; // col -> row index or -1
};

// Incremental echelon form with leftmost-column pivoting: insert() eliminates
// the vector against the current rows and either absorbs it as a new
// (normalized) row or discards it as dependent. Not thread safe; the instance
// owns dense scratch storage sized to `cols`.
class EchelonBasis {
public:
    explicit EchelonBasis(int cols);

    int cols() const { return cols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    bool insert(const SparseVec& v); // true when rank grew
    bool reduces_to_zero(const SparseVec& v) const;

    // Forward-echelon rows (pivot coefficient 1), in insertion order.
    const std::vector<SparseVec>& row_basis() const { return rows_; }

    // Back-substitute into canonical reduced row echelon form.
    Subspace to_subspace() const;

private:
    int cols_;
    std::vector<SparseVec> rows_;    // rows_[k]: pivot coeff 1, tail after it
    std::vector<int> pivot_of_row_;
    std::vector<int> row_of_pivot_;  // col -> row index or -1
    mutable std::vector<Rat> acc_;   // dense scratch, kept all-zero between calls

    // Eliminates acc_ (supported in [first, cols)) against the rows; returns
    // the first column whose coefficient no row can clear, or -1 if acc_
    // reduced to zero. acc_ is left holding the residual in either case.
    int eliminate_acc(int first) const;
    void load_acc(const SparseVec& v) const;
    void clear_acc(int first) const;
};

// Gaussian elimination with exact arithmetic, leftmost-column pivoting, first
// available row. The canonical result does not depend on those choices.
Subspace rref(const RationalMatrix& m);
int rank(const RationalMatrix& m);
bool contains(const Subspace& s, const std::vector<Rat>& v);

// Column indexing for multilinear components: words that use each of 1..n
// exactly once, ranked lexicographically (0-based).
long long factorial(int n);
int lehmer_rank(const std::vector<int>& word);
std::vector<int> lehmer_unrank(int rank, int n);

} // namespace lbz
