#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "homtwist/field.hpp"

namespace homtwist {

/// Sparse column vector over a field; absent entries are zero.
class SparseVector {
public:
    SparseVector() : dim_(0), field_(Field::rationals()) {}
    SparseVector(int dim, const Field& f) : dim_(dim), field_(f) {}

    int dim() const { return dim_; }
    const Field& field() const { return field_; }

    void set(int i, const FieldScalar& v);
    void addTo(int i, const FieldScalar& v);
    FieldScalar at(int i) const;
    bool isZero() const { return entries_.empty(); }
    int nnz() const { return static_cast<int>(entries_.size()); }

    SparseVector& operator+=(const SparseVector& o);
    SparseVector& operator-=(const SparseVector& o);
    SparseVector scaled(const FieldScalar& c) const;

    bool operator==(const SparseVector& o) const;

    const std::map<int, FieldScalar>& entries() const { return entries_; }

private:
    int dim_;
    Field field_;
    std::map<int, FieldScalar> entries_;
};

/// Sparse matrix with exact entries; no explicit zeros are stored.
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
    SparseMatrix(int rows, int cols, const Field& f);

    static SparseMatrix identity(int n, const Field& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    void set(int r, int c, const FieldScalar& v);
    void addTo(int r, int c, const FieldScalar& v);
    FieldScalar at(int r, int c) const;

    bool isZero() const;
    long nnz() const;

    SparseMatrix transpose() const;
    SparseMatrix multiply(const SparseMatrix& rhs) const;
    SparseMatrix operator-(const SparseMatrix& rhs) const;
    SparseMatrix operator+(const SparseMatrix& rhs) const;
    bool operator==(const SparseMatrix& o) const;

    SparseVector apply(const SparseVector& v) const;
    SparseVector column(int c) const;
    void setColumn(int c, const SparseVector& v);

    /// Row-reduced echelon data. Pivot selection is deterministic: columns
    /// left to right, candidate row with fewest nonzeros, ties by row index.
    struct Echelon {
        std::vector<std::map<int, FieldScalar>> rows;  // reduced rows, pivot normalized to 1
        std::vector<int> pivotCols;                    // pivot column of reduced row i
        int rank = 0;
    };
    Echelon reducedRowEchelon() const;

    int rank() const;

    /// Kernel basis; vectors enumerated by descending free column, each with
    /// a 1 in its free column. Deterministic.
    std::vector<SparseVector> kernelBasis() const;

    /// One solution of A x = b, or nullopt if inconsistent.
    std::optional<SparseVector> solve(const SparseVector& b) const;

    /// Deterministic row-major (row, col, numerator, denominator) list.
    std::vector<std::tuple<int, int, std::string, std::string>> triplets() const;

    const std::map<int, FieldScalar>& row(int r) const { return rowData_[r]; }

private:
    int rows_, cols_;
    Field field_;
    std::vector<std::map<int, FieldScalar>> rowData_;
};

/// Incremental row space: supports "reduce a vector against the rows collected
/// so far" and rank queries. Used for image bases and coset representatives.
class RowSpace {
public:
    RowSpace(int dim, const Field& f) : dim_(dim), field_(f) {}

    /// Fully reduces v against the current echelon rows.
    SparseVector reduce(const SparseVector& v) const;

    /// Reduce, then insert if nonzero. Returns true if the rank grew.
    bool insert(const SparseVector& v);

    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

    /// Coefficients expressing v over the inserted vectors, or nullopt if v
    /// is outside their span. Order matches insertion order of successful
    /// inserts.
    std::optional<std::vector<FieldScalar>> coordinates(const SparseVector& v) const;

private:
    struct Row {
        int pivot;
        SparseVector vec;                  // echelon form, pivot entry 1
        std::vector<FieldScalar> history;  // combination over inserted vectors
    };
    int dim_;
    Field field_;
    std::vector<Row> rows_;     // kept sorted by pivot
    int insertedCount_ = 0;
};

}  // namespace homtwist
