#pragma once

// Exact sparse linear algebra over Q: reduced row echelon form, kernels,
// images, quotients, linear solves. Pivoting is lowest-index first, so every
// derived basis is reproducible.

#include <map>
#include <optional>
#include <vector>

#include "gysin/rational.hpp"

namespace gysin {

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

    static SparseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rational& v);
    void add(int r, int c, const Rational& v);
    Rational get(int r, int c) const;
    const std::map<int, Rational>& row(int r) const { return row_[r]; }
    std::size_t nnz() const;

    SparseMatrix operator*(const SparseMatrix& o) const;
    SparseMatrix operator+(const SparseMatrix& o) const;
    SparseMatrix operator-(const SparseMatrix& o) const;
    SparseMatrix scaled(const Rational& s) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;
    SparseMatrix transpose() const;

    // Columns `which` of this matrix, in the given order.
    SparseMatrix select_columns(const std::vector<int>& which) const;
    std::vector<Rational> column(int c) const;
    void set_column(int c, const std::vector<Rational>& v);

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::map<int, Rational>> row_;

    void check(int r, int c) const;
};

SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b);

struct RrefResult {
    SparseMatrix mat;
    std::vector<int> pivots;  // pivot columns, increasing
};

RrefResult rref(const SparseMatrix& m);
int rank(const SparseMatrix& m);

// Columns are a linearly independent spanning set of a subspace of Q^ambient_dim.
struct SubspaceBasis {
    int ambient_dim = 0;
    SparseMatrix basis;  // ambient_dim x dim

    int dim() const { return basis.cols(); }
};

SubspaceBasis kernel(const SparseMatrix& m);
SubspaceBasis image(const SparseMatrix& m);

// Do all columns of `vecs` lie in the span of `space`?
bool contains(const SubspaceBasis& space, const SparseMatrix& vecs);

struct QuotientResult {
    int dim = 0;
    SubspaceBasis complement;  // complement of sub inside total, lowest-index columns of total preferred
};

// Throws Error("not a subspace") when sub is not contained in total.
QuotientResult quotient_complement(const SubspaceBasis& sub, const SubspaceBasis& total);

// Any x with m*x = b, free variables set to zero; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const SparseMatrix& m, const std::vector<Rational>& b);

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis span_sum(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace gysin
