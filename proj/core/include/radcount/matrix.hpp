#pragma once

// Dense matrices over a small finite field, plus the rank/nullity kernel the
// counting drivers sit on. Row-major uint8 storage; all elimination happens
// on a scratch copy.

#include "radcount/field.hpp"

#include <cstddef>
#include <vector>

namespace radcount {

class FqMatrix {
public:
    FqMatrix() : rows_(0), cols_(0) {}
    FqMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Fq at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }
    void set(int r, int c, Fq v) { a_[std::size_t(r) * cols_ + c] = v; }

    Fq* row(int r) { return a_.data() + std::size_t(r) * cols_; }
    const Fq* row(int r) const { return a_.data() + std::size_t(r) * cols_; }

    bool operator==(const FqMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_, cols_;
    std::vector<Fq> a_;
};

// Row-reduction rank; does not modify m.
int rank(const FieldTable& F, const FqMatrix& m);

// Rank computed through an independent elimination path (on the transpose,
// pivoting from the last column). Used by property tests to cross-check the
// primary elimination; rank(m) == rank_transposed(m) always.
int rank_transposed(const FieldTable& F, const FqMatrix& m);

// dim ker = cols - rank.
int nullity(const FieldTable& F, const FqMatrix& m);

// In-place elimination on scratch storage shared across calls would race;
// the driver-facing variant below lets hot loops reuse one scratch buffer.
int rank_with_scratch(const FieldTable& F, const FqMatrix& m, std::vector<Fq>& scratch);

} // namespace radcount
