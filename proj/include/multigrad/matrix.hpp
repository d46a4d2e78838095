#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "multigrad/field.hpp"

namespace multigrad {

// Dense row-major matrix over a single Field. Dimensions may be zero;
// a 0xk or kx0 matrix is a valid (empty) linear map.
class DenseMatrix {
public:
    DenseMatrix() : DenseMatrix(Field(), 0, 0) {}
    DenseMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, field_.zero()) {}

    static DenseMatrix identity(const Field& f, std::size_t k);
    static DenseMatrix from_columns(const Field& f, std::size_t rows,
                                    const std::vector<std::vector<Scalar>>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    std::vector<Scalar> column(std::size_t c) const;
    DenseMatrix transpose() const;

    bool is_zero() const;
    bool equals(const DenseMatrix& o) const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;
};

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    DenseMatrix reduced;
};

// Reduced row-echelon form with deterministic pivoting: columns are scanned
// left to right and the first nonzero entry at or below the pivot row wins.
RrefResult rref(const DenseMatrix& a);

// Some x with a*x = b, or nullopt when inconsistent. Free variables are set
// to zero under the rref pivot choice, so the result is deterministic.
std::optional<std::vector<Scalar>> solve(const DenseMatrix& a, const std::vector<Scalar>& b);

// Basis of {x : a*x = 0}, one column per free variable, ascending.
std::vector<std::vector<Scalar>> nullspace(const DenseMatrix& a);

std::size_t rank(const DenseMatrix& a);

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
std::vector<Scalar> mat_apply(const DenseMatrix& a, const std::vector<Scalar>& x);
DenseMatrix hconcat(const DenseMatrix& a, const DenseMatrix& b);

bool is_zero_vector(const Field& f, const std::vector<Scalar>& v);

}  // namespace multigrad
