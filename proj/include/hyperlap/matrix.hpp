#ifndef HYPERLAP_MATRIX_HPP
#define HYPERLAP_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace hyperlap {

// Dense row-major matrix. Indexing is 0-based; callers translate from the
// 1-based external labels.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using BigInt = mpz_class;

enum class MatrixTag { plain, even, odd, supersymmetric, power };

const char* to_string(MatrixTag tag) noexcept;

// Square matrix of arbitrary-precision integers.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(std::size_t dim, MatrixTag tag = MatrixTag::plain)
        : entries_(dim, dim), tag_(tag) {}
    ExactMatrix(Matrix<BigInt> entries, MatrixTag tag);

    static ExactMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return entries_.rows(); }
    MatrixTag tag() const noexcept { return tag_; }
    const Matrix<BigInt>& entries() const noexcept { return entries_; }

    BigInt& operator()(std::size_t r, std::size_t c) { return entries_(r, c); }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

    BigInt trace() const;
    bool is_symmetric() const;

    bool operator==(const ExactMatrix& other) const { return entries_ == other.entries_; }

private:
    Matrix<BigInt> entries_;
    MatrixTag tag_ = MatrixTag::plain;
};

// Exact product; the result is tagged plain.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

// gram_rows(A) = A * A^t, gram_cols(A) = A^t * A.
Matrix<BigInt> gram_rows(const Matrix<int>& a);
Matrix<BigInt> gram_cols(const Matrix<int>& a);

} // namespace hyperlap

#endif
