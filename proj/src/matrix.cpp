#include "hyperlap/matrix.hpp"

#include <utility>

namespace hyperlap {

const char* to_string(MatrixTag tag) noexcept {
    switch (tag) {
    case MatrixTag::plain: return "plain";
    case MatrixTag::even: return "even";
    case MatrixTag::odd: return "odd";
    case MatrixTag::supersymmetric: return "supersymmetric";
    case MatrixTag::power: return "power";
    }
    return "plain";
}

ExactMatrix::ExactMatrix(Matrix<BigInt> entries, MatrixTag tag)
    : entries_(std::move(entries)), tag_(tag) {
    assert(entries_.rows() == entries_.cols());
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
    ExactMatrix id(dim, MatrixTag::power);
    for (std::size_t i = 0; i < dim; ++i)
        id(i, i) = 1;
    return id;
}

BigInt ExactMatrix::trace() const {
    BigInt sum = 0;
    for (std::size_t i = 0; i < dim(); ++i)
        sum += entries_(i, i);
    return sum;
}

bool ExactMatrix::is_symmetric() const {
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = r + 1; c < dim(); ++c)
            if (entries_(r, c) != entries_(c, r))
                return false;
    return true;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    assert(a.dim() == b.dim());
    const std::size_t n = a.dim();
    ExactMatrix out(n);
    BigInt acc;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(a(r, k)) != 0)
                    mpz_addmul(acc.get_mpz_t(), a(r, k).get_mpz_t(), b(k, c).get_mpz_t());
            out(r, c) = acc;
        }
    return out;
}

Matrix<BigInt> gram_rows(const Matrix<int>& a) {
    Matrix<BigInt> out(a.rows(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.rows(); ++c) {
            long sum = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                sum += static_cast<long>(a(r, k)) * a(c, k);
            out(r, c) = sum;
        }
    return out;
}

Matrix<BigInt> gram_cols(const Matrix<int>& a) {
    return gram_rows(a.transpose());
}

} // namespace hyperlap
