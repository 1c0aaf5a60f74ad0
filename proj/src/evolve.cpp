#include "hyperlap/evolve.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlap/errors.hpp"
#include "hyperlap/laplacian.hpp"

namespace hyperlap {

namespace {

// Maximum absolute row sum.
double inf_norm(const ComplexMatrix& a) {
    double best = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        double row = 0.0;
        for (std::size_t c = 0; c < a.cols(); ++c)
            row += std::abs(a(r, c));
        best = std::max(best, row);
    }
    return best;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c) + b(r, c);
    return out;
}

// exp(A) for ||A||_inf <= 1/2 by Taylor series, summed until terms stop
// contributing at double precision.
ComplexMatrix taylor_exp(const ComplexMatrix& a) {
    constexpr int max_terms = 40;
    ComplexMatrix sum = complex_identity(a.rows());
    ComplexMatrix term = sum;
    for (int k = 1; k <= max_terms; ++k) {
        term = multiply(term, a);
        const double scale = 1.0 / k;
        for (std::size_t r = 0; r < term.rows(); ++r)
            for (std::size_t c = 0; c < term.cols(); ++c)
                term(r, c) *= scale;
        sum = add(sum, term);
        if (inf_norm(term) < 1e-18)
            break;
    }
    return sum;
}

Complex trace(const ComplexMatrix& a) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        t += a(i, i);
    return t;
}

} // namespace

ComplexMatrix complex_identity(std::size_t dim) {
    ComplexMatrix id(dim, dim, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < dim; ++i)
        id(i, i) = 1.0;
    return id;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw dimension_error("matrix product of " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
    ComplexMatrix out(a.rows(), b.cols(), Complex(0.0, 0.0));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex lhs = a(r, k);
            if (lhs == Complex(0.0, 0.0))
                continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r, c) += lhs * b(k, c);
        }
    return out;
}

ComplexMatrix conjugate_transpose(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(c, r) = std::conj(a(r, c));
    return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error("cannot compare matrices of different shapes");
    double worst = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

ComplexMatrix evolution_operator(const ExactMatrix& m, double theta) {
    if (!m.is_symmetric())
        throw input_error("evolution operator needs a symmetric matrix");
    if (!std::isfinite(theta))
        throw input_error("theta must be finite");
    const std::size_t n = m.dim();
    if (theta == 0.0)
        return complex_identity(n);

    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = Complex(0.0, -theta * m(r, c).get_d());

    // Scale so the series argument has norm at most 1/2, then square back.
    const double norm = inf_norm(a);
    int squarings = 0;
    if (norm > 0.5)
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const double scale = std::ldexp(1.0, -squarings);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) *= scale;

    ComplexMatrix u = taylor_exp(a);
    for (int s = 0; s < squarings; ++s)
        u = multiply(u, u);
    return u;
}

StateVector evolve_state(const ComplexMatrix& u, const StateVector& psi) {
    if (u.cols() != psi.size() || u.rows() != u.cols())
        throw dimension_error("state of dimension " + std::to_string(psi.size()) +
                              " does not match operator of dimension " + std::to_string(u.rows()));
    StateVector out(u.rows(), Complex(0.0, 0.0));
    for (std::size_t r = 0; r < u.rows(); ++r)
        for (std::size_t c = 0; c < u.cols(); ++c)
            out[r] += u(r, c) * psi[c];
    return out;
}

Complex partition_trace(const Hypergraph& h, double theta) {
    require_valid(h);
    if (theta == 0.0)
        return Complex(static_cast<double>(h.vertex_count() + h.edge_count()), 0.0);
    return trace(evolution_operator(hypergraph_laplacian(h, Parity::even), theta)) +
           trace(evolution_operator(hypergraph_laplacian(h, Parity::odd), theta));
}

} // namespace hyperlap
