#ifndef HYPERLAP_EVOLVE_HPP
#define HYPERLAP_EVOLVE_HPP

#include <complex>
#include <vector>

#include "hyperlap/matrix.hpp"
#include "hyperlap/model.hpp"

namespace hyperlap {

using Complex = std::complex<double>;
using ComplexMatrix = Matrix<Complex>;
// Vertex amplitudes first, then edge amplitudes.
using StateVector = std::vector<Complex>;

// exp(-i * theta * M) for symmetric M, where theta stands for t / hbar.
// Computed by scaling and squaring a truncated Taylor series. theta == 0
// returns the identity exactly. Throws input_error if M is not symmetric.
ComplexMatrix evolution_operator(const ExactMatrix& m, double theta);

// U * psi. Throws dimension_error on a size mismatch.
StateVector evolve_state(const ComplexMatrix& u, const StateVector& psi);

// trace(exp(-i theta Delta+)) + trace(exp(-i theta Delta-)).
Complex partition_trace(const Hypergraph& h, double theta);

ComplexMatrix complex_identity(std::size_t dim);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conjugate_transpose(const ComplexMatrix& a);
// Largest |a_ij - b_ij|.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace hyperlap

#endif
