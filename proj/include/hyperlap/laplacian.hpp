#ifndef HYPERLAP_LAPLACIAN_HPP
#define HYPERLAP_LAPLACIAN_HPP

#include <cstddef>

#include "hyperlap/matrix.hpp"
#include "hyperlap/model.hpp"

namespace hyperlap {

enum class Parity { even, odd };

const char* to_string(Parity p) noexcept;

// n x m 0/1 matrix, entry (i,j) = 1 iff v_i is in e_j.
using IncidenceMatrix = Matrix<int>;

// c_d x c_{d+1} matrix with entries in {-1, 0, +1}.
struct SignedIncidenceMatrix {
    std::size_t level = 0;
    Matrix<int> entries;
};

IncidenceMatrix incidence(const Hypergraph& h);

// even: I * I^t (n x n), odd: I^t * I (m x m).
ExactMatrix hypergraph_laplacian(const Hypergraph& h, Parity parity);

// Throws level_error unless d < top dimension.
SignedIncidenceMatrix d_incidence(const CWHypergraph& x, std::size_t d);

// even: I_d * I_d^t (c_d x c_d), odd: I_d^t * I_d (c_{d+1} x c_{d+1}).
ExactMatrix cw_laplacian(const CWHypergraph& x, std::size_t d, Parity parity);

// Block diagonal even (+) odd, of size (n+m) x (n+m).
ExactMatrix susy_laplacian(const Hypergraph& h);

} // namespace hyperlap

#endif
