#pragma once

#include <cstddef>
#include <stdexcept>

#include "srnn/matrix.hpp"
#include "srnn/rng.hpp"

namespace srnn {

class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& msg) : std::runtime_error(msg) {}
};

// Haar-uniform (semi-)orthogonal matrix: QR of a Gaussian draw with the R
// diagonal sign-corrected to be positive. For rows >= cols the columns are
// orthonormal, otherwise the rows are.
Matrix orthogonal_init(std::size_t rows, std::size_t cols, Rng& rng);

// i.i.d. zero-mean Gaussian entries with stddev sqrt(2 / (rows + cols)).
Matrix glorot_normal_init(std::size_t rows, std::size_t cols, Rng& rng);

Matrix identity_init(std::size_t n);

// Solves A X = B by LU with partial pivoting. Throws SingularMatrixError when
// a pivot magnitude falls below 1e-14 * max|A|.
Matrix solve(const Matrix& a, const Matrix& b);

// Power-iteration estimate of the largest singular value. Nondecreasing in
// iters; a zero matrix yields 0.
double spectral_norm_estimate(const Matrix& m, std::size_t iters);

}  // namespace srnn
