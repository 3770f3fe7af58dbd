#include "srnn/linalg.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace srnn {

namespace {

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(rows, cols);
    for (double& v : m.values()) v = rng.next_gaussian();
    return m;
}

// Householder QR of a tall matrix (rows >= cols): returns the thin Q with
// the sign convention that makes diag(R) positive, which turns a Gaussian
// draw into a Haar-uniform point on the Stiefel manifold.
Matrix thin_q_positive_r(Matrix a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<std::vector<double>> reflectors;
    reflectors.reserve(n);
    std::vector<double> r_diag(n);

    for (std::size_t k = 0; k < n; ++k) {
        double norm_x = 0.0;
        for (std::size_t i = k; i < m; ++i) norm_x += a(i, k) * a(i, k);
        norm_x = std::sqrt(norm_x);

        const double x0 = a(k, k);
        const double alpha = (x0 >= 0.0) ? -norm_x : norm_x;
        std::vector<double> v(m - k, 0.0);
        for (std::size_t i = k; i < m; ++i) v[i - k] = a(i, k);
        v[0] -= alpha;
        double vnorm2 = 0.0;
        for (double w : v) vnorm2 += w * w;

        if (vnorm2 > 0.0) {
            // Apply H = I - 2 v v^T / (v^T v) to the trailing block.
            for (std::size_t j = k; j < n; ++j) {
                double s = 0.0;
                for (std::size_t i = k; i < m; ++i) s += v[i - k] * a(i, j);
                const double f = 2.0 * s / vnorm2;
                for (std::size_t i = k; i < m; ++i) a(i, j) -= f * v[i - k];
            }
        }
        r_diag[k] = a(k, k);
        reflectors.push_back(std::move(v));
    }

    // Accumulate Q = H_0 ... H_{n-1} applied to the thin identity.
    Matrix q(m, n);
    for (std::size_t j = 0; j < n; ++j) q(j, j) = 1.0;
    for (std::size_t k = n; k-- > 0;) {
        const std::vector<double>& v = reflectors[k];
        double vnorm2 = 0.0;
        for (double w : v) vnorm2 += w * w;
        if (vnorm2 == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < m; ++i) s += v[i - k] * q(i, j);
            const double f = 2.0 * s / vnorm2;
            for (std::size_t i = k; i < m; ++i) q(i, j) -= f * v[i - k];
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        if (r_diag[j] < 0.0) {
            for (std::size_t i = 0; i < m; ++i) q(i, j) = -q(i, j);
        }
    }
    return q;
}

}  // namespace

Matrix orthogonal_init(std::size_t rows, std::size_t cols, Rng& rng) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("orthogonal_init: empty shape");
    if (rows >= cols) return thin_q_positive_r(gaussian_matrix(rows, cols, rng));
    return thin_q_positive_r(gaussian_matrix(cols, rows, rng)).transposed();
}

Matrix glorot_normal_init(std::size_t rows, std::size_t cols, Rng& rng) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("glorot_normal_init: empty shape");
    const double stddev = std::sqrt(2.0 / static_cast<double>(rows + cols));
    Matrix m(rows, cols);
    for (double& v : m.values()) v = stddev * rng.next_gaussian();
    return m;
}

Matrix identity_init(std::size_t n) {
    if (n == 0) throw std::invalid_argument("identity_init: n must be positive");
    return Matrix::identity(n);
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve: A must be square");
    if (b.rows() != a.rows()) throw std::invalid_argument("solve: B row count must match A");
    const std::size_t n = a.rows();
    const double pivot_floor = 1e-14 * a.max_abs();

    Matrix lu = a;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(lu(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best <= pivot_floor) {
            throw SingularMatrixError("solve: pivot below 1e-14 * max|A|, matrix is numerically singular");
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
            std::swap(perm[k], perm[piv]);
        }
        const double inv_pivot = 1.0 / lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = lu(i, k) * inv_pivot;
            lu(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
        }
    }

    Matrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = b(perm[i], j);
    }
    // Forward substitution (unit lower triangle), then back substitution.
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            const double f = lu(i, k);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) -= f * x(k, j);
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) {
            const double f = lu(i, k);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) -= f * x(k, j);
        }
        const double inv_pivot = 1.0 / lu(i, i);
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) *= inv_pivot;
    }
    return x;
}

double spectral_norm_estimate(const Matrix& m, std::size_t iters) {
    if (iters == 0) throw std::invalid_argument("spectral_norm_estimate: iters must be >= 1");
    if (m.size() == 0) return 0.0;

    // Fixed pseudorandom start vector: deterministic, and almost surely not
    // orthogonal to the leading singular direction.
    Rng rng(0x5EEDBA5EULL);
    Matrix v(m.cols(), 1);
    for (double& x : v.values()) x = rng.next_gaussian();
    double nv = l2_norm(v.values());
    if (nv == 0.0) return 0.0;
    for (double& x : v.values()) x /= nv;

    double estimate = 0.0;
    for (std::size_t it = 0; it < iters; ++it) {
        Matrix mv = m * v;
        estimate = l2_norm(mv.values());
        if (estimate == 0.0) return 0.0;
        Matrix w = matmul_tn(m, mv);  // M^T M v
        const double nw = l2_norm(w.values());
        if (nw == 0.0) return 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) v.values()[i] = w.values()[i] / nw;
    }
    return estimate;
}

}  // namespace srnn
