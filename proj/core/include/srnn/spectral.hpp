#pragma once

#include <cstddef>
#include <vector>

#include "srnn/matrix.hpp"

namespace srnn {

// How the singular spectrum of a factorized transition is parameterized.
//   SigmoidMargin:    s_i = 2m(sigmoid(p_i) - 0.5) + 1, confined to (1-m, 1+m)
//   Direct:           s_i = p_i, unconstrained
//   FrozenOrthogonal: s_i = 1, p never updated; the transition stays orthogonal
enum class SpectrumMode { SigmoidMargin, Direct, FrozenOrthogonal };

// Transition matrix factorized as W = U diag(s) V^T with orthogonal bases.
// U and V are kept on the Stiefel manifold by geodesic updates (see optim);
// the spectrum s is realized from free parameters p per SpectrumMode.
struct FactorizedTransition {
    Matrix u;
    Matrix v;
    std::vector<double> p;
    double margin = 0.0;
    SpectrumMode mode = SpectrumMode::SigmoidMargin;

    std::size_t dim() const { return p.size(); }
    std::vector<double> singular_values() const;
    Matrix compose() const;
};

struct SpectralPenaltyConfig {
    double lambda_orth = 0.0;
    double gamma_prior = 0.0;
};

double sigmoid(double x);
double sigmoid_derivative(double x);

// s_i = 2m(sigmoid(p_i) - 0.5) + 1; every s_i lies strictly inside (1-m, 1+m).
std::vector<double> singular_values(const std::vector<double>& p, double margin);

// W = U diag(s) V^T
Matrix compose(const Matrix& u, const std::vector<double>& s, const Matrix& v);

struct FactorGradients {
    Matrix g_u;
    std::vector<double> g_s;
    Matrix g_v;
};

// Given dL/dW, the partials through W = U diag(s) V^T:
//   dL/dU = G_W V diag(s),  dL/ds = diag(U^T G_W V),  dL/dV = G_W^T U diag(s)
FactorGradients factor_gradients(const Matrix& g_w, const Matrix& u,
                                 const std::vector<double>& s, const Matrix& v);

// Chain rule through the sigmoid margin gives dL/dp_i = 2m sigmoid'(p_i) dL/ds_i;
// the 2m factor is divided back out so the effective spectrum learning rate
// does not depend on the margin. Rejects margin 0 (frozen spectrum).
std::vector<double> spectrum_gradient(const std::vector<double>& g_s,
                                      const std::vector<double>& p, double margin);

struct PenaltyResult {
    double value = 0.0;
    Matrix grad;
};

// value = lambda ||W^T W - I||_F^2, grad = 4 lambda W (W^T W - I)
PenaltyResult soft_orthogonality_penalty(const Matrix& w, double lambda);

struct PriorResult {
    double value = 0.0;
    std::vector<double> g_s;
};

// Mean-one Gaussian prior on the spectrum: value = gamma sum_i (s_i - 1)^2.
PriorResult gaussian_prior(const std::vector<double>& s, double gamma);

}  // namespace srnn
