#include "srnn/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace srnn {

double sigmoid(double x) {
    if (x >= 0.0) {
        return 1.0 / (1.0 + std::exp(-x));
    }
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double sigmoid_derivative(double x) {
    const double s = sigmoid(x);
    return s * (1.0 - s);
}

std::vector<double> FactorizedTransition::singular_values() const {
    switch (mode) {
        case SpectrumMode::SigmoidMargin:
            return srnn::singular_values(p, margin);
        case SpectrumMode::Direct:
            return p;
        case SpectrumMode::FrozenOrthogonal:
            return std::vector<double>(p.size(), 1.0);
    }
    throw std::logic_error("FactorizedTransition: bad spectrum mode");
}

Matrix FactorizedTransition::compose() const { return srnn::compose(u, singular_values(), v); }

std::vector<double> singular_values(const std::vector<double>& p, double margin) {
    if (margin < 0.0 || margin > 1.0) {
        throw std::invalid_argument("singular_values: margin must lie in [0, 1]");
    }
    std::vector<double> s(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        s[i] = 2.0 * margin * (sigmoid(p[i]) - 0.5) + 1.0;
    }
    return s;
}

Matrix compose(const Matrix& u, const std::vector<double>& s, const Matrix& v) {
    if (u.cols() != s.size() || v.cols() != s.size()) {
        throw std::invalid_argument("compose: spectrum length must match basis columns");
    }
    // U diag(s) then times V^T.
    Matrix us = u;
    for (std::size_t i = 0; i < us.rows(); ++i) {
        double* row = us.row(i);
        for (std::size_t j = 0; j < us.cols(); ++j) row[j] *= s[j];
    }
    return matmul_nt(us, v);
}

FactorGradients factor_gradients(const Matrix& g_w, const Matrix& u,
                                 const std::vector<double>& s, const Matrix& v) {
    FactorGradients out;
    Matrix gv = g_w * v;            // G_W V
    Matrix gtu = matmul_tn(g_w, u); // G_W^T U

    out.g_s.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        // diag(U^T G_W V)_i = u_i . (G_W V)_i
        double acc = 0.0;
        for (std::size_t r = 0; r < u.rows(); ++r) acc += u(r, i) * gv(r, i);
        out.g_s[i] = acc;
    }

    for (std::size_t i = 0; i < gv.rows(); ++i) {
        double* row = gv.row(i);
        for (std::size_t j = 0; j < s.size(); ++j) row[j] *= s[j];
    }
    out.g_u = std::move(gv);

    for (std::size_t i = 0; i < gtu.rows(); ++i) {
        double* row = gtu.row(i);
        for (std::size_t j = 0; j < s.size(); ++j) row[j] *= s[j];
    }
    out.g_v = std::move(gtu);
    return out;
}

std::vector<double> spectrum_gradient(const std::vector<double>& g_s,
                                      const std::vector<double>& p, double margin) {
    if (margin <= 0.0) {
        throw std::invalid_argument("spectrum_gradient: margin 0 freezes the spectrum, no gradient defined");
    }
    if (g_s.size() != p.size()) {
        throw std::invalid_argument("spectrum_gradient: size mismatch");
    }
    std::vector<double> g_p(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        g_p[i] = sigmoid_derivative(p[i]) * g_s[i];
    }
    return g_p;
}

PenaltyResult soft_orthogonality_penalty(const Matrix& w, double lambda) {
    if (w.rows() != w.cols()) throw std::invalid_argument("soft_orthogonality_penalty: W must be square");
    if (lambda < 0.0) throw std::invalid_argument("soft_orthogonality_penalty: lambda must be >= 0");
    Matrix residual = matmul_tn(w, w);
    for (std::size_t i = 0; i < residual.rows(); ++i) residual(i, i) -= 1.0;

    PenaltyResult out;
    const double fro = residual.frobenius_norm();
    out.value = lambda * fro * fro;
    out.grad = w * residual;
    out.grad *= 4.0 * lambda;
    return out;
}

PriorResult gaussian_prior(const std::vector<double>& s, double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("gaussian_prior: gamma must be >= 0");
    PriorResult out;
    out.g_s.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double d = s[i] - 1.0;
        out.value += gamma * d * d;
        out.g_s[i] = 2.0 * gamma * d;
    }
    return out;
}

}  // namespace srnn
