#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "srnn/matrix.hpp"
#include "srnn/spectral.hpp"

namespace srnn {

enum class Nonlinearity { Identity, Tanh, Relu, Prelu, Oplu };

enum class TransitionKind { Plain, Factorized };

// Elman cell: h_t = f(gain * (W h_{t-1} + W_in x_t + b)), y_t = W_out h_t + b_out.
// The transition W is either a plain matrix or realized from a
// FactorizedTransition at every forward pass.
struct RnnModel {
    std::size_t n_in = 0;
    std::size_t n_hidden = 0;
    std::size_t n_out = 0;

    Matrix w_in;   // n_hidden x n_in
    TransitionKind kind = TransitionKind::Plain;
    Matrix w;                       // plain transition, n_hidden x n_hidden
    FactorizedTransition factored;  // used when kind == Factorized
    std::vector<double> b;          // n_hidden
    Matrix w_out;  // n_out x n_hidden
    std::vector<double> b_out;      // n_out

    Nonlinearity nonlinearity = Nonlinearity::Tanh;
    double prelu_alpha = 0.25;
    bool prelu_trainable = false;
    double preact_gain = 1.0;

    // Realizes the transition matrix (composes U diag(s) V^T when factorized).
    Matrix transition_matrix() const;
};

enum class TargetKind { Categorical, Scalar };

// One minibatch laid out time-major: inputs[t] is n_in x batch, sample per
// column. Categorical targets are class indices (-1 where no target exists);
// scalar targets are one regression value per sample, compared at every
// masked step. loss_mask is seq_len x batch with nonnegative weights.
struct Batch {
    std::size_t seq_len = 0;
    std::size_t batch = 0;
    std::size_t n_in = 0;
    std::vector<Matrix> inputs;
    TargetKind target_kind = TargetKind::Categorical;
    std::vector<std::vector<int>> class_targets;  // seq_len x batch
    std::vector<double> scalar_targets;           // batch
    Matrix loss_mask;  // seq_len x batch

    double mask_sum() const;
};

// Everything backward needs from the forward pass: gained pre-activations,
// hidden states (index 0 is h_0), the realized transition, and the OPLU
// permutation choices.
struct ForwardTape {
    std::size_t seq_len = 0;
    std::size_t batch = 0;
    std::size_t n_hidden = 0;
    Matrix w_realized;
    std::vector<Matrix> preacts;               // t = 1..T at index t-1
    std::vector<Matrix> hidden;                // t = 0..T
    std::vector<std::vector<std::uint8_t>> oplu_swaps;  // per t: pair-major, batch minor
};

struct ActivationResult {
    Matrix h;
    std::vector<std::uint8_t> oplu_swaps;
};

// Elementwise tanh/relu/identity/prelu; OPLU sorts each disjoint row pair
// (2i, 2i+1) descending per sample and records which pairs swapped. OPLU
// requires an even number of rows.
ActivationResult apply_nonlinearity(Nonlinearity kind, double prelu_alpha, const Matrix& preact);

struct ForwardResult {
    std::vector<Matrix> outputs;  // per t: n_out x batch
    ForwardTape tape;
};

ForwardResult forward(const RnnModel& model, const Batch& batch);

// Masked mean of per-step losses: softmax cross-entropy for categorical
// targets, squared error for scalar targets. A zero mask yields loss 0.
double loss(const std::vector<Matrix>& outputs, const Batch& batch);

struct Gradients {
    Matrix g_w_in;
    Matrix g_w;  // composite transition gradient, also the factorized dL/dW
    std::vector<double> g_b;
    Matrix g_w_out;
    std::vector<double> g_b_out;
    double g_alpha = 0.0;

    // Factor-level gradients, filled for factorized transitions. g_p is the
    // spectrum-parameter gradient (empty in frozen-orthogonal mode).
    Matrix g_u;
    Matrix g_v;
    std::vector<double> g_s;
    std::vector<double> g_p;
};

// Reverse-mode BPTT over the tape. For factorized transitions the composite
// dL/dW is additionally pushed through factor_gradients / spectrum_gradient.
Gradients backward(const RnnModel& model, const ForwardTape& tape, const Batch& batch);

// Re-derives factor-level gradients from grads.g_w (used after composite-level
// terms such as weight decay or the orthogonality penalty were added), then
// adds extra_g_s (e.g. the Gaussian prior) before the spectrum chain rule.
void refactor_transition_gradients(const RnnModel& model, Gradients& grads,
                                   const std::vector<double>& extra_g_s = {});

// ||dL/dh_t||_F for t = 1..T under the batch's loss mask.
std::vector<double> hidden_grad_norms(const RnnModel& model, const ForwardTape& tape,
                                      const Batch& batch);

struct BackwardNorms {
    std::vector<double> hidden;   // ||dL/dh_t||, t = 1..T
    std::vector<double> preact;   // ||dL/da_t||, t = 1..T
};

BackwardNorms backward_grad_norms(const RnnModel& model, const ForwardTape& tape,
                                  const Batch& batch);

}  // namespace srnn
