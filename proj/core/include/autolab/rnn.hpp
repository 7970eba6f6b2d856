#pragma once

// Single-layer recurrent network trained from scratch: forward pass, mean
// squared loss on the final output, exact backpropagation through time, and
// plain minibatch SGD. No momentum, no regularization, no clipping.

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "autolab/rng.hpp"
#include "autolab/taskgen.hpp"

namespace autolab {

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TrainingDiverged : public NumericError {
 public:
  TrainingDiverged(int epoch, const std::string& what)
      : NumericError(what), epoch(epoch) {}
  int epoch;
};

enum class Activation { Relu, Tanh, StepRelu };

// f(x) = 0 for x <= 0, x + 1 for x > 0. The jump at 0 is assigned to the
// left branch so the map is deterministic at the boundary.
double step_relu(double x);

double apply_activation(Activation act, double x);

struct RnnModel {
  Eigen::MatrixXd w_in;   // hidden x input
  Eigen::MatrixXd w_rec;  // hidden x hidden
  Eigen::VectorXd b_h;    // hidden
  Eigen::MatrixXd w_out;  // output x hidden
  Eigen::VectorXd b_y;    // output
  Activation hidden_activation = Activation::Relu;
  Activation output_activation = Activation::Relu;
  std::uint64_t init_seed = 0;  // recorded in checkpoints

  int input_size() const { return static_cast<int>(w_in.cols()); }
  int hidden_size() const { return static_cast<int>(w_rec.rows()); }
  int output_size() const { return static_cast<int>(w_out.rows()); }

  // One recurrent update: act(w_rec h + w_in x + b_h).
  Eigen::VectorXd step_hidden(const Eigen::VectorXd& h, const Eigen::VectorXd& x) const;
  Eigen::VectorXd step_hidden(const Eigen::VectorXd& h, int symbol) const;
  // Output map: out_act(w_out h + b_y).
  Eigen::VectorXd output_map(const Eigen::VectorXd& h) const;
};

struct Gradients {
  Eigen::MatrixXd w_in, w_rec, w_out;
  Eigen::VectorXd b_h, b_y;

  static Gradients zero_like(const RnnModel& model);
  bool all_finite() const;
};

enum class LossMode { FinalStep, PerStep };

struct TrainConfig {
  double learning_rate = 0.02;
  int batch_size = 128;
  int epochs = 1000;
  double init_gain = 0.1;
  std::uint64_t seed = 0;  // drives epoch shuffles and batch order
  bool shuffle_each_epoch = true;
  LossMode loss_mode = LossMode::FinalStep;

  void validate() const;
};

struct HiddenTrajectory {
  Eigen::MatrixXd hidden;   // hidden x T, column t holds h_{t+1}
  Eigen::MatrixXd outputs;  // output x T
};

// Glorot-uniform weights scaled by `gain`: entries of each matrix drawn from
// U[-a, a] with a = gain * sqrt(6 / (fan_in + fan_out)), filled in
// column-major order. Biases start at zero.
RnnModel init_xavier(int input, int hidden, int output, Activation hidden_activation,
                     Activation output_activation, double gain, Rng& rng);

// Column t of `inputs` is the encoded symbol at step t+1.
HiddenTrajectory forward(const RnnModel& model, const Eigen::MatrixXd& inputs,
                         const Eigen::VectorXd& h0);
HiddenTrajectory forward(const RnnModel& model, const Sequence& sequence);

Eigen::MatrixXd encode_sequence(const Sequence& sequence, int dim);

// Mean over examples of 0.5 * ||y_final - one_hot(target)||^2. In PerStep
// mode the per-example loss additionally averages over timesteps, with
// per-prefix targets drawn from the dataset's task.
double mse_loss(const RnnModel& model, const Dataset& dataset,
                LossMode mode = LossMode::FinalStep);
double mse_loss(const RnnModel& model, const Dataset& dataset,
                std::span<const std::size_t> indices, LossMode mode = LossMode::FinalStep);

// Exact reverse-mode gradient of mse_loss over the given examples. The ReLU
// subgradient at 0 is taken as 0; the step_relu derivative ignores the jump.
Gradients bptt_grad(const RnnModel& model, const Dataset& dataset,
                    LossMode mode = LossMode::FinalStep);
Gradients bptt_grad(const RnnModel& model, const Dataset& dataset,
                    std::span<const std::size_t> indices, LossMode mode = LossMode::FinalStep);

struct TrainLog {
  // epoch_loss[e-1]: mean of the minibatch losses seen during epoch e.
  std::vector<double> epoch_loss;
};

// Called after each epoch's updates with the epoch index (1-based).
using EpochCallback = std::function<void(int epoch, const RnnModel& model, double epoch_loss)>;

// Plain SGD: theta <- theta - lr * grad per minibatch. Each epoch shuffles
// example order, groups examples by length so minibatches are rectangular,
// and shuffles the resulting batch order. Throws TrainingDiverged if the
// loss stops being finite.
TrainLog train(RnnModel& model, const Dataset& dataset, const TrainConfig& config,
               const EpochCallback& callback = {});

// Binary checkpoint: header (dims, activations, init seed) + raw weights.
// Round-trips bit-exactly.
void save_model(const RnnModel& model, const std::string& path);
RnnModel load_model(const std::string& path);

}  // namespace autolab
