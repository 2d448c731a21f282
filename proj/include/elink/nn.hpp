// Copyright 2026 The elink Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "elink/rng.hpp"

namespace elink::nn {

// Row-major dense matrix. Vectors are 1 x n.
struct tensor2 {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  tensor2() = default;
  tensor2(int r, int c)
      : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const {
    return v[static_cast<std::size_t>(r) * cols + c];
  }
  std::size_t count() const { return v.size(); }
};

// A named trainable tensor with its gradient accumulator.
struct param {
  std::string name;
  tensor2 value;
  tensor2 grad;

  param() = default;
  param(std::string n, int rows, int cols)
      : name(std::move(n)), value(rows, cols), grad(rows, cols) {}
};

enum class activation { identity, relu, sigmoid, tanh };

const char* activation_name(activation a);
activation activation_from_name(const std::string& name);

struct dense_layer {
  param w;  // out x in
  param b;  // 1 x out
  activation act = activation::identity;

  dense_layer() = default;
  dense_layer(std::string name, int in, int out,
              activation a = activation::identity)
      : w(name + ".w", out, in), b(name + ".b", 1, out), act(a) {}

  int in() const { return w.value.cols; }
  int out() const { return w.value.rows; }
};

using param_list = std::vector<param*>;

// value <- U(-radius, radius), filled in row-major order.
void init_uniform(param& p, rng& r, double radius);

// Weights U(-sqrt(6/(in+out)), +sqrt(6/(in+out))), bias zero.
void init_dense(dense_layer& layer, rng& r);

double apply_activation(activation a, double z);
double activation_derivative(activation a, double z, double y);

// activation(W x + b). Throws errc::shape_mismatch.
std::vector<double> dense_forward(const dense_layer& layer,
                                  std::span<const double> x);

// -(y ln p + (1-y) ln(1-p)) with p clamped to [1e-7, 1 - 1e-7].
double bce_loss(double p, int y);

// 1 - cosine similarity; defined as 1 when either vector is all zeros.
double cosine_distance(std::span<const double> a, std::span<const double> b);

// max(0, d(a,p) - d(a,n) + margin) over cosine distance.
double triplet_loss(std::span<const double> a, std::span<const double> p,
                    std::span<const double> n, double margin);

// Reverse-mode tape. Nodes are appended in topological order by the forward
// builders; backward() sweeps the tape once and accumulates parameter
// gradients into each param's grad tensor. The graph holds raw pointers to
// the params and layers it touches, so it must not outlive them.
class graph {
 public:
  using node = int;

  node constant(std::vector<double> values);

  // Concatenation of table rows row_ids[0..], in order. Gradients scatter
  // back into the table except for rows equal to frozen_row (-1 for none).
  node embedding_rows(param& table, std::vector<int> row_ids,
                      int frozen_row = -1);

  node dense(dense_layer& layer, node x);
  node concat(const std::vector<node>& parts);
  node mean(const std::vector<node>& parts);
  node cosine_distance(node a, node b);

  // Scalar nodes.
  node triplet_hinge(node dist_pos, node dist_neg, double margin);
  node bce(node p, int y);
  node squared_error(node a, node b);  // sum of squared differences

  const std::vector<double>& value(node n) const;
  double scalar(node n) const;

  // Seeds d(loss)=1 and accumulates into params. loss must be scalar.
  void backward(node loss);

  std::size_t size() const { return nodes_.size(); }
  void clear();

  // Smallest |pre-activation| over every relu unit recorded on the tape;
  // +inf when there are none. Finite-difference checks use this to stay away
  // from the kink.
  double min_abs_relu_preactivation() const;

 private:
  enum class op : unsigned char {
    constant,
    embed,
    dense,
    concat,
    mean,
    cosdist,
    hinge,
    bce,
    sqerr,
  };

  struct node_rec {
    op kind = op::constant;
    std::vector<int> in;
    std::vector<double> val;
    std::vector<double> grad;
    // dense
    dense_layer* layer = nullptr;
    std::vector<double> preact;
    // embed
    param* table = nullptr;
    std::vector<int> rows;
    int frozen_row = -1;
    // scalars: hinge margin / bce label / bce clamped p
    double margin = 0.0;
    int label = 0;
    double clamped = 0.0;
    // cosdist caches
    double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  };

  node_rec& rec(node n);
  const node_rec& rec(node n) const;
  node push(node_rec r);

  std::vector<node_rec> nodes_;
};

void zero_grads(const param_list& params);

// params -= lr * grads. Throws errc::non_finite_update if any component
// stops being finite.
void sgd_step(const param_list& params, double lr);

// Central finite differences against one analytic backward pass.
// loss_builder must rebuild the same forward computation from the current
// parameter values and return the loss node; it must be deterministic.
// Returns max over parameter components of
//   |analytic - numeric| / max(1e-8, |analytic| + |numeric|).
double grad_check(const param_list& params,
                  const std::function<graph::node(graph&)>& loss_builder,
                  double epsilon);

}  // namespace elink::nn
