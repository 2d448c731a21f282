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

#include "elink/nn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elink/error.hpp"

namespace elink::nn {

namespace {

constexpr double kBceEps = 1e-7;

double stable_sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  double e = std::exp(z);
  return e / (1.0 + e);
}

double l2_norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

const char* activation_name(activation a) {
  switch (a) {
    case activation::identity: return "identity";
    case activation::relu: return "relu";
    case activation::sigmoid: return "sigmoid";
    case activation::tanh: return "tanh";
  }
  return "identity";
}

activation activation_from_name(const std::string& name) {
  if (name == "identity") return activation::identity;
  if (name == "relu") return activation::relu;
  if (name == "sigmoid") return activation::sigmoid;
  if (name == "tanh") return activation::tanh;
  fail(errc::bad_config, "unknown activation " + name);
}

void init_uniform(param& p, rng& r, double radius) {
  for (double& v : p.value.v) v = r.uniform(-radius, radius);
}

void init_dense(dense_layer& layer, rng& r) {
  double radius = std::sqrt(6.0 / (layer.in() + layer.out()));
  init_uniform(layer.w, r, radius);
  std::fill(layer.b.value.v.begin(), layer.b.value.v.end(), 0.0);
}

double apply_activation(activation a, double z) {
  switch (a) {
    case activation::identity: return z;
    case activation::relu: return z > 0.0 ? z : 0.0;
    case activation::sigmoid: return stable_sigmoid(z);
    case activation::tanh: return std::tanh(z);
  }
  return z;
}

// y is the already-computed activation output for z; sigmoid and tanh reuse it.
double activation_derivative(activation a, double z, double y) {
  switch (a) {
    case activation::identity: return 1.0;
    case activation::relu: return z > 0.0 ? 1.0 : 0.0;
    case activation::sigmoid: return y * (1.0 - y);
    case activation::tanh: return 1.0 - y * y;
  }
  return 1.0;
}

std::vector<double> dense_forward(const dense_layer& layer,
                                  std::span<const double> x) {
  if (static_cast<int>(x.size()) != layer.in()) {
    fail(errc::shape_mismatch,
         layer.w.name + ": input " + std::to_string(x.size()) + ", want " +
             std::to_string(layer.in()));
  }
  std::vector<double> y(static_cast<std::size_t>(layer.out()));
  for (int r = 0; r < layer.out(); ++r) {
    double z = layer.b.value.v[static_cast<std::size_t>(r)];
    const double* wrow = &layer.w.value.v[static_cast<std::size_t>(r) * layer.in()];
    for (int c = 0; c < layer.in(); ++c) z += wrow[c] * x[c];
    y[static_cast<std::size_t>(r)] = apply_activation(layer.act, z);
  }
  return y;
}

double bce_loss(double p, int y) {
  double q = std::clamp(p, kBceEps, 1.0 - kBceEps);
  return -(y * std::log(q) + (1 - y) * std::log(1.0 - q));
}

double cosine_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    fail(errc::shape_mismatch, "cosine_distance on unequal lengths");
  }
  double na = l2_norm(a);
  double nb = l2_norm(b);
  if (na == 0.0 || nb == 0.0) return 1.0;
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return 1.0 - dot / (na * nb);
}

double triplet_loss(std::span<const double> a, std::span<const double> p,
                    std::span<const double> n, double margin) {
  double hinge = cosine_distance(a, p) - cosine_distance(a, n) + margin;
  return hinge > 0.0 ? hinge : 0.0;
}

graph::node_rec& graph::rec(node n) {
  if (n < 0 || n >= static_cast<node>(nodes_.size())) {
    fail(errc::graph_not_recorded, "node " + std::to_string(n));
  }
  return nodes_[static_cast<std::size_t>(n)];
}

const graph::node_rec& graph::rec(node n) const {
  if (n < 0 || n >= static_cast<node>(nodes_.size())) {
    fail(errc::graph_not_recorded, "node " + std::to_string(n));
  }
  return nodes_[static_cast<std::size_t>(n)];
}

graph::node graph::push(node_rec r) {
  nodes_.push_back(std::move(r));
  return static_cast<node>(nodes_.size() - 1);
}

graph::node graph::constant(std::vector<double> values) {
  node_rec r;
  r.kind = op::constant;
  r.val = std::move(values);
  return push(r);
}

graph::node graph::embedding_rows(param& table, std::vector<int> row_ids,
                                  int frozen_row) {
  const int cols = table.value.cols;
  node_rec r;
  r.kind = op::embed;
  r.table = &table;
  r.frozen_row = frozen_row;
  r.val.reserve(row_ids.size() * static_cast<std::size_t>(cols));
  for (int id : row_ids) {
    if (id < 0 || id >= table.value.rows) {
      fail(errc::shape_mismatch, table.name + ": row " + std::to_string(id));
    }
    const double* row = &table.value.v[static_cast<std::size_t>(id) * cols];
    r.val.insert(r.val.end(), row, row + cols);
  }
  r.rows = std::move(row_ids);
  return push(std::move(r));
}

graph::node graph::dense(dense_layer& layer, node x) {
  const node_rec& xin = rec(x);
  if (static_cast<int>(xin.val.size()) != layer.in()) {
    fail(errc::shape_mismatch,
         layer.w.name + ": input " + std::to_string(xin.val.size()) +
             ", want " + std::to_string(layer.in()));
  }
  node_rec r;
  r.kind = op::dense;
  r.in = {x};
  r.layer = &layer;
  r.preact.resize(static_cast<std::size_t>(layer.out()));
  r.val.resize(static_cast<std::size_t>(layer.out()));
  for (int row = 0; row < layer.out(); ++row) {
    double z = layer.b.value.v[static_cast<std::size_t>(row)];
    const double* wrow =
        &layer.w.value.v[static_cast<std::size_t>(row) * layer.in()];
    for (int c = 0; c < layer.in(); ++c) z += wrow[c] * xin.val[c];
    r.preact[static_cast<std::size_t>(row)] = z;
    r.val[static_cast<std::size_t>(row)] = apply_activation(layer.act, z);
  }
  return push(std::move(r));
}

graph::node graph::concat(const std::vector<node>& parts) {
  if (parts.empty()) fail(errc::shape_mismatch, "concat of nothing");
  node_rec r;
  r.kind = op::concat;
  r.in = parts;
  for (node p : parts) {
    const node_rec& pr = rec(p);
    r.val.insert(r.val.end(), pr.val.begin(), pr.val.end());
  }
  return push(std::move(r));
}

graph::node graph::mean(const std::vector<node>& parts) {
  if (parts.empty()) fail(errc::shape_mismatch, "mean of nothing");
  const std::size_t dim = rec(parts[0]).val.size();
  node_rec r;
  r.kind = op::mean;
  r.in = parts;
  r.val.assign(dim, 0.0);
  for (node p : parts) {
    const node_rec& pr = rec(p);
    if (pr.val.size() != dim) fail(errc::shape_mismatch, "mean of mixed dims");
    for (std::size_t i = 0; i < dim; ++i) r.val[i] += pr.val[i];
  }
  for (double& v : r.val) v /= static_cast<double>(parts.size());
  return push(std::move(r));
}

graph::node graph::cosine_distance(node a, node b) {
  const node_rec& ra = rec(a);
  const node_rec& rb = rec(b);
  if (ra.val.size() != rb.val.size()) {
    fail(errc::shape_mismatch, "cosine_distance on unequal lengths");
  }
  node_rec r;
  r.kind = op::cosdist;
  r.in = {a, b};
  r.norm_a = l2_norm(ra.val);
  r.norm_b = l2_norm(rb.val);
  double dot = 0.0;
  for (std::size_t i = 0; i < ra.val.size(); ++i) dot += ra.val[i] * rb.val[i];
  r.dot = dot;
  double d = (r.norm_a == 0.0 || r.norm_b == 0.0)
                 ? 1.0
                 : 1.0 - dot / (r.norm_a * r.norm_b);
  r.val = {d};
  return push(std::move(r));
}

graph::node graph::triplet_hinge(node dist_pos, node dist_neg, double margin) {
  double dp = scalar(dist_pos);
  double dn = scalar(dist_neg);
  node_rec r;
  r.kind = op::hinge;
  r.in = {dist_pos, dist_neg};
  r.margin = margin;
  double h = dp - dn + margin;
  r.val = {h > 0.0 ? h : 0.0};
  return push(std::move(r));
}

graph::node graph::bce(node p, int y) {
  double pv = scalar(p);
  node_rec r;
  r.kind = op::bce;
  r.in = {p};
  r.label = y;
  r.clamped = std::clamp(pv, kBceEps, 1.0 - kBceEps);
  r.val = {-(y * std::log(r.clamped) + (1 - y) * std::log(1.0 - r.clamped))};
  return push(std::move(r));
}

graph::node graph::squared_error(node a, node b) {
  const node_rec& ra = rec(a);
  const node_rec& rb = rec(b);
  if (ra.val.size() != rb.val.size()) {
    fail(errc::shape_mismatch, "squared_error on unequal lengths");
  }
  node_rec r;
  r.kind = op::sqerr;
  r.in = {a, b};
  double s = 0.0;
  for (std::size_t i = 0; i < ra.val.size(); ++i) {
    double d = ra.val[i] - rb.val[i];
    s += d * d;
  }
  r.val = {s};
  return push(std::move(r));
}

const std::vector<double>& graph::value(node n) const { return rec(n).val; }

double graph::scalar(node n) const {
  const node_rec& r = rec(n);
  if (r.val.size() != 1) {
    fail(errc::shape_mismatch,
         "scalar of a " + std::to_string(r.val.size()) + "-dim node");
  }
  return r.val[0];
}

void graph::clear() { nodes_.clear(); }

double graph::min_abs_relu_preactivation() const {
  double best = std::numeric_limits<double>::infinity();
  for (const node_rec& r : nodes_) {
    if (r.kind == op::dense && r.layer->act == activation::relu) {
      for (double z : r.preact) best = std::min(best, std::abs(z));
    }
  }
  return best;
}

void graph::backward(node loss) {
  if (nodes_.empty()) fail(errc::graph_not_recorded, "empty graph");
  node_rec& top = rec(loss);
  if (top.val.size() != 1) {
    fail(errc::shape_mismatch, "backward from a non-scalar node");
  }

  for (node_rec& r : nodes_) r.grad.assign(r.val.size(), 0.0);
  top.grad[0] = 1.0;

  for (node n = loss; n >= 0; --n) {
    node_rec& r = nodes_[static_cast<std::size_t>(n)];
    switch (r.kind) {
      case op::constant:
        break;
      case op::embed: {
        const int cols = r.table->value.cols;
        for (std::size_t k = 0; k < r.rows.size(); ++k) {
          int row = r.rows[k];
          if (row == r.frozen_row) continue;
          double* grow = &r.table->grad.v[static_cast<std::size_t>(row) * cols];
          const double* g = &r.grad[k * static_cast<std::size_t>(cols)];
          for (int c = 0; c < cols; ++c) grow[c] += g[c];
        }
        break;
      }
      case op::dense: {
        dense_layer& l = *r.layer;
        node_rec& xin = nodes_[static_cast<std::size_t>(r.in[0])];
        for (int row = 0; row < l.out(); ++row) {
          double dz = r.grad[static_cast<std::size_t>(row)] *
                      activation_derivative(l.act,
                                            r.preact[static_cast<std::size_t>(row)],
                                            r.val[static_cast<std::size_t>(row)]);
          if (dz == 0.0) continue;
          l.b.grad.v[static_cast<std::size_t>(row)] += dz;
          double* wgrow = &l.w.grad.v[static_cast<std::size_t>(row) * l.in()];
          const double* wrow =
              &l.w.value.v[static_cast<std::size_t>(row) * l.in()];
          for (int c = 0; c < l.in(); ++c) {
            wgrow[c] += dz * xin.val[static_cast<std::size_t>(c)];
            xin.grad[static_cast<std::size_t>(c)] += dz * wrow[c];
          }
        }
        break;
      }
      case op::concat: {
        std::size_t offset = 0;
        for (node p : r.in) {
          node_rec& pr = nodes_[static_cast<std::size_t>(p)];
          for (std::size_t i = 0; i < pr.val.size(); ++i) {
            pr.grad[i] += r.grad[offset + i];
          }
          offset += pr.val.size();
        }
        break;
      }
      case op::mean: {
        const double inv = 1.0 / static_cast<double>(r.in.size());
        for (node p : r.in) {
          node_rec& pr = nodes_[static_cast<std::size_t>(p)];
          for (std::size_t i = 0; i < pr.val.size(); ++i) {
            pr.grad[i] += r.grad[i] * inv;
          }
        }
        break;
      }
      case op::cosdist: {
        // Zero gradient by convention when either side is all zeros.
        if (r.norm_a == 0.0 || r.norm_b == 0.0) break;
        node_rec& ra = nodes_[static_cast<std::size_t>(r.in[0])];
        node_rec& rb = nodes_[static_cast<std::size_t>(r.in[1])];
        const double g = r.grad[0];
        const double na = r.norm_a, nb = r.norm_b, dot = r.dot;
        for (std::size_t i = 0; i < ra.val.size(); ++i) {
          // d = 1 - dot/(na*nb)
          double ds_da = rb.val[i] / (na * nb) - dot * ra.val[i] / (na * na * na * nb);
          double ds_db = ra.val[i] / (na * nb) - dot * rb.val[i] / (nb * nb * nb * na);
          ra.grad[i] += g * -ds_da;
          rb.grad[i] += g * -ds_db;
        }
        break;
      }
      case op::hinge: {
        if (r.val[0] > 0.0) {
          nodes_[static_cast<std::size_t>(r.in[0])].grad[0] += r.grad[0];
          nodes_[static_cast<std::size_t>(r.in[1])].grad[0] -= r.grad[0];
        }
        break;
      }
      case op::bce: {
        // Gradient at the clamped probability; the clamp passes through.
        const double q = r.clamped;
        const double dldp = -r.label / q + (1 - r.label) / (1.0 - q);
        nodes_[static_cast<std::size_t>(r.in[0])].grad[0] += r.grad[0] * dldp;
        break;
      }
      case op::sqerr: {
        node_rec& ra = nodes_[static_cast<std::size_t>(r.in[0])];
        node_rec& rb = nodes_[static_cast<std::size_t>(r.in[1])];
        for (std::size_t i = 0; i < ra.val.size(); ++i) {
          double d = 2.0 * (ra.val[i] - rb.val[i]) * r.grad[0];
          ra.grad[i] += d;
          rb.grad[i] -= d;
        }
        break;
      }
    }
  }
}

void zero_grads(const param_list& params) {
  for (param* p : params) std::fill(p->grad.v.begin(), p->grad.v.end(), 0.0);
}

void sgd_step(const param_list& params, double lr) {
  for (param* p : params) {
    for (std::size_t i = 0; i < p->value.v.size(); ++i) {
      p->value.v[i] -= lr * p->grad.v[i];
      if (!std::isfinite(p->value.v[i])) {
        fail(errc::non_finite_update, p->name);
      }
    }
  }
}

double grad_check(const param_list& params,
                  const std::function<graph::node(graph&)>& loss_builder,
                  double epsilon) {
  // One analytic pass.
  zero_grads(params);
  {
    graph g;
    graph::node loss = loss_builder(g);
    g.backward(loss);
  }

  std::vector<std::vector<double>> analytic;
  analytic.reserve(params.size());
  for (param* p : params) analytic.push_back(p->grad.v);

  auto eval = [&]() {
    graph g;
    graph::node loss = loss_builder(g);
    return g.scalar(loss);
  };

  double max_rel = 0.0;
  for (std::size_t pi = 0; pi < params.size(); ++pi) {
    param* p = params[pi];
    for (std::size_t i = 0; i < p->value.v.size(); ++i) {
      const double saved = p->value.v[i];
      p->value.v[i] = saved + epsilon;
      double hi = eval();
      p->value.v[i] = saved - epsilon;
      double lo = eval();
      p->value.v[i] = saved;

      double numeric = (hi - lo) / (2.0 * epsilon);
      double a = analytic[pi][i];
      double rel = std::abs(a - numeric) /
                   std::max(1e-8, std::abs(a) + std::abs(numeric));
      max_rel = std::max(max_rel, rel);
    }
  }
  return max_rel;
}

}  // namespace elink::nn
