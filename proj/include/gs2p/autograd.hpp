#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gs2p/params.hpp"
#include "gs2p/tensor.hpp"

namespace gs2p::num {

class Tape;

// Handle to a node on a tape.
struct Var {
  int idx = -1;
  bool valid() const { return idx >= 0; }
};

// Reverse-mode tape. Nodes are appended in execution order (which is a
// topological order by construction) and torn down with the tape; a fresh
// tape is built for every forward pass. Values are immutable once written.
class Tape {
 public:
  explicit Tape(bool check_finite = true) : check_finite_(check_finite) {}

  Var leaf(Tensor value, const std::string& label, bool requires_grad);

  // Runs reverse accumulation from `loss`, which must be a size-1 tensor.
  void backward(Var loss);

  const Tensor& value(Var v) const { return nodes_[v.idx].value; }
  const Tensor& grad(Var v) const;
  const std::string& label(Var v) const { return nodes_[v.idx].label; }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Tensor value;
    Tensor grad;
    std::string label;
    std::function<void(Tape&)> backward;  // empty for leaves
    bool requires_grad = false;
    bool grad_ready = false;
  };

  Var emit(Tensor value, std::string label, std::vector<Var> parents,
           std::function<void(Tape&)> backward);
  Tensor& grad_mut(Var v);
  bool needs_grad(Var v) const { return nodes_[v.idx].requires_grad; }

  std::vector<Node> nodes_;
  bool check_finite_;
  bool ran_backward_ = false;

  friend Var matmul(Tape&, Var, Var);
  friend Var transpose(Tape&, Var);
  friend Var add(Tape&, Var, Var);
  friend Var sub(Tape&, Var, Var);
  friend Var mul(Tape&, Var, Var);
  friend Var add_rowvec(Tape&, Var, Var);
  friend Var mul_rowvec(Tape&, Var, Var);
  friend Var scale(Tape&, Var, double);
  friend Var relu(Tape&, Var);
  friend Var log_elem(Tape&, Var);
  friend Var softmax_rows(Tape&, Var);
  friend Var layer_norm_rows(Tape&, Var, double);
  friend Var slice_cols(Tape&, Var, std::size_t, std::size_t);
  friend Var concat_cols(Tape&, const std::vector<Var>&);
  friend Var sum_all(Tape&, Var);
  friend Var mean_all(Tape&, Var);
  friend Var attach_loss(Tape&, Var, double, const std::vector<double>&, const std::string&);
};

// ---- primitive operations -------------------------------------------------

Var matmul(Tape& t, Var a, Var b);
Var transpose(Tape& t, Var a);
Var add(Tape& t, Var a, Var b);
Var sub(Tape& t, Var a, Var b);
Var mul(Tape& t, Var a, Var b);  // elementwise
// a is R x C, b is a length-C vector broadcast across rows.
Var add_rowvec(Tape& t, Var a, Var b);
Var mul_rowvec(Tape& t, Var a, Var b);
Var scale(Tape& t, Var a, double s);
Var relu(Tape& t, Var a);
Var log_elem(Tape& t, Var a);
Var softmax_rows(Tape& t, Var a);
// Pre-affine normalization: (x - mean) / sqrt(var + eps) per row.
Var layer_norm_rows(Tape& t, Var a, double eps = 1e-5);
Var slice_cols(Tape& t, Var a, std::size_t first, std::size_t count);
Var concat_cols(Tape& t, const std::vector<Var>& parts);
Var sum_all(Tape& t, Var a);
Var mean_all(Tape& t, Var a);

// Scalar node with an externally supplied value and gradient, used to splice
// the ranking losses (which carry hand-derived gradients) into a graph.
// `grad` must have one entry per element of `scores`.
Var attach_loss(Tape& t, Var scores, double value, const std::vector<double>& grad,
                const std::string& label);

// ---- composite blocks -----------------------------------------------------

struct AttentionParams {
  Var wq, bq, wk, bk, wv, bv, wo, bo;
};

// Scaled dot-product multi-head self-attention over the rows of x.
// x is docs x d_model; all four projections are d_model x d_model.
Var multi_head_attention(Tape& t, Var x, const AttentionParams& p, std::size_t heads);

// Affine layer norm: gamma * norm(x) + beta with gamma/beta length-C vectors.
Var layer_norm_affine(Tape& t, Var x, Var gamma, Var beta, double eps = 1e-5);

// ---- graph-level interface --------------------------------------------------

// Binds a ParamStore onto a tape lazily and collects gradients afterwards.
class ParamBinding {
 public:
  ParamBinding(Tape& tape, const ParamStore& store) : tape_(&tape), store_(&store) {}
  Var operator()(const std::string& name);
  void collect_grads(GradMap& out) const;
  const std::map<std::string, Var>& bound() const { return bound_; }

 private:
  Tape* tape_;
  const ParamStore* store_;
  std::map<std::string, Var> bound_;
};

// A differentiable computation: named parameters plus a builder that wires
// inputs and parameters into named outputs on a fresh tape. Builders must be
// pure given (inputs, params).
struct Graph {
  ParamStore params;
  std::function<std::map<std::string, Var>(Tape&, const std::map<std::string, Var>& inputs,
                                           ParamBinding& param)>
      build;
  std::string loss_name = "loss";
};

std::map<std::string, Tensor> evaluate(const Graph& g, const std::map<std::string, Tensor>& inputs);

struct Gradients {
  double loss = 0.0;
  GradMap wrt_params;
  GradMap wrt_inputs;
};

// Backpropagates from the graph's loss output. Gradients are returned for
// every parameter and every input.
Gradients gradients(const Graph& g, const std::map<std::string, Tensor>& inputs);

// Central finite differences over every parameter entry; returns the worst
// relative error against the analytic gradient, with denominator
// max(|analytic|, |numeric|, 1e-8).
double finite_difference_check(Graph& g, const std::map<std::string, Tensor>& inputs,
                               double epsilon);

}  // namespace gs2p::num
