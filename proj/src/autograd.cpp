#include "gs2p/autograd.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "gs2p/error.hpp"

namespace gs2p::num {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapMat = Eigen::Map<RowMat>;
using MapConst = Eigen::Map<const RowMat>;

MapConst as_matrix(const Tensor& t) {
  return MapConst(t.data(), static_cast<Eigen::Index>(t.rows()),
                  static_cast<Eigen::Index>(t.cols()));
}

MapMat as_matrix(Tensor& t) {
  return MapMat(t.data(), static_cast<Eigen::Index>(t.rows()),
                static_cast<Eigen::Index>(t.cols()));
}

}  // namespace

Var Tape::emit(Tensor value, std::string label, std::vector<Var> parents,
               std::function<void(Tape&)> backward) {
  if (check_finite_ && !value.all_finite())
    throw NonFiniteError("non-finite value produced by node " + label);
  Node n;
  n.value = std::move(value);
  n.label = std::move(label);
  n.backward = std::move(backward);
  for (Var p : parents)
    if (p.valid() && nodes_[p.idx].requires_grad) n.requires_grad = true;
  nodes_.push_back(std::move(n));
  return Var{static_cast<int>(nodes_.size()) - 1};
}

Var Tape::leaf(Tensor value, const std::string& label, bool requires_grad) {
  if (check_finite_ && !value.all_finite())
    throw NonFiniteError("non-finite value in leaf " + label);
  Node n;
  n.value = std::move(value);
  n.label = label;
  n.requires_grad = requires_grad;
  nodes_.push_back(std::move(n));
  return Var{static_cast<int>(nodes_.size()) - 1};
}

Tensor& Tape::grad_mut(Var v) {
  Node& n = nodes_[v.idx];
  if (!n.grad_ready) {
    n.grad = Tensor::zeros_like(n.value);
    n.grad_ready = true;
  }
  return n.grad;
}

const Tensor& Tape::grad(Var v) const {
  const Node& n = nodes_[v.idx];
  if (!n.grad_ready)
    throw ShapeError("gradient not computed for node " + n.label +
                     " (no backward pass reached it)");
  return n.grad;
}

void Tape::backward(Var loss) {
  const Node& ln = nodes_[loss.idx];
  if (ln.value.size() != 1)
    throw ShapeError("backward from non-scalar node " + ln.label + " of shape " +
                     ln.value.shape_str());
  grad_mut(loss)[0] = 1.0;
  for (int i = loss.idx; i >= 0; --i) {
    Node& n = nodes_[static_cast<std::size_t>(i)];
    if (n.backward && n.grad_ready && n.requires_grad) n.backward(*this);
  }
  ran_backward_ = true;
}

// ---- primitives -------------------------------------------------------------

Var matmul(Tape& t, Var a, Var b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  const std::string label =
      "matmul#" + std::to_string(t.node_count()) + av.shape_str() + "*" + bv.shape_str();
  if (av.cols() != bv.rows()) throw ShapeError("inner dimension mismatch in " + label);
  Tensor out({av.rows(), bv.cols()});
  as_matrix(out).noalias() = as_matrix(av) * as_matrix(bv);
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), label, {a, b}, [a, b, self](Tape& tp) {
    const Tensor& g = tp.grad(self);
    const Tensor& av = tp.value(a);
    const Tensor& bv = tp.value(b);
    if (tp.needs_grad(a))
      as_matrix(tp.grad_mut(a)).noalias() += as_matrix(g) * as_matrix(bv).transpose();
    if (tp.needs_grad(b))
      as_matrix(tp.grad_mut(b)).noalias() += as_matrix(av).transpose() * as_matrix(g);
  });
}

Var transpose(Tape& t, Var a) {
  const Tensor& av = t.value(a);
  Tensor out({av.cols(), av.rows()});
  as_matrix(out) = as_matrix(av).transpose();
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), "transpose#" + std::to_string(t.node_count()), {a},
                [a, self](Tape& tp) {
                  if (!tp.needs_grad(a)) return;
                  as_matrix(tp.grad_mut(a)) += as_matrix(tp.grad(self)).transpose();
                });
}

Var add(Tape& t, Var a, Var b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  const std::string label = "add#" + std::to_string(t.node_count());
  if (!av.same_shape(bv))
    throw ShapeError("shape mismatch in " + label + ": " + av.shape_str() + " vs " +
                     bv.shape_str());
  Tensor out = av;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += bv[i];
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), label, {a, b}, [a, b, self](Tape& tp) {
    const Tensor& g = tp.grad(self);
    if (tp.needs_grad(a)) {
      Tensor& ga = tp.grad_mut(a);
      for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i];
    }
    if (tp.needs_grad(b)) {
      Tensor& gb = tp.grad_mut(b);
      for (std::size_t i = 0; i < g.size(); ++i) gb[i] += g[i];
    }
  });
}

Var sub(Tape& t, Var a, Var b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  const std::string label = "sub#" + std::to_string(t.node_count());
  if (!av.same_shape(bv))
    throw ShapeError("shape mismatch in " + label + ": " + av.shape_str() + " vs " +
                     bv.shape_str());
  Tensor out = av;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= bv[i];
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), label, {a, b}, [a, b, self](Tape& tp) {
    const Tensor& g = tp.grad(self);
    if (tp.needs_grad(a)) {
      Tensor& ga = tp.grad_mut(a);
      for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i];
    }
    if (tp.needs_grad(b)) {
      Tensor& gb = tp.grad_mut(b);
      for (std::size_t i = 0; i < g.size(); ++i) gb[i] -= g[i];
    }
  });
}

Var mul(Tape& t, Var a, Var b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  const std::string label = "mul#" + std::to_string(t.node_count());
  if (!av.same_shape(bv))
    throw ShapeError("shape mismatch in " + label + ": " + av.shape_str() + " vs " +
                     bv.shape_str());
  Tensor out = av;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= bv[i];
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), label, {a, b}, [a, b, self](Tape& tp) {
    const Tensor& g = tp.grad(self);
    const Tensor& av = tp.value(a);
    const Tensor& bv = tp.value(b);
    if (tp.needs_grad(a)) {
      Tensor& ga = tp.grad_mut(a);
      for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i] * bv[i];
    }
    if (tp.needs_grad(b)) {
      Tensor& gb = tp.grad_mut(b);
      for (std::size_t i = 0; i < g.size(); ++i) gb[i] += g[i] * av[i];
    }
  });
}

Var add_rowvec(Tape& t, Var a, Var b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  const std::string label = "add_rowvec#" + std::to_string(t.node_count());
  if (bv.size() != av.cols())
    throw ShapeError("broadcast vector length " + std::to_string(bv.size()) +
                     " does not match columns of " + av.shape_str() + " in " + label);
  Tensor out = av;
  const std::size_t rows = av.rows(), cols = av.cols();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r * cols + c] += bv[c];
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), label, {a, b}, [a, b, self, rows, cols](Tape& tp) {
    const Tensor& g = tp.grad(self);
    if (tp.needs_grad(a)) {
      Tensor& ga = tp.grad_mut(a);
      for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i];
    }
    if (tp.needs_grad(b)) {
      Tensor& gb = tp.grad_mut(b);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) gb[c] += g[r * cols + c];
    }
  });
}

Var mul_rowvec(Tape& t, Var a, Var b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  const std::string label = "mul_rowvec#" + std::to_string(t.node_count());
  if (bv.size() != av.cols())
    throw ShapeError("broadcast vector length " + std::to_string(bv.size()) +
                     " does not match columns of " + av.shape_str() + " in " + label);
  Tensor out = av;
  const std::size_t rows = av.rows(), cols = av.cols();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r * cols + c] *= bv[c];
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), label, {a, b}, [a, b, self, rows, cols](Tape& tp) {
    const Tensor& g = tp.grad(self);
    const Tensor& av = tp.value(a);
    const Tensor& bv = tp.value(b);
    if (tp.needs_grad(a)) {
      Tensor& ga = tp.grad_mut(a);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) ga[r * cols + c] += g[r * cols + c] * bv[c];
    }
    if (tp.needs_grad(b)) {
      Tensor& gb = tp.grad_mut(b);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) gb[c] += g[r * cols + c] * av[r * cols + c];
    }
  });
}

Var scale(Tape& t, Var a, double s) {
  Tensor out = t.value(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= s;
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), "scale#" + std::to_string(t.node_count()), {a},
                [a, s, self](Tape& tp) {
                  if (!tp.needs_grad(a)) return;
                  const Tensor& g = tp.grad(self);
                  Tensor& ga = tp.grad_mut(a);
                  for (std::size_t i = 0; i < g.size(); ++i) ga[i] += s * g[i];
                });
}

Var relu(Tape& t, Var a) {
  Tensor out = t.value(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(0.0, out[i]);
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), "relu#" + std::to_string(t.node_count()), {a},
                [a, self](Tape& tp) {
                  if (!tp.needs_grad(a)) return;
                  const Tensor& g = tp.grad(self);
                  const Tensor& av = tp.value(a);
                  Tensor& ga = tp.grad_mut(a);
                  for (std::size_t i = 0; i < g.size(); ++i)
                    if (av[i] > 0.0) ga[i] += g[i];
                });
}

Var log_elem(Tape& t, Var a) {
  Tensor out = t.value(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::log(out[i]);
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), "log#" + std::to_string(t.node_count()), {a},
                [a, self](Tape& tp) {
                  if (!tp.needs_grad(a)) return;
                  const Tensor& g = tp.grad(self);
                  const Tensor& av = tp.value(a);
                  Tensor& ga = tp.grad_mut(a);
                  for (std::size_t i = 0; i < g.size(); ++i) ga[i] += g[i] / av[i];
                });
}

Var softmax_rows(Tape& t, Var a) {
  const Tensor& av = t.value(a);
  Tensor out = av;
  const std::size_t rows = av.rows(), cols = av.cols();
  for (std::size_t r = 0; r < rows; ++r) {
    double* row = out.data() + r * cols;
    double m = row[0];
    for (std::size_t c = 1; c < cols; ++c) m = std::max(m, row[c]);
    double sum = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      row[c] = std::exp(row[c] - m);
      sum += row[c];
    }
    for (std::size_t c = 0; c < cols; ++c) row[c] /= sum;
  }
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), "softmax#" + std::to_string(t.node_count()), {a},
                [a, self, rows, cols](Tape& tp) {
                  if (!tp.needs_grad(a)) return;
                  const Tensor& g = tp.grad(self);
                  const Tensor& y = tp.value(self);
                  Tensor& ga = tp.grad_mut(a);
                  for (std::size_t r = 0; r < rows; ++r) {
                    const double* gr = g.data() + r * cols;
                    const double* yr = y.data() + r * cols;
                    double dot = 0.0;
                    for (std::size_t c = 0; c < cols; ++c) dot += gr[c] * yr[c];
                    double* gar = ga.data() + r * cols;
                    for (std::size_t c = 0; c < cols; ++c) gar[c] += yr[c] * (gr[c] - dot);
                  }
                });
}

Var layer_norm_rows(Tape& t, Var a, double eps) {
  const Tensor& av = t.value(a);
  const std::size_t rows = av.rows(), cols = av.cols();
  Tensor out = av;
  std::vector<double> inv_std(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    double* row = out.data() + r * cols;
    double mean = 0.0;
    for (std::size_t c = 0; c < cols; ++c) mean += row[c];
    mean /= static_cast<double>(cols);
    double var = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      const double d = row[c] - mean;
      var += d * d;
    }
    var /= static_cast<double>(cols);
    const double is = 1.0 / std::sqrt(var + eps);
    inv_std[r] = is;
    for (std::size_t c = 0; c < cols; ++c) row[c] = (row[c] - mean) * is;
  }
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), "layer_norm#" + std::to_string(t.node_count()), {a},
                [a, self, rows, cols, inv_std = std::move(inv_std)](Tape& tp) {
                  if (!tp.needs_grad(a)) return;
                  const Tensor& g = tp.grad(self);
                  const Tensor& y = tp.value(self);  // normalized output
                  Tensor& ga = tp.grad_mut(a);
                  for (std::size_t r = 0; r < rows; ++r) {
                    const double* gr = g.data() + r * cols;
                    const double* yr = y.data() + r * cols;
                    double g_mean = 0.0, gy_mean = 0.0;
                    for (std::size_t c = 0; c < cols; ++c) {
                      g_mean += gr[c];
                      gy_mean += gr[c] * yr[c];
                    }
                    g_mean /= static_cast<double>(cols);
                    gy_mean /= static_cast<double>(cols);
                    double* gar = ga.data() + r * cols;
                    for (std::size_t c = 0; c < cols; ++c)
                      gar[c] += inv_std[r] * (gr[c] - g_mean - yr[c] * gy_mean);
                  }
                });
}

Var slice_cols(Tape& t, Var a, std::size_t first, std::size_t count) {
  const Tensor& av = t.value(a);
  const std::string label = "slice_cols#" + std::to_string(t.node_count());
  if (first + count > av.cols())
    throw ShapeError(label + ": range [" + std::to_string(first) + "," +
                     std::to_string(first + count) + ") exceeds " + av.shape_str());
  const std::size_t rows = av.rows(), cols = av.cols();
  Tensor out({rows, count});
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < count; ++c) out[r * count + c] = av[r * cols + first + c];
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), label, {a}, [a, self, first, count, rows, cols](Tape& tp) {
    if (!tp.needs_grad(a)) return;
    const Tensor& g = tp.grad(self);
    Tensor& ga = tp.grad_mut(a);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < count; ++c) ga[r * cols + first + c] += g[r * count + c];
  });
}

Var concat_cols(Tape& t, const std::vector<Var>& parts) {
  if (parts.empty()) throw ShapeError("concat_cols of zero tensors");
  const std::size_t rows = t.value(parts[0]).rows();
  std::size_t total = 0;
  for (Var p : parts) {
    if (t.value(p).rows() != rows)
      throw ShapeError("concat_cols: row count mismatch at node " + t.label(p));
    total += t.value(p).cols();
  }
  Tensor out({rows, total});
  std::size_t off = 0;
  for (Var p : parts) {
    const Tensor& pv = t.value(p);
    const std::size_t pc = pv.cols();
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < pc; ++c) out[r * total + off + c] = pv[r * pc + c];
    off += pc;
  }
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(std::move(out), "concat_cols#" + std::to_string(t.node_count()), parts,
                [parts, self, rows, total](Tape& tp) {
                  const Tensor& g = tp.grad(self);
                  std::size_t off = 0;
                  for (Var p : parts) {
                    const std::size_t pc = tp.value(p).cols();
                    if (tp.needs_grad(p)) {
                      Tensor& gp = tp.grad_mut(p);
                      for (std::size_t r = 0; r < rows; ++r)
                        for (std::size_t c = 0; c < pc; ++c)
                          gp[r * pc + c] += g[r * total + off + c];
                    }
                    off += pc;
                  }
                });
}

Var sum_all(Tape& t, Var a) {
  const Tensor& av = t.value(a);
  double s = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) s += av[i];
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(Tensor::scalar(s), "sum#" + std::to_string(t.node_count()), {a},
                [a, self](Tape& tp) {
                  if (!tp.needs_grad(a)) return;
                  const double g = tp.grad(self)[0];
                  Tensor& ga = tp.grad_mut(a);
                  for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += g;
                });
}

Var mean_all(Tape& t, Var a) {
  const Tensor& av = t.value(a);
  const double inv = 1.0 / static_cast<double>(av.size());
  double s = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) s += av[i];
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(Tensor::scalar(s * inv), "mean#" + std::to_string(t.node_count()), {a},
                [a, self, inv](Tape& tp) {
                  if (!tp.needs_grad(a)) return;
                  const double g = tp.grad(self)[0] * inv;
                  Tensor& ga = tp.grad_mut(a);
                  for (std::size_t i = 0; i < ga.size(); ++i) ga[i] += g;
                });
}

Var attach_loss(Tape& t, Var scores, double value, const std::vector<double>& grad,
                const std::string& label) {
  const Tensor& sv = t.value(scores);
  if (grad.size() != sv.size())
    throw ShapeError("attach_loss " + label + ": gradient length " +
                     std::to_string(grad.size()) + " does not match scores " + sv.shape_str());
  const Var self{static_cast<int>(t.node_count())};
  return t.emit(Tensor::scalar(value), label, {scores},
                [scores, self, grad](Tape& tp) {
                  if (!tp.needs_grad(scores)) return;
                  const double g = tp.grad(self)[0];
                  Tensor& gs = tp.grad_mut(scores);
                  for (std::size_t i = 0; i < grad.size(); ++i) gs[i] += g * grad[i];
                });
}

// ---- composite blocks ---------------------------------------------------------

Var multi_head_attention(Tape& t, Var x, const AttentionParams& p, std::size_t heads) {
  const std::size_t d_model = t.value(x).cols();
  if (heads == 0 || d_model % heads != 0)
    throw ShapeError("attention width " + std::to_string(d_model) +
                     " not divisible by head count " + std::to_string(heads));
  const std::size_t d_head = d_model / heads;
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(d_head));

  Var q = add_rowvec(t, matmul(t, x, p.wq), p.bq);
  Var k = add_rowvec(t, matmul(t, x, p.wk), p.bk);
  Var v = add_rowvec(t, matmul(t, x, p.wv), p.bv);

  std::vector<Var> outs;
  outs.reserve(heads);
  for (std::size_t h = 0; h < heads; ++h) {
    Var qh = slice_cols(t, q, h * d_head, d_head);
    Var kh = slice_cols(t, k, h * d_head, d_head);
    Var vh = slice_cols(t, v, h * d_head, d_head);
    Var att = softmax_rows(t, scale(t, matmul(t, qh, transpose(t, kh)), inv_sqrt));
    outs.push_back(matmul(t, att, vh));
  }
  Var merged = heads == 1 ? outs[0] : concat_cols(t, outs);
  return add_rowvec(t, matmul(t, merged, p.wo), p.bo);
}

Var layer_norm_affine(Tape& t, Var x, Var gamma, Var beta, double eps) {
  return add_rowvec(t, mul_rowvec(t, layer_norm_rows(t, x, eps), gamma), beta);
}

// ---- graph-level interface ------------------------------------------------------

Var ParamBinding::operator()(const std::string& name) {
  auto it = bound_.find(name);
  if (it != bound_.end()) return it->second;
  Var v = tape_->leaf(store_->get(name), name, true);
  bound_.emplace(name, v);
  return v;
}

void ParamBinding::collect_grads(GradMap& out) const {
  for (const auto& [name, var] : bound_) accumulate_grad(out, name, tape_->grad(var));
}

namespace {

struct BuiltGraph {
  Tape tape;
  std::map<std::string, Var> inputs;
  std::map<std::string, Var> outputs;
  ParamBinding binding;
};

}  // namespace

std::map<std::string, Tensor> evaluate(const Graph& g,
                                       const std::map<std::string, Tensor>& inputs) {
  Tape tape;
  std::map<std::string, Var> in_vars;
  for (const auto& [name, tensor] : inputs) in_vars[name] = tape.leaf(tensor, name, false);
  ParamBinding bind(tape, g.params);
  auto out_vars = g.build(tape, in_vars, bind);
  std::map<std::string, Tensor> out;
  for (const auto& [name, var] : out_vars) out[name] = tape.value(var);
  return out;
}

Gradients gradients(const Graph& g, const std::map<std::string, Tensor>& inputs) {
  Tape tape;
  std::map<std::string, Var> in_vars;
  for (const auto& [name, tensor] : inputs) in_vars[name] = tape.leaf(tensor, name, true);
  ParamBinding bind(tape, g.params);
  auto out_vars = g.build(tape, in_vars, bind);
  auto loss_it = out_vars.find(g.loss_name);
  if (loss_it == out_vars.end())
    throw ShapeError("graph has no output named '" + g.loss_name + "'");
  tape.backward(loss_it->second);

  Gradients result;
  result.loss = tape.value(loss_it->second).scalar_value();
  bind.collect_grads(result.wrt_params);
  for (const auto& [name, var] : in_vars) result.wrt_inputs[name] = tape.grad(var);
  return result;
}

double finite_difference_check(Graph& g, const std::map<std::string, Tensor>& inputs,
                               double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1e-2))
    throw ConfigError("finite_difference_check: epsilon must be in (0, 1e-2]");
  const Gradients analytic = gradients(g, inputs);
  auto loss_at = [&]() {
    auto out = evaluate(g, inputs);
    return out.at(g.loss_name).scalar_value();
  };
  double worst = 0.0;
  for (auto& [name, tensor] : g.params.values()) {
    const Tensor& agrad = analytic.wrt_params.at(name);
    for (std::size_t i = 0; i < tensor.size(); ++i) {
      const double saved = tensor[i];
      tensor[i] = saved + epsilon;
      const double up = loss_at();
      tensor[i] = saved - epsilon;
      const double down = loss_at();
      tensor[i] = saved;
      const double numeric = (up - down) / (2.0 * epsilon);
      const double denom = std::max({std::abs(agrad[i]), std::abs(numeric), 1e-8});
      worst = std::max(worst, std::abs(agrad[i] - numeric) / denom);
    }
  }
  return worst;
}

}  // namespace gs2p::num
