#include "gs2p/mlp.hpp"

#include "gs2p/error.hpp"
#include "gs2p/util.hpp"

namespace gs2p::num {

ScoringMlp::ScoringMlp(std::size_t in_dim, std::size_t hidden, std::uint64_t seed)
    : in_dim_(in_dim), hidden_(hidden) {
  auto rng = make_rng(seed);
  if (hidden_ > 0) {
    params_.add("w1", glorot_uniform(in_dim_, hidden_, rng));
    params_.add("b1", Tensor({hidden_}));
    params_.add("w2", glorot_uniform(hidden_, 1, rng));
    params_.add("b2", Tensor({1}));
  } else {
    params_.add("w", glorot_uniform(in_dim_, 1, rng));
    params_.add("b", Tensor({1}));
  }
}

Var ScoringMlp::scores(Tape& tape, ParamBinding& param, Var features) const {
  if (tape.value(features).cols() != in_dim_)
    throw ShapeError("mlp: feature dimension " + std::to_string(tape.value(features).cols()) +
                     " does not match model input " + std::to_string(in_dim_));
  if (hidden_ == 0)
    return add_rowvec(tape, matmul(tape, features, param("w")), param("b"));
  Var h = relu(tape, add_rowvec(tape, matmul(tape, features, param("w1")), param("b1")));
  return add_rowvec(tape, matmul(tape, h, param("w2")), param("b2"));
}

std::vector<double> ScoringMlp::score_matrix(const Tensor& features) const {
  Tape tape;
  Var x = tape.leaf(features, "features", false);
  ParamBinding bind(tape, params_);
  Var s = scores(tape, bind, x);
  return tape.value(s).raw();
}

}  // namespace gs2p::num
