#pragma once

#include <cstdint>
#include <vector>

#include "gs2p/autograd.hpp"
#include "gs2p/params.hpp"

namespace gs2p::num {

// One-hidden-layer scoring network mapping each row of a feature matrix to a
// scalar. hidden == 0 gives a plain linear scorer.
class ScoringMlp {
 public:
  ScoringMlp() = default;
  ScoringMlp(std::size_t in_dim, std::size_t hidden, std::uint64_t seed);

  // Scores on a tape: features is docs x in_dim, result is docs x 1.
  Var scores(Tape& tape, ParamBinding& param, Var features) const;

  // Forward-only scoring of one group.
  std::vector<double> score_matrix(const Tensor& features) const;

  std::size_t in_dim() const { return in_dim_; }
  std::size_t hidden() const { return hidden_; }
  ParamStore& params() { return params_; }
  const ParamStore& params() const { return params_; }

 private:
  std::size_t in_dim_ = 0;
  std::size_t hidden_ = 0;
  ParamStore params_;
};

}  // namespace gs2p::num
