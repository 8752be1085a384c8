#pragma once

#include <map>
#include <string>

#include "gs2p/params.hpp"

namespace gs2p::num {

// Adam with the usual defaults. One instance per trained model; moments are
// keyed by parameter name, so the update order is deterministic.
class Adam {
 public:
  struct Config {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
  };

  Adam() = default;
  explicit Adam(Config cfg) : cfg_(cfg) {}

  void step(ParamStore& params, const GradMap& grads);
  long step_count() const { return t_; }

 private:
  Config cfg_;
  std::map<std::string, Tensor> m_, v_;
  long t_ = 0;
};

}  // namespace gs2p::num
