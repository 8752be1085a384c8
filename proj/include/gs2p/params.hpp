#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "gs2p/tensor.hpp"

namespace gs2p::num {

using GradMap = std::map<std::string, Tensor>;

// Named trainable tensors. Iteration order is the sorted name order, which
// keeps the optimizer deterministic regardless of construction order.
class ParamStore {
 public:
  Tensor& add(const std::string& name, Tensor init);
  Tensor& get(const std::string& name);
  const Tensor& get(const std::string& name) const;
  bool contains(const std::string& name) const { return values_.count(name) > 0; }

  std::map<std::string, Tensor>& values() { return values_; }
  const std::map<std::string, Tensor>& values() const { return values_; }
  std::size_t total_size() const;

 private:
  std::map<std::string, Tensor> values_;
};

void accumulate_grad(GradMap& grads, const std::string& name, const Tensor& g);
void scale_grads(GradMap& grads, double s);

// Glorot/Xavier uniform init for a rows x cols weight matrix.
Tensor glorot_uniform(std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Tensor normal_tensor(std::vector<std::size_t> shape, double mean, double stdev,
                     std::mt19937_64& rng);

}  // namespace gs2p::num
