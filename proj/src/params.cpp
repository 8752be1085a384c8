#include "gs2p/params.hpp"

#include <cmath>

#include "gs2p/error.hpp"

namespace gs2p::num {

Tensor& ParamStore::add(const std::string& name, Tensor init) {
  auto [it, inserted] = values_.emplace(name, std::move(init));
  if (!inserted) throw ConfigError("duplicate parameter name: " + name);
  return it->second;
}

Tensor& ParamStore::get(const std::string& name) {
  auto it = values_.find(name);
  if (it == values_.end()) throw ConfigError("unknown parameter: " + name);
  return it->second;
}

const Tensor& ParamStore::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw ConfigError("unknown parameter: " + name);
  return it->second;
}

std::size_t ParamStore::total_size() const {
  std::size_t n = 0;
  for (const auto& [name, t] : values_) n += t.size();
  return n;
}

void accumulate_grad(GradMap& grads, const std::string& name, const Tensor& g) {
  auto it = grads.find(name);
  if (it == grads.end()) {
    grads.emplace(name, g);
    return;
  }
  if (!it->second.same_shape(g))
    throw ShapeError("gradient shape mismatch for " + name + ": " + it->second.shape_str() +
                     " vs " + g.shape_str());
  for (std::size_t i = 0; i < g.size(); ++i) it->second[i] += g[i];
}

void scale_grads(GradMap& grads, double s) {
  for (auto& [name, g] : grads)
    for (std::size_t i = 0; i < g.size(); ++i) g[i] *= s;
}

Tensor glorot_uniform(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
  std::uniform_real_distribution<double> dist(-limit, limit);
  Tensor t({rows, cols});
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = dist(rng);
  return t;
}

Tensor normal_tensor(std::vector<std::size_t> shape, double mean, double stdev,
                     std::mt19937_64& rng) {
  std::normal_distribution<double> dist(mean, stdev);
  Tensor t(std::move(shape));
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = dist(rng);
  return t;
}

}  // namespace gs2p::num
