#include "gs2p/optim.hpp"

#include <cmath>

#include "gs2p/error.hpp"

namespace gs2p::num {

void Adam::step(ParamStore& params, const GradMap& grads) {
  ++t_;
  const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  for (const auto& [name, g] : grads) {
    Tensor& p = params.get(name);
    if (!p.same_shape(g))
      throw ShapeError("adam: gradient shape " + g.shape_str() + " does not match parameter " +
                       name + " " + p.shape_str());
    Tensor& m = m_.try_emplace(name, Tensor::zeros_like(p)).first->second;
    Tensor& v = v_.try_emplace(name, Tensor::zeros_like(p)).first->second;
    for (std::size_t i = 0; i < p.size(); ++i) {
      m[i] = cfg_.beta1 * m[i] + (1.0 - cfg_.beta1) * g[i];
      v[i] = cfg_.beta2 * v[i] + (1.0 - cfg_.beta2) * g[i] * g[i];
      const double mhat = m[i] / bc1;
      const double vhat = v[i] / bc2;
      p[i] -= cfg_.lr * mhat / (std::sqrt(vhat) + cfg_.eps);
    }
  }
}

}  // namespace gs2p::num
