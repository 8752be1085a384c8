#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gs2p::losses {

enum class LossKind { Rmse, RankNet, LambdaRank, ListNet, ListMle, ApproxNdcg, NeuralNdcg };

struct LossParams {
  double sigmoid_scale = 1.0;  // RankNet / LambdaRank
  double temperature = 1.0;    // ApproxNDCG / NeuralNDCG
  std::size_t ndcg_cutoff = 10;  // LambdaRank / NeuralNDCG
};

struct LossResult {
  double value = 0.0;
  std::vector<double> grad;  // d value / d scores
};

// All losses take one query's predicted scores and integer relevance grades.
// Queries contributing no informative pairs (or zero ideal DCG) yield zero
// loss and zero gradient so batch shapes stay stable.

LossResult rmse_loss(const std::vector<double>& scores, const std::vector<int>& labels);
LossResult ranknet_loss(const std::vector<double>& scores, const std::vector<int>& labels,
                        double sigmoid_scale);
// LambdaRank is gradient-only; these are the lambdas (descent direction raises
// the scores of higher-graded documents).
std::vector<double> lambdarank_lambdas(const std::vector<double>& scores,
                                       const std::vector<int>& labels, std::size_t k,
                                       double sigmoid_scale);
LossResult listnet_loss(const std::vector<double>& scores, const std::vector<int>& labels);
LossResult listmle_loss(const std::vector<double>& scores, const std::vector<int>& labels);
LossResult approx_ndcg_loss(const std::vector<double>& scores, const std::vector<int>& labels,
                            double temperature);
LossResult neural_ndcg_loss(const std::vector<double>& scores, const std::vector<int>& labels,
                            double temperature, std::size_t k);

// Builds the relaxed sort matrix used by NeuralNDCG (n rows, each a softmax).
std::vector<std::vector<double>> neural_sort_matrix(const std::vector<double>& scores,
                                                    double temperature);

// Dispatch by kind. LambdaRank reports value 0 with the lambdas as gradient.
LossResult evaluate(LossKind kind, const std::vector<double>& scores,
                    const std::vector<int>& labels, const LossParams& params = {});

LossKind loss_from_name(const std::string& name);
std::string loss_name(LossKind kind);
const std::vector<LossKind>& all_loss_kinds();

}  // namespace gs2p::losses
