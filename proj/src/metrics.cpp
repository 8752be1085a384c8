#include "gs2p/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gs2p/error.hpp"

namespace gs2p::metrics {

namespace {
double gain(int label) { return std::exp2(static_cast<double>(label)) - 1.0; }
double discount(std::size_t position_1based) {
  return 1.0 / std::log2(static_cast<double>(position_1based) + 1.0);
}
}  // namespace

std::vector<std::size_t> order_by_scores_desc(const std::vector<double>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

double dcg_at_k(const std::vector<int>& labels, const std::vector<std::size_t>& order,
                std::size_t k) {
  if (k == 0) throw ConfigError("dcg_at_k: k must be positive");
  if (order.size() != labels.size())
    throw ShapeError("dcg_at_k: order length does not match labels");
  const std::size_t depth = std::min(k, labels.size());
  double dcg = 0.0;
  for (std::size_t p = 0; p < depth; ++p) dcg += gain(labels[order[p]]) * discount(p + 1);
  return dcg;
}

double ideal_dcg_at_k(const std::vector<int>& labels, std::size_t k) {
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  const std::size_t depth = std::min(k, sorted.size());
  double dcg = 0.0;
  for (std::size_t p = 0; p < depth; ++p) dcg += gain(sorted[p]) * discount(p + 1);
  return dcg;
}

NdcgResult ndcg_at_k_ex(const std::vector<int>& labels, const std::vector<double>& scores,
                        std::size_t k) {
  if (labels.size() != scores.size())
    throw ShapeError("ndcg_at_k: labels length " + std::to_string(labels.size()) +
                     " does not match scores length " + std::to_string(scores.size()));
  const double ideal = ideal_dcg_at_k(labels, k);
  if (ideal <= 0.0) return {0.0, true};
  const double dcg = dcg_at_k(labels, order_by_scores_desc(scores), k);
  return {dcg / ideal, false};
}

double ndcg_at_k(const std::vector<int>& labels, const std::vector<double>& scores,
                 std::size_t k) {
  return ndcg_at_k_ex(labels, scores, k).value;
}

double brute_force_best_ndcg(const std::vector<int>& labels, std::size_t k) {
  if (labels.size() > 9)
    throw ConfigError("brute_force_best_ndcg: list length " + std::to_string(labels.size()) +
                      " exceeds enumeration limit 9");
  const double ideal = ideal_dcg_at_k(labels, k);
  if (ideal <= 0.0) return 0.0;
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  double best = 0.0;
  do {
    best = std::max(best, dcg_at_k(labels, order, k));
  } while (std::next_permutation(order.begin(), order.end()));
  return best / ideal;
}

RankingEval evaluate_ranking(const std::vector<QueryScores>& queries, std::size_t k) {
  RankingEval eval;
  eval.k = k;
  double sum = 0.0;
  for (const auto& q : queries) {
    const NdcgResult r = ndcg_at_k_ex(q.labels, q.scores, k);
    if (r.excluded) {
      ++eval.excluded;
      continue;
    }
    eval.per_query.push_back(r.value);
    sum += r.value;
  }
  eval.mean = eval.per_query.empty() ? 0.0 : sum / static_cast<double>(eval.per_query.size());
  return eval;
}

}  // namespace gs2p::metrics
