#pragma once

#include <cstddef>
#include <vector>

namespace gs2p::metrics {

// Descending-score ordering; ties broken by ascending document index.
std::vector<std::size_t> order_by_scores_desc(const std::vector<double>& scores);

// Sum over positions p = 1..min(k, n) of (2^label - 1) / log2(p + 1), where
// labels are read through `order`.
double dcg_at_k(const std::vector<int>& labels, const std::vector<std::size_t>& order,
                std::size_t k);

double ideal_dcg_at_k(const std::vector<int>& labels, std::size_t k);

struct NdcgResult {
  double value = 0.0;
  bool excluded = false;  // ideal DCG was zero; value forced to 0
};

NdcgResult ndcg_at_k_ex(const std::vector<int>& labels, const std::vector<double>& scores,
                        std::size_t k);
double ndcg_at_k(const std::vector<int>& labels, const std::vector<double>& scores,
                 std::size_t k);

// Maximum NDCG over all permutations, by exhaustive enumeration. n <= 9.
double brute_force_best_ndcg(const std::vector<int>& labels, std::size_t k);

struct RankingEval {
  std::size_t k = 0;
  std::vector<double> per_query;  // one entry per included query
  double mean = 0.0;
  std::size_t excluded = 0;  // queries with zero ideal DCG, left out of the mean
};

struct QueryScores {
  std::vector<int> labels;
  std::vector<double> scores;
};

RankingEval evaluate_ranking(const std::vector<QueryScores>& queries, std::size_t k);

}  // namespace gs2p::metrics
