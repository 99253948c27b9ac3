#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "attr/attribute.hpp"
#include "text/tokenize.hpp"

namespace wanattr {

struct FrequencyVector {
  std::vector<std::string> vocab;
  std::vector<std::int64_t> counts;  // per-vocab-word occurrence counts
  std::vector<double> rel;           // counts / total_words
  std::int64_t total_words = 0;
};

FrequencyVector frequency_vector(const TokenizedText& text, const std::vector<std::string>& vocab);

/// Aggregated per-author counts for the naive Bayes model.
struct NaiveBayesProfile {
  std::string author_id;
  std::vector<std::string> vocab;
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;  // sum of counts
};

NaiveBayesProfile aggregate_counts(const std::string& author_id,
                                   const std::vector<FrequencyVector>& vectors);

/// Multinomial naive Bayes with add-one smoothing and a uniform prior:
/// score = -sum_i text.counts[i] * log((author counts[i] + 1) / (author
/// total + f)); the minimum score wins, ties by ascending author id.
AttributionResult naive_bayes_attribute(const std::string& text_id, const FrequencyVector& text,
                                        const std::vector<NaiveBayesProfile>& profiles);

/// k-nearest-neighbor vote on relative-frequency vectors under the l2
/// metric. Distance ties keep stable input order; label ties go to the
/// ascending author id.
AttributionResult knn_attribute(const std::string& text_id, const FrequencyVector& text,
                                const std::vector<std::pair<FrequencyVector, std::string>>& labeled,
                                std::size_t k);

/// Majority label of the three classifiers; a three-way split falls back to
/// the WAN prediction.
AttributionResult majority_vote(const AttributionResult& wan, const AttributionResult& nb,
                                const AttributionResult& knn);

}  // namespace wanattr
