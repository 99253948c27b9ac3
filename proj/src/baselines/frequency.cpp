#include "baselines/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "core/error.hpp"

namespace wanattr {

FrequencyVector frequency_vector(const TokenizedText& text, const std::vector<std::string>& vocab) {
  if (text.total_words == 0) {
    throw user_error("frequency_vector: text '" + text.id + "' is empty");
  }
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (!index.emplace(vocab[i], i).second) {
      throw user_error("frequency_vector: duplicate vocabulary word '" + vocab[i] + "'");
    }
  }
  FrequencyVector out;
  out.vocab = vocab;
  out.counts.assign(vocab.size(), 0);
  out.total_words = static_cast<std::int64_t>(text.total_words);
  for (const Sentence& s : text.sentences) {
    for (const std::string& w : s.tokens) {
      auto it = index.find(w);
      if (it != index.end()) ++out.counts[it->second];
    }
  }
  out.rel.resize(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    out.rel[i] = static_cast<double>(out.counts[i]) / static_cast<double>(out.total_words);
  }
  return out;
}

NaiveBayesProfile aggregate_counts(const std::string& author_id,
                                   const std::vector<FrequencyVector>& vectors) {
  if (vectors.empty()) throw user_error("aggregate_counts: no vectors for '" + author_id + "'");
  NaiveBayesProfile profile;
  profile.author_id = author_id;
  profile.vocab = vectors.front().vocab;
  profile.counts.assign(profile.vocab.size(), 0);
  for (const FrequencyVector& v : vectors) {
    if (v.vocab != profile.vocab) throw user_error("aggregate_counts: vocabulary mismatch");
    for (std::size_t i = 0; i < v.counts.size(); ++i) {
      profile.counts[i] += v.counts[i];
      profile.total += v.counts[i];
    }
  }
  return profile;
}

AttributionResult naive_bayes_attribute(const std::string& text_id, const FrequencyVector& text,
                                        const std::vector<NaiveBayesProfile>& profiles) {
  if (profiles.empty()) throw user_error("naive_bayes_attribute: no candidate profiles");
  const std::size_t f = text.vocab.size();
  AttributionResult result;
  result.text_id = text_id;
  for (const NaiveBayesProfile& p : profiles) {
    if (p.vocab != text.vocab) {
      throw user_error("naive_bayes_attribute: vocabulary mismatch for '" + p.author_id + "'");
    }
    double log_lik = 0.0;
    const double denom = static_cast<double>(p.total) + static_cast<double>(f);
    for (std::size_t i = 0; i < f; ++i) {
      if (text.counts[i] == 0) continue;
      const double theta = (static_cast<double>(p.counts[i]) + 1.0) / denom;
      log_lik += static_cast<double>(text.counts[i]) * std::log(theta);
    }
    result.entropies[p.author_id] = -log_lik;
  }
  result.predicted = argmin_candidate(result.entropies);
  return result;
}

AttributionResult knn_attribute(const std::string& text_id, const FrequencyVector& text,
                                const std::vector<std::pair<FrequencyVector, std::string>>& labeled,
                                std::size_t k) {
  if (labeled.empty()) throw user_error("knn_attribute: empty training set");
  if (k < 1 || k > labeled.size()) {
    throw user_error("knn_attribute: k must be in [1, " + std::to_string(labeled.size()) + "]");
  }
  std::vector<std::pair<double, std::size_t>> distances;  // (distance, input order)
  distances.reserve(labeled.size());
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    const FrequencyVector& v = labeled[i].first;
    if (v.vocab != text.vocab) throw user_error("knn_attribute: vocabulary mismatch");
    double d2 = 0.0;
    for (std::size_t j = 0; j < v.rel.size(); ++j) {
      const double diff = v.rel[j] - text.rel[j];
      d2 += diff * diff;
    }
    distances.emplace_back(d2, i);
  }
  std::stable_sort(distances.begin(), distances.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::map<std::string, std::size_t> votes;
  for (std::size_t i = 0; i < k; ++i) ++votes[labeled[distances[i].second].second];

  AttributionResult result;
  result.text_id = text_id;
  // Scores are negated vote counts so the argmin convention holds.
  for (const auto& [label, n] : votes) {
    result.entropies[label] = -static_cast<double>(n);
  }
  result.predicted = argmin_candidate(result.entropies);
  return result;
}

AttributionResult majority_vote(const AttributionResult& wan, const AttributionResult& nb,
                                const AttributionResult& knn) {
  if (wan.text_id != nb.text_id || wan.text_id != knn.text_id) {
    throw user_error("majority_vote: mismatched text ids ('" + wan.text_id + "', '" + nb.text_id +
                     "', '" + knn.text_id + "')");
  }
  AttributionResult result;
  result.text_id = wan.text_id;
  result.entropies = wan.entropies;
  if (nb.predicted == knn.predicted) {
    result.predicted = nb.predicted;  // covers full agreement and the 2-1 case against WAN
  } else {
    result.predicted = wan.predicted;  // WAN agrees with one of them, or three-way split
  }
  return result;
}

}  // namespace wanattr
