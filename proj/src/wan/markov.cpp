#include "wan/markov.hpp"

#include <cmath>
#include <unordered_map>

#include "core/error.hpp"

namespace wanattr {

namespace {

constexpr double kStationaryTol = 1e-12;
constexpr int kStationarySquarings = 80;

}  // namespace

Distribution word_frequencies(const TokenizedText& text, const std::vector<std::string>& vocab) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vocab.size(); ++i) index.emplace(vocab[i], i);

  std::vector<double> counts(vocab.size(), 0.0);
  double total = 0.0;
  for (const Sentence& s : text.sentences) {
    for (const std::string& w : s.tokens) {
      auto it = index.find(w);
      if (it != index.end()) {
        counts[it->second] += 1.0;
        total += 1.0;
      }
    }
  }
  if (total == 0.0) return uniform_distribution(vocab.size());
  for (double& c : counts) c /= total;
  return Distribution{std::move(counts)};
}

Distribution uniform_distribution(std::size_t f) {
  return Distribution{std::vector<double>(f, 1.0 / static_cast<double>(f))};
}

Distribution stationary_distribution(const MarkovChain& chain, const Distribution& initial) {
  const std::size_t f = chain.vocab.size();
  if (initial.pi.size() != f) {
    throw user_error("stationary_distribution: initial distribution size mismatch");
  }

  // The occupancy limit is initial * lim_k L^k with the lazy operator
  // L = (I + P) / 2, which shares P's fixed points but has no eigenvalues on
  // the unit circle besides 1, so the limit exists even for periodic chains.
  // Repeated squaring reaches it in ~log2(1/gap) matrix products, where a
  // plain power iteration can need more steps than any fixed cap allows when
  // the chain mixes slowly.
  Matrix a(f, f);
  for (std::size_t i = 0; i < f; ++i) {
    for (std::size_t j = 0; j < f; ++j) {
      a(i, j) = 0.5 * chain.p(i, j) + (i == j ? 0.5 : 0.0);
    }
  }

  Matrix sq(f, f);
  double residual = 0.0;
  for (int iter = 0; iter < kStationarySquarings; ++iter) {
    for (std::size_t i = 0; i < f; ++i) {
      for (std::size_t j = 0; j < f; ++j) sq(i, j) = 0.0;
      for (std::size_t k = 0; k < f; ++k) {
        const double v = a(i, k);
        if (v == 0.0) continue;
        for (std::size_t j = 0; j < f; ++j) sq(i, j) += v * a(k, j);
      }
      // keep each row stochastic against rounding drift
      double row = 0.0;
      for (std::size_t j = 0; j < f; ++j) row += sq(i, j);
      for (std::size_t j = 0; j < f; ++j) sq(i, j) /= row;
    }
    residual = 0.0;
    for (std::size_t i = 0; i < f; ++i) {
      double diff = 0.0;
      for (std::size_t j = 0; j < f; ++j) diff += std::fabs(sq(i, j) - a(i, j));
      residual = std::max(residual, diff);
    }
    std::swap(a, sq);
    if (residual < kStationaryTol) break;
  }
  if (residual >= 1e-8) {
    throw internal_error("stationary_distribution: no convergence after " +
                         std::to_string(kStationarySquarings) +
                         " squarings, last residual " + std::to_string(residual));
  }

  std::vector<double> mu(f, 0.0);
  for (std::size_t i = 0; i < f; ++i) {
    const double m = initial.pi[i];
    if (m == 0.0) continue;
    for (std::size_t j = 0; j < f; ++j) mu[j] += m * a(i, j);
  }
  double sum = 0.0;
  for (double v : mu) sum += v;
  for (double& v : mu) v /= sum;
  return Distribution{std::move(mu)};
}

double relative_entropy(const MarkovChain& p1, const MarkovChain& p2, const Distribution& pi1) {
  if (p1.vocab != p2.vocab) throw user_error("relative_entropy: vocabulary mismatch");
  const std::size_t f = p1.vocab.size();
  if (pi1.pi.size() != f) throw user_error("relative_entropy: distribution size mismatch");

  double h = 0.0;
  for (std::size_t i = 0; i < f; ++i) {
    const double w = pi1.pi[i];
    if (w == 0.0) continue;
    for (std::size_t j = 0; j < f; ++j) {
      const double a = p1.p(i, j);
      const double b = p2.p(i, j);
      if (b == 0.0 || a == 0.0) continue;  // truncation; 0 log 0 := 0
      h += w * a * std::log(a / b);
    }
  }
  if (std::isnan(h)) throw internal_error("relative_entropy: NaN encountered");
  return h;
}

double dissimilarity(const MarkovChain& a, const Distribution& pi_a, const MarkovChain& b,
                     const Distribution& pi_b) {
  return 0.5 * (relative_entropy(a, b, pi_a) + relative_entropy(b, a, pi_b));
}

}  // namespace wanattr
