#pragma once

#include <vector>

#include "wan/wan.hpp"

namespace wanattr {

struct Distribution {
  std::vector<double> pi;  // non-negative, sums to 1
};

/// Empirical vocabulary-word frequency distribution of a text; uniform when
/// the text contains no vocabulary word.
Distribution word_frequencies(const TokenizedText& text, const std::vector<std::string>& vocab);

Distribution uniform_distribution(std::size_t f);

/// Occupancy distribution of a walk on `chain` started from `initial`: the
/// Cesaro limit lim (1/N) sum_k mu0 P^k. For ergodic chains this is the
/// unique stationary distribution regardless of mu0. Throws with the last
/// residual if the iteration cap is hit.
Distribution stationary_distribution(const MarkovChain& chain, const Distribution& initial);

/// Truncated relative entropy of Eq.-9 form: the sum over (i, j) with
/// p2(i, j) != 0 of pi1[i] * p1(i, j) * ln(p1(i, j) / p2(i, j)); terms with
/// p1(i, j) == 0 contribute 0.
double relative_entropy(const MarkovChain& p1, const MarkovChain& p2, const Distribution& pi1);

/// Symmetrized inter-profile dissimilarity: (H(a,b) + H(b,a)) / 2.
double dissimilarity(const MarkovChain& a, const Distribution& pi_a, const MarkovChain& b,
                     const Distribution& pi_b);

}  // namespace wanattr
