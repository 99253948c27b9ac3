#pragma once

#include <string>
#include <vector>

#include "core/matrix.hpp"
#include "text/tokenize.hpp"

namespace wanattr {

/// Raw word adjacency network: q(i, j) accumulates the discounted
/// proximities from vocab[i] to vocab[j] over all sentences.
struct Wan {
  std::vector<std::string> vocab;
  Matrix q;
};

/// Row-stochastic WAN; rows with no outgoing mass are uniform at 1/f.
struct MarkovChain {
  std::vector<std::string> vocab;
  Matrix p;
};

/// q(i, j) = sum over occurrences of vocab[i] at position e of
/// sum_{d=1..window} alpha^(d-1) * [word at e+d is vocab[j]], within the
/// same sentence. Words outside the vocabulary count only as position
/// fillers.
Wan build_wan(const TokenizedText& text, const std::vector<std::string>& vocab, double alpha,
              int window);

/// Elementwise sum; all inputs must share an identical vocabulary.
Wan accumulate(const std::vector<Wan>& wans);

void accumulate_into(Wan& target, const Wan& other);

/// Divide each row by its sum; all-zero rows become the uniform row.
MarkovChain normalize(const Wan& wan);

/// The chain over the first n vocabulary words: q entries depend only on
/// word positions, so the leading principal submatrix is exact.
Wan leading_subwan(const Wan& wan, std::size_t n);

}  // namespace wanattr
