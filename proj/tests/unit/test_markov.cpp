#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "text/tokenize.hpp"
#include "wan/markov.hpp"

using namespace wanattr;

namespace {

std::vector<std::string> numbered_vocab(std::size_t f) {
  std::vector<std::string> vocab;
  for (std::size_t i = 0; i < f; ++i) vocab.push_back("w" + std::to_string(i));
  return vocab;
}

MarkovChain random_chain(std::size_t f, Rng& rng, bool full_support) {
  std::uniform_real_distribution<double> unit(full_support ? 0.05 : 0.0, 1.0);
  std::bernoulli_distribution drop(0.3);
  MarkovChain chain{numbered_vocab(f), Matrix(f, f)};
  for (std::size_t i = 0; i < f; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < f; ++j) {
      double v = unit(rng);
      if (!full_support && drop(rng)) v = 0.0;
      chain.p(i, j) = v;
      row += v;
    }
    if (row == 0.0) {
      chain.p(i, i) = 1.0;
      row = 1.0;
    }
    for (std::size_t j = 0; j < f; ++j) chain.p(i, j) /= row;
  }
  return chain;
}

Distribution random_distribution(std::size_t f, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  Distribution d;
  d.pi.resize(f);
  double total = 0.0;
  for (double& v : d.pi) total += (v = unit(rng));
  for (double& v : d.pi) v /= total;
  return d;
}

}  // namespace

TEST_CASE("word frequencies count vocabulary words only") {
  const TokenizedText text = tokenize("a b a c a b", "t");
  const Distribution d = word_frequencies(text, {"a", "b"});
  // 3 of the 5 vocabulary hits are "a"; "c" is ignored entirely
  CHECK(d.pi[0] == doctest::Approx(0.6));
  CHECK(d.pi[1] == doctest::Approx(0.4));
}

TEST_CASE("word frequencies fall back to uniform with no vocabulary hits") {
  const TokenizedText text = tokenize("x y z", "t");
  const Distribution d = word_frequencies(text, {"a", "b"});
  CHECK(d.pi[0] == doctest::Approx(0.5));
  CHECK(d.pi[1] == doctest::Approx(0.5));
}

TEST_CASE("two-state stationary distribution matches the linear-algebra answer") {
  // pi solves pi = pi P: for rows (0.9, 0.1) and (0.2, 0.8) it is (2/3, 1/3)
  MarkovChain chain{numbered_vocab(2), Matrix(2, 2)};
  chain.p(0, 0) = 0.9;
  chain.p(0, 1) = 0.1;
  chain.p(1, 0) = 0.2;
  chain.p(1, 1) = 0.8;
  Rng rng(1);
  const Distribution pi = stationary_distribution(chain, random_distribution(2, rng));
  CHECK(pi.pi[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(pi.pi[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("identity chain keeps the initial distribution") {
  MarkovChain chain{numbered_vocab(3), Matrix(3, 3)};
  for (int i = 0; i < 3; ++i) chain.p(i, i) = 1.0;
  Rng rng(2);
  const Distribution mu0 = random_distribution(3, rng);
  const Distribution pi = stationary_distribution(chain, mu0);
  for (int i = 0; i < 3; ++i) CHECK(pi.pi[i] == doctest::Approx(mu0.pi[i]).epsilon(1e-9));
}

TEST_CASE("stationary distributions are fixed points independent of the start") {
  Rng rng(3);
  for (int iter = 0; iter < 25; ++iter) {
    const MarkovChain chain = random_chain(8, rng, /*full_support=*/true);
    const Distribution pi = stationary_distribution(chain, random_distribution(8, rng));
    const Distribution pi2 = stationary_distribution(chain, random_distribution(8, rng));
    double sum = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
      double pPi = 0.0;
      for (std::size_t j = 0; j < 8; ++j) pPi += pi.pi[j] * chain.p(j, i);
      CHECK(std::abs(pPi - pi.pi[i]) < 1e-8);
      CHECK(std::abs(pi.pi[i] - pi2.pi[i]) < 1e-7);
      sum += pi.pi[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("relative entropy of a chain with itself is zero") {
  Rng rng(4);
  for (int iter = 0; iter < 100; ++iter) {
    const MarkovChain chain = random_chain(6, rng, false);
    const Distribution pi = random_distribution(6, rng);
    CHECK(relative_entropy(chain, chain, pi) == 0.0);
  }
}

TEST_CASE("truncated entropy equals weighted KL when the target has full support") {
  Rng rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    const MarkovChain p1 = random_chain(6, rng, false);
    const MarkovChain p2 = random_chain(6, rng, /*full_support=*/true);
    const Distribution pi = random_distribution(6, rng);
    double expected = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) {
        if (p1.p(i, j) > 0.0) {
          expected += pi.pi[i] * p1.p(i, j) * std::log(p1.p(i, j) / p2.p(i, j));
        }
      }
    }
    const double h = relative_entropy(p1, p2, pi);
    CHECK(std::abs(h - expected) < 1e-12);
    CHECK(h > -1e-12);  // weighted KL is non-negative
  }
}

TEST_CASE("the two-state worked example evaluates to 0.071920") {
  MarkovChain p1{numbered_vocab(2), Matrix(2, 2)};
  p1.p(0, 0) = 0.5;
  p1.p(0, 1) = 0.5;
  p1.p(1, 0) = 0.5;
  p1.p(1, 1) = 0.5;
  MarkovChain p2{numbered_vocab(2), Matrix(2, 2)};
  p2.p(0, 0) = 0.25;
  p2.p(0, 1) = 0.75;
  p2.p(1, 0) = 0.5;
  p2.p(1, 1) = 0.5;
  Distribution pi{{0.5, 0.5}};
  // 0.25 ln 2 + 0.25 ln(2/3)
  CHECK(relative_entropy(p1, p2, pi) == doctest::Approx(0.071920).epsilon(1e-6));
}

TEST_CASE("zero entries in the target chain are skipped, not infinite") {
  MarkovChain p1{numbered_vocab(2), Matrix(2, 2)};
  p1.p(0, 0) = 0.5;
  p1.p(0, 1) = 0.5;
  p1.p(1, 0) = 1.0;
  MarkovChain p2{numbered_vocab(2), Matrix(2, 2)};
  p2.p(0, 0) = 1.0;  // p2(0,1) == 0 while p1(0,1) > 0
  p2.p(1, 0) = 1.0;
  Distribution pi{{0.5, 0.5}};
  const double h = relative_entropy(p1, p2, pi);
  CHECK(std::isfinite(h));
  // only the (0,0) term remains: 0.5 * 0.5 * ln(0.5)
  CHECK(h == doctest::Approx(0.25 * std::log(0.5)));
}

TEST_CASE("mismatched vocabularies are rejected") {
  MarkovChain a{numbered_vocab(2), Matrix(2, 2)};
  MarkovChain b{{"x", "y"}, Matrix(2, 2)};
  Distribution pi{{0.5, 0.5}};
  CHECK_THROWS_AS(relative_entropy(a, b, pi), Error);
}

TEST_CASE("dissimilarity is symmetric and zero on identical chains") {
  Rng rng(6);
  const MarkovChain a = random_chain(5, rng, true);
  const MarkovChain b = random_chain(5, rng, true);
  const Distribution pa = random_distribution(5, rng);
  const Distribution pb = random_distribution(5, rng);
  CHECK(dissimilarity(a, pa, b, pb) == doctest::Approx(dissimilarity(b, pb, a, pa)));
  CHECK(dissimilarity(a, pa, a, pa) == 0.0);
  CHECK(dissimilarity(a, pa, b, pb) ==
        doctest::Approx((relative_entropy(a, b, pa) + relative_entropy(b, a, pb)) / 2.0));
}
