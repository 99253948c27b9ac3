#include "wan/wan.hpp"

#include <unordered_map>

#include "core/error.hpp"

namespace wanattr {

Wan build_wan(const TokenizedText& text, const std::vector<std::string>& vocab, double alpha,
              int window) {
  if (vocab.empty()) throw user_error("build_wan: empty vocabulary");
  if (!(alpha > 0.0 && alpha < 1.0)) throw user_error("build_wan: alpha must be in (0,1)");
  if (window < 1) throw user_error("build_wan: window must be >= 1");

  std::unordered_map<std::string, std::size_t> index;
  index.reserve(vocab.size());
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    if (!index.emplace(vocab[i], i).second) {
      throw user_error("build_wan: duplicate vocabulary word '" + vocab[i] + "'");
    }
  }

  std::vector<double> power(static_cast<std::size_t>(window));
  power[0] = 1.0;
  for (int d = 1; d < window; ++d) power[d] = power[d - 1] * alpha;

  Wan wan{vocab, Matrix(vocab.size(), vocab.size())};
  std::vector<int> ids;
  for (const Sentence& s : text.sentences) {
    ids.clear();
    ids.reserve(s.tokens.size());
    for (const std::string& w : s.tokens) {
      auto it = index.find(w);
      ids.push_back(it == index.end() ? -1 : static_cast<int>(it->second));
    }
    const std::size_t len = ids.size();
    for (std::size_t e = 0; e < len; ++e) {
      const int i = ids[e];
      if (i < 0) continue;
      const std::size_t limit = std::min(len, e + static_cast<std::size_t>(window) + 1);
      for (std::size_t f = e + 1; f < limit; ++f) {
        const int j = ids[f];
        if (j >= 0) wan.q(i, j) += power[f - e - 1];
      }
    }
  }
  return wan;
}

void accumulate_into(Wan& target, const Wan& other) {
  if (target.vocab != other.vocab) throw user_error("accumulate: vocabulary mismatch");
  for (std::size_t k = 0; k < target.q.data().size(); ++k) {
    target.q.data()[k] += other.q.data()[k];
  }
}

Wan accumulate(const std::vector<Wan>& wans) {
  if (wans.empty()) throw user_error("accumulate: empty WAN list");
  Wan out = wans.front();
  for (std::size_t i = 1; i < wans.size(); ++i) accumulate_into(out, wans[i]);
  return out;
}

MarkovChain normalize(const Wan& wan) {
  const std::size_t f = wan.vocab.size();
  MarkovChain chain{wan.vocab, Matrix(f, f)};
  for (std::size_t i = 0; i < f; ++i) {
    double row_sum = 0.0;
    for (std::size_t j = 0; j < f; ++j) row_sum += wan.q(i, j);
    if (row_sum > 0.0) {
      for (std::size_t j = 0; j < f; ++j) chain.p(i, j) = wan.q(i, j) / row_sum;
    } else {
      const double uniform = 1.0 / static_cast<double>(f);
      for (std::size_t j = 0; j < f; ++j) chain.p(i, j) = uniform;
    }
  }
  return chain;
}

Wan leading_subwan(const Wan& wan, std::size_t n) {
  if (n > wan.vocab.size()) throw user_error("leading_subwan: n exceeds vocabulary size");
  Wan out;
  out.vocab.assign(wan.vocab.begin(), wan.vocab.begin() + static_cast<std::ptrdiff_t>(n));
  out.q = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.q(i, j) = wan.q(i, j);
  }
  return out;
}

}  // namespace wanattr
