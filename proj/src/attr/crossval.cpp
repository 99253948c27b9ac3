#include "attr/crossval.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "attr/attribute.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"
#include "wan/markov.hpp"

namespace wanattr {

std::vector<TokenizedText> split_equal_pieces(const TokenizedText& text, std::size_t pieces,
                                              const std::string& owner) {
  if (pieces < 2) throw user_error("split_equal_pieces: need at least 2 pieces");
  std::vector<TokenizedText> out(pieces);
  const double target = static_cast<double>(text.total_words) / static_cast<double>(pieces);
  std::size_t piece = 0;
  std::size_t consumed = 0;
  for (const Sentence& s : text.sentences) {
    // Advance to the next piece once the current boundary is reached, but
    // never past the last piece.
    while (piece + 1 < pieces &&
           static_cast<double>(consumed) >= target * static_cast<double>(piece + 1)) {
      ++piece;
    }
    out[piece].id = text.id + "#piece" + std::to_string(piece);
    out[piece].sentences.push_back(s);
    out[piece].total_words += s.tokens.size();
    consumed += s.tokens.size();
  }
  for (std::size_t p = 0; p < pieces; ++p) {
    if (out[p].total_words == 0) {
      throw user_error("author '" + owner + "' has insufficient text to split into " +
                       std::to_string(pieces) + " non-empty pieces");
    }
    if (out[p].id.empty()) out[p].id = text.id + "#piece" + std::to_string(p);
  }
  return out;
}

std::size_t adaptive_vocab_size(const CorpusIndex& corpus, const FunctionWordLexicon& lexicon,
                                const CrossValConfig& cfg, const WanParams& params) {
  if (cfg.pieces < 2) throw user_error("adaptive_vocab_size: N must be > 1");
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) {
    throw user_error("adaptive_vocab_size: need 1 <= n_min <= n_max");
  }
  if (cfg.n_min == cfg.n_max) return cfg.n_min;  // nothing to search

  const std::vector<std::string> vocab =
      select_function_words(corpus.all_texts(), lexicon, cfg.n_max);

  // Per-author pieces with their full-vocabulary WANs and word counts;
  // smaller vocabularies are leading prefixes, so submatrices are exact.
  struct PieceData {
    Wan wan;
    std::vector<double> counts;  // per full-vocab word
  };
  const std::size_t n_authors = corpus.authors.size();
  std::vector<std::vector<PieceData>> pieces(n_authors);
  for (std::size_t a = 0; a < n_authors; ++a) {
    const std::string& author = corpus.authors[a];
    const TokenizedText merged = concat_texts(corpus.texts_of(author), author + "#all");
    for (const TokenizedText& piece : split_equal_pieces(merged, cfg.pieces, author)) {
      PieceData pd;
      pd.wan = build_wan(piece, vocab, params.alpha, params.window);
      pd.counts.assign(vocab.size(), 0.0);
      std::unordered_map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < vocab.size(); ++i) index.emplace(vocab[i], i);
      for (const Sentence& s : piece.sentences) {
        for (const std::string& w : s.tokens) {
          auto it = index.find(w);
          if (it != index.end()) pd.counts[it->second] += 1.0;
        }
      }
      pieces[a].push_back(std::move(pd));
    }
  }

  auto freq_prefix = [](const std::vector<double>& counts, std::size_t n) {
    std::vector<double> f(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(n));
    double total = 0.0;
    for (double v : f) total += v;
    if (total == 0.0) return uniform_distribution(n);
    for (double& v : f) v /= total;
    return Distribution{std::move(f)};
  };

  const std::size_t n_sizes = cfg.n_max - cfg.n_min + 1;
  std::vector<std::size_t> correct(n_sizes, 0);

  for (std::size_t round = 0; round < cfg.rounds; ++round) {
    Rng rng(derive_seed(cfg.seed, 0x63760000ULL, round));
    std::uniform_int_distribution<std::size_t> pick(0, cfg.pieces - 1);
    std::vector<std::size_t> holdout(n_authors);
    std::vector<Wan> profile_raw(n_authors);
    for (std::size_t a = 0; a < n_authors; ++a) {
      holdout[a] = pick(rng);
      Wan raw{vocab, Matrix(vocab.size(), vocab.size())};
      for (std::size_t p = 0; p < cfg.pieces; ++p) {
        if (p != holdout[a]) accumulate_into(raw, pieces[a][p].wan);
      }
      profile_raw[a] = std::move(raw);
    }
    for (std::size_t k = 0; k < n_sizes; ++k) {
      const std::size_t n = cfg.n_min + k;
      std::vector<MarkovChain> profile_chains(n_authors);
      for (std::size_t a = 0; a < n_authors; ++a) {
        profile_chains[a] = normalize(leading_subwan(profile_raw[a], n));
      }
      for (std::size_t a = 0; a < n_authors; ++a) {
        const PieceData& held = pieces[a][holdout[a]];
        const MarkovChain text_chain = normalize(leading_subwan(held.wan, n));
        const Distribution pi =
            stationary_distribution(text_chain, freq_prefix(held.counts, n));
        std::map<std::string, double> scores;
        for (std::size_t c = 0; c < n_authors; ++c) {
          scores[corpus.authors[c]] = relative_entropy(text_chain, profile_chains[c], pi);
        }
        if (argmin_candidate(scores) == corpus.authors[a]) ++correct[k];
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t k = 1; k < n_sizes; ++k) {
    if (correct[k] > correct[best]) best = k;  // ties keep the smaller n
  }
  return cfg.n_min + best;
}

}  // namespace wanattr
