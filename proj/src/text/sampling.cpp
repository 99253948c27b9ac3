#include "text/sampling.hpp"

#include <numeric>

#include "core/error.hpp"

namespace wanattr {

namespace {

TokenizedText excerpt_from(const TokenizedText& text, std::size_t start,
                           std::size_t length_words, std::string id) {
  TokenizedText out;
  out.id = std::move(id);
  for (std::size_t s = start; s < text.sentences.size(); ++s) {
    const std::size_t len = text.sentences[s].tokens.size();
    if (out.total_words + len > length_words) break;
    out.sentences.push_back(text.sentences[s]);
    out.total_words += len;
  }
  return out;
}

}  // namespace

TokenizedText sample_contiguous_excerpt(const TokenizedText& text, std::size_t length_words,
                                        Rng& rng) {
  if (text.total_words < length_words) {
    throw user_error("text '" + text.id + "' has " + std::to_string(text.total_words) +
                     " words, shorter than the requested excerpt of " +
                     std::to_string(length_words));
  }
  if (length_words == 0) return TokenizedText{text.id + "#empty", {}, 0};

  // Suffix word counts; eligible starts have enough following words so the
  // greedy fill is limited by the target, not the end of the text.
  const std::size_t n = text.sentences.size();
  std::vector<std::size_t> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    suffix[i] = suffix[i + 1] + text.sentences[i].tokens.size();
  }
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < n; ++i) {
    if (suffix[i] >= length_words && text.sentences[i].tokens.size() <= length_words) {
      starts.push_back(i);
    }
  }
  if (starts.empty()) {
    // Degenerate case: every eligible first sentence is longer than the
    // target. Fall back to any start with enough words.
    for (std::size_t i = 0; i < n; ++i) {
      if (suffix[i] >= length_words) starts.push_back(i);
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, starts.size() - 1);
  const std::size_t start = starts[pick(rng)];
  return excerpt_from(text, start, length_words, text.id + "#s" + std::to_string(start));
}

std::vector<TokenizedText> sample_profile_excerpts(const std::vector<TokenizedText>& texts,
                                                   std::size_t profile_words, std::size_t pieces,
                                                   Rng& rng, const std::string& author_id) {
  if (pieces < 1) throw user_error("sample_profile_excerpts: pieces must be >= 1");
  std::size_t total = 0;
  for (const TokenizedText& t : texts) total += t.total_words;
  if (total < profile_words) {
    throw user_error("author '" + author_id + "' has " + std::to_string(total) +
                     " words, " + std::to_string(profile_words - total) +
                     " short of the requested profile of " + std::to_string(profile_words));
  }
  const std::size_t piece_words = profile_words / pieces;

  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (texts[i].total_words >= piece_words) eligible.push_back(i);
  }
  if (eligible.empty()) {
    throw user_error("author '" + author_id + "': no single text holds a " +
                     std::to_string(piece_words) + "-word excerpt");
  }

  std::vector<TokenizedText> out;
  out.reserve(pieces);
  std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
  for (std::size_t p = 0; p < pieces; ++p) {
    const TokenizedText& source = texts[eligible[pick(rng)]];
    out.push_back(sample_contiguous_excerpt(source, piece_words, rng));
  }
  return out;
}

}  // namespace wanattr
