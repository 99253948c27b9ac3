#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wanattr {

struct Sentence {
  std::vector<std::string> tokens;  // 1-based positions via index + 1

  bool operator==(const Sentence&) const = default;
};

struct TokenizedText {
  std::string id;
  std::vector<Sentence> sentences;
  std::size_t total_words = 0;  // sum of sentence lengths

  bool operator==(const TokenizedText&) const = default;
};

/// Split raw UTF-8 text into sentences at the stopper symbols {. ? ! ;},
/// lowercase words and strip surrounding punctuation. Hyphenated words are
/// split into parts; internal apostrophes are kept ("don't" is one token).
/// Empty sentences are dropped. Throws a user error naming `id` and the byte
/// offset on undecodable input.
TokenizedText tokenize(std::string_view raw, std::string id);

/// Render a TokenizedText back to plain text with single spaces between
/// words and '.' after each sentence. tokenize(serialize(t)) == t.
std::string serialize_text(const TokenizedText& text);

/// Concatenate texts, keeping sentence boundaries intact.
TokenizedText concat_texts(const std::vector<TokenizedText>& texts, std::string id);

}  // namespace wanattr
