#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "text/tokenize.hpp"

namespace wanattr {

struct FunctionWordLexicon {
  std::vector<std::string> candidates;  // ordered, lowercase, duplicate-free
  std::unordered_set<std::string> exclusions;

  bool contains(const std::string& word) const;
};

/// The shipped ~150-word English lexicon with person/gender-marked pronouns
/// excluded.
const FunctionWordLexicon& default_lexicon();

/// Parse a lexicon from "one word per line, # comments allowed" content.
FunctionWordLexicon parse_lexicon(std::string_view contents, const std::string& source_name);

FunctionWordLexicon load_lexicon(const std::filesystem::path& path);

/// The n lexicon words with the highest total occurrence count over all
/// given texts, in descending count order, ties broken lexicographically.
/// Throws if fewer than n distinct lexicon words occur in the texts.
std::vector<std::string> select_function_words(const std::vector<const TokenizedText*>& texts,
                                               const FunctionWordLexicon& lexicon, std::size_t n);

std::vector<std::string> select_function_words(const std::vector<TokenizedText>& texts,
                                               const FunctionWordLexicon& lexicon, std::size_t n);

}  // namespace wanattr
