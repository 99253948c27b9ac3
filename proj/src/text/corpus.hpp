#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "text/tokenize.hpp"

namespace wanattr {

struct CorpusIndex {
  std::vector<std::string> authors;                       // sorted
  std::map<std::string, std::vector<TokenizedText>> texts;  // author -> texts

  const std::vector<TokenizedText>& texts_of(const std::string& author) const;
  std::size_t total_words(const std::string& author) const;
  std::vector<const TokenizedText*> all_texts() const;
};

/// Load `root/<author>/*.txt`, one author per subdirectory. Every author
/// directory must contain at least one readable text file.
CorpusIndex ingest_corpus(const std::filesystem::path& root);

/// Restrict an index to the given authors (all must exist).
CorpusIndex restrict_corpus(const CorpusIndex& corpus, const std::vector<std::string>& authors);

}  // namespace wanattr
