#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wan/markov.hpp"
#include "wan/wan.hpp"

namespace wanattr {

struct WanParams {
  double alpha = 0.75;
  int window = 10;

  bool operator==(const WanParams&) const = default;
};

struct AuthorProfile {
  std::string author_id;
  Wan raw;             // accumulated similarity matrix
  MarkovChain chain;   // normalize(raw)
  Distribution pi;     // occupancy distribution from the source word frequencies
  std::size_t source_word_count = 0;
  WanParams params;
};

/// Accumulate the WANs of all texts into one profile.
AuthorProfile build_profile(const std::string& author_id, const std::vector<TokenizedText>& texts,
                            const std::vector<std::string>& vocab, const WanParams& params);

/// JSON document {schema_version, author, vocab, matrix, pi,
/// meta:{alpha, window, source_word_count}}; matrices row-major, full
/// precision. The raw matrix is stored so profiles round-trip losslessly.
void save_profile(const AuthorProfile& profile, const std::filesystem::path& path);
std::string profile_to_json(const AuthorProfile& profile);

AuthorProfile load_profile(const std::filesystem::path& path);
AuthorProfile profile_from_json(const std::string& json_text, const std::string& source_name);

}  // namespace wanattr
