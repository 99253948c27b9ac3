#pragma once

#include "attr/profile.hpp"
#include "core/rng.hpp"

namespace wanattr {

/// Profile accumulating `words_each` words of random excerpts from each of
/// two authors, labeled "<a>+<b>" with sorted ids. Used to test for
/// collaborative authorship.
AuthorProfile build_hybrid_profile(const std::string& author_a,
                                   const std::vector<TokenizedText>& texts_a,
                                   const std::string& author_b,
                                   const std::vector<TokenizedText>& texts_b,
                                   std::size_t words_each, const std::vector<std::string>& vocab,
                                   const WanParams& params, Rng& rng, std::size_t pieces = 10);

}  // namespace wanattr
