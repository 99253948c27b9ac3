#pragma once

#include <map>
#include <string>
#include <vector>

#include "attr/profile.hpp"

namespace wanattr {

struct AttributionResult {
  std::string text_id;
  // Candidate -> score; the prediction minimizes the score, ties broken by
  // ascending candidate id. For the WAN classifier the score is the
  // truncated relative entropy H(P_text, P_profile).
  std::map<std::string, double> entropies;
  std::string predicted;
};

/// Attribute `text` to the profile minimizing the relative entropy from the
/// text's chain. All profiles must share vocabulary and WAN parameters.
AttributionResult attribute(const TokenizedText& text, const std::vector<AuthorProfile>& profiles);

AttributionResult attribute(const TokenizedText& text,
                            const std::vector<const AuthorProfile*>& profiles);

/// Fraction of results whose prediction matches the truth map.
double accuracy(const std::vector<AttributionResult>& results,
                const std::map<std::string, std::string>& truth);

/// Pick the minimum-score candidate with ascending-id tie-break.
std::string argmin_candidate(const std::map<std::string, double>& scores);

/// CSV batch serialization: header `text_id,true_author,predicted,<candidates...>`,
/// one row per result. `truth` entries may be absent (empty cell).
std::string results_to_csv(const std::vector<AttributionResult>& results,
                           const std::map<std::string, std::string>& truth);

}  // namespace wanattr
