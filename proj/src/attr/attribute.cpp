#include "attr/attribute.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"

namespace wanattr {

std::string argmin_candidate(const std::map<std::string, double>& scores) {
  if (scores.empty()) throw user_error("argmin over empty candidate set");
  auto best = scores.begin();
  for (auto it = std::next(scores.begin()); it != scores.end(); ++it) {
    if (it->second < best->second) best = it;  // map order gives the ascending-id tie-break
  }
  return best->first;
}

AttributionResult attribute(const TokenizedText& text,
                            const std::vector<const AuthorProfile*>& profiles) {
  if (profiles.empty()) throw user_error("attribute: no candidate profiles");
  const AuthorProfile& ref = *profiles.front();
  for (const AuthorProfile* p : profiles) {
    if (p->chain.vocab != ref.chain.vocab || !(p->params == ref.params)) {
      throw user_error("attribute: profiles '" + ref.author_id + "' and '" + p->author_id +
                       "' have mismatched vocabulary or parameters");
    }
  }
  if (text.total_words == 0) throw user_error("attribute: empty text '" + text.id + "'");

  const MarkovChain text_chain =
      normalize(build_wan(text, ref.chain.vocab, ref.params.alpha, ref.params.window));
  const Distribution pi =
      stationary_distribution(text_chain, word_frequencies(text, ref.chain.vocab));

  AttributionResult result;
  result.text_id = text.id;
  for (const AuthorProfile* p : profiles) {
    result.entropies[p->author_id] = relative_entropy(text_chain, p->chain, pi);
  }
  result.predicted = argmin_candidate(result.entropies);
  return result;
}

AttributionResult attribute(const TokenizedText& text, const std::vector<AuthorProfile>& profiles) {
  std::vector<const AuthorProfile*> ptrs;
  ptrs.reserve(profiles.size());
  for (const AuthorProfile& p : profiles) ptrs.push_back(&p);
  return attribute(text, ptrs);
}

double accuracy(const std::vector<AttributionResult>& results,
                const std::map<std::string, std::string>& truth) {
  if (results.empty()) throw user_error("accuracy: no attribution results");
  std::size_t correct = 0;
  for (const AttributionResult& r : results) {
    auto it = truth.find(r.text_id);
    if (it == truth.end()) throw user_error("accuracy: no truth entry for text '" + r.text_id + "'");
    if (r.predicted == it->second) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(results.size());
}

std::string results_to_csv(const std::vector<AttributionResult>& results,
                           const std::map<std::string, std::string>& truth) {
  std::ostringstream out;
  out.precision(17);
  std::vector<std::string> candidates;
  if (!results.empty()) {
    for (const auto& [author, _] : results.front().entropies) candidates.push_back(author);
  }
  out << "text_id,true_author,predicted";
  for (const std::string& c : candidates) out << ',' << c;
  out << '\n';
  for (const AttributionResult& r : results) {
    auto it = truth.find(r.text_id);
    out << r.text_id << ',' << (it == truth.end() ? "" : it->second) << ',' << r.predicted;
    for (const std::string& c : candidates) out << ',' << r.entropies.at(c);
    out << '\n';
  }
  return out.str();
}

}  // namespace wanattr
