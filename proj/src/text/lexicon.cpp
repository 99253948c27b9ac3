#include "text/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "core/error.hpp"

namespace wanattr {

namespace {

const char* kDefaultLexiconText =
#include "generated/default_lexicon.inc"
    ;

// Pronouns that mark gender or grammatical person; kept out of the default
// candidate set so profiles are narration-independent.
const char* kDefaultExclusions[] = {
    "i",      "me",      "my",      "mine",   "myself",     "we",     "us",        "our",
    "ours",   "ourselves", "you",   "your",   "yours",      "yourself", "yourselves",
    "he",     "him",     "his",     "himself", "she",       "her",    "hers",      "herself",
    "thou",   "thee",    "thy",     "thine",  "thyself",
};

std::string lowercased(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

bool FunctionWordLexicon::contains(const std::string& word) const {
  if (exclusions.count(word)) return false;
  return std::find(candidates.begin(), candidates.end(), word) != candidates.end();
}

FunctionWordLexicon parse_lexicon(std::string_view contents, const std::string& source_name) {
  FunctionWordLexicon lex;
  std::unordered_set<std::string> seen;
  std::istringstream in{std::string(contents)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    std::string rest;
    if (ls >> rest) {
      throw user_error("lexicon '" + source_name + "' line " + std::to_string(lineno) +
                       ": expected one word per line");
    }
    word = lowercased(word);
    if (seen.insert(word).second) lex.candidates.push_back(std::move(word));
  }
  return lex;
}

const FunctionWordLexicon& default_lexicon() {
  static const FunctionWordLexicon lex = [] {
    FunctionWordLexicon l = parse_lexicon(kDefaultLexiconText, "<builtin>");
    for (const char* w : kDefaultExclusions) l.exclusions.insert(w);
    std::erase_if(l.candidates, [&](const std::string& w) { return l.exclusions.count(w) > 0; });
    return l;
  }();
  return lex;
}

FunctionWordLexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw user_error("cannot read lexicon file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str(), path.string());
}

std::vector<std::string> select_function_words(const std::vector<const TokenizedText*>& texts,
                                               const FunctionWordLexicon& lexicon, std::size_t n) {
  if (n < 1) throw user_error("select_function_words: n must be >= 1");
  std::unordered_set<std::string> candidate_set(lexicon.candidates.begin(),
                                                lexicon.candidates.end());
  for (const std::string& w : lexicon.exclusions) candidate_set.erase(w);

  std::unordered_map<std::string, std::size_t> counts;
  for (const TokenizedText* t : texts) {
    for (const Sentence& s : t->sentences) {
      for (const std::string& w : s.tokens) {
        if (candidate_set.count(w)) ++counts[w];
      }
    }
  }
  if (counts.size() < n) {
    throw user_error("select_function_words: requested " + std::to_string(n) +
                     " function words but only " + std::to_string(counts.size()) +
                     " distinct lexicon words occur in the texts");
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> vocab;
  vocab.reserve(n);
  for (std::size_t i = 0; i < n; ++i) vocab.push_back(ranked[i].first);
  return vocab;
}

std::vector<std::string> select_function_words(const std::vector<TokenizedText>& texts,
                                               const FunctionWordLexicon& lexicon, std::size_t n) {
  std::vector<const TokenizedText*> ptrs;
  ptrs.reserve(texts.size());
  for (const TokenizedText& t : texts) ptrs.push_back(&t);
  return select_function_words(ptrs, lexicon, n);
}

}  // namespace wanattr
