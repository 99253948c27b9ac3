#include "attr/profile.hpp"

#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "json.hpp"

namespace wanattr {

namespace {
constexpr int kSchemaVersion = 1;
}

AuthorProfile build_profile(const std::string& author_id, const std::vector<TokenizedText>& texts,
                            const std::vector<std::string>& vocab, const WanParams& params) {
  if (texts.empty()) throw user_error("build_profile: no texts for author '" + author_id + "'");

  AuthorProfile profile;
  profile.author_id = author_id;
  profile.params = params;
  profile.raw = build_wan(texts.front(), vocab, params.alpha, params.window);
  profile.source_word_count = texts.front().total_words;
  for (std::size_t i = 1; i < texts.size(); ++i) {
    accumulate_into(profile.raw, build_wan(texts[i], vocab, params.alpha, params.window));
    profile.source_word_count += texts[i].total_words;
  }
  profile.chain = normalize(profile.raw);

  // Occupancy distribution seeded from the source texts' word frequencies.
  Distribution freq{std::vector<double>(vocab.size(), 0.0)};
  {
    const TokenizedText merged = concat_texts(texts, author_id + "#sources");
    freq = word_frequencies(merged, vocab);
  }
  profile.pi = stationary_distribution(profile.chain, freq);
  return profile;
}

std::string profile_to_json(const AuthorProfile& profile) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["author"] = profile.author_id;
  doc["vocab"] = profile.chain.vocab;
  nlohmann::ordered_json matrix = nlohmann::ordered_json::array();
  nlohmann::ordered_json raw = nlohmann::ordered_json::array();
  const std::size_t f = profile.chain.vocab.size();
  for (std::size_t i = 0; i < f; ++i) {
    nlohmann::ordered_json mrow = nlohmann::ordered_json::array();
    nlohmann::ordered_json rrow = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < f; ++j) {
      mrow.push_back(profile.chain.p(i, j));
      rrow.push_back(profile.raw.q(i, j));
    }
    matrix.push_back(std::move(mrow));
    raw.push_back(std::move(rrow));
  }
  doc["matrix"] = std::move(matrix);
  doc["raw"] = std::move(raw);
  doc["pi"] = profile.pi.pi;
  doc["meta"] = {{"alpha", profile.params.alpha},
                 {"window", profile.params.window},
                 {"source_word_count", profile.source_word_count}};
  return doc.dump(2) + "\n";
}

void save_profile(const AuthorProfile& profile, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw user_error("cannot write profile file: " + path.string());
  out << profile_to_json(profile);
}

AuthorProfile profile_from_json(const std::string& json_text, const std::string& source_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw user_error("profile '" + source_name + "': invalid JSON: " + e.what());
  }
  try {
    if (doc.at("schema_version").get<int>() != kSchemaVersion) {
      throw user_error("profile '" + source_name + "': unsupported schema_version");
    }
    AuthorProfile profile;
    profile.author_id = doc.at("author").get<std::string>();
    auto vocab = doc.at("vocab").get<std::vector<std::string>>();
    const std::size_t f = vocab.size();
    profile.chain.vocab = vocab;
    profile.chain.p = Matrix(f, f);
    profile.raw.vocab = vocab;
    profile.raw.q = Matrix(f, f);
    const auto& matrix = doc.at("matrix");
    const auto& raw = doc.at("raw");
    if (matrix.size() != f || raw.size() != f) {
      throw user_error("profile '" + source_name + "': matrix shape mismatch");
    }
    for (std::size_t i = 0; i < f; ++i) {
      if (matrix[i].size() != f || raw[i].size() != f) {
        throw user_error("profile '" + source_name + "': matrix shape mismatch");
      }
      for (std::size_t j = 0; j < f; ++j) {
        profile.chain.p(i, j) = matrix[i][j].get<double>();
        profile.raw.q(i, j) = raw[i][j].get<double>();
      }
    }
    profile.pi.pi = doc.at("pi").get<std::vector<double>>();
    if (profile.pi.pi.size() != f) {
      throw user_error("profile '" + source_name + "': pi size mismatch");
    }
    const auto& meta = doc.at("meta");
    profile.params.alpha = meta.at("alpha").get<double>();
    profile.params.window = meta.at("window").get<int>();
    profile.source_word_count = meta.at("source_word_count").get<std::size_t>();
    return profile;
  } catch (const nlohmann::json::exception& e) {
    throw user_error("profile '" + source_name + "': missing or malformed field: " + e.what());
  }
}

AuthorProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw user_error("cannot read profile file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return profile_from_json(buf.str(), path.string());
}

}  // namespace wanattr
