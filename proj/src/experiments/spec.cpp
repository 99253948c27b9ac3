#include "experiments/spec.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace wanattr {

namespace {

const char* kValidKeys =
    "kind, corpus, lexicon, meta, output_dir, authors, authors_range, lengths, values, "
    "trials, repeats, text_words, profile_words, pieces, alpha, window, vocab_mode, seed, "
    "play, candidates";

std::string trimmed(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, ',')) {
    item = trimmed(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& value, const std::string& key) {
  std::vector<std::size_t> out;
  for (const std::string& item : split_list(value)) {
    try {
      long long v = std::stoll(item);
      if (v <= 0) throw std::invalid_argument("non-positive");
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw user_error("spec key '" + key + "': invalid positive integer '" + item + "'");
    }
  }
  if (out.empty()) throw user_error("spec key '" + key + "': empty list");
  return out;
}

std::size_t parse_size(const std::string& value, const std::string& key) {
  return parse_size_list(value, key).at(0);
}

double parse_double(const std::string& value, const std::string& key) {
  try {
    return std::stod(value);
  } catch (const std::exception&) {
    throw user_error("spec key '" + key + "': invalid number '" + value + "'");
  }
}

void set_key(ExperimentSpec& spec, const std::string& key, const std::string& value) {
  if (key == "kind") {
    spec.kind = parse_kind(value);
  } else if (key == "corpus") {
    spec.corpus_root = value;
  } else if (key == "lexicon") {
    spec.lexicon_path = value;
  } else if (key == "meta") {
    spec.meta_path = value;
  } else if (key == "output_dir") {
    spec.output_dir = value;
  } else if (key == "authors") {
    spec.author_filter = split_list(value);
  } else if (key == "authors_range") {
    spec.authors_range = parse_size_list(value, key);
  } else if (key == "lengths") {
    spec.lengths = parse_size_list(value, key);
  } else if (key == "values") {
    spec.values.clear();
    for (const std::string& item : split_list(value)) {
      spec.values.push_back(parse_double(item, key));
    }
  } else if (key == "trials") {
    spec.trials = parse_size(value, key);
  } else if (key == "repeats") {
    spec.repeats = parse_size(value, key);
  } else if (key == "text_words") {
    spec.text_words = parse_size(value, key);
  } else if (key == "profile_words") {
    spec.profile_words = parse_size(value, key);
  } else if (key == "pieces") {
    spec.pieces = parse_size(value, key);
  } else if (key == "alpha") {
    spec.params.alpha = parse_double(value, key);
    if (!(spec.params.alpha > 0.0 && spec.params.alpha < 1.0)) {
      throw user_error("spec key 'alpha': must lie in (0,1)");
    }
  } else if (key == "window") {
    spec.params.window = static_cast<int>(parse_size(value, key));
  } else if (key == "vocab_mode") {
    spec.vocab_mode = parse_vocab_mode(value);
  } else if (key == "seed") {
    try {
      spec.seed = std::stoull(value);
      spec.seed_set = true;
    } catch (const std::exception&) {
      throw user_error("spec key 'seed': invalid integer '" + value + "'");
    }
  } else if (key == "play") {
    spec.play_path = value;
  } else if (key == "candidates") {
    spec.candidates = split_list(value);
  } else {
    throw user_error("unknown spec key '" + key + "'; valid keys: " + kValidKeys);
  }
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kProfileSweep: return "profile_sweep";
    case ExperimentKind::kTextSweep: return "text_sweep";
    case ExperimentKind::kDissimilarityAccuracy: return "dissimilarity_accuracy";
    case ExperimentKind::kAlphaSweep: return "alpha_sweep";
    case ExperimentKind::kVocabSizeSweep: return "vocab_size_sweep";
    case ExperimentKind::kMetaTime: return "meta_time";
    case ExperimentKind::kMetaGenre: return "meta_genre";
    case ExperimentKind::kMetaGender: return "meta_gender";
    case ExperimentKind::kCollaboration: return "collaboration";
    case ExperimentKind::kMethodComparison: return "method_comparison";
  }
  return "unknown";
}

ExperimentKind parse_kind(const std::string& name) {
  static const std::pair<const char*, ExperimentKind> kKinds[] = {
      {"profile_sweep", ExperimentKind::kProfileSweep},
      {"text_sweep", ExperimentKind::kTextSweep},
      {"dissimilarity_accuracy", ExperimentKind::kDissimilarityAccuracy},
      {"alpha_sweep", ExperimentKind::kAlphaSweep},
      {"vocab_size_sweep", ExperimentKind::kVocabSizeSweep},
      {"meta_time", ExperimentKind::kMetaTime},
      {"meta_genre", ExperimentKind::kMetaGenre},
      {"meta_gender", ExperimentKind::kMetaGender},
      {"collaboration", ExperimentKind::kCollaboration},
      {"method_comparison", ExperimentKind::kMethodComparison},
  };
  for (const auto& [text, kind] : kKinds) {
    if (name == text) return kind;
  }
  std::string valid;
  for (const auto& [text, _] : kKinds) {
    if (!valid.empty()) valid += ", ";
    valid += text;
  }
  throw user_error("unknown experiment kind '" + name + "'; valid kinds: " + valid);
}

VocabMode parse_vocab_mode(const std::string& text) {
  VocabMode mode;
  if (text == "adaptive") {
    mode.adaptive = true;
    return mode;
  }
  if (text.rfind("static:", 0) == 0) {
    mode.adaptive = false;
    mode.size = parse_size(text.substr(7), "vocab_mode");
    return mode;
  }
  throw user_error("invalid vocab_mode '" + text + "'; expected 'adaptive' or 'static:<n>'");
}

ExperimentSpec parse_experiment_spec(const std::string& contents, const std::string& source_name) {
  ExperimentSpec spec;
  std::istringstream in(contents);
  std::string line;
  std::size_t lineno = 0;
  bool have_kind = false;
  bool have_corpus = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw user_error("spec '" + source_name + "' line " + std::to_string(lineno) +
                       ": expected 'key = value'");
    }
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    set_key(spec, key, value);
    if (key == "kind") have_kind = true;
    if (key == "corpus") have_corpus = true;
  }
  if (!have_kind) throw user_error("spec '" + source_name + "': missing required key 'kind'");
  if (!have_corpus) throw user_error("spec '" + source_name + "': missing required key 'corpus'");
  return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw user_error("cannot read experiment spec: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_spec(buf.str(), path.string());
}

void apply_override(ExperimentSpec& spec, const std::string& key_value) {
  auto eq = key_value.find('=');
  if (eq == std::string::npos) {
    throw user_error("override must be 'key=value': '" + key_value + "'");
  }
  set_key(spec, trimmed(key_value.substr(0, eq)), trimmed(key_value.substr(eq + 1)));
}

}  // namespace wanattr
