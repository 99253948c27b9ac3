#include "wanattr/wanattr.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "attr/attribute.hpp"
#include "attr/crossval.hpp"
#include "attr/profile.hpp"
#include "core/error.hpp"
#include "experiments/report.hpp"
#include "experiments/runner.hpp"
#include "experiments/spec.hpp"
#include "text/corpus.hpp"
#include "text/lexicon.hpp"

using namespace wanattr;

struct wanattr_corpus {
  CorpusIndex index;
};

struct wanattr_profile {
  AuthorProfile profile;
};

struct wanattr_result {
  AttributionResult result;
  // entropies flattened for indexed access
  std::vector<std::string> candidates;
  std::vector<double> values;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

// Run fn, translating exceptions into status codes + thread-local message.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return WANATTR_OK;
  } catch (const Error& e) {
    set_error(e.what());
    return e.code();
  } catch (const std::exception& e) {
    set_error(e.what());
    return WANATTR_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return WANATTR_ERR_INTERNAL;
  }
}

int usage_error(const std::string& message) {
  set_error(message);
  return WANATTR_ERR_USAGE;
}

WanParams to_params(const wanattr_options& opts) {
  WanParams params;
  params.alpha = opts.alpha;
  params.window = opts.window;
  return params;
}

FunctionWordLexicon options_lexicon(const wanattr_options& opts) {
  if (opts.lexicon_path) return load_lexicon(opts.lexicon_path);
  return default_lexicon();
}

std::vector<std::string> options_vocabulary(const CorpusIndex& corpus,
                                            const wanattr_options& opts) {
  if (opts.vocab_size < 1) throw user_error("vocab_size must be >= 1");
  const FunctionWordLexicon lexicon = options_lexicon(opts);
  std::size_t n = static_cast<std::size_t>(opts.vocab_size);
  if (opts.adaptive) {
    CrossValConfig cfg;
    cfg.pieces = static_cast<std::size_t>(opts.pieces);
    cfg.seed = opts.seed;
    n = adaptive_vocab_size(corpus, lexicon, cfg, to_params(opts));
  }
  return select_function_words(corpus.all_texts(), lexicon, n);
}

TokenizedText read_and_tokenize(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw user_error(std::string("cannot read file: ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return tokenize(buf.str(), path);
}

}  // namespace

extern "C" {

const char* wanattr_last_error(void) { return g_last_error.c_str(); }

void wanattr_options_init(wanattr_options* opts) {
  if (!opts) return;
  opts->alpha = 0.75;
  opts->window = 10;
  opts->vocab_size = 60;
  opts->adaptive = 0;
  opts->pieces = 10;
  opts->lexicon_path = nullptr;
  opts->seed = 0;
}

int wanattr_corpus_open(const char* root, wanattr_corpus** out) {
  if (!root || !out) return usage_error("corpus_open: root and out must be non-NULL");
  return guarded([&] { *out = new wanattr_corpus{ingest_corpus(root)}; });
}

void wanattr_corpus_close(wanattr_corpus* corpus) { delete corpus; }

size_t wanattr_corpus_author_count(const wanattr_corpus* corpus) {
  return corpus ? corpus->index.authors.size() : 0;
}

const char* wanattr_corpus_author(const wanattr_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->index.authors.size()) return nullptr;
  return corpus->index.authors[index].c_str();
}

size_t wanattr_corpus_text_count(const wanattr_corpus* corpus, const char* author) {
  if (!corpus || !author) return 0;
  const auto it = corpus->index.texts.find(author);
  return it == corpus->index.texts.end() ? 0 : it->second.size();
}

size_t wanattr_corpus_word_count(const wanattr_corpus* corpus, const char* author) {
  if (!corpus || !author) return 0;
  const auto it = corpus->index.texts.find(author);
  if (it == corpus->index.texts.end()) return 0;
  size_t total = 0;
  for (const TokenizedText& t : it->second) total += t.total_words;
  return total;
}

int wanattr_profile_build(const wanattr_corpus* corpus, const char* author,
                          const wanattr_options* opts, wanattr_profile** out) {
  if (!corpus || !author || !opts || !out) {
    return usage_error("profile_build: all arguments must be non-NULL");
  }
  return guarded([&] {
    const std::vector<std::string> vocab = options_vocabulary(corpus->index, *opts);
    *out = new wanattr_profile{
        build_profile(author, corpus->index.texts_of(author), vocab, to_params(*opts))};
  });
}

int wanattr_profile_save(const wanattr_profile* profile, const char* path) {
  if (!profile || !path) return usage_error("profile_save: profile and path must be non-NULL");
  return guarded([&] { save_profile(profile->profile, path); });
}

int wanattr_profile_open(const char* path, wanattr_profile** out) {
  if (!path || !out) return usage_error("profile_open: path and out must be non-NULL");
  return guarded([&] { *out = new wanattr_profile{load_profile(path)}; });
}

void wanattr_profile_close(wanattr_profile* profile) { delete profile; }

const char* wanattr_profile_author(const wanattr_profile* profile) {
  return profile ? profile->profile.author_id.c_str() : nullptr;
}

size_t wanattr_profile_vocab_size(const wanattr_profile* profile) {
  return profile ? profile->profile.chain.vocab.size() : 0;
}

size_t wanattr_profile_word_count(const wanattr_profile* profile) {
  return profile ? profile->profile.source_word_count : 0;
}

int wanattr_attribute_file(const char* text_path, wanattr_profile* const* profiles,
                           size_t n_profiles, wanattr_result** out) {
  if (!text_path || !profiles || !out) {
    return usage_error("attribute_file: text_path, profiles, and out must be non-NULL");
  }
  if (n_profiles < 1) return usage_error("attribute_file: need at least one profile");
  return guarded([&] {
    std::vector<const AuthorProfile*> candidates;
    candidates.reserve(n_profiles);
    for (size_t i = 0; i < n_profiles; ++i) {
      if (!profiles[i]) throw user_error("attribute_file: NULL profile handle");
      candidates.push_back(&profiles[i]->profile);
    }
    const TokenizedText text = read_and_tokenize(text_path);
    auto* result = new wanattr_result{attribute(text, candidates), {}, {}};
    for (const auto& [id, h] : result->result.entropies) {
      result->candidates.push_back(id);
      result->values.push_back(h);
    }
    *out = result;
  });
}

const char* wanattr_result_predicted(const wanattr_result* result) {
  return result ? result->result.predicted.c_str() : nullptr;
}

size_t wanattr_result_candidate_count(const wanattr_result* result) {
  return result ? result->candidates.size() : 0;
}

const char* wanattr_result_candidate(const wanattr_result* result, size_t index) {
  if (!result || index >= result->candidates.size()) return nullptr;
  return result->candidates[index].c_str();
}

double wanattr_result_entropy(const wanattr_result* result, size_t index) {
  if (!result || index >= result->values.size()) return 0.0;
  return result->values[index];
}

void wanattr_result_close(wanattr_result* result) { delete result; }

int wanattr_crossval_select(const wanattr_corpus* corpus, const wanattr_options* opts, int n_min,
                            int n_max, int rounds, size_t* out_size) {
  if (!corpus || !opts || !out_size) {
    return usage_error("crossval_select: corpus, opts, and out_size must be non-NULL");
  }
  if (n_min < 1 || n_max < n_min || rounds < 1) {
    return usage_error("crossval_select: need 1 <= n_min <= n_max and rounds >= 1");
  }
  return guarded([&] {
    CrossValConfig cfg;
    cfg.pieces = static_cast<std::size_t>(opts->pieces);
    cfg.n_min = static_cast<std::size_t>(n_min);
    cfg.n_max = static_cast<std::size_t>(n_max);
    cfg.rounds = static_cast<std::size_t>(rounds);
    cfg.seed = opts->seed;
    *out_size = adaptive_vocab_size(corpus->index, options_lexicon(*opts), cfg, to_params(*opts));
  });
}

int wanattr_experiment_run(const char* spec_path, const char* output_dir,
                           const char* const* overrides, size_t n_overrides, char** out_summary) {
  if (!spec_path) return usage_error("experiment_run: spec_path must be non-NULL");
  if (n_overrides > 0 && !overrides) {
    return usage_error("experiment_run: overrides must be non-NULL when n_overrides > 0");
  }
  return guarded([&] {
    ExperimentSpec spec = load_experiment_spec(spec_path);
    for (size_t i = 0; i < n_overrides; ++i) {
      if (!overrides[i]) throw user_error("experiment_run: NULL override string");
      apply_override(spec, overrides[i]);
    }
    if (output_dir) spec.output_dir = output_dir;
    const std::string summary = run_experiment(spec);
    if (out_summary) {
      char* copy = static_cast<char*>(std::malloc(summary.size() + 1));
      if (!copy) throw internal_error("out of memory");
      std::memcpy(copy, summary.c_str(), summary.size() + 1);
      *out_summary = copy;
    }
  });
}

void wanattr_string_free(char* s) { std::free(s); }

int wanattr_mds_profiles(wanattr_profile* const* profiles, size_t n_profiles,
                         const char* csv_path, const char* svg_path) {
  if (!profiles || !csv_path) {
    return usage_error("mds_profiles: profiles and csv_path must be non-NULL");
  }
  if (n_profiles < 2) return usage_error("mds_profiles: need at least 2 profiles");
  return guarded([&] {
    std::vector<std::string> labels;
    for (size_t i = 0; i < n_profiles; ++i) {
      if (!profiles[i]) throw user_error("mds_profiles: NULL profile handle");
      labels.push_back(profiles[i]->profile.author_id);
    }
    Matrix h(n_profiles, n_profiles);
    for (size_t i = 0; i < n_profiles; ++i) {
      const AuthorProfile& a = profiles[i]->profile;
      for (size_t j = 0; j < n_profiles; ++j) {
        if (i == j) continue;
        const AuthorProfile& b = profiles[j]->profile;
        h(i, j) = relative_entropy(a.chain, b.chain, a.pi);
      }
    }
    const std::vector<MdsPoint> points = classical_mds(symmetrize(labels, h));
    write_file(csv_path, mds_points_to_csv(points));
    if (svg_path) write_file(svg_path, scatter_svg(points, "author map"));
  });
}

}  // extern "C"
