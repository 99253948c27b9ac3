#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "attr/profile.hpp"

namespace wanattr {

enum class ExperimentKind {
  kProfileSweep,
  kTextSweep,
  kDissimilarityAccuracy,
  kAlphaSweep,
  kVocabSizeSweep,
  kMetaTime,
  kMetaGenre,
  kMetaGender,
  kCollaboration,
  kMethodComparison,
};

const char* to_string(ExperimentKind kind);
ExperimentKind parse_kind(const std::string& name);

struct VocabMode {
  bool adaptive = false;
  std::size_t size = 60;  // static vocabulary size when not adaptive
};

VocabMode parse_vocab_mode(const std::string& text);

/// Declarative description of one experiment run, parsed from a flat
/// `key = value` file (# comments allowed).
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kProfileSweep;
  std::filesystem::path corpus_root;
  std::optional<std::filesystem::path> lexicon_path;
  std::optional<std::filesystem::path> meta_path;  // defaults to corpus/meta.csv
  std::filesystem::path output_dir = "wanattr-out";
  std::vector<std::string> author_filter;          // empty = all authors
  std::vector<std::size_t> lengths;                // swept profile or text lengths
  std::vector<std::size_t> authors_range = {2};    // candidate-set sizes
  std::vector<double> values;                      // swept alpha or vocab-size values
  std::size_t trials = 600;
  std::size_t repeats = 20;                        // per-pair / per-profile repetitions
  std::size_t text_words = 10000;
  std::size_t profile_words = 100000;
  std::size_t pieces = 10;
  WanParams params;                                // alpha = 0.75, window = 10
  VocabMode vocab_mode;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::filesystem::path play_path;                 // collaboration target
  std::vector<std::string> candidates;             // collaboration candidates
};

/// Parse spec file contents. Unknown keys raise a user error listing the
/// valid keys.
ExperimentSpec parse_experiment_spec(const std::string& contents, const std::string& source_name);

ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

/// Apply one `key=value` override on top of a parsed spec.
void apply_override(ExperimentSpec& spec, const std::string& key_value);

}  // namespace wanattr
