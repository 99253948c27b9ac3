#pragma once

#include <map>

#include "experiments/report.hpp"
#include "experiments/spec.hpp"
#include "text/corpus.hpp"
#include "text/lexicon.hpp"

namespace wanattr {

/// Sidecar metadata (`meta.csv`: author,period,genre,gender).
struct MetaInfo {
  std::map<std::string, std::string> period;
  std::map<std::string, std::string> genre;
  std::map<std::string, std::string> gender;
};

MetaInfo load_meta(const std::filesystem::path& path, const std::vector<std::string>& authors);

struct MetaStudyResult {
  DissimilarityMatrix matrix;                    // per-author profile entropies
  std::map<std::string, std::string> groups;     // author -> group label
  double within_mean = 0.0;
  double between_mean = 0.0;
  double gender_accuracy = 0.0;                  // meta_gender only
  std::size_t gender_trials = 0;
};

struct CollaborationResult {
  std::vector<std::string> candidates;  // kept, ascending
  std::vector<std::string> dropped;     // insufficient corpus
  std::vector<double> pure;             // mean entropy play -> pure profiles
  Matrix hybrid;                        // symmetric, diagonal = pure
};

struct MethodComparisonRow {
  std::size_t num_authors = 0;
  std::size_t trials = 0;
  // Error rates in percent.
  double nb = 0.0;
  double nn1 = 0.0;
  double nn3 = 0.0;
  double wan = 0.0;
  double voting = 0.0;
};

std::vector<ReportRow> run_profile_sweep(const ExperimentSpec& spec, const CorpusIndex& corpus,
                                         const FunctionWordLexicon& lexicon);
std::vector<ReportRow> run_text_sweep(const ExperimentSpec& spec, const CorpusIndex& corpus,
                                      const FunctionWordLexicon& lexicon);
/// alpha_sweep / vocab_size_sweep: one swept WAN parameter, fixed lengths.
std::vector<ReportRow> run_param_sweep(const ExperimentSpec& spec, const CorpusIndex& corpus,
                                       const FunctionWordLexicon& lexicon);
std::vector<PairPoint> run_dissimilarity_accuracy(const ExperimentSpec& spec,
                                                  const CorpusIndex& corpus,
                                                  const FunctionWordLexicon& lexicon);
MetaStudyResult run_meta_study(const ExperimentSpec& spec, const CorpusIndex& corpus,
                               const FunctionWordLexicon& lexicon, const MetaInfo& meta);
CollaborationResult run_collaboration(const ExperimentSpec& spec, const CorpusIndex& corpus,
                                      const FunctionWordLexicon& lexicon,
                                      const TokenizedText& play);
std::vector<MethodComparisonRow> run_method_comparison(const ExperimentSpec& spec,
                                                       const CorpusIndex& corpus,
                                                       const FunctionWordLexicon& lexicon);

std::string method_comparison_to_csv(const std::vector<MethodComparisonRow>& rows);

/// Load inputs, dispatch on spec.kind, write the report files into
/// spec.output_dir and return a one-paragraph summary. All inputs are
/// validated before the first output file is created.
std::string run_experiment(const ExperimentSpec& spec);

}  // namespace wanattr
