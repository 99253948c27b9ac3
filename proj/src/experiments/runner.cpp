#include "experiments/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "attr/attribute.hpp"
#include "attr/crossval.hpp"
#include "attr/hybrid.hpp"
#include "baselines/frequency.hpp"
#include "core/error.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"
#include "text/sampling.hpp"

namespace fs = std::filesystem;

namespace wanattr {

namespace {

std::vector<std::string> pick_author_subset(const std::vector<std::string>& pool, std::size_t k,
                                            Rng& rng) {
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, idx.size() - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  std::vector<std::string> subset;
  subset.reserve(k);
  for (std::size_t i = 0; i < k; ++i) subset.push_back(pool[idx[i]]);
  std::sort(subset.begin(), subset.end());
  return subset;
}

const TokenizedText& pick_text_with_words(const std::vector<TokenizedText>& texts,
                                          std::size_t min_words, const std::string& author,
                                          Rng& rng) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    if (texts[i].total_words >= min_words) eligible.push_back(i);
  }
  if (eligible.empty()) {
    throw user_error("author '" + author + "': no text holds a " + std::to_string(min_words) +
                     "-word excerpt");
  }
  std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
  return texts[eligible[pick(rng)]];
}

std::vector<std::string> cell_vocabulary(const CorpusIndex& corpus,
                                         const std::vector<std::string>& subset,
                                         const FunctionWordLexicon& lexicon,
                                         const VocabMode& mode, const WanParams& params,
                                         std::uint64_t seed) {
  CorpusIndex restricted = restrict_corpus(corpus, subset);
  std::size_t n = mode.size;
  if (mode.adaptive) {
    CrossValConfig cfg;
    cfg.seed = seed;
    n = adaptive_vocab_size(restricted, lexicon, cfg, params);
  }
  return select_function_words(restricted.all_texts(), lexicon, n);
}

struct CellOutcome {
  std::size_t trials = 0;
  std::size_t correct = 0;
  bool skipped = false;
  std::string reason;
};

// One sweep cell: repeated random author draws, profile building from
// ten-piece excerpts, attribution of contiguous unknown excerpts.
CellOutcome run_attribution_cell(const CorpusIndex& corpus, const FunctionWordLexicon& lexicon,
                                 std::size_t num_authors, std::size_t profile_words,
                                 std::size_t text_words, std::size_t min_trials,
                                 const WanParams& params, const VocabMode& vocab_mode,
                                 std::size_t pieces, std::uint64_t cell_seed) {
  CellOutcome outcome;
  if (corpus.authors.size() < num_authors) {
    outcome.skipped = true;
    outcome.reason = "corpus has only " + std::to_string(corpus.authors.size()) +
                     " authors; cell needs " + std::to_string(num_authors);
    return outcome;
  }

  const std::size_t per_draw = std::max<std::size_t>(10, 2 * num_authors);
  const std::size_t draws = (min_trials + per_draw - 1) / per_draw;

  struct DrawResult {
    std::size_t trials = 0;
    std::size_t correct = 0;
    std::string error;
  };
  std::vector<DrawResult> results(draws);

  parallel_for(draws, [&](std::size_t draw) {
    DrawResult& out = results[draw];
    try {
      Rng rng(derive_seed(cell_seed, 0xce11ULL, draw));
      const std::vector<std::string> subset = pick_author_subset(corpus.authors, num_authors, rng);
      const std::vector<std::string> vocab = cell_vocabulary(
          corpus, subset, lexicon, vocab_mode, params, derive_seed(cell_seed, 0xadabULL, draw));

      std::vector<AuthorProfile> profiles;
      profiles.reserve(subset.size());
      for (const std::string& author : subset) {
        const std::vector<TokenizedText> excerpts =
            sample_profile_excerpts(corpus.texts_of(author), profile_words, pieces, rng, author);
        profiles.push_back(build_profile(author, excerpts, vocab, params));
      }
      for (std::size_t t = 0; t < per_draw; ++t) {
        const std::string& author = subset[t % subset.size()];
        const TokenizedText& source =
            pick_text_with_words(corpus.texts_of(author), text_words, author, rng);
        const TokenizedText excerpt = sample_contiguous_excerpt(source, text_words, rng);
        const AttributionResult res = attribute(excerpt, profiles);
        ++out.trials;
        if (res.predicted == author) ++out.correct;
      }
    } catch (const Error& e) {
      out.error = e.what();
    }
  });

  for (const DrawResult& r : results) {
    if (!r.error.empty()) {
      outcome.skipped = true;
      outcome.reason = r.error;
      return outcome;
    }
    outcome.trials += r.trials;
    outcome.correct += r.correct;
  }
  return outcome;
}

ReportRow cell_row(const std::string& kind, std::size_t num_authors, std::size_t profile_words,
                   std::size_t text_words, double param, const CellOutcome& outcome) {
  ReportRow row;
  row.kind = kind;
  row.num_authors = num_authors;
  row.profile_words = profile_words;
  row.text_words = text_words;
  row.param = param;
  row.trials = outcome.trials;
  row.random_baseline = 1.0 / static_cast<double>(num_authors);
  if (outcome.skipped) {
    row.skipped = true;
    row.reason = outcome.reason;
  } else {
    row.accuracy = static_cast<double>(outcome.correct) / static_cast<double>(outcome.trials);
  }
  return row;
}

std::vector<std::size_t> default_profile_lengths() {
  return {10000, 20000, 30000, 40000, 50000, 60000, 70000, 80000, 90000, 100000};
}

std::vector<std::size_t> default_text_lengths() {
  return {1000, 2000, 3000, 4000, 5000, 6000, 8000, 10000, 15000, 20000, 25000, 30000};
}

}  // namespace

std::vector<ReportRow> run_profile_sweep(const ExperimentSpec& spec, const CorpusIndex& corpus,
                                         const FunctionWordLexicon& lexicon) {
  const std::vector<std::size_t> lengths =
      spec.lengths.empty() ? default_profile_lengths() : spec.lengths;
  std::vector<ReportRow> rows;
  for (std::size_t num_authors : spec.authors_range) {
    for (std::size_t profile_words : lengths) {
      const std::uint64_t cell_seed = derive_seed(spec.seed, num_authors, profile_words);
      const CellOutcome outcome =
          run_attribution_cell(corpus, lexicon, num_authors, profile_words, spec.text_words,
                               spec.trials, spec.params, spec.vocab_mode, spec.pieces, cell_seed);
      rows.push_back(
          cell_row("profile_sweep", num_authors, profile_words, spec.text_words, 0.0, outcome));
    }
  }
  return rows;
}

std::vector<ReportRow> run_text_sweep(const ExperimentSpec& spec, const CorpusIndex& corpus,
                                      const FunctionWordLexicon& lexicon) {
  const std::vector<std::size_t> lengths =
      spec.lengths.empty() ? default_text_lengths() : spec.lengths;
  std::vector<ReportRow> rows;
  for (std::size_t num_authors : spec.authors_range) {
    for (std::size_t text_words : lengths) {
      const std::uint64_t cell_seed = derive_seed(spec.seed, num_authors, text_words, 1);
      const CellOutcome outcome =
          run_attribution_cell(corpus, lexicon, num_authors, spec.profile_words, text_words,
                               spec.trials, spec.params, spec.vocab_mode, spec.pieces, cell_seed);
      rows.push_back(
          cell_row("text_sweep", num_authors, spec.profile_words, text_words, 0.0, outcome));
    }
  }
  return rows;
}

std::vector<ReportRow> run_param_sweep(const ExperimentSpec& spec, const CorpusIndex& corpus,
                                       const FunctionWordLexicon& lexicon) {
  const bool alpha_sweep = spec.kind == ExperimentKind::kAlphaSweep;
  std::vector<double> values = spec.values;
  if (values.empty()) {
    if (alpha_sweep) {
      for (double a = 0.50; a < 0.96; a += 0.05) values.push_back(a);
    } else {
      for (double n = 10; n <= 100; n += 10) values.push_back(n);
    }
  }
  std::vector<ReportRow> rows;
  for (std::size_t num_authors : spec.authors_range) {
    for (double value : values) {
      WanParams params = spec.params;
      VocabMode mode = spec.vocab_mode;
      if (alpha_sweep) {
        params.alpha = value;
      } else {
        mode.adaptive = false;
        mode.size = static_cast<std::size_t>(value);
      }
      const std::uint64_t cell_seed =
          derive_seed(spec.seed, num_authors, static_cast<std::uint64_t>(value * 1000.0), 2);
      const CellOutcome outcome =
          run_attribution_cell(corpus, lexicon, num_authors, spec.profile_words, spec.text_words,
                               spec.trials, params, mode, spec.pieces, cell_seed);
      rows.push_back(cell_row(alpha_sweep ? "alpha_sweep" : "vocab_size_sweep", num_authors,
                              spec.profile_words, spec.text_words, value, outcome));
    }
  }
  return rows;
}

std::vector<PairPoint> run_dissimilarity_accuracy(const ExperimentSpec& spec,
                                                  const CorpusIndex& corpus,
                                                  const FunctionWordLexicon& lexicon) {
  if (corpus.authors.size() < 2) {
    throw user_error("dissimilarity_accuracy needs at least 2 authors");
  }
  const std::size_t n_points = spec.trials;
  std::vector<PairPoint> points(n_points);
  std::vector<std::string> errors(n_points);

  parallel_for(n_points, [&](std::size_t p) {
    try {
      Rng rng(derive_seed(spec.seed, 0xd155ULL, p));
      const std::vector<std::string> pair = pick_author_subset(corpus.authors, 2, rng);
      const std::vector<std::string> vocab = cell_vocabulary(
          corpus, pair, lexicon, spec.vocab_mode, spec.params, derive_seed(spec.seed, 0xd156ULL, p));

      double dissim_sum = 0.0;
      std::size_t correct = 0;
      std::size_t total = 0;
      for (std::size_t rep = 0; rep < spec.repeats; ++rep) {
        std::vector<AuthorProfile> profiles;
        for (const std::string& author : pair) {
          profiles.push_back(build_profile(
              author,
              sample_profile_excerpts(corpus.texts_of(author), spec.profile_words, spec.pieces,
                                      rng, author),
              vocab, spec.params));
        }
        dissim_sum += dissimilarity(profiles[0].chain, profiles[0].pi, profiles[1].chain,
                                    profiles[1].pi);
        // Ten unknown excerpts per author per repetition.
        for (const std::string& author : pair) {
          for (int t = 0; t < 10; ++t) {
            const TokenizedText& source =
                pick_text_with_words(corpus.texts_of(author), spec.text_words, author, rng);
            const TokenizedText excerpt = sample_contiguous_excerpt(source, spec.text_words, rng);
            ++total;
            if (attribute(excerpt, profiles).predicted == author) ++correct;
          }
        }
      }
      points[p] = PairPoint{pair[0], pair[1], dissim_sum / static_cast<double>(spec.repeats),
                            static_cast<double>(correct) / static_cast<double>(total),
                            spec.repeats};
    } catch (const Error& e) {
      errors[p] = e.what();
    }
  });

  std::vector<PairPoint> kept;
  for (std::size_t p = 0; p < n_points; ++p) {
    if (errors[p].empty()) kept.push_back(points[p]);
  }
  if (kept.empty()) {
    throw user_error("dissimilarity_accuracy: every pair was skipped; first reason: " +
                     errors.front());
  }
  return kept;
}

MetaInfo load_meta(const fs::path& path, const std::vector<std::string>& authors) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw user_error("cannot read metadata file: " + path.string());
  MetaInfo meta;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (first && !fields.empty() && fields[0] == "author") {
      first = false;
      continue;  // header
    }
    first = false;
    if (fields.size() != 4) {
      throw user_error("metadata '" + path.string() + "': expected author,period,genre,gender: '" +
                       line + "'");
    }
    meta.period[fields[0]] = fields[1];
    meta.genre[fields[0]] = fields[2];
    meta.gender[fields[0]] = fields[3];
  }
  std::string unlabeled;
  for (const std::string& a : authors) {
    if (!meta.period.count(a)) unlabeled += (unlabeled.empty() ? "" : ", ") + a;
  }
  if (!unlabeled.empty()) {
    throw user_error("metadata '" + path.string() + "' is missing authors: " + unlabeled);
  }
  return meta;
}

MetaStudyResult run_meta_study(const ExperimentSpec& spec, const CorpusIndex& corpus,
                               const FunctionWordLexicon& lexicon, const MetaInfo& meta) {
  MetaStudyResult result;

  if (spec.kind == ExperimentKind::kMetaGender) {
    result.groups = meta.gender;
    std::map<std::string, std::vector<std::string>> by_gender;
    for (const std::string& a : corpus.authors) by_gender[meta.gender.at(a)].push_back(a);
    if (by_gender.size() != 2) {
      throw user_error("meta_gender: expected exactly 2 gender labels, found " +
                       std::to_string(by_gender.size()));
    }
    std::vector<std::string> labels;
    for (const auto& [g, _] : by_gender) labels.push_back(g);
    const std::vector<std::string> vocab = select_function_words(
        corpus.all_texts(), lexicon, spec.vocab_mode.size);

    std::vector<int> outcome(spec.trials, -1);
    std::vector<std::string> errors(spec.trials);
    parallel_for(spec.trials, [&](std::size_t t) {
      try {
        Rng rng(derive_seed(spec.seed, 0x9e4dULL, t));
        std::uniform_int_distribution<int> coin(0, 1);
        const std::string truth = labels[coin(rng)];
        const std::vector<std::string>& same = by_gender.at(truth);
        std::uniform_int_distribution<std::size_t> pick(0, same.size() - 1);
        const std::string chosen = same[pick(rng)];
        const TokenizedText& source =
            pick_text_with_words(corpus.texts_of(chosen), spec.text_words, chosen, rng);
        const TokenizedText excerpt = sample_contiguous_excerpt(source, spec.text_words, rng);

        // One profile per gender; the chosen author contributes no text.
        std::vector<AuthorProfile> profiles;
        for (const std::string& g : labels) {
          std::vector<TokenizedText> pool;
          for (const std::string& a : by_gender.at(g)) {
            if (a == chosen) continue;
            const auto& texts = corpus.texts_of(a);
            pool.insert(pool.end(), texts.begin(), texts.end());
          }
          if (pool.empty()) throw user_error("meta_gender: empty profile pool for label " + g);
          profiles.push_back(build_profile(
              g, sample_profile_excerpts(pool, spec.profile_words, spec.pieces, rng, g), vocab,
              spec.params));
        }
        outcome[t] = attribute(excerpt, profiles).predicted == truth ? 1 : 0;
      } catch (const Error& e) {
        errors[t] = e.what();
      }
    });
    std::size_t correct = 0;
    for (std::size_t t = 0; t < spec.trials; ++t) {
      if (!errors[t].empty()) throw user_error("meta_gender: " + errors[t]);
      correct += static_cast<std::size_t>(outcome[t]);
      ++result.gender_trials;
    }
    result.gender_accuracy =
        static_cast<double>(correct) / static_cast<double>(result.gender_trials);
    return result;
  }

  // Time / genre: one profile per author from all their texts, full entropy
  // matrix plus within- vs between-group means.
  const auto& groups = spec.kind == ExperimentKind::kMetaTime ? meta.period : meta.genre;
  result.groups = groups;
  const std::vector<std::string> vocab =
      select_function_words(corpus.all_texts(), lexicon, spec.vocab_mode.size);

  const std::size_t n = corpus.authors.size();
  std::vector<AuthorProfile> profiles(n);
  parallel_for(n, [&](std::size_t i) {
    profiles[i] = build_profile(corpus.authors[i], corpus.texts_of(corpus.authors[i]), vocab,
                                spec.params);
  });

  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      h(i, j) = relative_entropy(profiles[i].chain, profiles[j].chain, profiles[i].pi);
    }
  }
  result.matrix = symmetrize(corpus.authors, h);

  double within = 0.0, between = 0.0;
  std::size_t n_within = 0, n_between = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (groups.at(corpus.authors[i]) == groups.at(corpus.authors[j])) {
        within += h(i, j);
        ++n_within;
      } else {
        between += h(i, j);
        ++n_between;
      }
    }
  }
  result.within_mean = n_within ? within / static_cast<double>(n_within) : 0.0;
  result.between_mean = n_between ? between / static_cast<double>(n_between) : 0.0;
  return result;
}

CollaborationResult run_collaboration(const ExperimentSpec& spec, const CorpusIndex& corpus,
                                      const FunctionWordLexicon& lexicon,
                                      const TokenizedText& play) {
  std::vector<std::string> requested =
      spec.candidates.empty() ? corpus.authors : spec.candidates;
  std::sort(requested.begin(), requested.end());

  CollaborationResult result;
  for (const std::string& author : requested) {
    if (corpus.total_words(author) >= spec.profile_words) {
      result.candidates.push_back(author);
    } else {
      result.dropped.push_back(author);
    }
  }
  if (result.candidates.size() < 2) {
    throw user_error("collaboration: fewer than 2 candidates have " +
                     std::to_string(spec.profile_words) + " words");
  }

  std::vector<const TokenizedText*> vocab_texts;
  for (const std::string& author : result.candidates) {
    for (const TokenizedText& t : corpus.texts_of(author)) vocab_texts.push_back(&t);
  }
  vocab_texts.push_back(&play);
  const std::vector<std::string> vocab =
      select_function_words(vocab_texts, lexicon, spec.vocab_mode.size);

  const MarkovChain play_chain = normalize(build_wan(play, vocab, spec.params.alpha,
                                                     spec.params.window));
  const Distribution play_pi =
      stationary_distribution(play_chain, word_frequencies(play, vocab));

  const std::size_t n = result.candidates.size();
  const std::size_t words_each = spec.profile_words / 2;
  result.pure.assign(n, 0.0);
  result.hybrid = Matrix(n, n);

  // Pure profiles: R random profiles per candidate, entropies averaged.
  parallel_for(n, [&](std::size_t i) {
    const std::string& author = result.candidates[i];
    Rng rng(derive_seed(spec.seed, 0xc011ULL, i));
    double sum = 0.0;
    for (std::size_t r = 0; r < spec.repeats; ++r) {
      const AuthorProfile profile = build_profile(
          author,
          sample_profile_excerpts(corpus.texts_of(author), spec.profile_words, spec.pieces, rng,
                                  author),
          vocab, spec.params);
      sum += relative_entropy(play_chain, profile.chain, play_pi);
    }
    result.pure[i] = sum / static_cast<double>(spec.repeats);
  });

  // Hybrid profiles for unordered pairs; the diagonal is the pure value.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> hybrid_vals(pairs.size(), 0.0);
  parallel_for(pairs.size(), [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    Rng rng(derive_seed(spec.seed, 0xc012ULL, i, j));
    double sum = 0.0;
    for (std::size_t r = 0; r < spec.repeats; ++r) {
      const AuthorProfile profile = build_hybrid_profile(
          result.candidates[i], corpus.texts_of(result.candidates[i]), result.candidates[j],
          corpus.texts_of(result.candidates[j]), words_each, vocab, spec.params, rng, spec.pieces);
      sum += relative_entropy(play_chain, profile.chain, play_pi);
    }
    hybrid_vals[p] = sum / static_cast<double>(spec.repeats);
  });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    result.hybrid(i, j) = hybrid_vals[p];
    result.hybrid(j, i) = hybrid_vals[p];
  }
  for (std::size_t i = 0; i < n; ++i) result.hybrid(i, i) = result.pure[i];
  return result;
}

std::vector<MethodComparisonRow> run_method_comparison(const ExperimentSpec& spec,
                                                       const CorpusIndex& corpus,
                                                       const FunctionWordLexicon& lexicon) {
  std::vector<MethodComparisonRow> rows;
  for (std::size_t num_authors : spec.authors_range) {
    if (corpus.authors.size() < num_authors) {
      throw user_error("method_comparison: corpus has only " +
                       std::to_string(corpus.authors.size()) + " authors; cell needs " +
                       std::to_string(num_authors));
    }
    const std::size_t per_draw = 10 * num_authors;
    const std::size_t draws = (spec.trials + per_draw - 1) / per_draw;

    struct DrawTally {
      std::size_t trials = 0;
      std::size_t err_nb = 0, err_1nn = 0, err_3nn = 0, err_wan = 0, err_vote = 0;
      std::string error;
    };
    std::vector<DrawTally> tallies(draws);

    parallel_for(draws, [&](std::size_t draw) {
      DrawTally& tally = tallies[draw];
      try {
        Rng rng(derive_seed(spec.seed, 0xc09aULL, num_authors, draw));
        const std::vector<std::string> subset =
            pick_author_subset(corpus.authors, num_authors, rng);
        const std::vector<std::string> vocab =
            cell_vocabulary(corpus, subset, lexicon, spec.vocab_mode, spec.params,
                            derive_seed(spec.seed, 0xc09bULL, num_authors, draw));

        std::vector<AuthorProfile> wan_profiles;
        std::vector<NaiveBayesProfile> nb_profiles;
        std::vector<std::pair<FrequencyVector, std::string>> knn_training;
        for (const std::string& author : subset) {
          const std::vector<TokenizedText> excerpts = sample_profile_excerpts(
              corpus.texts_of(author), spec.profile_words, spec.pieces, rng, author);
          wan_profiles.push_back(build_profile(author, excerpts, vocab, spec.params));
          std::vector<FrequencyVector> vectors;
          for (const TokenizedText& e : excerpts) {
            vectors.push_back(frequency_vector(e, vocab));
            knn_training.emplace_back(vectors.back(), author);
          }
          nb_profiles.push_back(aggregate_counts(author, vectors));
        }

        for (const std::string& author : subset) {
          for (int t = 0; t < 10; ++t) {
            const TokenizedText& source =
                pick_text_with_words(corpus.texts_of(author), spec.text_words, author, rng);
            const TokenizedText excerpt = sample_contiguous_excerpt(source, spec.text_words, rng);
            const FrequencyVector fv = frequency_vector(excerpt, vocab);

            const AttributionResult wan = attribute(excerpt, wan_profiles);
            const AttributionResult nb = naive_bayes_attribute(excerpt.id, fv, nb_profiles);
            const AttributionResult nn1 = knn_attribute(excerpt.id, fv, knn_training, 1);
            const AttributionResult nn3 = knn_attribute(excerpt.id, fv, knn_training, 3);
            const AttributionResult vote = majority_vote(wan, nb, nn1);

            ++tally.trials;
            tally.err_wan += wan.predicted != author;
            tally.err_nb += nb.predicted != author;
            tally.err_1nn += nn1.predicted != author;
            tally.err_3nn += nn3.predicted != author;
            tally.err_vote += vote.predicted != author;
          }
        }
      } catch (const Error& e) {
        tally.error = e.what();
      }
    });

    MethodComparisonRow row;
    row.num_authors = num_authors;
    std::size_t nb = 0, nn1 = 0, nn3 = 0, wan = 0, vote = 0;
    for (const DrawTally& t : tallies) {
      if (!t.error.empty()) throw user_error("method_comparison: " + t.error);
      row.trials += t.trials;
      nb += t.err_nb;
      nn1 += t.err_1nn;
      nn3 += t.err_3nn;
      wan += t.err_wan;
      vote += t.err_vote;
    }
    const double scale = 100.0 / static_cast<double>(row.trials);
    row.nb = scale * static_cast<double>(nb);
    row.nn1 = scale * static_cast<double>(nn1);
    row.nn3 = scale * static_cast<double>(nn3);
    row.wan = scale * static_cast<double>(wan);
    row.voting = scale * static_cast<double>(vote);
    rows.push_back(row);
  }
  return rows;
}

std::string method_comparison_to_csv(const std::vector<MethodComparisonRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "# error rates in percent; profiles and texts per spec\n";
  out << "num_authors,trials,NB,1-NN,3-NN,WAN,Voting\n";
  for (const MethodComparisonRow& r : rows) {
    out << r.num_authors << ',' << r.trials << ',' << r.nb << ',' << r.nn1 << ',' << r.nn3 << ','
        << r.wan << ',' << r.voting << '\n';
  }
  return out.str();
}

std::string run_experiment(const ExperimentSpec& spec) {
  const bool randomized = spec.kind != ExperimentKind::kMetaTime &&
                          spec.kind != ExperimentKind::kMetaGenre;
  if (randomized && !spec.seed_set) {
    throw user_error("experiment kind '" + std::string(to_string(spec.kind)) +
                     "' is randomized: an explicit seed is required");
  }

  // Validate and load all inputs before writing anything.
  CorpusIndex corpus = ingest_corpus(spec.corpus_root);
  if (!spec.author_filter.empty()) corpus = restrict_corpus(corpus, spec.author_filter);
  const FunctionWordLexicon lexicon =
      spec.lexicon_path ? load_lexicon(*spec.lexicon_path) : default_lexicon();

  std::ostringstream summary;
  const fs::path out_dir = spec.output_dir;

  switch (spec.kind) {
    case ExperimentKind::kProfileSweep: {
      const auto rows = run_profile_sweep(spec, corpus, lexicon);
      write_file(out_dir / "profile_sweep.csv", sweep_rows_to_csv(rows));
      summary << "profile_sweep: " << rows.size() << " cells -> "
              << (out_dir / "profile_sweep.csv").string();
      break;
    }
    case ExperimentKind::kTextSweep: {
      const auto rows = run_text_sweep(spec, corpus, lexicon);
      write_file(out_dir / "text_sweep.csv", sweep_rows_to_csv(rows));
      summary << "text_sweep: " << rows.size() << " cells -> "
              << (out_dir / "text_sweep.csv").string();
      break;
    }
    case ExperimentKind::kAlphaSweep:
    case ExperimentKind::kVocabSizeSweep: {
      const auto rows = run_param_sweep(spec, corpus, lexicon);
      const std::string name = std::string(to_string(spec.kind)) + ".csv";
      write_file(out_dir / name, sweep_rows_to_csv(rows));
      summary << to_string(spec.kind) << ": " << rows.size() << " cells -> "
              << (out_dir / name).string();
      break;
    }
    case ExperimentKind::kDissimilarityAccuracy: {
      const auto points = run_dissimilarity_accuracy(spec, corpus, lexicon);
      write_file(out_dir / "dissimilarity_accuracy.csv", pair_points_to_csv(points));
      std::vector<MdsPoint> scatter;
      for (const PairPoint& p : points) {
        scatter.push_back(MdsPoint{p.author_a + "/" + p.author_b, p.dissim, p.accuracy});
      }
      write_file(out_dir / "dissimilarity_accuracy.svg",
                 scatter_svg(scatter, "accuracy vs inter-profile dissimilarity"));
      summary << "dissimilarity_accuracy: " << points.size() << " pairs -> "
              << (out_dir / "dissimilarity_accuracy.csv").string();
      break;
    }
    case ExperimentKind::kMetaTime:
    case ExperimentKind::kMetaGenre:
    case ExperimentKind::kMetaGender: {
      const fs::path meta_path =
          spec.meta_path ? *spec.meta_path : spec.corpus_root / "meta.csv";
      const MetaInfo meta = load_meta(meta_path, corpus.authors);
      const MetaStudyResult result = run_meta_study(spec, corpus, lexicon, meta);
      const std::string stem = to_string(spec.kind);
      if (spec.kind == ExperimentKind::kMetaGender) {
        std::ostringstream csv;
        csv.precision(17);
        csv << "# leave-one-author-out two-profile gender attribution\n";
        csv << "accuracy,trials\n" << result.gender_accuracy << ',' << result.gender_trials << '\n';
        write_file(out_dir / (stem + ".csv"), csv.str());
        summary << stem << ": accuracy " << result.gender_accuracy << " over "
                << result.gender_trials << " trials";
      } else {
        write_file(out_dir / (stem + "_entropies.csv"),
                   labeled_matrix_to_csv(result.matrix.labels, result.matrix.h,
                                         "asymmetric relative entropies between author profiles"));
        write_file(out_dir / (stem + "_dissimilarity.csv"),
                   labeled_matrix_to_csv(result.matrix.labels, result.matrix.d,
                                         "symmetrized inter-profile dissimilarities"));
        std::ostringstream csv;
        csv.precision(17);
        csv << "# group statistic,value\nwithin_group_mean," << result.within_mean
            << "\nbetween_group_mean," << result.between_mean << '\n';
        write_file(out_dir / (stem + "_groups.csv"), csv.str());
        write_file(out_dir / (stem + "_heatmap.svg"),
                   heatmap_svg(result.matrix.labels, result.matrix.h, stem));
        summary << stem << ": within-group mean " << result.within_mean << ", between-group mean "
                << result.between_mean;
      }
      break;
    }
    case ExperimentKind::kCollaboration: {
      if (spec.play_path.empty()) throw user_error("collaboration: missing 'play' path");
      std::ifstream in(spec.play_path, std::ios::binary);
      if (!in) throw user_error("cannot read play file: " + spec.play_path.string());
      std::ostringstream buf;
      buf << in.rdbuf();
      const TokenizedText play = tokenize(buf.str(), spec.play_path.filename().string());
      const CollaborationResult result = run_collaboration(spec, corpus, lexicon, play);
      std::ostringstream pure;
      pure.precision(17);
      pure << "# mean relative entropy from the play to pure author profiles\nauthor,entropy\n";
      for (std::size_t i = 0; i < result.candidates.size(); ++i) {
        pure << result.candidates[i] << ',' << result.pure[i] << '\n';
      }
      write_file(out_dir / "collaboration_pure.csv", pure.str());
      write_file(out_dir / "collaboration_hybrid.csv",
                 labeled_matrix_to_csv(result.candidates, result.hybrid,
                                       "mean relative entropy from the play to hybrid profiles; "
                                       "diagonal = pure profiles"));
      summary << "collaboration: " << result.candidates.size() << " candidates";
      if (!result.dropped.empty()) {
        summary << " (dropped:";
        for (const std::string& d : result.dropped) summary << ' ' << d;
        summary << ')';
      }
      break;
    }
    case ExperimentKind::kMethodComparison: {
      const auto rows = run_method_comparison(spec, corpus, lexicon);
      write_file(out_dir / "method_comparison.csv", method_comparison_to_csv(rows));
      summary << "method_comparison: " << rows.size() << " rows -> "
              << (out_dir / "method_comparison.csv").string();
      break;
    }
  }
  return summary.str();
}

}  // namespace wanattr
