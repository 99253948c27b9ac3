#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/error.hpp"
#include "experiments/runner.hpp"
#include "support/synth.hpp"
#include "text/corpus.hpp"
#include "text/lexicon.hpp"

using namespace wanattr;
namespace fs = std::filesystem;

namespace {

// small, fast corpus shared by all cases in this suite
struct RunnerFixture {
  fs::path root;
  CorpusIndex corpus;

  RunnerFixture() {
    root = fs::temp_directory_path() / "wanattr-test-exp";
    synth::Config cfg = synth::strong_config();
    cfg.authors = 4;
    cfg.texts_per_author = 2;
    cfg.words_per_text = 15000;
    cfg.seed = 55;
    if (!fs::exists(root / "auth_a")) {
      fs::remove_all(root);
      synth::write_corpus(root, cfg);
    }
    corpus = ingest_corpus(root);
  }

  ExperimentSpec base_spec(ExperimentKind kind) const {
    ExperimentSpec spec;
    spec.kind = kind;
    spec.corpus_root = root;
    spec.seed = 9;
    spec.seed_set = true;
    spec.trials = 20;
    spec.repeats = 2;
    spec.text_words = 2000;
    spec.profile_words = 10000;
    spec.vocab_mode.size = 25;
    return spec;
  }
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string write_meta(const fs::path& root) {
  const fs::path p = root / "meta.csv";
  std::ofstream out(p);
  out << "author,period,genre,gender\n"
      << "auth_a,early,novel,f\n"
      << "auth_b,early,essay,m\n"
      << "auth_c,late,novel,f\n"
      << "auth_d,late,essay,m\n";
  return p.string();
}

}  // namespace

TEST_CASE("profile sweep emits one row per cell with plausible accuracy") {
  RunnerFixture fx;
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kProfileSweep);
  spec.authors_range = {2, 3};
  spec.lengths = {5000, 10000};
  const auto rows = run_profile_sweep(spec, fx.corpus, default_lexicon());
  REQUIRE(rows.size() == 4);
  for (const ReportRow& r : rows) {
    CHECK(!r.skipped);
    CHECK(r.trials >= spec.trials);
    CHECK(r.accuracy >= 0.0);
    CHECK(r.accuracy <= 1.0);
    CHECK(r.random_baseline == doctest::Approx(1.0 / static_cast<double>(r.num_authors)));
  }
}

TEST_CASE("infeasible cells are reported as skipped, not fatal") {
  RunnerFixture fx;
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kProfileSweep);
  spec.authors_range = {2};
  spec.lengths = {500000};  // more profile words than any author has
  const auto rows = run_profile_sweep(spec, fx.corpus, default_lexicon());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].skipped);
  CHECK(!rows[0].reason.empty());
}

TEST_CASE("text sweep rows vary the text length") {
  RunnerFixture fx;
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kTextSweep);
  spec.authors_range = {2};
  spec.lengths = {1000, 3000};
  const auto rows = run_text_sweep(spec, fx.corpus, default_lexicon());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].text_words == 1000);
  CHECK(rows[1].text_words == 3000);
  CHECK(rows[0].profile_words == spec.profile_words);
}

TEST_CASE("alpha sweep records the swept value") {
  RunnerFixture fx;
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kAlphaSweep);
  spec.authors_range = {2};
  spec.values = {0.6, 0.9};
  const auto rows = run_param_sweep(spec, fx.corpus, default_lexicon());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].param == 0.6);
  CHECK(rows[1].param == 0.9);
  CHECK(rows[0].kind == "alpha_sweep");
}

TEST_CASE("dissimilarity pairs carry both labels and averaged values") {
  RunnerFixture fx;
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kDissimilarityAccuracy);
  spec.trials = 4;
  const auto points = run_dissimilarity_accuracy(spec, fx.corpus, default_lexicon());
  REQUIRE(points.size() == 4);
  for (const PairPoint& p : points) {
    CHECK(p.author_a < p.author_b);
    CHECK(p.dissim > 0.0);
    CHECK(p.accuracy >= 0.0);
    CHECK(p.accuracy <= 1.0);
    CHECK(p.repeats == 2);
  }
}

TEST_CASE("meta study splits group means and a full matrix") {
  RunnerFixture fx;
  write_meta(fx.root);
  const MetaInfo meta = load_meta(fx.root / "meta.csv", fx.corpus.authors);
  CHECK(meta.period.at("auth_a") == "early");
  CHECK(meta.gender.at("auth_d") == "m");

  ExperimentSpec spec = fx.base_spec(ExperimentKind::kMetaTime);
  const MetaStudyResult result = run_meta_study(spec, fx.corpus, default_lexicon(), meta);
  CHECK(result.matrix.labels == fx.corpus.authors);
  CHECK(result.within_mean > 0.0);
  CHECK(result.between_mean > 0.0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(result.matrix.d(i, i) == 0.0);
}

TEST_CASE("metadata files must cover every author") {
  RunnerFixture fx;
  const fs::path p = fx.root / "partial_meta.csv";
  std::ofstream(p) << "author,period,genre,gender\nauth_a,early,novel,f\n";
  CHECK_THROWS_WITH_AS(load_meta(p, fx.corpus.authors), doctest::Contains("auth_b"), Error);
  fs::remove(p);
}

TEST_CASE("gender study reports an accuracy over its trials") {
  RunnerFixture fx;
  write_meta(fx.root);
  const MetaInfo meta = load_meta(fx.root / "meta.csv", fx.corpus.authors);
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kMetaGender);
  spec.trials = 6;
  spec.profile_words = 8000;
  const MetaStudyResult result = run_meta_study(spec, fx.corpus, default_lexicon(), meta);
  CHECK(result.gender_trials == 6);
  CHECK(result.gender_accuracy >= 0.0);
  CHECK(result.gender_accuracy <= 1.0);
}

TEST_CASE("collaboration scores pure and hybrid profiles against a play") {
  RunnerFixture fx;
  const fs::path play_path = fx.root / "play.txt";
  std::ofstream(play_path, std::ios::binary) << synth::generate_text(
      [] {
        synth::Config c = synth::strong_config();
        c.words_per_text = 8000;
        c.seed = 56;
        return c;
      }(),
      0, 0);
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kCollaboration);
  spec.profile_words = 8000;
  spec.repeats = 2;
  std::ifstream in(play_path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  const TokenizedText play = tokenize(buf.str(), "play");
  const CollaborationResult result =
      run_collaboration(spec, fx.corpus, default_lexicon(), play);
  REQUIRE(result.candidates.size() == 4);
  CHECK(result.hybrid.rows() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(result.pure[i] > 0.0);
    CHECK(result.hybrid(i, i) == result.pure[i]);
    for (std::size_t j = 0; j < 4; ++j) CHECK(result.hybrid(i, j) == result.hybrid(j, i));
  }
  fs::remove(play_path);
}

TEST_CASE("method comparison reports error percentages for every method") {
  RunnerFixture fx;
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kMethodComparison);
  spec.authors_range = {2};
  spec.trials = 20;
  const auto rows = run_method_comparison(spec, fx.corpus, default_lexicon());
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].trials >= 20);
  for (double v : {rows[0].nb, rows[0].nn1, rows[0].nn3, rows[0].wan, rows[0].voting}) {
    CHECK(v >= 0.0);
    CHECK(v <= 100.0);
  }
  const std::string csv = method_comparison_to_csv(rows);
  CHECK(csv.find("num_authors,trials,NB,1-NN,3-NN,WAN,Voting") != std::string::npos);
}

TEST_CASE("run_experiment writes reports and is byte-identical on reruns") {
  RunnerFixture fx;
  // keep outputs outside the corpus root so reruns do not re-ingest them
  const fs::path out1 = fs::temp_directory_path() / "wanattr-test-exp-out1";
  const fs::path out2 = fs::temp_directory_path() / "wanattr-test-exp-out2";
  fs::remove_all(out1);
  fs::remove_all(out2);
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kProfileSweep);
  spec.authors_range = {2};
  spec.lengths = {5000};
  spec.output_dir = out1;
  const std::string summary1 = run_experiment(spec);
  spec.output_dir = out2;
  const std::string summary2 = run_experiment(spec);
  CHECK(summary1.find("profile_sweep") != std::string::npos);
  const std::string csv1 = read_file(out1 / "profile_sweep.csv");
  CHECK(!csv1.empty());
  CHECK(csv1 == read_file(out2 / "profile_sweep.csv"));
  fs::remove_all(out1);
  fs::remove_all(out2);
}

TEST_CASE("randomized experiments demand an explicit seed") {
  RunnerFixture fx;
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kProfileSweep);
  spec.seed_set = false;
  CHECK_THROWS_WITH_AS(run_experiment(spec), doctest::Contains("seed"), Error);
}

TEST_CASE("input validation happens before any output file is created") {
  RunnerFixture fx;
  ExperimentSpec spec = fx.base_spec(ExperimentKind::kProfileSweep);
  spec.corpus_root = "/nonexistent/corpus";
  spec.output_dir = fs::temp_directory_path() / "wanattr-should-not-exist";
  CHECK_THROWS_AS(run_experiment(spec), Error);
  CHECK(!fs::exists(spec.output_dir));
}
