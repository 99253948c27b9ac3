// Command line front end for the wanattr shared library. Exit codes: 0 on
// success, 2 for usage/input errors, 1 for internal failures.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wanattr/wanattr.h"

namespace {

int fail(int status) {
  std::cerr << "error: " << wanattr_last_error() << "\n";
  return status;
}

struct OptionFlags {
  double alpha = 0.75;
  int window = 10;
  int vocab_size = 60;
  bool adaptive = false;
  int pieces = 10;
  std::string lexicon;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_option_flags(CLI::App* cmd, OptionFlags& flags, bool with_vocab = true) {
  cmd->add_option("--alpha", flags.alpha, "Adjacency decay factor, in (0,1)");
  cmd->add_option("--window", flags.window, "Look-ahead window in words");
  if (with_vocab) {
    cmd->add_option("--vocab-size", flags.vocab_size, "Number of function words");
    cmd->add_flag("--adaptive", flags.adaptive,
                  "Choose the vocabulary size by cross-validation (needs --seed)");
  }
  cmd->add_option("--pieces", flags.pieces, "Excerpts per profile");
  cmd->add_option("--lexicon", flags.lexicon, "Candidate function-word list (one per line)");
  cmd->add_option("--seed", flags.seed, "Random seed")->each([&flags](const std::string&) {
    flags.seed_set = true;
  });
}

wanattr_options to_options(const OptionFlags& flags) {
  wanattr_options opts;
  wanattr_options_init(&opts);
  opts.alpha = flags.alpha;
  opts.window = flags.window;
  opts.vocab_size = flags.vocab_size;
  opts.adaptive = flags.adaptive ? 1 : 0;
  opts.pieces = flags.pieces;
  opts.lexicon_path = flags.lexicon.empty() ? nullptr : flags.lexicon.c_str();
  opts.seed = flags.seed;
  return opts;
}

int require_seed(const OptionFlags& flags, const char* what) {
  if (flags.seed_set) return 0;
  std::cerr << "error: " << what << " is randomized: pass an explicit --seed\n";
  return 2;
}

struct ProfileSet {
  std::vector<wanattr_profile*> handles;
  ~ProfileSet() {
    for (wanattr_profile* p : handles) wanattr_profile_close(p);
  }
  int load(const std::vector<std::string>& paths) {
    for (const std::string& path : paths) {
      wanattr_profile* p = nullptr;
      if (const int rc = wanattr_profile_open(path.c_str(), &p)) return fail(rc);
      handles.push_back(p);
    }
    return 0;
  }
};

int cmd_ingest_check(const std::string& root) {
  wanattr_corpus* corpus = nullptr;
  if (const int rc = wanattr_corpus_open(root.c_str(), &corpus)) return fail(rc);
  const size_t n = wanattr_corpus_author_count(corpus);
  std::cout << "authors: " << n << "\n";
  for (size_t i = 0; i < n; ++i) {
    const char* author = wanattr_corpus_author(corpus, i);
    std::cout << "  " << author << ": " << wanattr_corpus_text_count(corpus, author)
              << " texts, " << wanattr_corpus_word_count(corpus, author) << " words\n";
  }
  wanattr_corpus_close(corpus);
  return 0;
}

int cmd_profile(const std::string& root, const std::string& author, const std::string& out,
                const OptionFlags& flags) {
  if (flags.adaptive) {
    if (const int rc = require_seed(flags, "--adaptive vocabulary selection")) return rc;
  }
  wanattr_corpus* corpus = nullptr;
  if (const int rc = wanattr_corpus_open(root.c_str(), &corpus)) return fail(rc);
  const wanattr_options opts = to_options(flags);
  wanattr_profile* profile = nullptr;
  int rc = wanattr_profile_build(corpus, author.c_str(), &opts, &profile);
  wanattr_corpus_close(corpus);
  if (rc) return fail(rc);
  rc = wanattr_profile_save(profile, out.c_str());
  if (rc == 0) {
    std::cout << "profile " << wanattr_profile_author(profile) << ": "
              << wanattr_profile_vocab_size(profile) << " function words, "
              << wanattr_profile_word_count(profile) << " source words -> " << out << "\n";
  }
  wanattr_profile_close(profile);
  return rc ? fail(rc) : 0;
}

int cmd_attribute(const std::vector<std::string>& texts,
                  const std::vector<std::string>& profile_paths, const std::string& csv_out) {
  ProfileSet profiles;
  if (const int rc = profiles.load(profile_paths)) return rc;

  std::ofstream csv;
  if (!csv_out.empty()) {
    csv.open(csv_out, std::ios::binary | std::ios::trunc);
    if (!csv) {
      std::cerr << "error: cannot write " << csv_out << "\n";
      return 2;
    }
  }
  bool header = false;
  for (const std::string& text : texts) {
    wanattr_result* result = nullptr;
    if (const int rc = wanattr_attribute_file(text.c_str(), profiles.handles.data(),
                                              profiles.handles.size(), &result)) {
      return fail(rc);
    }
    const size_t n = wanattr_result_candidate_count(result);
    std::cout << text << " -> " << wanattr_result_predicted(result);
    for (size_t i = 0; i < n; ++i) {
      std::cout << (i == 0 ? "  [" : ", ") << wanattr_result_candidate(result, i) << "="
                << wanattr_result_entropy(result, i);
    }
    std::cout << "]\n";
    if (csv.is_open()) {
      if (!header) {
        csv << "text_id,true_author,predicted";
        for (size_t i = 0; i < n; ++i) csv << ',' << wanattr_result_candidate(result, i);
        csv << '\n';
        header = true;
      }
      csv << text << ",," << wanattr_result_predicted(result);
      csv.precision(17);
      for (size_t i = 0; i < n; ++i) csv << ',' << wanattr_result_entropy(result, i);
      csv << '\n';
    }
    wanattr_result_close(result);
  }
  return 0;
}

int cmd_crossval(const std::string& root, int n_min, int n_max, int rounds,
                 const OptionFlags& flags) {
  if (const int rc = require_seed(flags, "cross-validation")) return rc;
  wanattr_corpus* corpus = nullptr;
  if (const int rc = wanattr_corpus_open(root.c_str(), &corpus)) return fail(rc);
  const wanattr_options opts = to_options(flags);
  size_t size = 0;
  const int rc = wanattr_crossval_select(corpus, &opts, n_min, n_max, rounds, &size);
  wanattr_corpus_close(corpus);
  if (rc) return fail(rc);
  std::cout << "selected vocabulary size: " << size << "\n";
  return 0;
}

int run_experiment(const std::string& spec_path, const std::string& out_dir,
                   const std::vector<std::string>& overrides) {
  std::vector<const char*> raw;
  for (const std::string& o : overrides) raw.push_back(o.c_str());
  char* summary = nullptr;
  const int rc =
      wanattr_experiment_run(spec_path.c_str(), out_dir.empty() ? nullptr : out_dir.c_str(),
                             raw.empty() ? nullptr : raw.data(), raw.size(), &summary);
  if (rc) return fail(rc);
  std::cout << summary << "\n";
  wanattr_string_free(summary);
  return 0;
}

int cmd_compare(const std::string& root, const std::string& out_dir,
                std::vector<std::string> overrides, const OptionFlags& flags) {
  if (const int rc = require_seed(flags, "method comparison")) return rc;
  // The experiment runner reads specs from files; stage a minimal one.
  const std::filesystem::path spec_path =
      std::filesystem::temp_directory_path() /
      ("wanattr-compare-" + std::to_string(::getpid()) + ".spec");
  {
    std::ofstream spec(spec_path, std::ios::binary | std::ios::trunc);
    if (!spec) {
      std::cerr << "error: cannot write " << spec_path.string() << "\n";
      return 1;
    }
    spec << "kind = method_comparison\ncorpus = " << root << "\nseed = " << flags.seed << "\n";
  }
  const int rc = run_experiment(spec_path.string(), out_dir, overrides);
  std::filesystem::remove(spec_path);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Function-word adjacency network authorship attribution"};
  app.require_subcommand(1);

  std::string corpus_root, author, out_path, csv_out, spec_path, out_dir, svg_out;
  std::vector<std::string> texts, profile_paths, overrides;
  int n_min = 20, n_max = 80, rounds = 10;
  OptionFlags flags;

  CLI::App* ingest = app.add_subcommand("ingest-check", "Validate and summarize a corpus");
  ingest->add_option("corpus", corpus_root, "Corpus root (one directory per author)")->required();

  CLI::App* profile = app.add_subcommand("profile", "Build and save an author profile");
  profile->add_option("corpus", corpus_root)->required();
  profile->add_option("--author", author, "Author directory name")->required();
  profile->add_option("--out", out_path, "Output profile JSON")->required();
  add_option_flags(profile, flags);

  CLI::App* attribute = app.add_subcommand("attribute", "Attribute texts to saved profiles");
  attribute->add_option("texts", texts, "Text files to attribute")->required();
  attribute->add_option("--profile", profile_paths, "Candidate profile JSON (repeatable)")
      ->required();
  attribute->add_option("--csv", csv_out, "Also write results as CSV");

  CLI::App* crossval =
      app.add_subcommand("crossval", "Select a vocabulary size by cross-validation");
  crossval->add_option("corpus", corpus_root)->required();
  crossval->add_option("--n-min", n_min, "Smallest size tried");
  crossval->add_option("--n-max", n_max, "Largest size tried");
  crossval->add_option("--rounds", rounds, "Cross-validation rounds");
  add_option_flags(crossval, flags, /*with_vocab=*/false);

  CLI::App* experiment = app.add_subcommand("experiment", "Run an experiment spec file");
  experiment->add_option("spec", spec_path, "key = value experiment description")->required();
  experiment->add_option("--out", out_dir, "Output directory (overrides the spec)");
  experiment->add_option("--set", overrides, "key=value override (repeatable)");

  CLI::App* mds = app.add_subcommand("mds", "Map saved profiles to the plane");
  mds->add_option("--profile", profile_paths, "Profile JSON (repeatable, at least 2)")->required();
  mds->add_option("--csv", csv_out, "Output coordinates CSV")->required();
  mds->add_option("--svg", svg_out, "Optional scatter plot");

  CLI::App* compare =
      app.add_subcommand("compare", "Compare attribution methods on a corpus");
  compare->add_option("corpus", corpus_root)->required();
  compare->add_option("--out", out_dir, "Output directory");
  compare->add_option("--set", overrides, "key=value override (repeatable)");
  compare->add_option("--seed", flags.seed, "Random seed")->each([&flags](const std::string&) {
    flags.seed_set = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (ingest->parsed()) return cmd_ingest_check(corpus_root);
  if (profile->parsed()) return cmd_profile(corpus_root, author, out_path, flags);
  if (attribute->parsed()) return cmd_attribute(texts, profile_paths, csv_out);
  if (crossval->parsed()) return cmd_crossval(corpus_root, n_min, n_max, rounds, flags);
  if (experiment->parsed()) return run_experiment(spec_path, out_dir, overrides);
  if (compare->parsed()) return cmd_compare(corpus_root, out_dir, overrides, flags);
  if (mds->parsed()) {
    ProfileSet profiles;
    if (const int rc = profiles.load(profile_paths)) return rc;
    if (const int rc = wanattr_mds_profiles(profiles.handles.data(), profiles.handles.size(),
                                            csv_out.c_str(),
                                            svg_out.empty() ? nullptr : svg_out.c_str())) {
      return fail(rc);
    }
    std::cout << "wrote " << csv_out << "\n";
    return 0;
  }
  return 2;
}
