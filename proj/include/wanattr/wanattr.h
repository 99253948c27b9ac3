/* wanattr: function-word adjacency network authorship attribution.
 *
 * All functions returning int use status codes: 0 success, 1 internal
 * failure, 2 caller/input error. On failure wanattr_last_error() holds a
 * thread-local description valid until the next wanattr call on the same
 * thread. Handles are opaque and single-owner; close functions accept NULL.
 */
#ifndef WANATTR_H
#define WANATTR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define WANATTR_OK 0
#define WANATTR_ERR_INTERNAL 1
#define WANATTR_ERR_USAGE 2

typedef struct wanattr_corpus wanattr_corpus;
typedef struct wanattr_profile wanattr_profile;
typedef struct wanattr_result wanattr_result;

/* Description of the most recent failure on this thread ("" if none). */
const char* wanattr_last_error(void);

typedef struct wanattr_options {
  double alpha;             /* decay per extra word of separation, (0,1) */
  int window;               /* look-ahead horizon in words, >= 1 */
  int vocab_size;           /* function words kept; ignored if adaptive */
  int adaptive;             /* nonzero: choose vocab size by cross-validation */
  int pieces;               /* excerpts composing a profile */
  const char* lexicon_path; /* candidate word list; NULL = built-in list */
  uint64_t seed;            /* root seed for all randomized steps */
} wanattr_options;

/* Fill opts with the defaults (alpha 0.75, window 10, vocab 60, static,
 * 10 pieces, built-in lexicon, seed 0). */
void wanattr_options_init(wanattr_options* opts);

/* Corpus: a directory with one subdirectory per author holding .txt files. */
int wanattr_corpus_open(const char* root, wanattr_corpus** out);
void wanattr_corpus_close(wanattr_corpus* corpus);
size_t wanattr_corpus_author_count(const wanattr_corpus* corpus);
/* Author name at index (ascending); NULL if out of range. */
const char* wanattr_corpus_author(const wanattr_corpus* corpus, size_t index);
size_t wanattr_corpus_text_count(const wanattr_corpus* corpus, const char* author);
size_t wanattr_corpus_word_count(const wanattr_corpus* corpus, const char* author);

/* Build an author profile from all of the author's texts. The function-word
 * vocabulary is selected over the whole corpus so that profiles built from
 * the same corpus with the same options are comparable. */
int wanattr_profile_build(const wanattr_corpus* corpus, const char* author,
                          const wanattr_options* opts, wanattr_profile** out);
int wanattr_profile_save(const wanattr_profile* profile, const char* path);
int wanattr_profile_open(const char* path, wanattr_profile** out);
void wanattr_profile_close(wanattr_profile* profile);
const char* wanattr_profile_author(const wanattr_profile* profile);
size_t wanattr_profile_vocab_size(const wanattr_profile* profile);
size_t wanattr_profile_word_count(const wanattr_profile* profile);

/* Attribute a text file to one of the candidate profiles (lowest relative
 * entropy; ties go to the alphabetically first author). All profiles must
 * share a vocabulary and parameters. */
int wanattr_attribute_file(const char* text_path, wanattr_profile* const* profiles,
                           size_t n_profiles, wanattr_result** out);
const char* wanattr_result_predicted(const wanattr_result* result);
size_t wanattr_result_candidate_count(const wanattr_result* result);
const char* wanattr_result_candidate(const wanattr_result* result, size_t index);
double wanattr_result_entropy(const wanattr_result* result, size_t index);
void wanattr_result_close(wanattr_result* result);

/* Pick the vocabulary size in [n_min, n_max] that maximizes leave-one-out
 * accuracy over `rounds` randomized rounds (ties: smallest size). */
int wanattr_crossval_select(const wanattr_corpus* corpus, const wanattr_options* opts,
                            int n_min, int n_max, int rounds, size_t* out_size);

/* Run an experiment described by a `key = value` spec file. `overrides` are
 * additional `key=value` strings applied on top; `output_dir` overrides the
 * spec's output directory when non-NULL. On success *out_summary (if
 * non-NULL) receives a malloc'd summary; free with wanattr_string_free. */
int wanattr_experiment_run(const char* spec_path, const char* output_dir,
                           const char* const* overrides, size_t n_overrides,
                           char** out_summary);
void wanattr_string_free(char* s);

/* Project profiles to the plane by classical multidimensional scaling of
 * their pairwise dissimilarities; writes a CSV of coordinates and, when
 * svg_path is non-NULL, a scatter plot. */
int wanattr_mds_profiles(wanattr_profile* const* profiles, size_t n_profiles,
                         const char* csv_path, const char* svg_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WANATTR_H */
