#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "text/tokenize.hpp"

using namespace wanattr;

namespace {

const char* kBeePassage =
    "A swarm in May is worth a load of hay; a swarm in June is worth a silver "
    "spoon; but a swarm in July is not worth a fly.";

}  // namespace

TEST_CASE("bee passage splits into three sentences of known lengths") {
  const TokenizedText text = tokenize(kBeePassage, "bee");
  REQUIRE(text.sentences.size() == 3);
  CHECK(text.sentences[0].tokens.size() == 10);
  CHECK(text.sentences[1].tokens.size() == 9);
  CHECK(text.sentences[2].tokens.size() == 10);
  CHECK(text.total_words == 29);
  CHECK(text.sentences[0].tokens[0] == "a");
  CHECK(text.sentences[0].tokens[9] == "hay");
  CHECK(text.sentences[2].tokens[0] == "but");
}

TEST_CASE("words are lowercased and stripped of edge punctuation") {
  const TokenizedText text = tokenize("\"Hello,\" (World)! YES?", "t");
  REQUIRE(text.sentences.size() == 2);
  CHECK(text.sentences[0].tokens == std::vector<std::string>{"hello", "world"});
  CHECK(text.sentences[1].tokens == std::vector<std::string>{"yes"});
}

TEST_CASE("all four stoppers end sentences") {
  const TokenizedText text = tokenize("one. two? three! four; five", "t");
  REQUIRE(text.sentences.size() == 5);
  for (const Sentence& s : text.sentences) CHECK(s.tokens.size() == 1);
}

TEST_CASE("hyphenated words split, apostrophes stay internal") {
  const TokenizedText text = tokenize("well-known don't o'clock", "t");
  REQUIRE(text.sentences.size() == 1);
  CHECK(text.sentences[0].tokens ==
        std::vector<std::string>{"well", "known", "don't", "o'clock"});
}

TEST_CASE("curly quotes and dashes are normalized") {
  const TokenizedText text = tokenize("“yes”—no ‘it’s’", "t");
  REQUIRE(text.sentences.size() == 1);
  CHECK(text.sentences[0].tokens == std::vector<std::string>{"yes", "no", "it's"});
}

TEST_CASE("empty and punctuation-only input yields no sentences") {
  CHECK(tokenize("", "t").sentences.empty());
  CHECK(tokenize("...  !! ;;", "t").sentences.empty());
  CHECK(tokenize("", "t").total_words == 0);
}

TEST_CASE("empty sentences between stoppers are dropped") {
  const TokenizedText text = tokenize("Stop. . Go!", "t");
  REQUIRE(text.sentences.size() == 2);
  CHECK(text.sentences[0].tokens == std::vector<std::string>{"stop"});
  CHECK(text.sentences[1].tokens == std::vector<std::string>{"go"});
}

TEST_CASE("invalid UTF-8 raises a user error naming the byte offset") {
  const std::string bad = std::string("abc ") + '\xff' + "def";
  CHECK_THROWS_WITH_AS(tokenize(bad, "badfile"), doctest::Contains("badfile"), Error);
  try {
    tokenize(bad, "badfile");
  } catch (const Error& e) {
    CHECK(e.code() == 2);
    CHECK(std::string(e.what()).find("4") != std::string::npos);
  }
}

TEST_CASE("serialize then tokenize is the identity on tokenized text") {
  Rng rng(42);
  std::uniform_int_distribution<int> n_sent(1, 8), n_word(1, 12), pick(0, 4);
  const std::vector<std::string> words = {"the", "cat", "sat", "on", "don't"};
  for (int iter = 0; iter < 50; ++iter) {
    TokenizedText text;
    text.id = "t";
    for (int s = n_sent(rng); s > 0; --s) {
      Sentence sent;
      for (int w = n_word(rng); w > 0; --w) sent.tokens.push_back(words[pick(rng)]);
      text.total_words += sent.tokens.size();
      text.sentences.push_back(std::move(sent));
    }
    CHECK(tokenize(serialize_text(text), "t") == text);
  }
}

TEST_CASE("concat keeps sentence boundaries and totals") {
  const TokenizedText a = tokenize("one two. three", "a");
  const TokenizedText b = tokenize("four five six", "b");
  const TokenizedText joined = concat_texts({a, b}, "ab");
  CHECK(joined.id == "ab");
  REQUIRE(joined.sentences.size() == 3);
  CHECK(joined.total_words == 6);
  CHECK(joined.sentences[2].tokens == std::vector<std::string>{"four", "five", "six"});
}
