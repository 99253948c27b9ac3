#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/error.hpp"
#include "text/lexicon.hpp"
#include "text/tokenize.hpp"

using namespace wanattr;

namespace {

const char* kBeePassage =
    "A swarm in May is worth a load of hay; a swarm in June is worth a silver "
    "spoon; but a swarm in July is not worth a fly.";

}  // namespace

TEST_CASE("parse accepts one word per line with comments and blanks") {
  const FunctionWordLexicon lex = parse_lexicon("# header\nthe\n\nand \n OF\n", "mem");
  CHECK(lex.candidates == std::vector<std::string>{"the", "and", "of"});
  CHECK(lex.contains("and"));
  CHECK(!lex.contains("swarm"));
}

TEST_CASE("parse rejects multi-word lines") {
  CHECK_THROWS_AS(parse_lexicon("the\nof and\n", "mem"), Error);
}

TEST_CASE("duplicates are collapsed") {
  const FunctionWordLexicon lex = parse_lexicon("the\nthe\nof\n", "mem");
  CHECK(lex.candidates == std::vector<std::string>{"the", "of"});
}

TEST_CASE("default lexicon is usable and excludes person pronouns") {
  const FunctionWordLexicon& lex = default_lexicon();
  CHECK(lex.candidates.size() >= 100);
  CHECK(lex.contains("the"));
  for (const char* w : {"i", "me", "my", "he", "she", "her", "him", "thou", "thee"}) {
    CHECK(!lex.contains(w));
  }
}

TEST_CASE("selection ranks by count with lexicographic ties") {
  const TokenizedText text = tokenize(kBeePassage, "bee");
  const FunctionWordLexicon lex = parse_lexicon("a\nin\nof\nbut\n", "mem");
  // counts: a=6, in=3, of=1, but=1 -> ties broken alphabetically
  CHECK(select_function_words({text}, lex, 4) ==
        std::vector<std::string>{"a", "in", "but", "of"});
  CHECK(select_function_words({text}, lex, 2) == std::vector<std::string>{"a", "in"});
}

TEST_CASE("selection pools counts over several texts") {
  const TokenizedText t1 = tokenize("of of of", "t1");
  const TokenizedText t2 = tokenize("in in of", "t2");
  const FunctionWordLexicon lex = parse_lexicon("a\nin\nof\n", "mem");
  CHECK(select_function_words({t1, t2}, lex, 2) == std::vector<std::string>{"of", "in"});
}

TEST_CASE("selection reports a shortfall of distinct words") {
  const TokenizedText text = tokenize("of the of", "t");
  const FunctionWordLexicon lex = parse_lexicon("a\nin\nof\nthe\n", "mem");
  CHECK_THROWS_WITH_AS(select_function_words({text}, lex, 3), doctest::Contains("2"), Error);
}

TEST_CASE("excluded words never surface in a selection") {
  FunctionWordLexicon lex = parse_lexicon("the\nof\nshe\n", "mem");
  lex.exclusions.insert("she");
  const TokenizedText text = tokenize("she she she the of", "t");
  CHECK(!lex.contains("she"));
  CHECK(select_function_words({text}, lex, 2) == std::vector<std::string>{"of", "the"});
}
