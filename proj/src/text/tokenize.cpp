#include "text/tokenize.hpp"

#include <cctype>

#include "core/error.hpp"

namespace wanattr {

namespace {

bool is_stopper(char c) { return c == '.' || c == '?' || c == '!' || c == ';'; }

// Characters stripped from token edges. Apostrophes are stripped at the
// edges ("'tis" -> "tis") but kept internally.
bool is_edge_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

std::string clean_token(std::string_view word) {
  std::size_t begin = 0;
  std::size_t end = word.size();
  while (begin < end && is_edge_punct(word[begin])) ++begin;
  while (end > begin && is_edge_punct(word[end - 1])) --end;
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(word[i]))));
  }
  return out;
}

// Validates UTF-8 and normalizes typographic punctuation that is common in
// public-domain e-texts: curly quotes to ASCII quotes, en/em dashes and
// ellipses to plain separators. Everything else multi-byte passes through.
std::string normalize_utf8(std::string_view raw, const std::string& id) {
  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  const auto n = raw.size();
  auto fail = [&](std::size_t offset) -> void {
    throw user_error("ingestion error in '" + id + "': undecodable byte sequence at offset " +
                     std::to_string(offset));
  };
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(raw[i]);
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
      ++i;
      continue;
    }
    int extra = 0;
    if ((c & 0xE0) == 0xC0)
      extra = 1;
    else if ((c & 0xF0) == 0xE0)
      extra = 2;
    else if ((c & 0xF8) == 0xF0)
      extra = 3;
    else
      fail(i);
    if (i + extra >= n) fail(i);
    std::uint32_t cp = c & (0x3F >> extra);
    for (int k = 1; k <= extra; ++k) {
      unsigned char cc = static_cast<unsigned char>(raw[i + k]);
      if ((cc & 0xC0) != 0x80) fail(i);
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Overlong / surrogate / out-of-range checks.
    if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) || (extra == 3 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      fail(i);
    }
    switch (cp) {
      case 0x2018:
      case 0x2019:
        out.push_back('\'');
        break;
      case 0x201C:
      case 0x201D:
        out.push_back('"');
        break;
      case 0x2013:
      case 0x2014:
      case 0x2026:
      case 0x00A0:
        out.push_back(' ');
        break;
      default:
        out.append(raw.substr(i, 1 + extra));
        break;
    }
    i += 1 + extra;
  }
  return out;
}

}  // namespace

TokenizedText tokenize(std::string_view raw, std::string id) {
  const std::string text = normalize_utf8(raw, id);

  TokenizedText out;
  out.id = std::move(id);
  Sentence current;
  std::string word;

  auto flush_word = [&] {
    if (word.empty()) return;
    std::string tok = clean_token(word);
    word.clear();
    if (!tok.empty()) current.tokens.push_back(std::move(tok));
  };
  auto flush_sentence = [&] {
    flush_word();
    if (current.tokens.empty()) return;
    out.total_words += current.tokens.size();
    out.sentences.push_back(std::move(current));
    current = Sentence{};
  };

  for (char c : text) {
    if (is_stopper(c)) {
      flush_sentence();
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == '-') {
      flush_word();
    } else {
      word.push_back(c);
    }
  }
  flush_sentence();
  return out;
}

std::string serialize_text(const TokenizedText& text) {
  std::string out;
  for (const Sentence& s : text.sentences) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += s.tokens[i];
    }
    out += ". ";
  }
  return out;
}

TokenizedText concat_texts(const std::vector<TokenizedText>& texts, std::string id) {
  TokenizedText out;
  out.id = std::move(id);
  for (const TokenizedText& t : texts) {
    out.sentences.insert(out.sentences.end(), t.sentences.begin(), t.sentences.end());
    out.total_words += t.total_words;
  }
  return out;
}

}  // namespace wanattr
