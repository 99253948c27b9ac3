#include "text/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace fs = std::filesystem;

namespace wanattr {

const std::vector<TokenizedText>& CorpusIndex::texts_of(const std::string& author) const {
  auto it = texts.find(author);
  if (it == texts.end()) throw user_error("unknown author: " + author);
  return it->second;
}

std::size_t CorpusIndex::total_words(const std::string& author) const {
  std::size_t total = 0;
  for (const TokenizedText& t : texts_of(author)) total += t.total_words;
  return total;
}

std::vector<const TokenizedText*> CorpusIndex::all_texts() const {
  std::vector<const TokenizedText*> out;
  for (const std::string& a : authors) {
    for (const TokenizedText& t : texts_of(a)) out.push_back(&t);
  }
  return out;
}

CorpusIndex ingest_corpus(const fs::path& root) {
  if (!fs::is_directory(root)) throw user_error("corpus root is not a directory: " + root.string());

  CorpusIndex index;
  std::vector<fs::path> author_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) author_dirs.push_back(entry.path());
  }
  std::sort(author_dirs.begin(), author_dirs.end());
  if (author_dirs.empty()) throw user_error("corpus root contains no author directories: " + root.string());

  for (const fs::path& dir : author_dirs) {
    const std::string author = dir.filename().string();
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      // Every author must have at least one known text.
      throw user_error("author directory has no .txt files: " + dir.string());
    }
    std::vector<TokenizedText> texts;
    for (const fs::path& file : files) {
      std::ifstream in(file, std::ios::binary);
      if (!in) throw user_error("unreadable file: " + file.string());
      std::ostringstream buf;
      buf << in.rdbuf();
      texts.push_back(tokenize(buf.str(), author + "/" + file.filename().string()));
    }
    index.authors.push_back(author);
    index.texts.emplace(author, std::move(texts));
  }
  return index;
}

CorpusIndex restrict_corpus(const CorpusIndex& corpus, const std::vector<std::string>& authors) {
  CorpusIndex out;
  std::vector<std::string> sorted(authors);
  std::sort(sorted.begin(), sorted.end());
  for (const std::string& a : sorted) {
    out.texts.emplace(a, corpus.texts_of(a));
    out.authors.push_back(a);
  }
  return out;
}

}  // namespace wanattr
