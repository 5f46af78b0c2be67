#include <cctype>
#include <string>
#include <unordered_set>
#include <vector>

#include "qfs/resources.hpp"
#include "qfs/text.hpp"

namespace qfs {

namespace {

const std::unordered_set<std::string>& abbreviation_set() {
  static const std::unordered_set<std::string> abbrevs = [] {
    std::unordered_set<std::string> s;
    for (auto& line : load_line_file(resource_dir() + "/abbreviations.txt")) s.insert(line);
    return s;
  }();
  return abbrevs;
}

bool is_space_byte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Closing quotes and brackets that may trail terminal punctuation. The
// multi-byte entries are the UTF-8 right quotation marks.
std::size_t closer_length(const std::string& text, std::size_t i) {
  char c = text[i];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') return 1;
  if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
      static_cast<unsigned char>(text[i + 1]) == 0x80) {
    unsigned char third = static_cast<unsigned char>(text[i + 2]);
    if (third == 0x99 || third == 0x9D) return 3;
  }
  if (i + 1 < text.size() && static_cast<unsigned char>(text[i]) == 0xC2 &&
      static_cast<unsigned char>(text[i + 1]) == 0xBB)
    return 2;
  return 0;
}

// The token immediately before position `end`, lowercased, with internal
// periods kept ("u.s") and trailing/leading periods stripped.
std::string word_before(const std::string& text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0) {
    unsigned char c = static_cast<unsigned char>(text[begin - 1]);
    if (std::isalnum(c) || c == '.' || c >= 0x80)
      --begin;
    else
      break;
  }
  while (begin < end && text[begin] == '.') ++begin;
  std::size_t stop = end;
  while (stop > begin && text[stop - 1] == '.') --stop;
  std::string word = text.substr(begin, stop - begin);
  for (char& c : word)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return word;
}

void flush(std::vector<std::string>& out, std::string& current) {
  std::size_t b = 0;
  std::size_t e = current.size();
  while (b < e && is_space_byte(current[b])) ++b;
  while (e > b && is_space_byte(current[e - 1])) --e;
  if (e > b) out.push_back(current.substr(b, e - b));
  current.clear();
}

}  // namespace

std::vector<std::string> split_sentences(const std::string& text) {
  std::vector<std::string> sentences;
  std::string current;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    char c = text[i];
    if (is_space_byte(c)) {
      std::size_t j = i;
      int newlines = 0;
      while (j < n && is_space_byte(text[j])) {
        if (text[j] == '\n') ++newlines;
        ++j;
      }
      if (newlines >= 2)
        flush(sentences, current);
      else if (!current.empty())
        current += ' ';
      i = j;
      continue;
    }
    if (is_terminal(c)) {
      std::size_t run_begin = i;
      bool only_period = true;
      while (i < n && is_terminal(text[i])) {
        if (text[i] != '.') only_period = false;
        current += text[i];
        ++i;
      }
      bool single_period = only_period && i - run_begin == 1;
      while (i < n) {
        std::size_t len = closer_length(text, i);
        if (len == 0) break;
        current.append(text, i, len);
        i += len;
      }
      if (i >= n) {
        flush(sentences, current);
        break;
      }
      if (!is_space_byte(text[i])) continue;
      std::size_t k = i;
      int newlines = 0;
      while (k < n && is_space_byte(text[k])) {
        if (text[k] == '\n') ++newlines;
        ++k;
      }
      bool boundary = true;
      if (newlines >= 2) {
        flush(sentences, current);
        i = k;
        continue;
      }
      if (k < n && text[k] >= 'a' && text[k] <= 'z') boundary = false;
      if (boundary && single_period &&
          abbreviation_set().count(word_before(text, run_begin)) > 0)
        boundary = false;
      if (boundary)
        flush(sentences, current);
      else if (!current.empty())
        current += ' ';
      i = k;
      continue;
    }
    current += c;
    ++i;
  }
  flush(sentences, current);
  return sentences;
}

}  // namespace qfs
