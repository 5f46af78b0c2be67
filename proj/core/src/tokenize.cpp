#include <cstdint>
#include <string>

#include "qfs/text.hpp"

namespace qfs {

namespace {

// Decodes one UTF-8 codepoint at `i`, advancing it. Invalid bytes decode as
// themselves so they land in the punctuation class.
std::uint32_t decode_utf8(const std::string& s, std::size_t& i) {
  unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  std::uint32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return b0;
  }
  if (i + len > s.size()) {
    ++i;
    return b0;
  }
  for (int k = 1; k < len; ++k) {
    unsigned char bk = static_cast<unsigned char>(s[i + k]);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return b0;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += len;
  return cp;
}

void encode_utf8(std::uint32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool in(std::uint32_t cp, std::uint32_t lo, std::uint32_t hi) { return cp >= lo && cp <= hi; }

// ASCII alphanumerics are word characters. Above ASCII everything counts as
// a word character except the well-known punctuation, symbol and separator
// blocks, so accented words and CJK text hold together without full Unicode
// tables.
bool is_word_codepoint(std::uint32_t cp) {
  if (cp < 0x80)
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  if (in(cp, 0xA0, 0xBF) || cp == 0xD7 || cp == 0xF7) return false;   // latin-1 punctuation
  if (in(cp, 0x2000, 0x206F)) return false;                           // general punctuation
  if (in(cp, 0x2190, 0x2BFF)) return false;                           // arrows, math, symbols
  if (in(cp, 0x2E00, 0x2E7F)) return false;                           // supplemental punctuation
  if (in(cp, 0x3000, 0x303F)) return false;                           // CJK punctuation
  if (in(cp, 0xFE30, 0xFE4F) || in(cp, 0xFE50, 0xFE6F)) return false; // compat forms
  if (in(cp, 0xFF01, 0xFF0F) || in(cp, 0xFF1A, 0xFF20) || in(cp, 0xFF3B, 0xFF40) ||
      in(cp, 0xFF5B, 0xFF65))
    return false;  // fullwidth punctuation
  return true;
}

std::uint32_t lower_codepoint(std::uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (in(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 32;  // latin-1 capitals
  return cp;
}

}  // namespace

TokenSequence tokenize(const std::string& text) {
  TokenSequence tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    std::uint32_t cp = decode_utf8(text, i);
    if (is_word_codepoint(cp)) {
      encode_utf8(lower_codepoint(cp), current);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

TokenSequence normalize_tokens(const TokenSequence& tokens, const NormalizationConfig& config) {
  if (!config.lowercase && !config.apply_stemmer && !config.drop_stopwords) return tokens;
  TokenSequence out;
  out.reserve(tokens.size());
  for (const auto& token : tokens) {
    std::string t = token;
    if (config.lowercase) {
      std::string lowered;
      std::size_t i = 0;
      while (i < t.size()) encode_utf8(lower_codepoint(decode_utf8(t, i)), lowered);
      t = std::move(lowered);
    }
    if (config.drop_stopwords && is_stopword(t)) continue;
    if (config.apply_stemmer) t = stem(t);
    out.push_back(std::move(t));
  }
  return out;
}

std::string ngram_key(const TokenSequence& tokens, std::size_t pos, int n) {
  std::string key;
  for (int k = 0; k < n; ++k) {
    if (k > 0) key.push_back('\x1f');
    key += tokens[pos + static_cast<std::size_t>(k)];
  }
  return key;
}

std::unordered_map<std::string, int> ngram_counts(const TokenSequence& tokens, int n) {
  std::unordered_map<std::string, int> counts;
  if (n < 1 || tokens.size() < static_cast<std::size_t>(n)) return counts;
  std::size_t total = tokens.size() - static_cast<std::size_t>(n) + 1;
  counts.reserve(total);
  for (std::size_t pos = 0; pos < total; ++pos) ++counts[ngram_key(tokens, pos, n)];
  return counts;
}

}  // namespace qfs
