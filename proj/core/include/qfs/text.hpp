#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace qfs {

// Ordered list of lowercased word tokens. Tokens are non-empty and contain
// no whitespace.
using TokenSequence = std::vector<std::string>;

// A text unit as a list of tokenized sentences.
using SentenceList = std::vector<TokenSequence>;

struct NormalizationConfig {
  bool lowercase = false;
  bool apply_stemmer = false;
  bool drop_stopwords = false;
};

// Splits on word boundaries and lowercases. A word character is an ASCII
// alphanumeric or a non-ASCII codepoint outside the common punctuation
// blocks; every other character separates tokens, so punctuation-only
// fragments never survive ("U.S. crash" -> [u, s, crash]). Lowercasing
// covers ASCII and Latin-1; other scripts pass through unchanged.
TokenSequence tokenize(const std::string& text);

// Rule-based sentence splitter: terminal punctuation (. ! ? plus closing
// quotes/brackets) followed by whitespace and a non-lowercase character ends
// a sentence, unless the preceding word is a known abbreviation. Blank lines
// always end a sentence. Output sentences are trimmed and non-empty.
std::vector<std::string> split_sentences(const std::string& text);

// Porter stem of a single lowercased token. Tokens shorter than three
// characters or containing anything outside [a-z] are returned unchanged.
std::string stem(const std::string& token);

// Membership in the vendored SMART English stopword list.
bool is_stopword(const std::string& token);

// lowercase -> drop_stopwords -> stem, in that order. The all-off config is
// the identity.
TokenSequence normalize_tokens(const TokenSequence& tokens, const NormalizationConfig& config);

// N-gram multiset, keyed by the gram's tokens joined with '\x1f'. Exactly
// max(0, |tokens| - n + 1) grams counted in order.
std::unordered_map<std::string, int> ngram_counts(const TokenSequence& tokens, int n);

// Joins n consecutive tokens starting at `pos` into an n-gram key.
std::string ngram_key(const TokenSequence& tokens, std::size_t pos, int n);

// Best-effort plain text from an HTML fragment: drops script/style/comment
// blocks, turns block-level closers into line breaks, strips the remaining
// tags and decodes the common entities.
std::string html_to_text(const std::string& html);

}  // namespace qfs
