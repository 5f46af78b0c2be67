#include "qfs/summarize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "qfs/errors.hpp"
#include "qfs/jsonl.hpp"
#include "qfs/rouge.hpp"

namespace qfs {

namespace {

std::string level_marker(std::size_t level) { return "[L" + std::to_string(level + 1) + "]"; }

SentenceList tokenize_all(const std::vector<std::string>& sentences) {
  SentenceList out;
  out.reserve(sentences.size());
  for (const auto& sentence : sentences) out.push_back(tokenize(sentence));
  return out;
}

}  // namespace

std::vector<SerializedWindow> serialize_input(const std::vector<std::string>& query,
                                              const std::vector<std::string>& document,
                                              int max_window_tokens, int stride) {
  if (stride <= 0 || max_window_tokens <= 0 || stride >= max_window_tokens)
    throw ValidationError("serialize_input: need 0 < stride < max_window_tokens");

  std::vector<std::string> prefix;
  std::vector<int> prefix_segments;
  for (std::size_t level = 0; level < query.size(); ++level) {
    prefix.push_back(level_marker(level));
    for (auto& token : tokenize(query[level])) prefix.push_back(token);
  }
  prefix_segments.assign(prefix.size(), 0);

  SentenceList sentences = tokenize_all(document);
  const int m = static_cast<int>(sentences.size());
  // Document-token offset of each sentence start, markers excluded.
  std::vector<int> start_pos(sentences.size() + 1, 0);
  for (int i = 0; i < m; ++i) {
    int len = static_cast<int>(sentences[static_cast<std::size_t>(i)].size());
    start_pos[static_cast<std::size_t>(i) + 1] = start_pos[static_cast<std::size_t>(i)] + len;
    int needed = static_cast<int>(prefix.size()) + len + 2;
    if (needed > max_window_tokens)
      throw ValidationError("serialize_input: sentence " + std::to_string(i) + " needs " +
                            std::to_string(needed) + " tokens, window holds " +
                            std::to_string(max_window_tokens));
  }

  std::vector<SerializedWindow> windows;
  int window_start = 0;
  while (window_start < m) {
    SerializedWindow window;
    window.window_index = static_cast<int>(windows.size());
    window.tokens = prefix;
    window.segment_ids = prefix_segments;
    int last = window_start;
    for (int i = window_start; i < m; ++i) {
      int len = static_cast<int>(sentences[static_cast<std::size_t>(i)].size());
      if (static_cast<int>(window.tokens.size()) + len + 2 > max_window_tokens) break;
      SentenceSpan span;
      span.sentence_index = i;
      span.start = static_cast<int>(window.tokens.size());
      window.tokens.push_back("[CLS]");
      for (const auto& token : sentences[static_cast<std::size_t>(i)])
        window.tokens.push_back(token);
      window.tokens.push_back("[SEP]");
      span.end = static_cast<int>(window.tokens.size());
      span.fully_contained = true;
      window.sentence_spans.push_back(span);
      last = i;
    }
    for (auto& span : window.sentence_spans)
      span.context_coverage = static_cast<int>(window.tokens.size()) - (span.end - span.start);
    window.segment_ids.resize(window.tokens.size(), 1);
    windows.push_back(std::move(window));
    if (last + 1 >= m) break;
    // First sentence at least `stride` document tokens past this window's
    // start; always advance, and never skip past an unpacked sentence.
    int target = start_pos[static_cast<std::size_t>(window_start)] + stride;
    int next = window_start + 1;
    while (next < m && start_pos[static_cast<std::size_t>(next)] < target) ++next;
    window_start = std::min(std::max(window_start + 1, next), last + 1);
  }
  return windows;
}

std::vector<int> assign_scoring_windows(const std::vector<SerializedWindow>& windows,
                                        int sentence_count) {
  std::vector<int> assignment(static_cast<std::size_t>(sentence_count), -1);
  std::vector<int> best_coverage(static_cast<std::size_t>(sentence_count), -1);
  for (const auto& window : windows)
    for (const auto& span : window.sentence_spans) {
      if (!span.fully_contained) continue;
      if (span.sentence_index < 0 || span.sentence_index >= sentence_count) continue;
      auto i = static_cast<std::size_t>(span.sentence_index);
      if (span.context_coverage > best_coverage[i]) {
        best_coverage[i] = span.context_coverage;
        assignment[i] = window.window_index;
      }
    }
  for (int i = 0; i < sentence_count; ++i)
    if (assignment[static_cast<std::size_t>(i)] < 0)
      throw ValidationError("assign_scoring_windows: sentence " + std::to_string(i) +
                            " is not fully contained in any window");
  return assignment;
}

SentenceScores score_lead(const std::string& id, const std::vector<std::string>& document) {
  if (document.empty()) throw ValidationError("score_lead: empty document");
  SentenceScores scores;
  scores.example_id = id;
  for (std::size_t i = 0; i < document.size(); ++i)
    scores.scores.push_back(1.0 / static_cast<double>(i + 1));
  return scores;
}

SentenceScores score_all(const std::string& id, const std::vector<std::string>& document) {
  if (document.empty()) throw ValidationError("score_all: empty document");
  SentenceScores scores;
  scores.example_id = id;
  scores.scores.assign(document.size(), 1.0);
  return scores;
}

namespace {

TokenSequence content_terms(const std::string& text) {
  TokenSequence terms;
  for (const auto& token : tokenize(text)) {
    if (is_stopword(token)) continue;
    terms.push_back(stem(token));
  }
  return terms;
}

using TermCounts = std::unordered_map<std::string, int>;

TermCounts count_terms(const TokenSequence& terms) {
  TermCounts counts;
  for (const auto& term : terms) counts[term] += 1;
  return counts;
}

double cosine(const TermCounts& a, const TermCounts& b,
              const std::unordered_map<std::string, double>& idf) {
  double dot = 0, norm_a = 0, norm_b = 0;
  for (const auto& [term, count] : a) {
    double w = static_cast<double>(count) * idf.at(term);
    norm_a += w * w;
    auto it = b.find(term);
    if (it != b.end()) dot += w * static_cast<double>(it->second) * idf.at(term);
  }
  for (const auto& [term, count] : b) {
    double w = static_cast<double>(count) * idf.at(term);
    norm_b += w * w;
  }
  if (norm_a <= 0 || norm_b <= 0) return 0.0;
  return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

}  // namespace

std::vector<double> query_sim_scores(const std::vector<std::string>& query,
                                     const std::vector<std::vector<std::string>>& unit) {
  if (query.empty()) throw ValidationError("query_sim_scores: empty query");
  std::string flat_query;
  for (const auto& part : query) {
    flat_query += part;
    flat_query += ' ';
  }
  TermCounts query_counts = count_terms(content_terms(flat_query));

  std::vector<std::vector<TermCounts>> sentence_counts(unit.size());
  std::unordered_map<std::string, double> df;
  std::size_t n_sentences = 0;
  for (std::size_t d = 0; d < unit.size(); ++d) {
    sentence_counts[d].reserve(unit[d].size());
    for (const auto& sentence : unit[d]) {
      TermCounts counts = count_terms(content_terms(sentence));
      for (const auto& [term, count] : counts) df[term] += 1.0;
      sentence_counts[d].push_back(std::move(counts));
      ++n_sentences;
    }
  }
  for (const auto& [term, count] : query_counts)
    if (df.find(term) == df.end()) df[term] = 0.0;

  std::unordered_map<std::string, double> idf;
  double n = static_cast<double>(n_sentences);
  for (const auto& [term, d] : df) idf[term] = std::log((1.0 + n) / (1.0 + d)) + 1.0;

  std::vector<double> out;
  for (std::size_t d = 0; d < unit.size(); ++d)
    for (const auto& counts : sentence_counts[d]) out.push_back(cosine(counts, query_counts, idf));
  return out;
}

SentenceScores score_query_sim(const std::string& id, const std::vector<std::string>& query,
                               const std::vector<std::string>& document) {
  if (document.empty()) throw ValidationError("score_query_sim: empty document");
  SentenceScores scores;
  scores.example_id = id;
  scores.scores = query_sim_scores(query, {document});
  return scores;
}

std::unordered_map<std::string, std::vector<double>> load_external_scores(
    const std::string& path, const std::vector<Example>& dataset) {
  std::vector<ScoresRecord> records = read_jsonl_file(path, parse_scores_record);
  std::unordered_map<std::string, std::vector<double>> by_id;
  for (auto& record : records) {
    for (double v : record.scores)
      if (!std::isfinite(v))
        throw SchemaError("non-finite score", record.id);
    if (!by_id.emplace(record.id, std::move(record.scores)).second)
      throw SchemaError("duplicate_id", record.id);
  }
  for (const auto& example : dataset) {
    auto it = by_id.find(example.id);
    if (it == by_id.end()) throw SchemaError("missing scores for example", example.id);
    if (it->second.size() != example.document.size())
      throw SchemaError("length_mismatch: " + std::to_string(it->second.size()) + " scores for " +
                            std::to_string(example.document.size()) + " sentences",
                        example.id);
  }
  return by_id;
}

namespace {

std::vector<std::size_t> descending_order(const std::vector<double>& scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace

std::vector<int> select_single_doc(const std::vector<double>& scores,
                                   const std::vector<std::string>& document, double threshold,
                                   bool trigram_block) {
  if (scores.size() != document.size())
    throw ValidationError("select_single_doc: " + std::to_string(scores.size()) +
                          " scores for " + std::to_string(document.size()) + " sentences");
  std::vector<int> selected;
  std::unordered_set<std::string> seen_trigrams;
  for (std::size_t index : descending_order(scores)) {
    if (!(scores[index] > threshold)) break;
    TokenSequence tokens = tokenize(document[index]);
    if (trigram_block) {
      bool blocked = false;
      for (std::size_t pos = 0; pos + 3 <= tokens.size() && !blocked; ++pos)
        if (seen_trigrams.count(ngram_key(tokens, pos, 3)) > 0) blocked = true;
      if (blocked) continue;
      for (std::size_t pos = 0; pos + 3 <= tokens.size(); ++pos)
        seen_trigrams.insert(ngram_key(tokens, pos, 3));
    }
    selected.push_back(static_cast<int>(index));
  }
  return selected;
}

std::vector<std::pair<int, int>> select_multi_doc(
    const std::vector<std::vector<double>>& scores,
    const std::vector<std::vector<std::string>>& documents, int word_budget) {
  if (scores.size() != documents.size())
    throw ValidationError("select_multi_doc: scores for " + std::to_string(scores.size()) +
                          " documents, cluster has " + std::to_string(documents.size()));
  struct Entry {
    double score;
    int doc;
    int sentence;
  };
  std::vector<Entry> entries;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    if (scores[d].size() != documents[d].size())
      throw ValidationError("select_multi_doc: length mismatch in document " + std::to_string(d));
    for (std::size_t i = 0; i < documents[d].size(); ++i)
      entries.push_back({scores[d][i], static_cast<int>(d), static_cast<int>(i)});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.doc != b.doc) return a.doc < b.doc;
    return a.sentence < b.sentence;
  });

  std::vector<std::pair<int, int>> selected;
  std::unordered_set<std::string> output_bigrams;
  int words_used = 0;
  for (const auto& entry : entries) {
    TokenSequence tokens =
        tokenize(documents[static_cast<std::size_t>(entry.doc)][static_cast<std::size_t>(
            entry.sentence)]);
    std::unordered_set<std::string> bigrams;
    for (std::size_t pos = 0; pos + 2 <= tokens.size(); ++pos)
      bigrams.insert(ngram_key(tokens, pos, 2));
    if (!bigrams.empty()) {
      std::size_t present = 0;
      for (const auto& gram : bigrams)
        if (output_bigrams.count(gram) > 0) ++present;
      if (2 * present > bigrams.size()) continue;
    }
    if (words_used + static_cast<int>(tokens.size()) > word_budget) break;
    words_used += static_cast<int>(tokens.size());
    for (const auto& gram : bigrams) output_bigrams.insert(gram);
    selected.emplace_back(entry.doc, entry.sentence);
  }
  return selected;
}

double search_threshold(const std::vector<Example>& dev,
                        const std::unordered_map<std::string, std::vector<double>>& dev_scores) {
  if (dev.empty()) throw ValidationError("search_threshold: empty dev set");
  std::vector<double> grid;
  grid.push_back(-std::numeric_limits<double>::infinity());
  for (const auto& example : dev) {
    auto it = dev_scores.find(example.id);
    if (it == dev_scores.end())
      throw SchemaError("missing scores for dev example", example.id);
    for (double v : it->second) grid.push_back(v);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  RougeConfig config = RougeConfig::wikiref();
  double best_threshold = grid.front();
  double best_score = -1.0;
  for (double threshold : grid) {
    double sum = 0.0;
    for (const auto& example : dev) {
      const auto& scores = dev_scores.at(example.id);
      std::vector<int> picked = select_single_doc(scores, example.document, threshold);
      SentenceList candidate;
      for (int index : picked)
        candidate.push_back(tokenize(example.document[static_cast<std::size_t>(index)]));
      SentenceList reference;
      for (const auto& sentence : example.summary) reference.push_back(tokenize(sentence));
      sum += rouge_n(candidate, {reference}, 2, config).f1;
    }
    double mean = sum / static_cast<double>(dev.size());
    if (mean > best_score) {
      best_score = mean;
      best_threshold = threshold;
    }
  }
  return best_threshold;
}

}  // namespace qfs
