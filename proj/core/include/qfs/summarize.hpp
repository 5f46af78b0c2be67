#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qfs/corpus.hpp"
#include "qfs/text.hpp"

namespace qfs {

struct SentenceSpan {
  int sentence_index = 0;
  int start = 0;  // window token index of [CLS]
  int end = 0;    // one past [SEP]
  bool fully_contained = true;
  // Tokens in the window outside this span, query prefix included.
  int context_coverage = 0;
};

struct SerializedWindow {
  std::vector<std::string> tokens;
  // 0 = query prefix (level markers included), 1 = document ([CLS]/[SEP]
  // included).
  std::vector<int> segment_ids;
  std::vector<SentenceSpan> sentence_spans;
  int window_index = 0;
};

// Lays the query out as [L1] q1 ... [L2] q2 ... and packs whole sentences
// as [CLS] s [SEP] blocks after it, at most max_window_tokens tokens per
// window. Each next window starts at the first sentence at least `stride`
// document tokens past the previous window's start, always advancing by at
// least one sentence, so every sentence is fully contained in some window.
// Throws ValidationError when stride >= max_window_tokens or a single
// sentence cannot fit.
std::vector<SerializedWindow> serialize_input(const std::vector<std::string>& query,
                                              const std::vector<std::string>& document,
                                              int max_window_tokens, int stride);

// sentence index -> index of the containing window with the largest context
// coverage (ties to the lower window). Throws ValidationError if any
// sentence in [0, sentence_count) is uncovered.
std::vector<int> assign_scoring_windows(const std::vector<SerializedWindow>& windows,
                                        int sentence_count);

struct SentenceScores {
  std::string example_id;
  std::vector<double> scores;
};

// Strictly decreasing positional scores 1/(i+1).
SentenceScores score_lead(const std::string& id, const std::vector<std::string>& document);

// Uniform score 1.0 for every sentence.
SentenceScores score_all(const std::string& id, const std::vector<std::string>& document);

// Cosine similarity between the TF-IDF vectors of each sentence and the
// flattened query. IDF is computed over the sentences passed in `unit`
// (one document, or every sentence of a cluster); tokens are stopword
// filtered and stemmed.
std::vector<double> query_sim_scores(const std::vector<std::string>& query,
                                     const std::vector<std::vector<std::string>>& unit);

SentenceScores score_query_sim(const std::string& id, const std::vector<std::string>& query,
                               const std::vector<std::string>& document);

// Parses {"id", "scores": [...]} lines and validates them against the
// dataset: every example covered, vector lengths matching sentence counts,
// finite values, no duplicate ids. Errors name the offending record.
std::unordered_map<std::string, std::vector<double>> load_external_scores(
    const std::string& path, const std::vector<Example>& dataset);

// Descending-score walk (ties to the lower index) that stops at the first
// score <= threshold and, when trigram_block is set, skips sentences sharing
// a lowercased-token trigram with the selection so far. Returns indices in
// selection order.
std::vector<int> select_single_doc(const std::vector<double>& scores,
                                   const std::vector<std::string>& document, double threshold,
                                   bool trigram_block = true);

// Global descending-score walk across every sentence of every document.
// Skips a sentence when more than half of its distinct bigrams already
// appear in the output, and stops before the first sentence that would push
// the summary past word_budget words.
std::vector<std::pair<int, int>> select_multi_doc(
    const std::vector<std::vector<double>>& scores,
    const std::vector<std::vector<std::string>>& documents, int word_budget);

// Evaluates single-document selection on the dev set at every candidate
// threshold (the distinct observed scores, plus -inf) and returns the one
// maximizing mean ROUGE-2 F1; ties go to the smaller threshold.
double search_threshold(const std::vector<Example>& dev,
                        const std::unordered_map<std::string, std::vector<double>>& dev_scores);

struct Cluster {
  std::string cluster_id;
  std::vector<std::string> query;
  std::vector<std::vector<std::string>> documents;
  std::vector<std::vector<std::string>> references;
};

}  // namespace qfs
