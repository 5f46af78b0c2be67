#pragma once

#include <vector>

#include "qfs/text.hpp"

namespace qfs {

enum class OracleMetric { rouge2_f1, rouge2_recall };

struct OracleConfig {
  OracleMetric metric = OracleMetric::rouge2_f1;
  int max_sentences = 4;

  // Feasibility screening during curation: recall-scored, up to 5 sentences.
  static OracleConfig curation() { return {OracleMetric::rouge2_recall, 5}; }
  // Supervision labels: F1-scored, up to 4 sentences.
  static OracleConfig training() { return {OracleMetric::rouge2_f1, 4}; }
};

struct OracleResult {
  // Selection order. Empty when even the best single sentence scores 0.
  std::vector<int> selected_indices;
  double oracle_score = 0.0;
  // labels[i] = 1 iff i is selected.
  std::vector<int> labels;
  // Per-sentence ROUGE-2 F1 against the reference, independent of selection.
  std::vector<double> sentence_scores;
  // Best score after each completed round; strictly increasing.
  std::vector<double> round_scores;
};

// Grows the selection one sentence per round, keeping the extension that
// maximizes the configured ROUGE-2 statistic of the whole selected set; ties
// go to the lowest sentence index, and the search stops as soon as no
// extension strictly improves the score. Tokens are stemmed before bigram
// extraction, matching the evaluator's stemming default. Throws
// ValidationError on an empty document or reference.
OracleResult greedy_oracle(const SentenceList& document, const SentenceList& reference,
                           const OracleConfig& config);

// score[i] = ROUGE-2 F1 of sentence i alone against the reference.
std::vector<double> sentence_oracle_scores(const SentenceList& document,
                                           const SentenceList& reference);

}  // namespace qfs
