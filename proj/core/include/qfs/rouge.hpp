#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qfs/text.hpp"

namespace qfs {

enum class ReferenceAggregation { average, max };
enum class ReportedStatistic { recall, f1, all };

struct RougeConfig {
  std::vector<int> n_values = {1, 2};
  bool include_rouge_l = false;
  bool apply_stemmer = true;
  // Truncates the candidate to this many words (across sentences) before
  // any n-gram or LCS extraction. References are never truncated.
  std::optional<int> length_limit_words;
  // Weight of recall in the F measure: F = P*R / (a*P + (1-a)*R).
  double f_alpha = 0.5;
  ReferenceAggregation reference_aggregation = ReferenceAggregation::average;
  ReportedStatistic reported_statistic = ReportedStatistic::all;
  std::string preset_name = "custom";

  // Recall-reported ROUGE-1/2 with stemming and a 250-word candidate limit.
  static RougeConfig duc();
  // F1-reported ROUGE-1/2/L with stemming and no length limit.
  static RougeConfig wikiref();
};

struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
};

// Clipped n-gram overlap against each reference, combined per
// config.reference_aggregation. N-grams never cross sentence boundaries.
RougeScore rouge_n(const SentenceList& candidate, const std::vector<SentenceList>& references,
                   int n, const RougeConfig& config);

// Summary-level LCS: per reference sentence, the union of LCS matches
// against every candidate sentence; hits are counted once per reference
// token position.
RougeScore rouge_l(const SentenceList& candidate, const std::vector<SentenceList>& references,
                   const RougeConfig& config);

struct EvalPair {
  SentenceList candidate;
  std::vector<SentenceList> references;
};

struct CorpusReport {
  // One entry per metric, e.g. "rouge-1", "rouge-2", "rouge-l", holding the
  // arithmetic mean over examples.
  std::vector<std::pair<std::string, RougeScore>> metrics;
  std::size_t n_examples = 0;
  RougeConfig config;
};

// Macro-averaged scores over the corpus. Throws ValidationError naming the
// pair index when a pair has no reference.
CorpusReport evaluate_corpus(const std::vector<EvalPair>& pairs, const RougeConfig& config);

std::string report_to_text(const CorpusReport& report);
std::string report_to_json(const CorpusReport& report);

}  // namespace qfs
