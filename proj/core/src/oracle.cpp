#include "qfs/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "qfs/errors.hpp"

namespace qfs {

namespace {

using Counts = std::unordered_map<std::string, int>;

struct SentenceGrams {
  Counts counts;
  long long total = 0;
};

SentenceGrams bigrams_of(const TokenSequence& sentence) {
  SentenceGrams grams;
  TokenSequence stemmed;
  stemmed.reserve(sentence.size());
  for (const auto& token : sentence) stemmed.push_back(stem(token));
  for (auto& [gram, count] : ngram_counts(stemmed, 2)) {
    grams.counts[gram] = count;
    grams.total += count;
  }
  return grams;
}

double combine(double recall, double precision) {
  if (recall <= 0.0 && precision <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

double set_score(long long overlap, long long cand_total, long long ref_total,
                 OracleMetric metric) {
  double recall =
      ref_total > 0 ? static_cast<double>(overlap) / static_cast<double>(ref_total) : 0.0;
  if (metric == OracleMetric::rouge2_recall) return recall;
  double precision =
      cand_total > 0 ? static_cast<double>(overlap) / static_cast<double>(cand_total) : 0.0;
  return combine(recall, precision);
}

}  // namespace

OracleResult greedy_oracle(const SentenceList& document, const SentenceList& reference,
                           const OracleConfig& config) {
  if (document.empty()) throw ValidationError("greedy_oracle: empty document");
  if (reference.empty()) throw ValidationError("greedy_oracle: empty reference");

  Counts ref_counts;
  long long ref_total = 0;
  for (const auto& sentence : reference) {
    SentenceGrams grams = bigrams_of(sentence);
    for (auto& [gram, count] : grams.counts) ref_counts[gram] += count;
    ref_total += grams.total;
  }

  const int n = static_cast<int>(document.size());
  std::vector<SentenceGrams> sentence_grams;
  sentence_grams.reserve(document.size());
  for (const auto& sentence : document) sentence_grams.push_back(bigrams_of(sentence));

  OracleResult result;
  result.labels.assign(document.size(), 0);
  result.sentence_scores.resize(document.size());
  for (int i = 0; i < n; ++i) {
    long long overlap = 0;
    for (const auto& [gram, count] : sentence_grams[static_cast<std::size_t>(i)].counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) overlap += std::min(count, it->second);
    }
    result.sentence_scores[static_cast<std::size_t>(i)] =
        set_score(overlap, sentence_grams[static_cast<std::size_t>(i)].total, ref_total,
                  OracleMetric::rouge2_f1);
  }

  // Running clipped-overlap state of the selected set.
  Counts selected_counts;
  long long selected_total = 0;
  long long selected_overlap = 0;
  std::vector<char> used(document.size(), 0);
  double best_so_far = 0.0;

  while (static_cast<int>(result.selected_indices.size()) < config.max_sentences) {
    int best_index = -1;
    double best_score = best_so_far;
    for (int i = 0; i < n; ++i) {
      if (used[static_cast<std::size_t>(i)]) continue;
      const auto& grams = sentence_grams[static_cast<std::size_t>(i)];
      long long overlap_gain = 0;
      for (const auto& [gram, count] : grams.counts) {
        auto it = ref_counts.find(gram);
        if (it == ref_counts.end()) continue;
        auto cur = selected_counts.find(gram);
        int have = cur == selected_counts.end() ? 0 : cur->second;
        overlap_gain += std::min<long long>(have + count, it->second) -
                        std::min<long long>(have, it->second);
      }
      double score = set_score(selected_overlap + overlap_gain, selected_total + grams.total,
                               ref_total, config.metric);
      // Ascending scan plus strict comparison keeps the lowest index on ties.
      if (score > best_score) {
        best_score = score;
        best_index = i;
      }
    }
    if (best_index < 0) break;
    used[static_cast<std::size_t>(best_index)] = 1;
    result.selected_indices.push_back(best_index);
    result.labels[static_cast<std::size_t>(best_index)] = 1;
    const auto& grams = sentence_grams[static_cast<std::size_t>(best_index)];
    for (const auto& [gram, count] : grams.counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) {
        int have = selected_counts[gram];
        selected_overlap +=
            std::min<long long>(have + count, it->second) - std::min<long long>(have, it->second);
      }
      selected_counts[gram] += count;
    }
    selected_total += grams.total;
    best_so_far = best_score;
    result.round_scores.push_back(best_score);
  }
  result.oracle_score = best_so_far;
  return result;
}

std::vector<double> sentence_oracle_scores(const SentenceList& document,
                                           const SentenceList& reference) {
  if (reference.empty()) throw ValidationError("sentence_oracle_scores: empty reference");
  if (document.empty()) return {};
  OracleConfig config;
  config.max_sentences = 1;
  return greedy_oracle(document, reference, config).sentence_scores;
}

}  // namespace qfs
