#include "qfs/rouge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "qfs/errors.hpp"

namespace qfs {

RougeConfig RougeConfig::duc() {
  RougeConfig config;
  config.n_values = {1, 2};
  config.include_rouge_l = false;
  config.apply_stemmer = true;
  config.length_limit_words = 250;
  config.reference_aggregation = ReferenceAggregation::average;
  config.reported_statistic = ReportedStatistic::recall;
  config.preset_name = "duc";
  return config;
}

RougeConfig RougeConfig::wikiref() {
  RougeConfig config;
  config.n_values = {1, 2};
  config.include_rouge_l = true;
  config.apply_stemmer = true;
  config.length_limit_words.reset();
  config.reference_aggregation = ReferenceAggregation::average;
  config.reported_statistic = ReportedStatistic::f1;
  config.preset_name = "wikiref";
  return config;
}

namespace {

double f_measure(double recall, double precision, double alpha) {
  if (recall <= 0.0 && precision <= 0.0) return 0.0;
  return precision * recall / (alpha * precision + (1.0 - alpha) * recall);
}

SentenceList prepare(const SentenceList& sentences, bool apply_stemmer,
                     std::optional<int> word_limit) {
  SentenceList out;
  out.reserve(sentences.size());
  long long remaining = word_limit ? static_cast<long long>(*word_limit) : -1;
  for (const auto& sentence : sentences) {
    if (remaining == 0) break;
    TokenSequence tokens = sentence;
    if (remaining > 0 && static_cast<long long>(tokens.size()) > remaining)
      tokens.resize(static_cast<std::size_t>(remaining));
    if (remaining > 0) remaining -= static_cast<long long>(tokens.size());
    if (apply_stemmer)
      for (auto& token : tokens) token = stem(token);
    out.push_back(std::move(tokens));
  }
  return out;
}

struct GramStats {
  std::unordered_map<std::string, int> counts;
  long long total = 0;
};

GramStats gram_stats(const SentenceList& sentences, int n) {
  GramStats stats;
  for (const auto& sentence : sentences) {
    for (auto& [gram, count] : ngram_counts(sentence, n)) {
      stats.counts[gram] += count;
      stats.total += count;
    }
  }
  return stats;
}

RougeScore score_against_reference_n(const GramStats& cand, const SentenceList& reference, int n,
                                     double alpha, bool apply_stemmer) {
  GramStats ref = gram_stats(prepare(reference, apply_stemmer, std::nullopt), n);
  long long overlap = 0;
  for (const auto& [gram, count] : cand.counts) {
    auto it = ref.counts.find(gram);
    if (it != ref.counts.end()) overlap += std::min(count, it->second);
  }
  RougeScore score;
  score.recall = ref.total > 0 ? static_cast<double>(overlap) / static_cast<double>(ref.total) : 0.0;
  score.precision =
      cand.total > 0 ? static_cast<double>(overlap) / static_cast<double>(cand.total) : 0.0;
  score.f1 = f_measure(score.recall, score.precision, alpha);
  return score;
}

// Marks the reference positions matched by one LCS alignment of (reference
// sentence, candidate sentence). The backtrace prefers stepping over the
// reference token when the table values tie, which pins one alignment.
void mark_lcs_positions(const TokenSequence& ref, const TokenSequence& cand,
                        std::vector<char>& hit) {
  const std::size_t r = ref.size();
  const std::size_t c = cand.size();
  if (r == 0 || c == 0) return;
  std::vector<std::vector<int>> table(r + 1, std::vector<int>(c + 1, 0));
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= c; ++j) {
      if (ref[i - 1] == cand[j - 1])
        table[i][j] = table[i - 1][j - 1] + 1;
      else
        table[i][j] = std::max(table[i - 1][j], table[i][j - 1]);
    }
  std::size_t i = r;
  std::size_t j = c;
  while (i > 0 && j > 0) {
    if (ref[i - 1] == cand[j - 1]) {
      hit[i - 1] = 1;
      --i;
      --j;
    } else if (table[i - 1][j] >= table[i][j - 1]) {
      --i;
    } else {
      --j;
    }
  }
}

RougeScore score_against_reference_l(const SentenceList& cand, long long cand_tokens,
                                     const SentenceList& reference, double alpha,
                                     bool apply_stemmer) {
  SentenceList ref = prepare(reference, apply_stemmer, std::nullopt);
  long long ref_tokens = 0;
  long long hits = 0;
  for (const auto& ref_sentence : ref) {
    ref_tokens += static_cast<long long>(ref_sentence.size());
    std::vector<char> hit(ref_sentence.size(), 0);
    for (const auto& cand_sentence : cand) mark_lcs_positions(ref_sentence, cand_sentence, hit);
    for (char h : hit) hits += h;
  }
  RougeScore score;
  score.recall = ref_tokens > 0 ? static_cast<double>(hits) / static_cast<double>(ref_tokens) : 0.0;
  score.precision =
      cand_tokens > 0 ? static_cast<double>(hits) / static_cast<double>(cand_tokens) : 0.0;
  score.f1 = f_measure(score.recall, score.precision, alpha);
  return score;
}

RougeScore aggregate(const std::vector<RougeScore>& per_reference, ReferenceAggregation mode) {
  RougeScore out;
  if (per_reference.empty()) return out;
  if (mode == ReferenceAggregation::average) {
    for (const auto& s : per_reference) {
      out.recall += s.recall;
      out.precision += s.precision;
      out.f1 += s.f1;
    }
    double n = static_cast<double>(per_reference.size());
    out.recall /= n;
    out.precision /= n;
    out.f1 /= n;
  } else {
    for (const auto& s : per_reference) {
      out.recall = std::max(out.recall, s.recall);
      out.precision = std::max(out.precision, s.precision);
      out.f1 = std::max(out.f1, s.f1);
    }
  }
  return out;
}

void require_references(const std::vector<SentenceList>& references) {
  if (references.empty()) throw ValidationError("rouge: empty reference list");
}

}  // namespace

RougeScore rouge_n(const SentenceList& candidate, const std::vector<SentenceList>& references,
                   int n, const RougeConfig& config) {
  require_references(references);
  if (n < 1) throw ValidationError("rouge: n must be >= 1");
  GramStats cand =
      gram_stats(prepare(candidate, config.apply_stemmer, config.length_limit_words), n);
  std::vector<RougeScore> per_reference;
  per_reference.reserve(references.size());
  for (const auto& reference : references)
    per_reference.push_back(
        score_against_reference_n(cand, reference, n, config.f_alpha, config.apply_stemmer));
  return aggregate(per_reference, config.reference_aggregation);
}

RougeScore rouge_l(const SentenceList& candidate, const std::vector<SentenceList>& references,
                   const RougeConfig& config) {
  require_references(references);
  SentenceList cand = prepare(candidate, config.apply_stemmer, config.length_limit_words);
  long long cand_tokens = 0;
  for (const auto& sentence : cand) cand_tokens += static_cast<long long>(sentence.size());
  std::vector<RougeScore> per_reference;
  per_reference.reserve(references.size());
  for (const auto& reference : references)
    per_reference.push_back(
        score_against_reference_l(cand, cand_tokens, reference, config.f_alpha,
                                  config.apply_stemmer));
  return aggregate(per_reference, config.reference_aggregation);
}

CorpusReport evaluate_corpus(const std::vector<EvalPair>& pairs, const RougeConfig& config) {
  if (pairs.empty()) throw ValidationError("evaluate_corpus: empty pair list");
  std::vector<std::string> metric_names;
  for (int n : config.n_values) metric_names.push_back("rouge-" + std::to_string(n));
  if (config.include_rouge_l) metric_names.push_back("rouge-l");

  std::vector<RougeScore> sums(metric_names.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (pairs[p].references.empty())
      throw ValidationError("evaluate_corpus: pair " + std::to_string(p) + " has no reference");
    std::size_t m = 0;
    for (int n : config.n_values) {
      RougeScore s = rouge_n(pairs[p].candidate, pairs[p].references, n, config);
      sums[m].recall += s.recall;
      sums[m].precision += s.precision;
      sums[m].f1 += s.f1;
      ++m;
    }
    if (config.include_rouge_l) {
      RougeScore s = rouge_l(pairs[p].candidate, pairs[p].references, config);
      sums[m].recall += s.recall;
      sums[m].precision += s.precision;
      sums[m].f1 += s.f1;
    }
  }
  CorpusReport report;
  report.n_examples = pairs.size();
  report.config = config;
  double n = static_cast<double>(pairs.size());
  for (std::size_t m = 0; m < metric_names.size(); ++m)
    report.metrics.emplace_back(metric_names[m],
                                RougeScore{sums[m].recall / n, sums[m].precision / n, sums[m].f1 / n});
  return report;
}

namespace {

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string report_to_text(const CorpusReport& report) {
  std::ostringstream out;
  out << "preset: " << report.config.preset_name << "  examples: " << report.n_examples << "\n";
  out << "metric    recall    precision f1\n";
  for (const auto& [name, score] : report.metrics) {
    out << name;
    for (std::size_t pad = name.size(); pad < 10; ++pad) out << ' ';
    out << fixed6(score.recall) << "  " << fixed6(score.precision) << "  " << fixed6(score.f1)
        << "\n";
  }
  return out.str();
}

std::string report_to_json(const CorpusReport& report) {
  nlohmann::ordered_json doc;
  doc["preset"] = report.config.preset_name;
  doc["n_examples"] = report.n_examples;
  doc["reported_statistic"] = report.config.reported_statistic == ReportedStatistic::recall
                                  ? "recall"
                                  : (report.config.reported_statistic == ReportedStatistic::f1
                                         ? "f1"
                                         : "all");
  nlohmann::ordered_json metrics = nlohmann::ordered_json::array();
  for (const auto& [name, score] : report.metrics) {
    nlohmann::ordered_json m;
    m["metric"] = name;
    m["recall"] = score.recall;
    m["precision"] = score.precision;
    m["f1"] = score.f1;
    metrics.push_back(m);
  }
  doc["metrics"] = metrics;
  return doc.dump(2);
}

}  // namespace qfs
