#include "qfs/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "qfs/errors.hpp"
#include "qfs/oracle.hpp"
#include "qfs/text.hpp"
#include "qfs/util.hpp"

namespace qfs {

namespace {

const std::set<std::string>& allowed_source_types() {
  static const std::set<std::string> types = {"web", "newspaper", "press", "press_release"};
  return types;
}

std::string joined_tokens(const std::vector<std::string>& sentences) {
  std::string out;
  for (const auto& sentence : sentences)
    for (const auto& token : tokenize(sentence)) {
      if (!out.empty()) out += ' ';
      out += token;
    }
  return out;
}

std::string content_id(const Example& example) {
  std::uint64_t h = kFnvOffset;
  for (const auto& part : example.query) {
    h = fnv1a64(part, h);
    h = fnv1a64("\x1e", h);
  }
  h = fnv1a64("\x1d", h);
  for (const auto& part : example.document) {
    h = fnv1a64(part, h);
    h = fnv1a64("\x1e", h);
  }
  h = fnv1a64("\x1d", h);
  for (const auto& part : example.summary) {
    h = fnv1a64(part, h);
    h = fnv1a64("\x1e", h);
  }
  return to_hex(h);
}

SentenceList tokenize_sentences(const std::vector<std::string>& sentences) {
  SentenceList out;
  out.reserve(sentences.size());
  for (const auto& sentence : sentences) out.push_back(tokenize(sentence));
  return out;
}

}  // namespace

int document_token_count(const Example& example) {
  int count = 0;
  for (const auto& sentence : example.document)
    count += static_cast<int>(tokenize(sentence).size());
  return count;
}

BuildOutcome build_example(const RawRecord& raw) {
  BuildOutcome outcome;
  if (allowed_source_types().count(raw.source_type) == 0) {
    outcome.reject_reason = "source_type";
    return outcome;
  }
  Example example;
  example.query.push_back(raw.article_title);
  for (const auto& section : raw.section_path) example.query.push_back(section);
  example.document = split_sentences(raw.citation_body);
  example.summary = split_sentences(raw.statement);
  if (example.document.empty()) {
    outcome.reject_reason = "empty_document";
    return outcome;
  }
  if (example.summary.empty()) {
    outcome.reject_reason = "empty_summary";
    return outcome;
  }
  example.meta.article_title = raw.article_title;
  example.meta.source_type = raw.source_type;
  example.meta.url = raw.url;
  example.meta.doc_hash = to_hex(fnv1a64(joined_tokens(example.document)));
  example.id = content_id(example);
  outcome.ok = true;
  outcome.example = std::move(example);
  return outcome;
}

double unigram_recall(const std::vector<std::string>& summary,
                      const std::vector<std::string>& document) {
  std::unordered_set<std::string> summary_terms;
  for (const auto& sentence : summary)
    for (const auto& token : tokenize(sentence)) {
      if (is_stopword(token)) continue;
      summary_terms.insert(stem(token));
    }
  if (summary_terms.empty()) return 1.0;
  std::unordered_set<std::string> document_terms;
  for (const auto& sentence : document)
    for (const auto& token : tokenize(sentence)) document_terms.insert(stem(token));
  std::size_t covered = 0;
  for (const auto& term : summary_terms)
    if (document_terms.count(term) > 0) ++covered;
  return static_cast<double>(covered) / static_cast<double>(summary_terms.size());
}

namespace {

int nearest_rank(const std::vector<int>& sorted, double percentile) {
  std::size_t n = sorted.size();
  std::size_t rank =
      static_cast<std::size_t>(std::ceil(percentile / 100.0 * static_cast<double>(n)));
  if (rank < 1) rank = 1;
  if (rank > n) rank = n;
  return sorted[rank - 1];
}

CountRange percentile_range(std::vector<int>& values) {
  std::sort(values.begin(), values.end());
  return {nearest_rank(values, 5.0), nearest_rank(values, 95.0)};
}

struct ExampleSizes {
  int doc_tokens;
  int doc_sentences;
  int summary_tokens;
  int summary_sentences;
};

ExampleSizes sizes_of(const Example& example) {
  ExampleSizes sizes{};
  sizes.doc_tokens = document_token_count(example);
  sizes.doc_sentences = static_cast<int>(example.document.size());
  for (const auto& sentence : example.summary)
    sizes.summary_tokens += static_cast<int>(tokenize(sentence).size());
  sizes.summary_sentences = static_cast<int>(example.summary.size());
  return sizes;
}

bool in_range(int value, const CountRange& range) {
  return value >= range.low && value <= range.high;
}

}  // namespace

CurationThresholds compute_thresholds(const std::vector<Example>& examples, int cap) {
  std::vector<int> doc_tokens, doc_sentences, summary_tokens, summary_sentences;
  for (const auto& example : examples) {
    ExampleSizes sizes = sizes_of(example);
    if (sizes.doc_tokens > cap) continue;
    doc_tokens.push_back(sizes.doc_tokens);
    doc_sentences.push_back(sizes.doc_sentences);
    summary_tokens.push_back(sizes.summary_tokens);
    summary_sentences.push_back(sizes.summary_sentences);
  }
  if (doc_tokens.size() < 20)
    throw ValidationError("compute_thresholds: only " + std::to_string(doc_tokens.size()) +
                          " examples under the token cap; need at least 20");
  CurationThresholds thresholds;
  thresholds.doc_tokens = percentile_range(doc_tokens);
  thresholds.doc_sentences = percentile_range(doc_sentences);
  thresholds.summary_tokens = percentile_range(summary_tokens);
  thresholds.summary_sentences = percentile_range(summary_sentences);
  return thresholds;
}

std::pair<std::vector<Example>, std::vector<Rejection>> curate(
    const std::vector<Example>& examples, const CurationConfig& config, int jobs) {
  // "" marks a kept example; anything else is the first failing rule.
  std::vector<std::string> verdicts = parallel_map<std::string>(
      examples.size(), jobs, [&](std::size_t i) -> std::string {
        const Example& example = examples[i];
        if (unigram_recall(example.summary, example.document) < config.recall_threshold)
          return "unigram_recall";
        ExampleSizes sizes = sizes_of(example);
        if (!in_range(sizes.doc_tokens, config.thresholds.doc_tokens)) return "doc_tokens";
        if (!in_range(sizes.doc_sentences, config.thresholds.doc_sentences))
          return "doc_sentences";
        if (!in_range(sizes.summary_tokens, config.thresholds.summary_tokens))
          return "summary_tokens";
        if (!in_range(sizes.summary_sentences, config.thresholds.summary_sentences))
          return "summary_sentences";
        OracleResult oracle = greedy_oracle(tokenize_sentences(example.document),
                                            tokenize_sentences(example.summary),
                                            OracleConfig::curation());
        if (!(oracle.oracle_score > config.oracle_threshold)) return "oracle_score";
        return "";
      });
  std::vector<Example> kept;
  std::vector<Rejection> rejected;
  for (std::size_t i = 0; i < examples.size(); ++i) {
    if (verdicts[i].empty())
      kept.push_back(examples[i]);
    else
      rejected.push_back({examples[i].id, verdicts[i]});
  }
  return {std::move(kept), std::move(rejected)};
}

SplitResult split_dataset(const std::vector<Example>& examples, std::array<double, 3> ratios,
                          std::uint64_t seed) {
  double total = ratios[0] + ratios[1] + ratios[2];
  if (!(ratios[0] > 0 && ratios[1] > 0 && ratios[2] > 0) || std::abs(total - 1.0) > 1e-9)
    throw ValidationError("split: ratios must be positive and sum to 1");

  // Group keys in first-appearance order, so the shuffle is the only source
  // of reordering.
  std::vector<std::string> group_keys;
  std::unordered_map<std::string, std::size_t> key_index;
  for (const auto& example : examples) {
    if (key_index.emplace(example.meta.doc_hash, group_keys.size()).second)
      group_keys.push_back(example.meta.doc_hash);
  }
  if (group_keys.size() < 3)
    throw ValidationError("split: need at least 3 distinct documents, have " +
                          std::to_string(group_keys.size()));
  deterministic_shuffle(group_keys, seed);

  const std::size_t n = group_keys.size();
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> remainders{};
  std::size_t assigned = 0;
  for (std::size_t s = 0; s < 3; ++s) {
    double exact = ratios[s] * static_cast<double>(n);
    counts[s] = static_cast<std::size_t>(std::floor(exact));
    remainders[s] = exact - std::floor(exact);
    assigned += counts[s];
  }
  while (assigned < n) {
    std::size_t best = 0;
    for (std::size_t s = 1; s < 3; ++s)
      if (remainders[s] > remainders[best]) best = s;
    counts[best] += 1;
    remainders[best] = -1.0;
    ++assigned;
  }

  std::unordered_map<std::string, int> split_of;
  std::size_t cursor = 0;
  for (int s = 0; s < 3; ++s)
    for (std::size_t c = 0; c < counts[static_cast<std::size_t>(s)]; ++c)
      split_of[group_keys[cursor++]] = s;

  SplitResult result;
  for (const auto& example : examples) {
    switch (split_of.at(example.meta.doc_hash)) {
      case 0:
        result.train.push_back(example);
        break;
      case 1:
        result.dev.push_back(example);
        break;
      default:
        result.test.push_back(example);
        break;
    }
  }
  return result;
}

std::vector<SplitStats> dataset_stats(
    const std::vector<std::pair<std::string, const std::vector<Example>*>>& splits) {
  std::vector<SplitStats> rows;
  for (const auto& [name, examples] : splits) {
    SplitStats row;
    row.name = name;
    row.examples = examples->size();
    std::set<std::string> articles;
    double doc_tokens = 0, doc_sentences = 0, summary_tokens = 0, summary_sentences = 0;
    double query_depth = 0, query_tokens = 0;
    for (const auto& example : *examples) {
      articles.insert(example.meta.article_title);
      ExampleSizes sizes = sizes_of(example);
      doc_tokens += sizes.doc_tokens;
      doc_sentences += sizes.doc_sentences;
      summary_tokens += sizes.summary_tokens;
      summary_sentences += sizes.summary_sentences;
      query_depth += static_cast<double>(example.query.size());
      for (const auto& part : example.query)
        query_tokens += static_cast<double>(tokenize(part).size());
    }
    row.articles = articles.size();
    if (!examples->empty()) {
      double n = static_cast<double>(examples->size());
      row.mean_doc_tokens = doc_tokens / n;
      row.mean_doc_sentences = doc_sentences / n;
      row.mean_summary_tokens = summary_tokens / n;
      row.mean_summary_sentences = summary_sentences / n;
      row.mean_query_depth = query_depth / n;
      row.mean_query_tokens = query_tokens / n;
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void stats_line(std::ostringstream& out, const std::string& label,
                const std::vector<std::string>& cells) {
  out << label;
  for (std::size_t pad = label.size(); pad < 18; ++pad) out << ' ';
  for (const auto& cell : cells) {
    for (std::size_t pad = cell.size(); pad < 12; ++pad) out << ' ';
    out << cell;
  }
  out << "\n";
}

}  // namespace

std::string stats_to_text(const std::vector<SplitStats>& rows) {
  std::ostringstream out;
  std::vector<std::string> headers, examples, articles, doc_tokens, doc_sentences;
  std::vector<std::string> summary_tokens, summary_sentences, query_depth, query_tokens;
  for (const auto& row : rows) {
    headers.push_back(row.name);
    examples.push_back(std::to_string(row.examples));
    articles.push_back(std::to_string(row.articles));
    doc_tokens.push_back(fixed2(row.mean_doc_tokens));
    doc_sentences.push_back(fixed2(row.mean_doc_sentences));
    summary_tokens.push_back(fixed2(row.mean_summary_tokens));
    summary_sentences.push_back(fixed2(row.mean_summary_sentences));
    query_depth.push_back(fixed2(row.mean_query_depth));
    query_tokens.push_back(fixed2(row.mean_query_tokens));
  }
  stats_line(out, "", headers);
  stats_line(out, "examples", examples);
  stats_line(out, "articles", articles);
  stats_line(out, "doc tokens", doc_tokens);
  stats_line(out, "doc sentences", doc_sentences);
  stats_line(out, "summary tokens", summary_tokens);
  stats_line(out, "summary sentences", summary_sentences);
  stats_line(out, "query depth", query_depth);
  stats_line(out, "query tokens", query_tokens);
  for (const auto& row : rows)
    if (row.examples == 0) out << "warning: split '" << row.name << "' is empty\n";
  return out.str();
}

std::string stats_to_json(const std::vector<SplitStats>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["split"] = row.name;
    r["examples"] = row.examples;
    r["articles"] = row.articles;
    r["mean_doc_tokens"] = row.mean_doc_tokens;
    r["mean_doc_sentences"] = row.mean_doc_sentences;
    r["mean_summary_tokens"] = row.mean_summary_tokens;
    r["mean_summary_sentences"] = row.mean_summary_sentences;
    r["mean_query_depth"] = row.mean_query_depth;
    r["mean_query_tokens"] = row.mean_query_tokens;
    doc.push_back(r);
  }
  return doc.dump(2);
}

}  // namespace qfs
