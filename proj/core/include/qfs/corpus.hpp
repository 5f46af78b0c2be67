#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qfs {

struct RawRecord {
  std::string article_title;
  std::vector<std::string> section_path;
  std::string statement;
  std::string citation_body;
  std::string source_type;
  std::string url;  // empty = absent
};

struct ExampleMeta {
  std::string article_title;
  std::string source_type;
  std::string url;
  std::string doc_hash;
};

struct Example {
  std::string id;
  std::vector<std::string> query;  // article title, then section titles
  std::vector<std::string> document;
  std::vector<std::string> summary;
  ExampleMeta meta;
};

struct BuildOutcome {
  bool ok = false;
  Example example;
  std::string reject_reason;  // set when !ok
};

// Sentence-splits the statement into the summary and the citation body into
// the document, builds the query from the title hierarchy, and assigns the
// content-hash id. Records whose source type is not one of web, newspaper,
// press or press_release are rejected with reason "source_type"; an empty
// document or summary after splitting rejects with "empty_document" or
// "empty_summary".
BuildOutcome build_example(const RawRecord& raw);

// Fraction of the summary's distinct non-stopword stemmed tokens that also
// occur in the document. A summary with no such tokens scores 1.0.
double unigram_recall(const std::vector<std::string>& summary,
                      const std::vector<std::string>& document);

struct CountRange {
  int low = 0;
  int high = 0;
};

struct CurationThresholds {
  CountRange doc_tokens;
  CountRange doc_sentences;
  CountRange summary_tokens;
  CountRange summary_sentences;
};

struct CurationConfig {
  double recall_threshold = 0.5;
  double oracle_threshold = 0.2;
  int stats_doc_token_cap = 1000;
  CurationThresholds thresholds;
};

// Nearest-rank 5th/95th percentiles of the four size statistics, computed
// over the examples whose documents hold at most `cap` tokens. Throws
// ValidationError when fewer than 20 examples survive the cap.
CurationThresholds compute_thresholds(const std::vector<Example>& examples, int cap);

struct Rejection {
  std::string id;
  std::string reason;
};

// Applies the curation rules in a fixed order (unigram_recall, doc_tokens,
// doc_sentences, summary_tokens, summary_sentences, oracle_score); the first
// failing rule names the rejection. Kept and rejected partition the input.
std::pair<std::vector<Example>, std::vector<Rejection>> curate(
    const std::vector<Example>& examples, const CurationConfig& config, int jobs = 1);

struct SplitResult {
  std::vector<Example> train;
  std::vector<Example> dev;
  std::vector<Example> test;
};

// Groups examples by doc_hash, shuffles the groups with the seed, and
// assigns whole groups to splits by largest-remainder counts, so no document
// ever spans two splits. Throws ValidationError when there are fewer groups
// than splits.
SplitResult split_dataset(const std::vector<Example>& examples, std::array<double, 3> ratios,
                          std::uint64_t seed);

struct SplitStats {
  std::string name;
  std::size_t examples = 0;
  std::size_t articles = 0;
  double mean_doc_tokens = 0.0;
  double mean_doc_sentences = 0.0;
  double mean_summary_tokens = 0.0;
  double mean_summary_sentences = 0.0;
  double mean_query_depth = 0.0;
  double mean_query_tokens = 0.0;
};

std::vector<SplitStats> dataset_stats(
    const std::vector<std::pair<std::string, const std::vector<Example>*>>& splits);

std::string stats_to_text(const std::vector<SplitStats>& rows);
std::string stats_to_json(const std::vector<SplitStats>& rows);

// Document token count, used by the curation cap and the range rules.
int document_token_count(const Example& example);

}  // namespace qfs
