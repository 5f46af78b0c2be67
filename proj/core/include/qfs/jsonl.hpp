#pragma once

#include <string>
#include <vector>

#include "qfs/corpus.hpp"
#include "qfs/summarize.hpp"

namespace qfs {

struct LabelsRecord {
  std::string id;
  std::vector<int> oracle_indices;
  double oracle_score = 0.0;
  std::vector<int> labels;
  std::vector<double> scores;
};

struct ScoresRecord {
  std::string id;
  std::vector<double> scores;
};

struct SummaryRecord {
  std::string id;
  std::vector<int> selected;
  std::string summary_text;
};

struct ClusterSummaryRecord {
  std::string cluster_id;
  std::vector<std::pair<int, int>> selected;
  std::string summary_text;
};

// Each parse_* takes one JSONL line and throws SchemaError, naming `where`
// (a "file:line" style locator), on malformed input. Each to_jsonl emits a
// single line without the trailing newline, with object keys in a fixed
// order so artifacts are byte-stable.

RawRecord parse_raw_record(const std::string& line, const std::string& where);
Example parse_example(const std::string& line, const std::string& where);
LabelsRecord parse_labels_record(const std::string& line, const std::string& where);
ScoresRecord parse_scores_record(const std::string& line, const std::string& where);
Cluster parse_cluster(const std::string& line, const std::string& where);
SummaryRecord parse_summary_record(const std::string& line, const std::string& where);
ClusterSummaryRecord parse_cluster_summary_record(const std::string& line,
                                                  const std::string& where);

std::string to_jsonl(const RawRecord& record);
std::string to_jsonl(const Example& example);
std::string to_jsonl(const LabelsRecord& record);
std::string to_jsonl(const ScoresRecord& record);
std::string to_jsonl(const Cluster& cluster);
std::string to_jsonl(const SummaryRecord& record);
std::string to_jsonl(const ClusterSummaryRecord& record);

// Every line of the file, in order, with trailing \r stripped. Throws
// MissingFileError when the file cannot be opened.
std::vector<std::string> read_raw_lines(const std::string& path);

// Reads a whole JSONL file, skipping blank lines. The parser is called with
// "path:line" locators. Throws MissingFileError when the file cannot be
// opened.
template <typename T>
std::vector<T> read_jsonl_file(const std::string& path,
                               T (*parse)(const std::string&, const std::string&)) {
  std::vector<T> records;
  std::size_t line_no = 0;
  for (const std::string& line : read_raw_lines(path)) {
    ++line_no;
    if (line.empty()) continue;
    records.push_back(parse(line, path + ":" + std::to_string(line_no)));
  }
  return records;
}

// True when the first record object in the file has a "cluster_id" key.
bool file_looks_clustered(const std::string& path);

}  // namespace qfs
