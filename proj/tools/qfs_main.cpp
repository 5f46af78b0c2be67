// qfs: command line front-end for the corpus and summarization pipeline.
//
// Subcommands: ingest, curate, oracle-label, summarize, threshold-search,
// evaluate, split, stats. Every artifact is JSONL or JSON, written
// atomically, and byte-identical across reruns with equal inputs and flags.

#include <array>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qfs/corpus.hpp"
#include "qfs/errors.hpp"
#include "qfs/jsonl.hpp"
#include "qfs/oracle.hpp"
#include "qfs/rouge.hpp"
#include "qfs/summarize.hpp"
#include "qfs/text.hpp"
#include "qfs/util.hpp"

namespace {

using nlohmann::ordered_json;
using qfs::Cluster;
using qfs::Example;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitMissingFile = 66;
constexpr int kExitInternal = 70;
constexpr int kExitConfig = 78;

struct Options {
  std::string input;
  std::string extra;  // second input: scores file or dataset, per command
  std::string output;
  std::string config_path;
  std::string preset = "wikiref";
  std::string scorer = "lead";
  std::uint64_t seed = 13;
  int jobs = 1;
  double threshold = 0.0;
  bool threshold_set = false;
  int max_window_tokens = 512;
  int stride = 100;
  int word_budget = 250;
};

// ---- file helpers ---------------------------------------------------------

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

void ensure_output_dir(const std::string& dir) {
  if (dir.empty()) throw qfs::ConfigError("--output is required for this command");
  std::filesystem::create_directories(dir);
}

std::string artifact(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

template <typename T>
std::string lines_of(const std::vector<T>& records) {
  std::string out;
  for (const auto& record : records) {
    out += qfs::to_jsonl(record);
    out += '\n';
  }
  return out;
}

// ---- config files ---------------------------------------------------------

ordered_json load_config(const std::string& path, const std::vector<std::string>& allowed) {
  if (path.empty()) return ordered_json::object();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qfs::MissingFileError("config file not found: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  ordered_json parsed = ordered_json::parse(text, nullptr, false);
  if (parsed.is_discarded() || !parsed.is_object())
    throw qfs::ConfigError("config file is not a JSON object: " + path);
  for (const auto& [key, value] : parsed.items()) {
    bool known = false;
    for (const auto& name : allowed) known |= (name == key);
    if (!known) throw qfs::ConfigError("unknown config key \"" + key + "\" in " + path);
  }
  return parsed;
}

// The effective configuration echoed into every output directory. Jobs are
// deliberately left out: parallelism must not change any artifact.
void write_run_config(const std::string& dir, const ordered_json& effective) {
  write_atomic(artifact(dir, "run_config.json"), effective.dump(2) + "\n");
}

// ---- dataset loading ------------------------------------------------------

std::vector<Example> load_examples(const std::string& path) {
  return qfs::read_jsonl_file(path, qfs::parse_example);
}

std::vector<Cluster> load_clusters(const std::string& path) {
  return qfs::read_jsonl_file(path, qfs::parse_cluster);
}

qfs::SentenceList tokenize_sentences(const std::vector<std::string>& sentences) {
  qfs::SentenceList out;
  out.reserve(sentences.size());
  for (const auto& sentence : sentences) out.push_back(qfs::tokenize(sentence));
  return out;
}

qfs::RougeConfig preset_config(const std::string& name) {
  if (name == "duc") return qfs::RougeConfig::duc();
  if (name == "wikiref") return qfs::RougeConfig::wikiref();
  throw qfs::ConfigError("unknown preset: " + name);
}

// ---- ingest ---------------------------------------------------------------

int run_ingest(const Options& opt) {
  ordered_json config = load_config(opt.config_path, {"strip_html"});
  bool strip_html = config.value("strip_html", false);

  std::vector<qfs::RawRecord> records = qfs::read_jsonl_file(opt.input, qfs::parse_raw_record);
  std::vector<qfs::BuildOutcome> outcomes =
      qfs::parallel_map<qfs::BuildOutcome>(records.size(), opt.jobs, [&](std::size_t i) {
        qfs::RawRecord raw = records[i];
        if (strip_html) raw.citation_body = qfs::html_to_text(raw.citation_body);
        return qfs::build_example(raw);
      });

  std::string examples;
  std::string rejects;
  std::size_t kept = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].ok) {
      examples += qfs::to_jsonl(outcomes[i].example);
      examples += '\n';
      ++kept;
    } else {
      ordered_json row;
      row["id"] = "record-" + std::to_string(i + 1);
      row["reason"] = outcomes[i].reject_reason;
      rejects += row.dump();
      rejects += '\n';
    }
  }

  ensure_output_dir(opt.output);
  write_atomic(artifact(opt.output, "examples.jsonl"), examples);
  write_atomic(artifact(opt.output, "rejects.jsonl"), rejects);
  ordered_json echo;
  echo["command"] = "ingest";
  echo["input"] = opt.input;
  echo["strip_html"] = strip_html;
  write_run_config(opt.output, echo);
  std::cout << "ingest: " << kept << " examples, " << (outcomes.size() - kept) << " rejects\n";
  return kExitOk;
}

// ---- curate ---------------------------------------------------------------

ordered_json range_json(const qfs::CountRange& range) {
  ordered_json out;
  out["low"] = range.low;
  out["high"] = range.high;
  return out;
}

int run_curate(const Options& opt) {
  ordered_json config = load_config(
      opt.config_path, {"recall_threshold", "oracle_threshold", "stats_doc_token_cap"});
  qfs::CurationConfig curation;
  curation.recall_threshold = config.value("recall_threshold", 0.5);
  curation.oracle_threshold = config.value("oracle_threshold", 0.2);
  curation.stats_doc_token_cap = config.value("stats_doc_token_cap", 1000);

  std::vector<Example> examples = load_examples(opt.input);
  curation.thresholds = qfs::compute_thresholds(examples, curation.stats_doc_token_cap);
  auto [kept, rejected] = qfs::curate(examples, curation, opt.jobs);

  std::string rejects;
  for (const auto& rejection : rejected) {
    ordered_json row;
    row["id"] = rejection.id;
    row["reason"] = rejection.reason;
    rejects += row.dump();
    rejects += '\n';
  }

  ordered_json thresholds;
  thresholds["doc_tokens"] = range_json(curation.thresholds.doc_tokens);
  thresholds["doc_sentences"] = range_json(curation.thresholds.doc_sentences);
  thresholds["summary_tokens"] = range_json(curation.thresholds.summary_tokens);
  thresholds["summary_sentences"] = range_json(curation.thresholds.summary_sentences);

  ensure_output_dir(opt.output);
  write_atomic(artifact(opt.output, "kept.jsonl"), lines_of(kept));
  write_atomic(artifact(opt.output, "rejects.jsonl"), rejects);
  write_atomic(artifact(opt.output, "thresholds.json"), thresholds.dump(2) + "\n");
  ordered_json echo;
  echo["command"] = "curate";
  echo["input"] = opt.input;
  echo["recall_threshold"] = curation.recall_threshold;
  echo["oracle_threshold"] = curation.oracle_threshold;
  echo["stats_doc_token_cap"] = curation.stats_doc_token_cap;
  write_run_config(opt.output, echo);
  std::cout << "curate: " << kept.size() << " kept, " << rejected.size() << " rejected\n";
  return kExitOk;
}

// ---- oracle-label ---------------------------------------------------------

int run_oracle_label(const Options& opt) {
  ordered_json config = load_config(opt.config_path, {"profile"});
  std::string profile = config.value("profile", "training");
  qfs::OracleConfig oracle_config;
  if (profile == "training")
    oracle_config = qfs::OracleConfig::training();
  else if (profile == "curation")
    oracle_config = qfs::OracleConfig::curation();
  else
    throw qfs::ConfigError("unknown oracle profile: " + profile);

  std::vector<Example> examples = load_examples(opt.input);
  std::vector<qfs::LabelsRecord> labels =
      qfs::parallel_map<qfs::LabelsRecord>(examples.size(), opt.jobs, [&](std::size_t i) {
        const Example& example = examples[i];
        qfs::OracleResult result = qfs::greedy_oracle(tokenize_sentences(example.document),
                                                      tokenize_sentences(example.summary),
                                                      oracle_config);
        qfs::LabelsRecord record;
        record.id = example.id;
        record.oracle_indices = result.selected_indices;
        record.oracle_score = result.oracle_score;
        record.labels = result.labels;
        record.scores = result.sentence_scores;
        return record;
      });

  ensure_output_dir(opt.output);
  write_atomic(artifact(opt.output, "labels.jsonl"), lines_of(labels));
  ordered_json echo;
  echo["command"] = "oracle-label";
  echo["input"] = opt.input;
  echo["profile"] = profile;
  write_run_config(opt.output, echo);
  std::cout << "oracle-label: " << labels.size() << " records\n";
  return kExitOk;
}

// ---- summarize ------------------------------------------------------------

double default_threshold(const std::string& scorer) {
  // LEAD keeps the first two sentences under 1/(i+1) scoring; the other
  // scorers keep everything positive unless a searched threshold is passed.
  return scorer == "lead" ? 0.4 : 0.0;
}

std::vector<double> native_scores(const std::string& scorer, const Example& example) {
  if (scorer == "lead") return qfs::score_lead(example.id, example.document).scores;
  if (scorer == "all") return qfs::score_all(example.id, example.document).scores;
  if (scorer == "query-sim")
    return qfs::score_query_sim(example.id, example.query, example.document).scores;
  throw qfs::ConfigError("unknown scorer: " + scorer);
}

ordered_json window_json(const qfs::SerializedWindow& window) {
  ordered_json spans = ordered_json::array();
  for (const auto& span : window.sentence_spans)
    spans.push_back({span.sentence_index, span.start, span.end});
  ordered_json out;
  out["window_index"] = window.window_index;
  out["tokens"] = window.tokens;
  out["segment_ids"] = window.segment_ids;
  out["spans"] = spans;
  return out;
}

int emit_windows(const Options& opt, const std::vector<Example>& examples) {
  std::vector<std::string> rows =
      qfs::parallel_map<std::string>(examples.size(), opt.jobs, [&](std::size_t i) {
        const Example& example = examples[i];
        std::vector<qfs::SerializedWindow> windows = qfs::serialize_input(
            example.query, example.document, opt.max_window_tokens, opt.stride);
        std::vector<int> scoring = qfs::assign_scoring_windows(
            windows, static_cast<int>(example.document.size()));
        ordered_json row;
        row["id"] = example.id;
        ordered_json window_rows = ordered_json::array();
        for (const auto& window : windows) window_rows.push_back(window_json(window));
        row["windows"] = window_rows;
        row["scoring_windows"] = scoring;
        return row.dump();
      });

  std::string body;
  for (const auto& row : rows) {
    body += row;
    body += '\n';
  }
  ensure_output_dir(opt.output);
  write_atomic(artifact(opt.output, "windows.jsonl"), body);
  ordered_json echo;
  echo["command"] = "summarize";
  echo["input"] = opt.input;
  echo["scorer"] = "external";
  echo["emitted"] = "windows";
  echo["max_window_tokens"] = opt.max_window_tokens;
  echo["stride"] = opt.stride;
  write_run_config(opt.output, echo);
  std::cout << "summarize: wrote windows for " << examples.size() << " examples\n";
  return kExitOk;
}

std::string join_sentences(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += ' ';
    out += part;
  }
  return out;
}

int summarize_examples(const Options& opt) {
  std::vector<Example> examples = load_examples(opt.input);
  if (opt.scorer == "external" && opt.extra.empty()) return emit_windows(opt, examples);

  std::unordered_map<std::string, std::vector<double>> external;
  if (opt.scorer == "external") external = qfs::load_external_scores(opt.extra, examples);

  double threshold = opt.threshold_set ? opt.threshold : default_threshold(opt.scorer);
  bool trigram_block = opt.scorer != "all";

  std::vector<qfs::SummaryRecord> summaries =
      qfs::parallel_map<qfs::SummaryRecord>(examples.size(), opt.jobs, [&](std::size_t i) {
        const Example& example = examples[i];
        std::vector<double> scores = opt.scorer == "external"
                                         ? external.at(example.id)
                                         : native_scores(opt.scorer, example);
        std::vector<int> selected =
            qfs::select_single_doc(scores, example.document, threshold, trigram_block);
        qfs::SummaryRecord record;
        record.id = example.id;
        record.selected = selected;
        std::vector<std::string> parts;
        for (int s : selected) parts.push_back(example.document[static_cast<std::size_t>(s)]);
        record.summary_text = join_sentences(parts);
        return record;
      });

  ensure_output_dir(opt.output);
  write_atomic(artifact(opt.output, "summaries.jsonl"), lines_of(summaries));
  ordered_json echo;
  echo["command"] = "summarize";
  echo["input"] = opt.input;
  echo["scorer"] = opt.scorer;
  if (!opt.extra.empty()) echo["scores"] = opt.extra;
  echo["threshold"] = threshold;
  write_run_config(opt.output, echo);
  std::cout << "summarize: " << summaries.size() << " summaries\n";
  return kExitOk;
}

std::vector<std::vector<double>> cluster_scores(const Options& opt, const Cluster& cluster) {
  std::vector<std::vector<double>> scores;
  if (opt.scorer == "lead") {
    for (const auto& doc : cluster.documents) {
      std::vector<double> row;
      for (std::size_t i = 0; i < doc.size(); ++i) row.push_back(1.0 / (1.0 + static_cast<double>(i)));
      scores.push_back(row);
    }
    return scores;
  }
  if (opt.scorer == "all") {
    for (const auto& doc : cluster.documents) scores.emplace_back(doc.size(), 1.0);
    return scores;
  }
  if (opt.scorer == "query-sim") {
    std::vector<double> flat = qfs::query_sim_scores(cluster.query, cluster.documents);
    std::size_t offset = 0;
    for (const auto& doc : cluster.documents) {
      scores.emplace_back(flat.begin() + offset, flat.begin() + offset + doc.size());
      offset += doc.size();
    }
    return scores;
  }
  throw qfs::ConfigError("unknown scorer: " + opt.scorer);
}

std::unordered_map<std::string, std::vector<std::vector<double>>> load_cluster_scores(
    const std::string& path, const std::vector<Cluster>& clusters) {
  std::unordered_map<std::string, std::vector<std::vector<double>>> by_id;
  std::size_t line_no = 0;
  for (const std::string& line : qfs::read_raw_lines(path)) {
    ++line_no;
    if (line.empty()) continue;
    std::string where = path + ":" + std::to_string(line_no);
    ordered_json row = ordered_json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object())
      throw qfs::SchemaError("malformed cluster scores line", where);
    if (!row.contains("cluster_id") || !row["cluster_id"].is_string())
      throw qfs::SchemaError("missing cluster_id", where);
    if (!row.contains("doc_scores") || !row["doc_scores"].is_array())
      throw qfs::SchemaError("missing doc_scores", where);
    std::vector<std::vector<double>> scores;
    for (const auto& doc : row["doc_scores"]) {
      if (!doc.is_array()) throw qfs::SchemaError("doc_scores must hold arrays", where);
      std::vector<double> values;
      for (const auto& v : doc) {
        if (!v.is_number()) throw qfs::SchemaError("non-numeric score", where);
        double value = v.get<double>();
        if (!std::isfinite(value)) throw qfs::SchemaError("non-finite score", where);
        values.push_back(value);
      }
      scores.push_back(std::move(values));
    }
    if (!by_id.emplace(row["cluster_id"].get<std::string>(), std::move(scores)).second)
      throw qfs::SchemaError("duplicate_id", row["cluster_id"].get<std::string>());
  }
  for (const auto& cluster : clusters) {
    auto it = by_id.find(cluster.cluster_id);
    if (it == by_id.end())
      throw qfs::SchemaError("missing scores for cluster", cluster.cluster_id);
    if (it->second.size() != cluster.documents.size())
      throw qfs::SchemaError("length_mismatch: scores for " + std::to_string(it->second.size()) +
                                 " documents, cluster has " +
                                 std::to_string(cluster.documents.size()),
                             cluster.cluster_id);
    for (std::size_t d = 0; d < cluster.documents.size(); ++d)
      if (it->second[d].size() != cluster.documents[d].size())
        throw qfs::SchemaError("length_mismatch: document " + std::to_string(d),
                               cluster.cluster_id);
  }
  return by_id;
}

int summarize_clusters(const Options& opt) {
  std::vector<Cluster> clusters = load_clusters(opt.input);
  if (opt.scorer == "external" && opt.extra.empty())
    throw qfs::ConfigError("summarize on clusters with --scorer external needs a scores file");

  std::unordered_map<std::string, std::vector<std::vector<double>>> external;
  if (opt.scorer == "external") external = load_cluster_scores(opt.extra, clusters);

  std::vector<qfs::ClusterSummaryRecord> summaries =
      qfs::parallel_map<qfs::ClusterSummaryRecord>(clusters.size(), opt.jobs, [&](std::size_t i) {
        const Cluster& cluster = clusters[i];
        std::vector<std::vector<double>> scores = opt.scorer == "external"
                                                      ? external.at(cluster.cluster_id)
                                                      : cluster_scores(opt, cluster);
        std::vector<std::pair<int, int>> selected =
            qfs::select_multi_doc(scores, cluster.documents, opt.word_budget);
        qfs::ClusterSummaryRecord record;
        record.cluster_id = cluster.cluster_id;
        record.selected = selected;
        std::vector<std::string> parts;
        for (const auto& [d, s] : selected)
          parts.push_back(cluster.documents[static_cast<std::size_t>(d)][static_cast<std::size_t>(s)]);
        record.summary_text = join_sentences(parts);
        return record;
      });

  ensure_output_dir(opt.output);
  write_atomic(artifact(opt.output, "summaries.jsonl"), lines_of(summaries));
  ordered_json echo;
  echo["command"] = "summarize";
  echo["input"] = opt.input;
  echo["scorer"] = opt.scorer;
  if (!opt.extra.empty()) echo["scores"] = opt.extra;
  echo["word_budget"] = opt.word_budget;
  write_run_config(opt.output, echo);
  std::cout << "summarize: " << summaries.size() << " cluster summaries\n";
  return kExitOk;
}

int run_summarize(const Options& opt) {
  if (qfs::file_looks_clustered(opt.input)) return summarize_clusters(opt);
  return summarize_examples(opt);
}

// ---- threshold-search -----------------------------------------------------

int run_threshold_search(const Options& opt) {
  if (opt.extra.empty())
    throw qfs::ConfigError("threshold-search needs a scores file: qfs threshold-search "
                           "--input dev.jsonl scores.jsonl --output DIR");
  std::vector<Example> dev = load_examples(opt.input);
  std::unordered_map<std::string, std::vector<double>> scores =
      qfs::load_external_scores(opt.extra, dev);
  double threshold = qfs::search_threshold(dev, scores);

  ordered_json result;
  if (std::isinf(threshold))
    result["threshold"] = "-inf";
  else
    result["threshold"] = threshold;

  ensure_output_dir(opt.output);
  write_atomic(artifact(opt.output, "threshold.json"), result.dump(2) + "\n");
  ordered_json echo;
  echo["command"] = "threshold-search";
  echo["input"] = opt.input;
  echo["scores"] = opt.extra;
  write_run_config(opt.output, echo);
  std::cout << "threshold-search: " << result["threshold"].dump() << "\n";
  return kExitOk;
}

// ---- evaluate -------------------------------------------------------------

std::vector<qfs::EvalPair> pairs_from_examples(const std::string& summaries_path,
                                               const std::string& dataset_path) {
  std::vector<Example> dataset = load_examples(dataset_path);
  std::unordered_map<std::string, const Example*> by_id;
  for (const auto& example : dataset) by_id[example.id] = &example;

  std::vector<qfs::SummaryRecord> summaries =
      qfs::read_jsonl_file(summaries_path, qfs::parse_summary_record);
  std::vector<qfs::EvalPair> pairs;
  for (const auto& record : summaries) {
    auto it = by_id.find(record.id);
    if (it == by_id.end()) throw qfs::SchemaError("summary id not in dataset", record.id);
    const Example& example = *it->second;
    qfs::EvalPair pair;
    for (int s : record.selected) {
      if (s < 0 || static_cast<std::size_t>(s) >= example.document.size())
        throw qfs::SchemaError("selected index out of range", record.id);
      pair.candidate.push_back(qfs::tokenize(example.document[static_cast<std::size_t>(s)]));
    }
    pair.references.push_back(tokenize_sentences(example.summary));
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<qfs::EvalPair> pairs_from_clusters(const std::string& summaries_path,
                                               const std::string& dataset_path) {
  std::vector<Cluster> clusters = load_clusters(dataset_path);
  std::unordered_map<std::string, const Cluster*> by_id;
  for (const auto& cluster : clusters) by_id[cluster.cluster_id] = &cluster;

  std::vector<qfs::ClusterSummaryRecord> summaries =
      qfs::read_jsonl_file(summaries_path, qfs::parse_cluster_summary_record);
  std::vector<qfs::EvalPair> pairs;
  for (const auto& record : summaries) {
    auto it = by_id.find(record.cluster_id);
    if (it == by_id.end())
      throw qfs::SchemaError("summary cluster_id not in dataset", record.cluster_id);
    const Cluster& cluster = *it->second;
    qfs::EvalPair pair;
    for (const auto& [d, s] : record.selected) {
      if (d < 0 || static_cast<std::size_t>(d) >= cluster.documents.size())
        throw qfs::SchemaError("selected document out of range", record.cluster_id);
      const auto& doc = cluster.documents[static_cast<std::size_t>(d)];
      if (s < 0 || static_cast<std::size_t>(s) >= doc.size())
        throw qfs::SchemaError("selected sentence out of range", record.cluster_id);
      pair.candidate.push_back(qfs::tokenize(doc[static_cast<std::size_t>(s)]));
    }
    for (const auto& reference : cluster.references)
      pair.references.push_back(tokenize_sentences(reference));
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

int run_evaluate(const Options& opt) {
  if (opt.extra.empty())
    throw qfs::ConfigError("evaluate needs the dataset: qfs evaluate --input summaries.jsonl "
                           "dataset.jsonl --preset wikiref");
  ordered_json config = load_config(opt.config_path, {"reference_aggregation"});
  qfs::RougeConfig rouge = preset_config(opt.preset);
  std::string aggregation = config.value("reference_aggregation", "average");
  if (aggregation == "max")
    rouge.reference_aggregation = qfs::ReferenceAggregation::max;
  else if (aggregation != "average")
    throw qfs::ConfigError("unknown reference_aggregation: " + aggregation);

  std::vector<qfs::EvalPair> pairs = qfs::file_looks_clustered(opt.extra)
                                         ? pairs_from_clusters(opt.input, opt.extra)
                                         : pairs_from_examples(opt.input, opt.extra);
  qfs::CorpusReport report = qfs::evaluate_corpus(pairs, rouge);
  std::cout << qfs::report_to_text(report);

  if (!opt.output.empty()) {
    ensure_output_dir(opt.output);
    write_atomic(artifact(opt.output, "report.json"), qfs::report_to_json(report) + "\n");
    write_atomic(artifact(opt.output, "report.txt"), qfs::report_to_text(report));
    ordered_json echo;
    echo["command"] = "evaluate";
    echo["input"] = opt.input;
    echo["dataset"] = opt.extra;
    echo["preset"] = opt.preset;
    echo["reference_aggregation"] = aggregation;
    write_run_config(opt.output, echo);
  }
  return kExitOk;
}

// ---- split ----------------------------------------------------------------

int run_split(const Options& opt) {
  ordered_json config = load_config(opt.config_path, {"ratios"});
  std::array<double, 3> ratios{0.8, 0.1, 0.1};
  if (config.contains("ratios")) {
    if (!config["ratios"].is_array() || config["ratios"].size() != 3)
      throw qfs::ConfigError("ratios must be an array of three numbers");
    for (std::size_t i = 0; i < 3; ++i) ratios[i] = config["ratios"][i].get<double>();
  }

  std::vector<Example> examples = load_examples(opt.input);
  qfs::SplitResult split = qfs::split_dataset(examples, ratios, opt.seed);

  ensure_output_dir(opt.output);
  write_atomic(artifact(opt.output, "train.jsonl"), lines_of(split.train));
  write_atomic(artifact(opt.output, "dev.jsonl"), lines_of(split.dev));
  write_atomic(artifact(opt.output, "test.jsonl"), lines_of(split.test));
  ordered_json echo;
  echo["command"] = "split";
  echo["input"] = opt.input;
  echo["ratios"] = ratios;
  echo["seed"] = opt.seed;
  write_run_config(opt.output, echo);
  std::cout << "split: " << split.train.size() << " train, " << split.dev.size() << " dev, "
            << split.test.size() << " test\n";
  return kExitOk;
}

// ---- stats ----------------------------------------------------------------

int run_stats(const Options& opt) {
  std::vector<std::pair<std::string, std::vector<Example>>> named;
  if (std::filesystem::is_directory(opt.input)) {
    for (const char* name : {"train", "dev", "test"}) {
      std::string path = artifact(opt.input, std::string(name) + ".jsonl");
      named.emplace_back(name, load_examples(path));
    }
  } else {
    named.emplace_back("all", load_examples(opt.input));
  }

  std::vector<std::pair<std::string, const std::vector<Example>*>> views;
  for (const auto& [name, examples] : named) views.emplace_back(name, &examples);
  std::vector<qfs::SplitStats> rows = qfs::dataset_stats(views);
  std::cout << qfs::stats_to_text(rows);

  if (!opt.output.empty()) {
    ensure_output_dir(opt.output);
    write_atomic(artifact(opt.output, "stats.json"), qfs::stats_to_json(rows) + "\n");
    write_atomic(artifact(opt.output, "stats.txt"), qfs::stats_to_text(rows));
    ordered_json echo;
    echo["command"] = "stats";
    echo["input"] = opt.input;
    write_run_config(opt.output, echo);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"query-focused extractive summarization pipeline"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_extra, const std::string& extra_name) {
    cmd->add_option("--input", opt.input, "input file")->required();
    if (with_extra) cmd->add_option(extra_name, opt.extra, "secondary input file");
    cmd->add_option("--output", opt.output, "output directory");
    cmd->add_option("--config", opt.config_path, "JSON config file");
    cmd->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
    return cmd;
  };

  CLI::App* ingest = add_common(app.add_subcommand("ingest", "build examples from raw records"),
                                false, "");
  CLI::App* curate = add_common(app.add_subcommand("curate", "filter examples"), false, "");
  CLI::App* oracle = add_common(
      app.add_subcommand("oracle-label", "greedy oracle labels and scores"), false, "");
  CLI::App* summarize = add_common(
      app.add_subcommand("summarize", "score and select summary sentences"), true, "scores");
  summarize->add_option("--scorer", opt.scorer, "lead | all | query-sim | external")
      ->check(CLI::IsMember({"lead", "all", "query-sim", "external"}));
  CLI::Option* threshold_option =
      summarize->add_option("--threshold", opt.threshold, "single-doc selection threshold");
  summarize->add_option("--max-window-tokens", opt.max_window_tokens, "window token cap")
      ->check(CLI::PositiveNumber);
  summarize->add_option("--stride", opt.stride, "window stride in document tokens")
      ->check(CLI::PositiveNumber);
  summarize->add_option("--word-budget", opt.word_budget, "multi-doc word budget")
      ->check(CLI::PositiveNumber);
  CLI::App* threshold_search = add_common(
      app.add_subcommand("threshold-search", "pick the dev-optimal selection threshold"), true,
      "scores");
  CLI::App* evaluate = add_common(
      app.add_subcommand("evaluate", "score summaries against references"), true, "dataset");
  evaluate->add_option("--preset", opt.preset, "duc | wikiref")
      ->check(CLI::IsMember({"duc", "wikiref"}));
  CLI::App* split = add_common(app.add_subcommand("split", "group-safe dataset split"), false, "");
  split->add_option("--seed", opt.seed, "shuffle seed");
  CLI::App* stats = add_common(app.add_subcommand("stats", "dataset statistics report"), false, "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  opt.threshold_set = threshold_option->count() > 0;

  try {
    if (ingest->parsed()) return run_ingest(opt);
    if (curate->parsed()) return run_curate(opt);
    if (oracle->parsed()) return run_oracle_label(opt);
    if (summarize->parsed()) return run_summarize(opt);
    if (threshold_search->parsed()) return run_threshold_search(opt);
    if (evaluate->parsed()) return run_evaluate(opt);
    if (split->parsed()) return run_split(opt);
    if (stats->parsed()) return run_stats(opt);
    std::cerr << "qfs: no subcommand\n";
    return kExitUsage;
  } catch (const qfs::MissingFileError& e) {
    std::cerr << "qfs: " << e.what() << "\n";
    return kExitMissingFile;
  } catch (const qfs::ConfigError& e) {
    std::cerr << "qfs: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qfs::SchemaError& e) {
    std::cerr << "qfs: " << e.what() << "\n";
    return kExitData;
  } catch (const qfs::ValidationError& e) {
    std::cerr << "qfs: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "qfs: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
