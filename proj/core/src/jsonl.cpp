#include "qfs/jsonl.hpp"

#include <fstream>

#include "json.hpp"
#include "qfs/errors.hpp"

namespace qfs {

namespace {

using Json = nlohmann::ordered_json;

Json parse_object(const std::string& line, const std::string& where) {
  Json doc = Json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw SchemaError("not a JSON object", where);
  return doc;
}

std::string get_string(const Json& doc, const char* key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_string())
    throw SchemaError(std::string("missing or non-string field \"") + key + "\"", where);
  return it->get<std::string>();
}

std::vector<std::string> get_string_list(const Json& doc, const char* key,
                                         const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array())
    throw SchemaError(std::string("missing or non-array field \"") + key + "\"", where);
  std::vector<std::string> out;
  for (const auto& item : *it) {
    if (!item.is_string())
      throw SchemaError(std::string("non-string entry in \"") + key + "\"", where);
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<double> get_number_list(const Json& doc, const char* key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array())
    throw SchemaError(std::string("missing or non-array field \"") + key + "\"", where);
  std::vector<double> out;
  for (const auto& item : *it) {
    if (!item.is_number())
      throw SchemaError(std::string("non-numeric entry in \"") + key + "\"", where);
    out.push_back(item.get<double>());
  }
  return out;
}

std::vector<int> get_int_list(const Json& doc, const char* key, const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array())
    throw SchemaError(std::string("missing or non-array field \"") + key + "\"", where);
  std::vector<int> out;
  for (const auto& item : *it) {
    if (!item.is_number_integer())
      throw SchemaError(std::string("non-integer entry in \"") + key + "\"", where);
    out.push_back(item.get<int>());
  }
  return out;
}

std::vector<std::vector<std::string>> get_sentence_lists(const Json& doc, const char* key,
                                                         const std::string& where) {
  auto it = doc.find(key);
  if (it == doc.end() || !it->is_array())
    throw SchemaError(std::string("missing or non-array field \"") + key + "\"", where);
  std::vector<std::vector<std::string>> out;
  for (const auto& inner : *it) {
    if (!inner.is_array())
      throw SchemaError(std::string("non-array entry in \"") + key + "\"", where);
    std::vector<std::string> sentences;
    for (const auto& item : inner) {
      if (!item.is_string())
        throw SchemaError(std::string("non-string sentence in \"") + key + "\"", where);
      sentences.push_back(item.get<std::string>());
    }
    out.push_back(std::move(sentences));
  }
  return out;
}

}  // namespace

RawRecord parse_raw_record(const std::string& line, const std::string& where) {
  Json doc = parse_object(line, where);
  RawRecord record;
  record.article_title = get_string(doc, "article_title", where);
  record.section_path = get_string_list(doc, "section_path", where);
  record.statement = get_string(doc, "statement", where);
  record.citation_body = get_string(doc, "citation_body", where);
  record.source_type = get_string(doc, "source_type", where);
  if (doc.contains("url")) {
    if (!doc["url"].is_string()) throw SchemaError("non-string field \"url\"", where);
    record.url = doc["url"].get<std::string>();
  }
  return record;
}

Example parse_example(const std::string& line, const std::string& where) {
  Json doc = parse_object(line, where);
  Example example;
  example.id = get_string(doc, "id", where);
  example.query = get_string_list(doc, "query", where);
  example.document = get_string_list(doc, "document", where);
  example.summary = get_string_list(doc, "summary", where);
  auto meta = doc.find("meta");
  if (meta == doc.end() || !meta->is_object())
    throw SchemaError("missing or non-object field \"meta\"", where);
  example.meta.article_title = get_string(*meta, "article_title", where);
  example.meta.source_type = get_string(*meta, "source_type", where);
  example.meta.url = meta->contains("url") ? get_string(*meta, "url", where) : "";
  example.meta.doc_hash = get_string(*meta, "doc_hash", where);
  if (example.query.empty()) throw SchemaError("empty query", where);
  return example;
}

LabelsRecord parse_labels_record(const std::string& line, const std::string& where) {
  Json doc = parse_object(line, where);
  LabelsRecord record;
  record.id = get_string(doc, "id", where);
  record.oracle_indices = get_int_list(doc, "oracle_indices", where);
  auto score = doc.find("oracle_score");
  if (score == doc.end() || !score->is_number())
    throw SchemaError("missing or non-numeric field \"oracle_score\"", where);
  record.oracle_score = score->get<double>();
  record.labels = get_int_list(doc, "labels", where);
  record.scores = get_number_list(doc, "scores", where);
  if (record.labels.size() != record.scores.size())
    throw SchemaError("labels and scores lengths differ", where);
  return record;
}

ScoresRecord parse_scores_record(const std::string& line, const std::string& where) {
  Json doc = parse_object(line, where);
  ScoresRecord record;
  record.id = get_string(doc, "id", where);
  record.scores = get_number_list(doc, "scores", where);
  return record;
}

Cluster parse_cluster(const std::string& line, const std::string& where) {
  Json doc = parse_object(line, where);
  Cluster cluster;
  cluster.cluster_id = get_string(doc, "cluster_id", where);
  cluster.query = get_string_list(doc, "query", where);
  cluster.documents = get_sentence_lists(doc, "documents", where);
  cluster.references = get_sentence_lists(doc, "references", where);
  if (cluster.documents.empty()) throw SchemaError("cluster has no documents", where);
  if (cluster.references.empty()) throw SchemaError("cluster has no references", where);
  return cluster;
}

SummaryRecord parse_summary_record(const std::string& line, const std::string& where) {
  Json doc = parse_object(line, where);
  SummaryRecord record;
  record.id = get_string(doc, "id", where);
  record.selected = get_int_list(doc, "selected", where);
  record.summary_text = get_string(doc, "summary_text", where);
  return record;
}

ClusterSummaryRecord parse_cluster_summary_record(const std::string& line,
                                                  const std::string& where) {
  Json doc = parse_object(line, where);
  ClusterSummaryRecord record;
  record.cluster_id = get_string(doc, "cluster_id", where);
  auto it = doc.find("selected");
  if (it == doc.end() || !it->is_array())
    throw SchemaError("missing or non-array field \"selected\"", where);
  for (const auto& pair : *it) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw SchemaError("entries of \"selected\" must be [doc, sentence] pairs", where);
    record.selected.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  record.summary_text = get_string(doc, "summary_text", where);
  return record;
}

std::string to_jsonl(const RawRecord& record) {
  Json doc;
  doc["article_title"] = record.article_title;
  doc["section_path"] = record.section_path;
  doc["statement"] = record.statement;
  doc["citation_body"] = record.citation_body;
  doc["source_type"] = record.source_type;
  if (!record.url.empty()) doc["url"] = record.url;
  return doc.dump();
}

std::string to_jsonl(const Example& example) {
  Json doc;
  doc["id"] = example.id;
  doc["query"] = example.query;
  doc["document"] = example.document;
  doc["summary"] = example.summary;
  Json meta;
  meta["article_title"] = example.meta.article_title;
  meta["source_type"] = example.meta.source_type;
  if (!example.meta.url.empty()) meta["url"] = example.meta.url;
  meta["doc_hash"] = example.meta.doc_hash;
  doc["meta"] = meta;
  return doc.dump();
}

std::string to_jsonl(const LabelsRecord& record) {
  Json doc;
  doc["id"] = record.id;
  doc["oracle_indices"] = record.oracle_indices;
  doc["oracle_score"] = record.oracle_score;
  doc["labels"] = record.labels;
  doc["scores"] = record.scores;
  return doc.dump();
}

std::string to_jsonl(const ScoresRecord& record) {
  Json doc;
  doc["id"] = record.id;
  doc["scores"] = record.scores;
  return doc.dump();
}

std::string to_jsonl(const Cluster& cluster) {
  Json doc;
  doc["cluster_id"] = cluster.cluster_id;
  doc["query"] = cluster.query;
  doc["documents"] = cluster.documents;
  doc["references"] = cluster.references;
  return doc.dump();
}

std::string to_jsonl(const SummaryRecord& record) {
  Json doc;
  doc["id"] = record.id;
  doc["selected"] = record.selected;
  doc["summary_text"] = record.summary_text;
  return doc.dump();
}

std::string to_jsonl(const ClusterSummaryRecord& record) {
  Json doc;
  doc["cluster_id"] = record.cluster_id;
  Json selected = Json::array();
  for (const auto& [d, s] : record.selected) selected.push_back(Json::array({d, s}));
  doc["selected"] = selected;
  doc["summary_text"] = record.summary_text;
  return doc.dump();
}

std::vector<std::string> read_raw_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

bool file_looks_clustered(const std::string& path) {
  for (const auto& line : read_raw_lines(path)) {
    if (line.empty()) continue;
    Json doc = Json::parse(line, nullptr, false);
    return doc.is_object() && doc.contains("cluster_id");
  }
  return false;
}

}  // namespace qfs
