#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "qfs/corpus.hpp"
#include "qfs/errors.hpp"

using qfs::CurationConfig;
using qfs::Example;
using qfs::RawRecord;

namespace {

RawRecord sample_record() {
  RawRecord raw;
  raw.article_title = "Marina Beach";
  raw.section_path = {"Incidents"};
  raw.statement = "A stampede occurred at the marina beach gathering.";
  raw.citation_body =
      "A large stampede occurred at the marina beach gathering on Sunday. "
      "Dozens of visitors were present. Officials closed the marina afterwards.";
  raw.source_type = "newspaper";
  raw.url = "https://fixture.invalid/marina";
  return raw;
}

Example make_example(const std::string& id, int doc_tokens, int doc_sentences,
                     int summary_tokens, int summary_sentences) {
  Example example;
  example.id = id;
  example.query = {"Title"};
  example.meta.article_title = "Title";
  example.meta.source_type = "web";
  example.meta.doc_hash = "hash-" + id;
  int base_len = doc_tokens / doc_sentences;
  int leftover = doc_tokens - base_len * doc_sentences;
  int word = 0;
  for (int s = 0; s < doc_sentences; ++s) {
    int len = base_len + (s == 0 ? leftover : 0);
    std::string sentence;
    for (int w = 0; w < len; ++w) sentence += "word" + std::to_string(word++) + " ";
    example.document.push_back(sentence);
  }
  // Summary copies leading document words so unigram recall and the greedy
  // oracle both clear their thresholds.
  int copied = 0;
  for (int s = 0; s < summary_sentences; ++s) {
    int len = summary_tokens / summary_sentences + (s == 0 ? summary_tokens % summary_sentences : 0);
    std::string sentence;
    for (int w = 0; w < len; ++w) sentence += "word" + std::to_string(copied++ % doc_tokens) + " ";
    example.summary.push_back(sentence);
  }
  return example;
}

qfs::CurationThresholds wide_thresholds() {
  qfs::CurationThresholds t;
  t.doc_tokens = {1, 100000};
  t.doc_sentences = {1, 1000};
  t.summary_tokens = {1, 10000};
  t.summary_sentences = {1, 100};
  return t;
}

}  // namespace

TEST_CASE("build_example forms query, summary and document") {
  qfs::BuildOutcome outcome = qfs::build_example(sample_record());
  REQUIRE(outcome.ok);
  const Example& example = outcome.example;
  CHECK(example.query == std::vector<std::string>{"Marina Beach", "Incidents"});
  CHECK(example.summary.size() == 1);
  CHECK(example.document.size() == 3);
  CHECK(example.meta.article_title == "Marina Beach");
  CHECK(example.meta.source_type == "newspaper");
  CHECK(!example.id.empty());
  CHECK(!example.meta.doc_hash.empty());

  RawRecord no_sections = sample_record();
  no_sections.section_path.clear();
  CHECK(qfs::build_example(no_sections).example.query ==
        std::vector<std::string>{"Marina Beach"});
}

TEST_CASE("build_example rejections") {
  RawRecord other = sample_record();
  other.source_type = "other";
  CHECK(qfs::build_example(other).reject_reason == "source_type");
  RawRecord blog = sample_record();
  blog.source_type = "blog";
  CHECK(qfs::build_example(blog).reject_reason == "source_type");

  RawRecord empty_body = sample_record();
  empty_body.citation_body = "";
  CHECK(qfs::build_example(empty_body).reject_reason == "empty_document");

  RawRecord empty_statement = sample_record();
  empty_statement.statement = "";
  CHECK(qfs::build_example(empty_statement).reject_reason == "empty_summary");
}

TEST_CASE("ids are content hashes") {
  qfs::BuildOutcome first = qfs::build_example(sample_record());
  qfs::BuildOutcome second = qfs::build_example(sample_record());
  CHECK(first.example.id == second.example.id);

  RawRecord changed = sample_record();
  changed.statement = "Something else entirely happened there.";
  CHECK(qfs::build_example(changed).example.id != first.example.id);

  RawRecord same_body = sample_record();
  same_body.article_title = "Different Title";
  qfs::BuildOutcome third = qfs::build_example(same_body);
  CHECK(third.example.meta.doc_hash == first.example.meta.doc_hash);
  CHECK(third.example.id != first.example.id);
}

TEST_CASE("unigram_recall pinned cases") {
  std::vector<std::string> doc{"The marina beach is wide and open today."};
  CHECK(qfs::unigram_recall({"Marina beach stampede."}, doc) == doctest::Approx(2.0 / 3.0));
  CHECK(qfs::unigram_recall({"The marina beach."}, doc) == 1.0);
  CHECK(qfs::unigram_recall({"Quantum flux."}, doc) == 0.0);
  CHECK(qfs::unigram_recall({"The of and."}, doc) == 1.0);
  CHECK(qfs::unigram_recall({"Beaches."}, {"One beach."}) == 1.0);
}

TEST_CASE("compute_thresholds nearest-rank percentiles") {
  std::vector<Example> examples;
  for (int k = 1; k <= 100; ++k)
    examples.push_back(make_example("e" + std::to_string(k), k, 1, std::min(k, 5), 1));
  qfs::CurationThresholds t = qfs::compute_thresholds(examples, 1000);
  CHECK(t.doc_tokens.low == 5);
  CHECK(t.doc_tokens.high == 95);
  CHECK(t.doc_sentences.low == 1);
  CHECK(t.doc_sentences.high == 1);

  std::vector<Example> equal;
  for (int k = 0; k < 25; ++k) equal.push_back(make_example("q" + std::to_string(k), 40, 4, 8, 2));
  qfs::CurationThresholds all_equal = qfs::compute_thresholds(equal, 1000);
  CHECK(all_equal.doc_tokens.low == 40);
  CHECK(all_equal.doc_tokens.high == 40);
  CHECK(all_equal.summary_sentences.low == 2);
  CHECK(all_equal.summary_sentences.high == 2);
}

TEST_CASE("compute_thresholds cap and sample-size rules") {
  std::vector<Example> examples;
  for (int k = 0; k < 20; ++k) examples.push_back(make_example("a" + std::to_string(k), 50 + k, 5, 10, 1));
  for (int k = 0; k < 5; ++k) examples.push_back(make_example("b" + std::to_string(k), 1500, 50, 10, 1));
  // Nearest rank over the 20 capped examples: ceil(0.95 * 20) = 19 -> 68.
  qfs::CurationThresholds t = qfs::compute_thresholds(examples, 1000);
  CHECK(t.doc_tokens.high == 68);

  std::vector<Example> few(examples.begin(), examples.begin() + 10);
  CHECK_THROWS_AS(qfs::compute_thresholds(few, 1000), qfs::ValidationError);
}

TEST_CASE("curate applies rules in order") {
  CurationConfig config;
  config.thresholds = wide_thresholds();
  config.thresholds.doc_tokens = {20, 100};

  Example good = make_example("keep", 50, 5, 10, 1);
  Example tiny = make_example("tiny", 10, 1, 4, 1);

  Example no_recall = make_example("norecall", 50, 5, 10, 1);
  no_recall.summary = {"Zebra xylophone quartz."};

  // Fails recall and size both; recall must name the rejection.
  Example both = make_example("both", 10, 1, 4, 1);
  both.summary = {"Zebra xylophone quartz."};

  Example scrambled;
  scrambled.id = "scrambled";
  scrambled.query = {"Title"};
  scrambled.meta.doc_hash = "hash-scrambled";
  scrambled.document = {"alpha one beta two gamma three delta four epsilon five zeta six "
                        "eta seven theta eight iota nine kappa ten."};
  scrambled.summary = {"Alpha beta gamma delta epsilon zeta eta theta iota kappa."};

  auto [kept, rejected] = qfs::curate({good, tiny, no_recall, both, scrambled}, config);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0].id == "keep");
  REQUIRE(rejected.size() == 4);
  auto reason_of = [&](const std::string& id) {
    for (const auto& r : rejected)
      if (r.id == id) return r.reason;
    return std::string("missing");
  };
  CHECK(reason_of("tiny") == "doc_tokens");
  CHECK(reason_of("norecall") == "unigram_recall");
  CHECK(reason_of("both") == "unigram_recall");
  CHECK(reason_of("scrambled") == "oracle_score");
}

TEST_CASE("curate rejects each range rule by name") {
  CurationConfig config;
  config.thresholds.doc_tokens = {20, 100};
  config.thresholds.doc_sentences = {2, 10};
  config.thresholds.summary_tokens = {4, 30};
  config.thresholds.summary_sentences = {1, 3};

  CHECK(qfs::curate({make_example("x", 150, 5, 10, 1)}, config).second[0].reason == "doc_tokens");
  CHECK(qfs::curate({make_example("x", 50, 1, 10, 1)}, config).second[0].reason ==
        "doc_sentences");
  CHECK(qfs::curate({make_example("x", 50, 5, 40, 1)}, config).second[0].reason ==
        "summary_tokens");
  CHECK(qfs::curate({make_example("x", 50, 5, 20, 5)}, config).second[0].reason ==
        "summary_sentences");
  CHECK(qfs::curate({make_example("x", 20, 2, 4, 1)}, config).first.size() == 1);
}

TEST_CASE("curate is parallel-stable and partitions the input") {
  CurationConfig config;
  config.thresholds = wide_thresholds();
  std::vector<Example> examples;
  for (int k = 0; k < 40; ++k) {
    Example e = make_example("p" + std::to_string(k), 30 + k, 3, 8, 1);
    if (k % 5 == 0) e.summary = {"Zebra xylophone quartz."};
    examples.push_back(e);
  }
  auto serial = qfs::curate(examples, config, 1);
  auto parallel = qfs::curate(examples, config, 4);
  REQUIRE(serial.first.size() == parallel.first.size());
  for (std::size_t i = 0; i < serial.first.size(); ++i)
    CHECK(serial.first[i].id == parallel.first[i].id);
  REQUIRE(serial.second.size() == parallel.second.size());
  for (std::size_t i = 0; i < serial.second.size(); ++i) {
    CHECK(serial.second[i].id == parallel.second[i].id);
    CHECK(serial.second[i].reason == parallel.second[i].reason);
  }
  CHECK(serial.first.size() + serial.second.size() == examples.size());
}

TEST_CASE("split_dataset largest-remainder sizes") {
  std::vector<Example> examples;
  for (int k = 0; k < 100; ++k) examples.push_back(make_example("s" + std::to_string(k), 30, 3, 8, 1));
  qfs::SplitResult split = qfs::split_dataset(examples, {0.8, 0.1, 0.1}, 42);
  CHECK(split.train.size() == 80);
  CHECK(split.dev.size() == 10);
  CHECK(split.test.size() == 10);

  qfs::SplitResult again = qfs::split_dataset(examples, {0.8, 0.1, 0.1}, 42);
  CHECK(again.train.size() == split.train.size());
  for (std::size_t i = 0; i < split.train.size(); ++i)
    CHECK(again.train[i].id == split.train[i].id);
}

TEST_CASE("split_dataset keeps doc_hash groups whole and preserves order") {
  std::vector<Example> examples;
  for (int k = 0; k < 60; ++k) {
    Example e = make_example("g" + std::to_string(k), 30, 3, 8, 1);
    e.meta.doc_hash = "shared-" + std::to_string(k / 2);
    examples.push_back(e);
  }
  qfs::SplitResult split = qfs::split_dataset(examples, {0.6, 0.2, 0.2}, 7);
  auto hash_split = [&](const std::vector<Example>& part) {
    std::set<std::string> hashes;
    for (const auto& e : part) hashes.insert(e.meta.doc_hash);
    return hashes;
  };
  std::set<std::string> train_hashes = hash_split(split.train);
  std::set<std::string> dev_hashes = hash_split(split.dev);
  std::set<std::string> test_hashes = hash_split(split.test);
  for (const auto& h : train_hashes) {
    CHECK(!dev_hashes.count(h));
    CHECK(!test_hashes.count(h));
  }
  for (const auto& h : dev_hashes) CHECK(!test_hashes.count(h));
  CHECK(split.train.size() + split.dev.size() + split.test.size() == examples.size());

  // Input order survives within each split.
  for (const auto* part : {&split.train, &split.dev, &split.test}) {
    std::vector<int> positions;
    for (const auto& e : *part) positions.push_back(std::stoi(e.id.substr(1)));
    CHECK(std::is_sorted(positions.begin(), positions.end()));
  }

  std::vector<Example> two(examples.begin(), examples.begin() + 2);
  CHECK_THROWS_AS(qfs::split_dataset(two, {0.8, 0.1, 0.1}, 1), qfs::ValidationError);
}

TEST_CASE("dataset_stats means and rendering") {
  Example e1 = make_example("d1", 40, 10, 8, 2);
  Example e2 = make_example("d2", 20, 10, 6, 2);
  e2.meta.article_title = "Other";
  std::vector<Example> data{e1, e2};
  std::vector<Example> empty;
  auto rows = qfs::dataset_stats({{"train", &data}, {"dev", &empty}});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].examples == 2);
  CHECK(rows[0].articles == 2);
  CHECK(rows[0].mean_doc_sentences == 10.0);
  CHECK(rows[0].mean_doc_tokens == 30.0);
  CHECK(rows[0].mean_summary_sentences == 2.0);
  CHECK(rows[0].mean_query_depth == 1.0);
  CHECK(rows[1].examples == 0);

  std::string text = qfs::stats_to_text(rows);
  CHECK(text.find("train") != std::string::npos);
  CHECK(text.find("warning") != std::string::npos);
  nlohmann::json parsed = nlohmann::json::parse(qfs::stats_to_json(rows));
  CHECK(parsed.size() == 2);
  CHECK(parsed[0]["split"] == "train");
  CHECK(parsed[0]["examples"] == 2);
}
