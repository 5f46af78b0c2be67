// End-to-end tests for the qfs binary: artifact shapes, exit codes, and
// byte-stable reruns on the bundled fixture.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = QFS_CLI_PATH;
const std::string kFixtureDir = QFS_FIXTURE_DIR;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

RunResult run(const std::string& args, const fs::path& workdir = fs::current_path()) {
  fs::path out_file = workdir / "_stdout.txt";
  fs::path err_file = workdir / "_stderr.txt";
  std::string cmd = "cd \"" + workdir.string() + "\" && \"" + kCli + "\" " + args + " > \"" +
                    out_file.string() + "\" 2> \"" + err_file.string() + "\"";
  int status = std::system(cmd.c_str());
  RunResult result;
  result.code = WEXITSTATUS(status);
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  fs::remove(out_file);
  fs::remove(err_file);
  return result;
}

// Fresh scratch directory per test case.
fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("qfs_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string raw_records() { return (fs::path(kFixtureDir) / "raw_records.jsonl").string(); }
std::string clusters() { return (fs::path(kFixtureDir) / "clusters.jsonl").string(); }

std::vector<json> read_jsonl(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<json> rows;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) rows.push_back(json::parse(line));
  return rows;
}

// Runs ingest + curate into dir and returns the kept.jsonl path.
std::string curated(const fs::path& dir) {
  REQUIRE(run("ingest --input " + raw_records() + " --output " + (dir / "ingest").string()).code ==
          0);
  REQUIRE(run("curate --input " + (dir / "ingest" / "examples.jsonl").string() + " --output " +
              (dir / "curate").string())
              .code == 0);
  return (dir / "curate" / "kept.jsonl").string();
}

}  // namespace

TEST_CASE("ingest writes examples, rejects, and run config") {
  fs::path dir = scratch("ingest");
  RunResult result =
      run("ingest --input " + raw_records() + " --output " + (dir / "out").string());
  CHECK(result.code == 0);
  CHECK(result.out.find("examples") != std::string::npos);

  std::vector<json> examples = read_jsonl(dir / "out" / "examples.jsonl");
  std::vector<json> rejects = read_jsonl(dir / "out" / "rejects.jsonl");
  CHECK(examples.size() + rejects.size() == 202);
  CHECK(rejects.size() == 6);

  std::set<std::string> reasons;
  for (const auto& row : rejects) {
    CHECK(row.contains("id"));
    CHECK(row["id"].get<std::string>().rfind("record-", 0) == 0);
    reasons.insert(row["reason"].get<std::string>());
  }
  CHECK(reasons == std::set<std::string>{"source_type", "empty_document", "empty_summary"});

  for (const auto& example : examples) {
    CHECK(example.contains("id"));
    CHECK(example["query"].is_array());
    CHECK(!example["document"].empty());
    CHECK(!example["summary"].empty());
    CHECK(example["meta"].contains("doc_hash"));
  }

  json config = json::parse(slurp(dir / "out" / "run_config.json"));
  CHECK(config["command"] == "ingest");
  CHECK(!config.contains("jobs"));
}

TEST_CASE("curate writes kept, rejects, and thresholds") {
  fs::path dir = scratch("curate");
  std::string kept_path = curated(dir);

  std::vector<json> kept = read_jsonl(kept_path);
  std::vector<json> rejects = read_jsonl(dir / "curate" / "rejects.jsonl");
  std::vector<json> input = read_jsonl(dir / "ingest" / "examples.jsonl");
  CHECK(kept.size() + rejects.size() == input.size());
  CHECK(kept.size() >= 20);

  std::set<std::string> allowed{"unigram_recall", "doc_tokens",      "doc_sentences",
                                "summary_tokens", "summary_sentences", "oracle_score"};
  for (const auto& row : rejects) CHECK(allowed.count(row["reason"].get<std::string>()) == 1);

  json thresholds = json::parse(slurp(dir / "curate" / "thresholds.json"));
  for (const char* key : {"doc_tokens", "doc_sentences", "summary_tokens", "summary_sentences"}) {
    CHECK(thresholds[key]["low"].get<int>() <= thresholds[key]["high"].get<int>());
  }
}

TEST_CASE("oracle-label emits aligned labels and scores") {
  fs::path dir = scratch("labels");
  std::string kept_path = curated(dir);
  REQUIRE(run("oracle-label --input " + kept_path + " --output " + (dir / "labels").string())
              .code == 0);

  std::vector<json> kept = read_jsonl(kept_path);
  std::vector<json> labels = read_jsonl(dir / "labels" / "labels.jsonl");
  REQUIRE(labels.size() == kept.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const json& row = labels[i];
    CHECK(row["id"] == kept[i]["id"]);
    std::size_t sentences = kept[i]["document"].size();
    CHECK(row["labels"].size() == sentences);
    CHECK(row["scores"].size() == sentences);
    CHECK(row["oracle_indices"].size() <= 4);
    int positives = 0;
    for (const auto& label : row["labels"]) positives += label.get<int>();
    CHECK(positives == static_cast<int>(row["oracle_indices"].size()));
    CHECK(row["oracle_score"].get<double>() > 0.2);
  }
}

TEST_CASE("summarize with lead scorer keeps leading sentences") {
  fs::path dir = scratch("sum_lead");
  std::string kept_path = curated(dir);
  REQUIRE(run("summarize --input " + kept_path + " --scorer lead --output " +
              (dir / "sum").string())
              .code == 0);

  std::vector<json> summaries = read_jsonl(dir / "sum" / "summaries.jsonl");
  std::vector<json> kept = read_jsonl(kept_path);
  REQUIRE(summaries.size() == kept.size());
  std::size_t both_kept = 0;
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    // 1/(i+1) with the 0.4 default threshold passes sentences 0 and 1 only;
    // trigram blocking may still drop sentence 1.
    const json& selected = summaries[i]["selected"];
    REQUIRE(!selected.empty());
    CHECK(selected[0] == 0);
    CHECK(selected.size() <= 2);
    if (selected.size() == 2) {
      CHECK(selected[1] == 1);
      ++both_kept;
    }
    std::string first = kept[i]["document"][0].get<std::string>();
    CHECK(summaries[i]["summary_text"].get<std::string>().rfind(first, 0) == 0);
  }
  CHECK(both_kept > summaries.size() / 2);

  json config = json::parse(slurp(dir / "sum" / "run_config.json"));
  CHECK(config["scorer"] == "lead");
  CHECK(config["threshold"].get<double>() == doctest::Approx(0.4));
}

TEST_CASE("summarize external two-phase protocol round-trips") {
  fs::path dir = scratch("external");
  std::string kept_path = curated(dir);

  // Phase 1: no scores file, so the tool emits serialized windows.
  REQUIRE(run("summarize --input " + kept_path + " --scorer external --output " +
              (dir / "win").string())
              .code == 0);
  std::vector<json> windows = read_jsonl(dir / "win" / "windows.jsonl");
  std::vector<json> kept = read_jsonl(kept_path);
  REQUIRE(windows.size() == kept.size());
  for (std::size_t i = 0; i < windows.size(); ++i) {
    const json& row = windows[i];
    CHECK(row["id"] == kept[i]["id"]);
    REQUIRE(!row["windows"].empty());
    const json& first = row["windows"][0];
    CHECK(first["tokens"][0] == "[L1]");
    CHECK(first["segment_ids"][0] == 0);
    CHECK(row["scoring_windows"].size() == kept[i]["document"].size());
  }

  // Phase 2: synthetic per-sentence scores come back and drive selection.
  {
    std::ofstream out(dir / "scores.jsonl");
    for (const auto& row : windows) {
      json scores = json::array();
      for (std::size_t s = 0; s < row["scoring_windows"].size(); ++s)
        scores.push_back(s == 0 ? 1.0 : 0.1);
      json line;
      line["id"] = row["id"];
      line["scores"] = scores;
      out << line.dump() << "\n";
    }
  }
  REQUIRE(run("summarize --input " + kept_path + " --scorer external --threshold 0.5 --output " +
              (dir / "sum").string() + " " + (dir / "scores.jsonl").string())
              .code == 0);
  for (const auto& summary : read_jsonl(dir / "sum" / "summaries.jsonl"))
    CHECK(summary["selected"] == json::array({0}));
}

TEST_CASE("summarize on clusters respects the word budget") {
  fs::path dir = scratch("clusters");
  REQUIRE(run("summarize --input " + clusters() + " --scorer lead --output " +
              (dir / "sum").string())
              .code == 0);

  std::vector<json> summaries = read_jsonl(dir / "sum" / "summaries.jsonl");
  std::vector<json> dataset = read_jsonl(clusters());
  REQUIRE(summaries.size() == dataset.size());
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    CHECK(summaries[i]["cluster_id"] == dataset[i]["cluster_id"]);
    CHECK(!summaries[i]["selected"].empty());
    // Budget counts whitespace-separated words of the assembled text.
    std::string text = summaries[i]["summary_text"].get<std::string>();
    std::size_t words = 0;
    bool in_word = false;
    for (char c : text) {
      bool space = (c == ' ');
      if (!space && !in_word) ++words;
      in_word = !space;
    }
    CHECK(words <= 250);
  }
}

TEST_CASE("threshold-search writes the chosen boundary") {
  fs::path dir = scratch("threshold");
  std::string kept_path = curated(dir);

  // Oracle-quality scores: 1 on the statement span, tiny elsewhere.
  REQUIRE(run("oracle-label --input " + kept_path + " --output " + (dir / "labels").string())
              .code == 0);
  std::vector<json> labels = read_jsonl(dir / "labels" / "labels.jsonl");
  {
    std::ofstream out(dir / "scores.jsonl");
    for (const auto& row : labels) {
      json scores = json::array();
      std::set<int> selected(row["oracle_indices"].begin(), row["oracle_indices"].end());
      for (std::size_t s = 0; s < row["labels"].size(); ++s)
        scores.push_back(selected.count(static_cast<int>(s)) ? 0.9 : 0.1);
      json line;
      line["id"] = row["id"];
      line["scores"] = scores;
      out << line.dump() << "\n";
    }
  }
  RunResult result = run("threshold-search --input " + kept_path + " " +
                         (dir / "scores.jsonl").string() + " --output " + (dir / "th").string());
  REQUIRE(result.code == 0);
  json chosen = json::parse(slurp(dir / "th" / "threshold.json"));
  // Keeping exactly the 0.9-scored sentences maximizes mean F1, and the
  // smallest threshold that does so is the other grid value, 0.1.
  CHECK(chosen["threshold"].get<double>() == doctest::Approx(0.1));
}

TEST_CASE("evaluate prints a report and writes report artifacts") {
  fs::path dir = scratch("evaluate");
  std::string kept_path = curated(dir);
  REQUIRE(run("summarize --input " + kept_path + " --scorer lead --output " +
              (dir / "sum").string())
              .code == 0);

  RunResult result =
      run("evaluate --input " + (dir / "sum" / "summaries.jsonl").string() + " " + kept_path +
          " --preset wikiref --output " + (dir / "eval").string());
  REQUIRE(result.code == 0);
  CHECK(result.out.find("rouge-1") != std::string::npos);
  CHECK(result.out.find("rouge-l") != std::string::npos);

  json report = json::parse(slurp(dir / "eval" / "report.json"));
  CHECK(report["preset"] == "wikiref");
  CHECK(report["n_examples"].get<int>() == static_cast<int>(read_jsonl(kept_path).size()));
  REQUIRE(report["metrics"].size() == 3);
  for (const auto& metric : report["metrics"]) {
    CHECK(metric["recall"].get<double>() >= metric["f1"].get<double>() - 1e-12);
    CHECK(metric["f1"].get<double>() > 0.0);
  }
  CHECK(slurp(dir / "eval" / "report.txt") == result.out);
}

TEST_CASE("split produces three files that partition the input") {
  fs::path dir = scratch("split");
  std::string kept_path = curated(dir);
  REQUIRE(run("split --input " + kept_path + " --seed 7 --output " + (dir / "split").string())
              .code == 0);

  std::vector<json> train = read_jsonl(dir / "split" / "train.jsonl");
  std::vector<json> dev = read_jsonl(dir / "split" / "dev.jsonl");
  std::vector<json> test = read_jsonl(dir / "split" / "test.jsonl");
  std::vector<json> kept = read_jsonl(kept_path);
  CHECK(train.size() + dev.size() + test.size() == kept.size());
  CHECK(train.size() > dev.size());
  CHECK(train.size() > test.size());

  // No document hash may appear in two different splits.
  std::set<std::string> train_hashes, dev_hashes, test_hashes;
  for (const auto& e : train) train_hashes.insert(e["meta"]["doc_hash"].get<std::string>());
  for (const auto& e : dev) dev_hashes.insert(e["meta"]["doc_hash"].get<std::string>());
  for (const auto& e : test) test_hashes.insert(e["meta"]["doc_hash"].get<std::string>());
  for (const auto& hash : dev_hashes) CHECK(train_hashes.count(hash) == 0);
  for (const auto& hash : test_hashes) {
    CHECK(train_hashes.count(hash) == 0);
    CHECK(dev_hashes.count(hash) == 0);
  }
}

TEST_CASE("stats reports one row per split directory file") {
  fs::path dir = scratch("stats");
  std::string kept_path = curated(dir);
  REQUIRE(run("split --input " + kept_path + " --output " + (dir / "split").string()).code == 0);
  RunResult result = run("stats --input " + (dir / "split").string() + " --output " +
                         (dir / "stats").string());
  REQUIRE(result.code == 0);

  json stats = json::parse(slurp(dir / "stats" / "stats.json"));
  REQUIRE(stats.size() == 3);
  CHECK(stats[0]["split"] == "train");
  CHECK(stats[1]["split"] == "dev");
  CHECK(stats[2]["split"] == "test");
  for (const auto& row : stats) CHECK(row["examples"].get<int>() > 0);

  RunResult single = run("stats --input " + kept_path);
  CHECK(single.code == 0);
  CHECK(single.out.find("all") != std::string::npos);
}

TEST_CASE("exit codes distinguish usage, data, file, and config errors") {
  fs::path dir = scratch("exit_codes");

  CHECK(run("ingest --input /definitely/missing.jsonl --output " + (dir / "o1").string()).code ==
        66);

  {
    std::ofstream out(dir / "bad.jsonl");
    out << "{\"unexpected\": true}\n";
  }
  CHECK(run("curate --input " + (dir / "bad.jsonl").string() + " --output " +
            (dir / "o2").string())
            .code == 65);

  {
    std::ofstream out(dir / "bad_config.json");
    out << "{\"no_such_key\": 1}\n";
  }
  CHECK(run("ingest --input " + raw_records() + " --config " +
            (dir / "bad_config.json").string() + " --output " + (dir / "o3").string())
            .code == 78);

  CHECK(run("ingest --no-such-flag").code == 64);
  CHECK(run("summarize --input " + raw_records() + " --scorer bogus --output " +
            (dir / "o4").string())
            .code == 64);
  CHECK(run("--help").code == 0);

  // Clustered input with an external scorer requires the scores file.
  CHECK(run("summarize --input " + clusters() + " --scorer external --output " +
            (dir / "o5").string())
            .code == 78);
}

TEST_CASE("reruns are byte-identical") {
  fs::path dir = scratch("rerun");
  fs::copy_file(raw_records(), dir / "raw.jsonl");
  for (const char* sub : {"a", "b"}) {
    fs::path root = dir / sub;
    fs::create_directories(root);
    fs::copy_file(dir / "raw.jsonl", root / "raw.jsonl");
    REQUIRE(run("ingest --input raw.jsonl --output ingest --jobs " +
                    std::string(sub == std::string("a") ? "1" : "4"),
                root)
                .code == 0);
    REQUIRE(run("curate --input ingest/examples.jsonl --output curate", root).code == 0);
  }
  for (const char* name :
       {"ingest/examples.jsonl", "ingest/rejects.jsonl", "ingest/run_config.json",
        "curate/kept.jsonl", "curate/rejects.jsonl", "curate/thresholds.json",
        "curate/run_config.json"}) {
    CHECK(slurp(dir / "a" / name) == slurp(dir / "b" / name));
  }
}
