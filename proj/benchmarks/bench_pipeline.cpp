// Microbenchmarks for the pipeline hot paths: tokenization and stemming,
// ROUGE scoring, greedy oracle labeling, selection, and window packing.

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "qfs/oracle.hpp"
#include "qfs/rouge.hpp"
#include "qfs/summarize.hpp"
#include "qfs/text.hpp"

namespace {

std::vector<std::string> synthetic_document(int sentences, int words_per_sentence,
                                            unsigned seed) {
  static const std::vector<std::string> kWords = {
      "market",  "reported", "sweeping", "changes",  "official", "tuesday", "company",
      "running", "analysts", "expected", "revenue",  "quarter",  "falling", "coastal",
      "measure", "approval", "industry", "regional", "billions", "growth"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, kWords.size() - 1);
  std::vector<std::string> document;
  for (int s = 0; s < sentences; ++s) {
    std::string sentence;
    for (int w = 0; w < words_per_sentence; ++w) {
      if (w > 0) sentence += ' ';
      sentence += kWords[pick(rng)];
    }
    document.push_back(sentence + ".");
  }
  return document;
}

qfs::SentenceList tokenized(const std::vector<std::string>& sentences) {
  qfs::SentenceList out;
  for (const auto& sentence : sentences) out.push_back(qfs::tokenize(sentence));
  return out;
}

void BM_TokenizeAndStem(benchmark::State& state) {
  std::vector<std::string> document =
      synthetic_document(static_cast<int>(state.range(0)), 18, 11);
  for (auto _ : state) {
    for (const auto& sentence : document) {
      std::vector<std::string> tokens = qfs::tokenize(sentence);
      for (auto& token : tokens) token = qfs::stem(token);
      benchmark::DoNotOptimize(tokens);
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TokenizeAndStem)->Arg(16)->Arg(64);

void BM_RougeN(benchmark::State& state) {
  qfs::SentenceList candidate = tokenized(synthetic_document(4, 18, 21));
  qfs::SentenceList reference = tokenized(synthetic_document(2, 18, 22));
  qfs::RougeConfig config = qfs::RougeConfig::wikiref();
  for (auto _ : state) {
    qfs::RougeScore score = qfs::rouge_n(candidate, {reference}, 2, config);
    benchmark::DoNotOptimize(score);
  }
}
BENCHMARK(BM_RougeN);

void BM_RougeL(benchmark::State& state) {
  qfs::SentenceList candidate = tokenized(synthetic_document(4, 18, 31));
  qfs::SentenceList reference = tokenized(synthetic_document(2, 18, 32));
  qfs::RougeConfig config = qfs::RougeConfig::wikiref();
  for (auto _ : state) {
    qfs::RougeScore score = qfs::rouge_l(candidate, {reference}, config);
    benchmark::DoNotOptimize(score);
  }
}
BENCHMARK(BM_RougeL);

void BM_GreedyOracle(benchmark::State& state) {
  qfs::SentenceList document =
      tokenized(synthetic_document(static_cast<int>(state.range(0)), 18, 41));
  qfs::SentenceList reference = tokenized(synthetic_document(2, 16, 42));
  for (auto _ : state) {
    qfs::OracleResult result =
        qfs::greedy_oracle(document, reference, qfs::OracleConfig::training());
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_GreedyOracle)->Arg(10)->Arg(40);

void BM_SelectSingleDoc(benchmark::State& state) {
  std::vector<std::string> document =
      synthetic_document(static_cast<int>(state.range(0)), 18, 51);
  std::vector<double> scores;
  std::mt19937 rng(52);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (std::size_t i = 0; i < document.size(); ++i) scores.push_back(dist(rng));
  for (auto _ : state) {
    std::vector<int> selected = qfs::select_single_doc(scores, document, 0.2, true);
    benchmark::DoNotOptimize(selected);
  }
}
BENCHMARK(BM_SelectSingleDoc)->Arg(16)->Arg(64);

void BM_SerializeWindows(benchmark::State& state) {
  std::vector<std::string> query = {"coastal markets", "quarterly results"};
  std::vector<std::string> document =
      synthetic_document(static_cast<int>(state.range(0)), 18, 61);
  for (auto _ : state) {
    std::vector<qfs::SerializedWindow> windows = qfs::serialize_input(query, document, 512, 100);
    benchmark::DoNotOptimize(windows);
  }
}
BENCHMARK(BM_SerializeWindows)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
