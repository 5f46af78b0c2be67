#include "reference_metrics.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qfs/text.hpp"

namespace refmetrics {

namespace {

qfs::SentenceList stemmed(const qfs::SentenceList& sentences, bool apply_stemmer) {
  if (!apply_stemmer) return sentences;
  qfs::SentenceList out = sentences;
  for (auto& sentence : out)
    for (auto& token : sentence) token = qfs::stem(token);
  return out;
}

std::vector<std::string> gram_list(const qfs::SentenceList& sentences, int n) {
  std::vector<std::string> grams;
  for (const auto& sentence : sentences) {
    if (static_cast<int>(sentence.size()) < n) continue;
    for (std::size_t start = 0; start + n <= sentence.size(); ++start) {
      std::string gram;
      for (int k = 0; k < n; ++k) {
        if (k) gram += ' ';
        gram += sentence[start + k];
      }
      grams.push_back(std::move(gram));
    }
  }
  std::sort(grams.begin(), grams.end());
  return grams;
}

}  // namespace

Counts rouge_n_counts(const qfs::SentenceList& candidate, const qfs::SentenceList& reference,
                      int n, bool apply_stemmer) {
  std::vector<std::string> cand = gram_list(stemmed(candidate, apply_stemmer), n);
  std::vector<std::string> ref = gram_list(stemmed(reference, apply_stemmer), n);
  Counts counts;
  counts.candidate_total = static_cast<long long>(cand.size());
  counts.reference_total = static_cast<long long>(ref.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < cand.size() && j < ref.size()) {
    if (cand[i] == ref[j]) {
      ++counts.overlap;
      ++i;
      ++j;
    } else if (cand[i] < ref[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return counts;
}

namespace {

// Recursive LCS with memoized lengths; follows matches when tokens agree,
// otherwise steps toward the branch with the longer remaining LCS, skipping
// the reference token when both branches tie.
void mark_alignment(const qfs::TokenSequence& ref, const qfs::TokenSequence& cand,
                    std::vector<char>& hit) {
  const int r = static_cast<int>(ref.size());
  const int c = static_cast<int>(cand.size());
  if (r == 0 || c == 0) return;
  std::vector<std::vector<int>> memo(r + 1, std::vector<int>(c + 1, -1));
  std::function<int(int, int)> length = [&](int i, int j) -> int {
    if (i == 0 || j == 0) return 0;
    int& slot = memo[i][j];
    if (slot >= 0) return slot;
    if (ref[i - 1] == cand[j - 1])
      slot = length(i - 1, j - 1) + 1;
    else
      slot = std::max(length(i - 1, j), length(i, j - 1));
    return slot;
  };
  int i = r;
  int j = c;
  while (i > 0 && j > 0) {
    if (ref[i - 1] == cand[j - 1]) {
      hit[i - 1] = 1;
      --i;
      --j;
    } else if (length(i - 1, j) >= length(i, j - 1)) {
      --i;
    } else {
      --j;
    }
  }
}

}  // namespace

Counts rouge_l_counts(const qfs::SentenceList& candidate, const qfs::SentenceList& reference,
                      bool apply_stemmer) {
  qfs::SentenceList cand = stemmed(candidate, apply_stemmer);
  qfs::SentenceList ref = stemmed(reference, apply_stemmer);
  Counts counts;
  for (const auto& sentence : cand) counts.candidate_total += static_cast<long long>(sentence.size());
  for (const auto& ref_sentence : ref) {
    counts.reference_total += static_cast<long long>(ref_sentence.size());
    std::vector<char> hit(ref_sentence.size(), 0);
    for (const auto& cand_sentence : cand) mark_alignment(ref_sentence, cand_sentence, hit);
    for (char h : hit) counts.overlap += h;
  }
  return counts;
}

double recall(const Counts& counts) {
  if (counts.reference_total <= 0) return 0.0;
  return static_cast<double>(counts.overlap) / static_cast<double>(counts.reference_total);
}

double f_score(const Counts& counts, double alpha) {
  double r = recall(counts);
  double p = counts.candidate_total > 0
                 ? static_cast<double>(counts.overlap) / static_cast<double>(counts.candidate_total)
                 : 0.0;
  if (r <= 0.0 && p <= 0.0) return 0.0;
  return p * r / (alpha * p + (1.0 - alpha) * r);
}

double exhaustive_best_subset(const qfs::SentenceList& document,
                              const qfs::SentenceList& reference, bool use_f1,
                              int max_sentences) {
  const int n = static_cast<int>(document.size());
  double best = 0.0;
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    if (__builtin_popcountll(mask) > max_sentences) continue;
    qfs::SentenceList subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1ULL << i)) subset.push_back(document[i]);
    Counts counts = rouge_n_counts(subset, reference, 2, true);
    double score = use_f1 ? f_score(counts, 0.5) : recall(counts);
    best = std::max(best, score);
  }
  return best;
}

}  // namespace refmetrics
