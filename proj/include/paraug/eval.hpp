// Copyright 2026 The Paraug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// BLEU-4 scoring at corpus and sentence level, interpretation buckets, and
// BLEU-band triage with issue categories.

#ifndef PARAUG_EVAL_HPP_
#define PARAUG_EVAL_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paraug/corpus.hpp"
#include "paraug/corpus_io.hpp"
#include "paraug/errors.hpp"

namespace paraug {

struct BleuReport {
  double score = 0.0;
  std::array<double, 4> precisions{};
  double brevity_penalty = 1.0;
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;
  std::string bucket;
};

enum class IssueCategory { Collocation, WordByWord, NumberAmbiguity, Unknown };

inline std::string_view category_name(IssueCategory category) {
  switch (category) {
    case IssueCategory::Collocation: return "collocation";
    case IssueCategory::WordByWord: return "word-by-word";
    case IssueCategory::NumberAmbiguity: return "number-ambiguity";
    case IssueCategory::Unknown: return "unknown";
  }
  return "unknown";
}

inline std::optional<IssueCategory> category_from_name(std::string_view name) {
  if (name == "collocation") return IssueCategory::Collocation;
  if (name == "word-by-word") return IssueCategory::WordByWord;
  if (name == "number-ambiguity") return IssueCategory::NumberAmbiguity;
  if (name == "unknown") return IssueCategory::Unknown;
  return std::nullopt;
}

struct TriageReport {
  std::vector<std::pair<std::size_t, double>> selected;
  std::map<IssueCategory, std::size_t> counts;
  double lo = 0.0;
  double hi = 1.0;
};

namespace detail {

inline std::map<std::vector<Token>, std::size_t> ngram_counts(
    const Sentence& sentence, std::size_t n) {
  std::map<std::vector<Token>, std::size_t> counts;
  if (sentence.size() >= n && n > 0) {
    for (std::size_t i = 0; i + n <= sentence.size(); ++i) {
      ++counts[std::vector<Token>(sentence.begin() + static_cast<std::ptrdiff_t>(i),
                                  sentence.begin() + static_cast<std::ptrdiff_t>(i + n))];
    }
  }
  return counts;
}

// Clipped matches and hypothesis n-gram total for one sentence pair.
inline void count_ngram_overlap(const Sentence& hypothesis,
                                const Sentence& reference, std::size_t n,
                                std::size_t& matched, std::size_t& total) {
  const auto hyp_counts = ngram_counts(hypothesis, n);
  const auto ref_counts = ngram_counts(reference, n);
  for (const auto& [gram, count] : hyp_counts) {
    const auto it = ref_counts.find(gram);
    if (it != ref_counts.end()) matched += std::min(count, it->second);
    total += count;
  }
}

}  // namespace detail

/// Maps a BLEU score onto its interpretation bucket. The seven ranges
/// partition [0,1]; 0.40 belongs to "Understandable to good translations"
/// and 0.60 to "Very high quality, adequate, and fluent translations".
inline std::string_view interpret_bleu(double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw OutOfRangeError("BLEU score " + std::to_string(score) +
                          " outside [0,1]");
  }
  if (score < 0.10) return "Almost useless";
  if (score < 0.20) return "Hard to get the gist";
  if (score < 0.30) {
    return "The gist is clear, but there are substantial grammatical errors "
           "present";
  }
  if (score <= 0.40) return "Understandable to good translations";
  if (score < 0.50) return "High quality translations";
  if (score <= 0.60) {
    return "Very high quality, adequate, and fluent translations";
  }
  return "Quality often better than human";
}

/// Corpus-level BLEU-4: clipped n-gram precisions aggregated over all pairs,
/// uniform 1/4 weights, brevity penalty exp(1 - ref/hyp) when hyp < ref.
/// Unsmoothed: any zero precision zeroes the score.
inline BleuReport corpus_bleu(const std::vector<Sentence>& hypotheses,
                              const std::vector<Sentence>& references) {
  if (hypotheses.size() != references.size()) {
    throw LengthMismatchError(
        std::to_string(hypotheses.size()) + " hypotheses vs " +
        std::to_string(references.size()) + " references");
  }
  if (hypotheses.empty()) {
    throw EmptyInputError("corpus BLEU needs at least one sentence pair");
  }
  BleuReport report;
  std::array<std::size_t, 4> matched{};
  std::array<std::size_t, 4> total{};
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    report.hyp_length += hypotheses[i].size();
    report.ref_length += references[i].size();
    for (std::size_t n = 1; n <= 4; ++n) {
      detail::count_ngram_overlap(hypotheses[i], references[i], n,
                                  matched[n - 1], total[n - 1]);
    }
  }
  bool any_zero = false;
  double log_sum = 0.0;
  for (std::size_t n = 0; n < 4; ++n) {
    report.precisions[n] =
        total[n] == 0 ? 0.0
                      : static_cast<double>(matched[n]) /
                            static_cast<double>(total[n]);
    if (report.precisions[n] == 0.0) {
      any_zero = true;
    } else {
      log_sum += std::log(report.precisions[n]);
    }
  }
  if (report.hyp_length < report.ref_length) {
    report.brevity_penalty =
        report.hyp_length == 0
            ? 0.0
            : std::exp(1.0 - static_cast<double>(report.ref_length) /
                                 static_cast<double>(report.hyp_length));
  }
  report.score =
      any_zero ? 0.0 : report.brevity_penalty * std::exp(log_sum / 4.0);
  report.bucket = interpret_bleu(report.score);
  return report;
}

/// Sentence-level BLEU-4 with add-one smoothing of both numerator and
/// denominator for n >= 2; the unigram precision stays raw, so a hypothesis
/// sharing no word with the reference scores 0, and an empty hypothesis
/// scores 0.
inline double sentence_bleu(const Sentence& hypothesis,
                            const Sentence& reference) {
  if (reference.empty()) {
    throw EmptyReferenceError("sentence BLEU needs a non-empty reference");
  }
  if (hypothesis.empty()) return 0.0;
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t matched = 0;
    std::size_t total = 0;
    detail::count_ngram_overlap(hypothesis, reference, n, matched, total);
    double precision;
    if (n == 1) {
      precision = static_cast<double>(matched) / static_cast<double>(total);
      if (precision == 0.0) return 0.0;
    } else {
      precision = static_cast<double>(matched + 1) /
                  static_cast<double>(total + 1);
    }
    log_sum += std::log(precision);
  }
  double brevity_penalty = 1.0;
  if (hypothesis.size() < reference.size()) {
    brevity_penalty =
        std::exp(1.0 - static_cast<double>(reference.size()) /
                           static_cast<double>(hypothesis.size()));
  }
  return brevity_penalty * std::exp(log_sum / 4.0);
}

/// True iff exactly one of the two sentences contains a token made entirely
/// of decimal digits; flags the digits-vs-spelled-out mismatch.
inline bool detect_number_ambiguity(const Sentence& hypothesis,
                                    const Sentence& reference) {
  const auto has_digit_token = [](const Sentence& sentence) {
    return std::any_of(sentence.begin(), sentence.end(),
                       [](const Token& token) {
                         return !token.empty() &&
                                std::all_of(token.begin(), token.end(),
                                            [](unsigned char c) {
                                              return c >= '0' && c <= '9';
                                            });
                       });
  };
  return has_digit_token(hypothesis) != has_digit_token(reference);
}

/// Selects pairs whose sentence BLEU lies in the closed band [lo, hi] and
/// assigns each an issue category: the provided label when present, else
/// NumberAmbiguity when the heuristic fires, else Unknown. All four counts
/// are always reported, zero included.
inline TriageReport triage(
    const std::vector<Sentence>& hypotheses,
    const std::vector<Sentence>& references, double lo, double hi,
    const std::map<std::size_t, IssueCategory>& labels = {}) {
  if (hypotheses.size() != references.size()) {
    throw LengthMismatchError(
        std::to_string(hypotheses.size()) + " hypotheses vs " +
        std::to_string(references.size()) + " references");
  }
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi)) {
    throw OutOfRangeError("triage band must satisfy 0 <= lo <= hi <= 1");
  }
  TriageReport report;
  report.lo = lo;
  report.hi = hi;
  report.counts = {{IssueCategory::Collocation, 0},
                   {IssueCategory::WordByWord, 0},
                   {IssueCategory::NumberAmbiguity, 0},
                   {IssueCategory::Unknown, 0}};
  for (std::size_t i = 0; i < hypotheses.size(); ++i) {
    const double score = sentence_bleu(hypotheses[i], references[i]);
    if (score < lo || score > hi) continue;
    report.selected.emplace_back(i, score);
    IssueCategory category = IssueCategory::Unknown;
    if (const auto it = labels.find(i); it != labels.end()) {
      category = it->second;
    } else if (detect_number_ambiguity(hypotheses[i], references[i])) {
      category = IssueCategory::NumberAmbiguity;
    }
    ++report.counts[category];
  }
  return report;
}

/// Labels TSV: pair_index TAB category, category one of collocation,
/// word-by-word, number-ambiguity, unknown. Later rows override earlier
/// ones for the same index.
inline std::map<std::size_t, IssueCategory> load_labels(
    const std::filesystem::path& path) {
  std::map<std::size_t, IssueCategory> labels;
  const std::vector<std::string> lines = split_lines(read_text_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    std::size_t index = 0;
    if (tab == std::string_view::npos ||
        line.find('\t', tab + 1) != std::string_view::npos ||
        !detail::parse_size(line.substr(0, tab), index)) {
      throw MalformedRowError(path.string() + ":" + std::to_string(i + 1) +
                              ": expected pair_index TAB category");
    }
    const std::optional<IssueCategory> category =
        category_from_name(line.substr(tab + 1));
    if (!category) {
      throw MalformedRowError(path.string() + ":" + std::to_string(i + 1) +
                              ": unknown category \"" +
                              std::string(line.substr(tab + 1)) + "\"");
    }
    labels[index] = *category;
  }
  return labels;
}

}  // namespace paraug

#endif  // PARAUG_EVAL_HPP_
