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

#ifndef PARAUG_CORPUS_HPP_
#define PARAUG_CORPUS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "paraug/errors.hpp"

namespace paraug {

// A token is a nonempty string free of whitespace; a sentence is whatever
// whitespace tokenization of one corpus line yields. Corpora are expected to
// be pre-tokenized (punctuation separated by spaces); no linguistic
// tokenization happens here.
using Token = std::string;
using Sentence = std::vector<Token>;

struct SentencePair {
  Sentence source;
  Sentence target;
  std::size_t index = 0;  // ordinal position within its corpus

  friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

struct ParallelCorpus {
  std::vector<SentencePair> pairs;  // pairs[i].index == i
  std::string source_tag;
  std::string target_tag;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }

  void add_pair(Sentence source, Sentence target) {
    pairs.push_back({std::move(source), std::move(target), pairs.size()});
  }

  friend bool operator==(const ParallelCorpus&, const ParallelCorpus&) = default;
};

// One word alignment link: (source token position, target token position),
// both 0-based. Stored sorted so iteration order is deterministic.
using Link = std::pair<std::size_t, std::size_t>;
using LinkSet = std::set<Link>;

// Per-pair link sets; links.size() equals the corpus pair count and every
// link is in range for its pair (enforced on ingestion).
struct AlignmentSet {
  std::vector<LinkSet> links;
};

// Dictionary sides may be multi-token phrases; neither side is empty.
struct DictionaryEntry {
  Sentence source_phrase;
  Sentence target_phrase;

  friend bool operator==(const DictionaryEntry&, const DictionaryEntry&) = default;
};

struct BilingualDictionary {
  std::vector<DictionaryEntry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
};

// Word vectors keyed by token text. std::map keeps scans in lexicographic
// order, which the deterministic nearest-neighbor tie-break relies on.
struct EmbeddingTable {
  std::size_t dimension = 0;
  std::map<Token, std::vector<double>> vectors;

  bool empty() const { return vectors.empty(); }
  std::size_t size() const { return vectors.size(); }
};

struct SideStats {
  std::size_t token_count = 0;
  std::size_t vocab_size = 0;
  std::size_t min_length = 0;
  std::size_t max_length = 0;
  double mean_length = 0.0;
};

struct CorpusStats {
  std::size_t pair_count = 0;
  SideStats source;
  SideStats target;
};

inline bool is_space_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

/// Splits text into maximal whitespace-free runs. Consecutive whitespace
/// collapses; leading/trailing whitespace is ignored; empty or
/// whitespace-only input yields the empty sentence.
inline Sentence tokenize(std::string_view text) {
  Sentence tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space_char(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space_char(text[i])) ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

/// Joins tokens with single spaces; tokenize(detokenize(s)) == s.
inline std::string detokenize(const Sentence& sentence) {
  std::string out;
  for (std::size_t i = 0; i < sentence.size(); ++i) {
    if (i > 0) out += ' ';
    out += sentence[i];
  }
  return out;
}

/// Fallback diagonal alignment used when no alignment file is supplied:
/// source position i links to round(i * tgt_len / src_len), clamped into
/// range. An empty side yields no links.
inline LinkSet naive_align(const SentencePair& pair) {
  LinkSet links;
  const std::size_t src_len = pair.source.size();
  const std::size_t tgt_len = pair.target.size();
  if (src_len == 0 || tgt_len == 0) return links;
  const double ratio =
      static_cast<double>(tgt_len) / static_cast<double>(src_len);
  for (std::size_t i = 0; i < src_len; ++i) {
    auto j = static_cast<std::size_t>(
        std::llround(static_cast<double>(i) * ratio));
    links.emplace(i, std::min(j, tgt_len - 1));
  }
  return links;
}

inline CorpusStats corpus_stats(const ParallelCorpus& corpus) {
  CorpusStats stats;
  stats.pair_count = corpus.size();
  if (corpus.empty()) return stats;

  auto side = [&](auto&& sentence_of) {
    SideStats s;
    std::unordered_set<std::string_view> vocab;
    s.min_length = sentence_of(corpus.pairs.front()).size();
    for (const auto& pair : corpus.pairs) {
      const Sentence& sentence = sentence_of(pair);
      s.token_count += sentence.size();
      s.min_length = std::min(s.min_length, sentence.size());
      s.max_length = std::max(s.max_length, sentence.size());
      for (const Token& token : sentence) vocab.insert(token);
    }
    s.vocab_size = vocab.size();
    s.mean_length = static_cast<double>(s.token_count) /
                    static_cast<double>(corpus.size());
    return s;
  };
  stats.source = side([](const SentencePair& p) -> const Sentence& {
    return p.source;
  });
  stats.target = side([](const SentencePair& p) -> const Sentence& {
    return p.target;
  });
  return stats;
}

/// Pairs of a followed by pairs of b, renumbered 0..len-1. Language tags
/// must match on both sides.
inline ParallelCorpus concat_corpora(const ParallelCorpus& a,
                                     const ParallelCorpus& b) {
  if (a.source_tag != b.source_tag || a.target_tag != b.target_tag) {
    throw TagMismatchError("cannot concatenate corpora tagged " + a.source_tag +
                           "/" + a.target_tag + " and " + b.source_tag + "/" +
                           b.target_tag);
  }
  ParallelCorpus out;
  out.source_tag = a.source_tag;
  out.target_tag = a.target_tag;
  out.pairs.reserve(a.size() + b.size());
  for (const auto& pair : a.pairs) out.add_pair(pair.source, pair.target);
  for (const auto& pair : b.pairs) out.add_pair(pair.source, pair.target);
  return out;
}

}  // namespace paraug

#endif  // PARAUG_CORPUS_HPP_
