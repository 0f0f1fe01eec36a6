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
// Comparison augmenters: the four EDA operations (one chosen per sentence)
// and semantic-embedding word replacement. Both modify the target side only.

#ifndef PARAUG_BASELINE_DA_HPP_
#define PARAUG_BASELINE_DA_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paraug/corpus.hpp"
#include "paraug/corpus_io.hpp"
#include "paraug/errors.hpp"
#include "paraug/mtl_da.hpp"
#include "paraug/sampling.hpp"

namespace paraug {

enum class EdaOp {
  SynonymReplacement,
  RandomInsertion,
  RandomSwap,
  RandomDeletion,
};

/// Monolingual word -> synonyms table. Ordered map for deterministic
/// iteration.
struct Thesaurus {
  std::map<Token, std::vector<Token>> entries;

  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
};

/// Thesaurus TSV: word TAB comma-separated synonyms, one word per line.
/// Surrounding spaces in synonyms are stripped; a row with no synonyms left
/// is malformed. Later rows for the same word override earlier ones.
inline Thesaurus load_thesaurus(const std::filesystem::path& path) {
  Thesaurus thesaurus;
  const std::vector<std::string> lines = split_lines(read_text_file(path));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 ||
        line.find('\t', tab + 1) != std::string_view::npos) {
      throw MalformedRowError(path.string() + ":" + std::to_string(i + 1) +
                              ": expected word TAB synonyms");
    }
    std::vector<Token> synonyms;
    std::string_view rest = line.substr(tab + 1);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (!item.empty()) synonyms.emplace_back(item);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (synonyms.empty()) {
      throw MalformedRowError(path.string() + ":" + std::to_string(i + 1) +
                              ": no synonyms listed");
    }
    thesaurus.entries[std::string(line.substr(0, tab))] = std::move(synonyms);
  }
  return thesaurus;
}

struct EdaSpec {
  double alpha = 0.5;
  std::vector<EdaOp> operations = {
      EdaOp::SynonymReplacement, EdaOp::RandomInsertion, EdaOp::RandomSwap,
      EdaOp::RandomDeletion};
  Thesaurus synonym_source;
};

struct EmbedReplaceSpec {
  double alpha = 0.5;
  EmbeddingTable embeddings;
  std::size_t neighbor_rank = 1;
};

namespace detail {

inline std::vector<std::size_t> thesaurus_positions(
    const Sentence& tokens, const Thesaurus& thesaurus) {
  std::vector<std::size_t> positions;
  for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
    if (thesaurus.entries.count(tokens[pos]) != 0) positions.push_back(pos);
  }
  return positions;
}

inline Sentence eda_synonym_replacement(Sentence tokens, std::size_t count,
                                        const Thesaurus& thesaurus,
                                        SplitMix64& rng) {
  const std::vector<std::size_t> eligible =
      thesaurus_positions(tokens, thesaurus);
  const std::size_t take = std::min(count, eligible.size());
  for (const std::size_t idx :
       sample_without_replacement(rng, eligible.size(), take)) {
    const std::vector<Token>& synonyms =
        thesaurus.entries.at(tokens[eligible[idx]]);
    tokens[eligible[idx]] = synonyms[bounded(rng, synonyms.size())];
  }
  return tokens;
}

// Eligibility is recomputed after each insertion, so inserted synonyms can
// seed later ones.
inline Sentence eda_random_insertion(Sentence tokens, std::size_t count,
                                     const Thesaurus& thesaurus,
                                     SplitMix64& rng) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::vector<std::size_t> eligible =
        thesaurus_positions(tokens, thesaurus);
    if (eligible.empty()) break;
    const Token& word = tokens[eligible[bounded(rng, eligible.size())]];
    const std::vector<Token>& synonyms = thesaurus.entries.at(word);
    const Token synonym = synonyms[bounded(rng, synonyms.size())];
    const std::size_t at = bounded(rng, tokens.size() + 1);
    tokens.insert(tokens.begin() + static_cast<std::ptrdiff_t>(at), synonym);
  }
  return tokens;
}

inline Sentence eda_random_deletion(const Sentence& tokens, double alpha,
                                    SplitMix64& rng) {
  if (tokens.empty()) return tokens;
  Sentence kept;
  for (const Token& token : tokens) {
    if (!(uniform_real(rng, 0.0, 1.0) < alpha)) kept.push_back(token);
  }
  if (kept.empty()) kept.push_back(tokens[bounded(rng, tokens.size())]);
  return kept;
}

}  // namespace detail

/// One synthetic pair per input pair: a single enabled operation is chosen
/// uniformly per pair and applied to the target at intensity floor(alpha*t)
/// (floor(alpha*t/2) swaps; per-token probability alpha for deletion).
/// With exactly one enabled operation the choice draw is skipped, so the
/// per-pair draw sequence matches the standalone operation. An empty
/// thesaurus disables SynonymReplacement and RandomInsertion with a warning;
/// if nothing remains enabled that is an error. Seed stream: ("eda", pair
/// index).
inline ParallelCorpus eda_augment(const ParallelCorpus& corpus,
                                  const EdaSpec& spec, SeedSpec seed) {
  if (spec.operations.empty()) {
    throw std::invalid_argument("eda requires at least one operation");
  }
  std::vector<EdaOp> enabled;
  bool dropped = false;
  for (const EdaOp op : spec.operations) {
    const bool needs_thesaurus = op == EdaOp::SynonymReplacement ||
                                 op == EdaOp::RandomInsertion;
    if (needs_thesaurus && spec.synonym_source.empty()) {
      dropped = true;
      continue;
    }
    enabled.push_back(op);
  }
  if (dropped) {
    std::cerr << "warning: empty thesaurus; disabling synonym replacement "
                 "and random insertion\n";
  }
  if (enabled.empty()) {
    throw EmptyThesaurusError(
        "every requested operation needs a thesaurus and none was given");
  }

  ParallelCorpus synthetic;
  synthetic.source_tag = corpus.source_tag;
  synthetic.target_tag = corpus.target_tag;
  synthetic.pairs.reserve(corpus.size());
  for (const auto& pair : corpus.pairs) {
    SplitMix64 rng(derive_item_seed(seed.master_seed, "eda", pair.index));
    const EdaOp op = enabled.size() > 1
                         ? enabled[bounded(rng, enabled.size())]
                         : enabled.front();
    const std::size_t count = affected_count(spec.alpha, pair.target.size());
    Sentence target;
    switch (op) {
      case EdaOp::SynonymReplacement:
        target = detail::eda_synonym_replacement(pair.target, count,
                                                 spec.synonym_source, rng);
        break;
      case EdaOp::RandomInsertion:
        target = detail::eda_random_insertion(pair.target, count,
                                              spec.synonym_source, rng);
        break;
      case EdaOp::RandomSwap:
        target = swap_positions(pair.target,
                                swap_count(spec.alpha, pair.target.size()),
                                rng);
        break;
      case EdaOp::RandomDeletion:
        target = detail::eda_random_deletion(pair.target, spec.alpha, rng);
        break;
    }
    synthetic.add_pair(pair.source, std::move(target));
  }
  return synthetic;
}

inline double cosine_similarity(const std::vector<double>& a,
                                const std::vector<double>& b) {
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    dot += a[i] * b[i];
    norm_a += a[i] * a[i];
    norm_b += b[i] * b[i];
  }
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

/// Rank-`rank` nearest neighbor of `token` by cosine similarity, excluding
/// the token itself. Ties break toward the lexicographically smaller token.
/// Returns nothing when the token is out of vocabulary or the table has
/// fewer than rank other entries.
inline std::optional<Token> nearest_neighbor(const EmbeddingTable& table,
                                             const Token& token,
                                             std::size_t rank) {
  const auto self = table.vectors.find(token);
  if (rank == 0 || self == table.vectors.end()) return std::nullopt;
  std::vector<std::pair<double, const Token*>> scored;
  scored.reserve(table.vectors.size());
  for (const auto& [candidate, vector] : table.vectors) {
    if (candidate == token) continue;
    scored.emplace_back(cosine_similarity(self->second, vector), &candidate);
  }
  if (rank > scored.size()) return std::nullopt;
  std::sort(scored.begin(), scored.end(),
            [](const auto& lhs, const auto& rhs) {
              if (lhs.first != rhs.first) return lhs.first > rhs.first;
              return *lhs.second < *rhs.second;
            });
  return *scored[rank - 1].second;
}

/// Per pair, floor(alpha*t) distinct random target positions whose tokens
/// are in the table are replaced by their rank-`neighbor_rank` cosine
/// neighbor; out-of-vocabulary tokens are never selected and a missing
/// neighbor leaves the token in place. Seed stream: ("embed", pair index).
inline ParallelCorpus embed_replace(const ParallelCorpus& corpus,
                                    const EmbedReplaceSpec& spec,
                                    SeedSpec seed) {
  if (spec.embeddings.empty()) {
    throw EmptyEmbeddingsError("embedding table is empty");
  }
  std::map<Token, std::optional<Token>> neighbor_cache;
  auto neighbor_of = [&](const Token& token) -> const std::optional<Token>& {
    auto it = neighbor_cache.find(token);
    if (it == neighbor_cache.end()) {
      it = neighbor_cache
               .emplace(token, nearest_neighbor(spec.embeddings, token,
                                                spec.neighbor_rank))
               .first;
    }
    return it->second;
  };

  ParallelCorpus synthetic;
  synthetic.source_tag = corpus.source_tag;
  synthetic.target_tag = corpus.target_tag;
  synthetic.pairs.reserve(corpus.size());
  for (const auto& pair : corpus.pairs) {
    SplitMix64 rng(derive_item_seed(seed.master_seed, "embed", pair.index));
    Sentence target = pair.target;
    std::vector<std::size_t> eligible;
    for (std::size_t pos = 0; pos < target.size(); ++pos) {
      if (spec.embeddings.vectors.count(target[pos]) != 0) {
        eligible.push_back(pos);
      }
    }
    const std::size_t take = std::min(
        affected_count(spec.alpha, target.size()), eligible.size());
    for (const std::size_t idx :
         sample_without_replacement(rng, eligible.size(), take)) {
      if (const std::optional<Token>& n = neighbor_of(target[eligible[idx]])) {
        target[eligible[idx]] = *n;
      }
    }
    synthetic.add_pair(pair.source, std::move(target));
  }
  return synthetic;
}

}  // namespace paraug

#endif  // PARAUG_BASELINE_DA_HPP_
