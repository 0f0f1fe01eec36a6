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
// Multi-task data augmentation: five target-side transformations (swap,
// token, source, reverse, replace) that each build a synthetic corpus of the
// same size as the input, to be appended to training data by the caller.

#ifndef PARAUG_MTL_DA_HPP_
#define PARAUG_MTL_DA_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paraug/corpus.hpp"
#include "paraug/errors.hpp"
#include "paraug/sampling.hpp"

namespace paraug {

enum class MtlTask { Swap, Token, Source, Reverse, Replace };

/// Task names double as the seed stream labels, so they are part of the
/// reproducibility contract.
inline std::string_view task_name(MtlTask task) {
  switch (task) {
    case MtlTask::Swap: return "swap";
    case MtlTask::Token: return "token";
    case MtlTask::Source: return "source";
    case MtlTask::Reverse: return "reverse";
    case MtlTask::Replace: return "replace";
  }
  return "unknown";
}

inline std::optional<MtlTask> task_from_name(std::string_view name) {
  if (name == "swap") return MtlTask::Swap;
  if (name == "token") return MtlTask::Token;
  if (name == "source") return MtlTask::Source;
  if (name == "reverse") return MtlTask::Reverse;
  if (name == "replace") return MtlTask::Replace;
  return std::nullopt;
}

struct MtlSpec {
  std::vector<MtlTask> tasks;  // distinct, applied in order
  double alpha = 0.5;          // fraction of target words affected
  Token unk_token = "UNK";
  // Replace resources; when absent, a dictionary is extracted from the
  // corpus itself and missing alignments fall back to naive_align.
  std::optional<BilingualDictionary> dictionary;
  std::optional<AlignmentSet> alignments;
};

// Count rounding: floor(alpha * t) affected words, floor(alpha * t / 2)
// swaps. The fractional cases follow the worked examples rather than the
// unsatisfiable "until only (1-alpha)*t remains" phrasing.
inline std::size_t affected_count(double alpha, std::size_t t) {
  return static_cast<std::size_t>(
      std::floor(alpha * static_cast<double>(t)));
}

inline std::size_t swap_count(double alpha, std::size_t t) {
  return static_cast<std::size_t>(
      std::floor(alpha * static_cast<double>(t) / 2.0));
}

/// Draws 2k distinct positions and exchanges them pairwise, so the k swaps
/// are disjoint by construction. Shared by the MTL swap task and the EDA
/// random-swap operation.
inline Sentence swap_positions(Sentence tokens, std::size_t swaps,
                               SplitMix64& rng) {
  if (swaps == 0 || tokens.size() < 2) return tokens;
  const auto positions =
      sample_without_replacement(rng, tokens.size(), 2 * swaps);
  for (std::size_t s = 0; s < swaps; ++s) {
    std::swap(tokens[positions[2 * s]], tokens[positions[2 * s + 1]]);
  }
  return tokens;
}

/// Swap: floor(alpha*t/2) disjoint pairs of random target positions are
/// exchanged; the source side and the token multiset are untouched.
inline SentencePair task_swap(const SentencePair& pair, double alpha,
                              SplitMix64& rng) {
  SentencePair out = pair;
  out.target = swap_positions(out.target, swap_count(alpha, out.target.size()),
                              rng);
  return out;
}

/// Token: floor(alpha*t) distinct random target positions are replaced by
/// the UNK token.
inline SentencePair task_token(const SentencePair& pair, double alpha,
                               const Token& unk_token, SplitMix64& rng) {
  SentencePair out = pair;
  const std::size_t replacements =
      affected_count(alpha, out.target.size());
  for (const std::size_t pos :
       sample_without_replacement(rng, out.target.size(), replacements)) {
    out.target[pos] = unk_token;
  }
  return out;
}

/// Source: the target becomes an identical copy of the source.
inline SentencePair task_source(const SentencePair& pair) {
  SentencePair out = pair;
  out.target = out.source;
  return out;
}

/// Reverse: target word order is reversed; an involution.
inline SentencePair task_reverse(const SentencePair& pair) {
  SentencePair out = pair;
  std::reverse(out.target.begin(), out.target.end());
  return out;
}

/// Replace: floor(alpha*t) alignment links are chosen without replacement
/// (all of them when the pair has fewer) and for each one a random
/// dictionary entry substitutes its source phrase for the linked source
/// token and its target phrase for the linked target token. Phrases may be
/// multi-token, so both sides can change length. A later choice overwrites
/// an earlier one landing on the same position.
inline SentencePair task_replace(const SentencePair& pair, double alpha,
                                 const BilingualDictionary& dictionary,
                                 const LinkSet& links, SplitMix64& rng) {
  const std::size_t wanted = affected_count(alpha, pair.target.size());
  if (wanted == 0 || links.empty()) return pair;
  if (dictionary.empty()) {
    throw EmptyDictionaryError("replace task requires a non-empty dictionary");
  }
  const std::vector<Link> link_list(links.begin(), links.end());
  const std::size_t take = std::min(wanted, link_list.size());
  std::map<std::size_t, const Sentence*> source_phrase_at;
  std::map<std::size_t, const Sentence*> target_phrase_at;
  for (const std::size_t li :
       sample_without_replacement(rng, link_list.size(), take)) {
    const DictionaryEntry& entry =
        dictionary.entries[bounded(rng, dictionary.size())];
    source_phrase_at[link_list[li].first] = &entry.source_phrase;
    target_phrase_at[link_list[li].second] = &entry.target_phrase;
  }
  auto substitute = [](const Sentence& in,
                       const std::map<std::size_t, const Sentence*>& phrases) {
    Sentence out;
    out.reserve(in.size());
    for (std::size_t pos = 0; pos < in.size(); ++pos) {
      if (auto it = phrases.find(pos); it != phrases.end()) {
        out.insert(out.end(), it->second->begin(), it->second->end());
      } else {
        out.push_back(in[pos]);
      }
    }
    return out;
  };
  SentencePair out = pair;
  out.source = substitute(pair.source, source_phrase_at);
  out.target = substitute(pair.target, target_phrase_at);
  return out;
}

/// Builds the default replace dictionary from the corpus itself: every
/// aligned token pair becomes an entry (first occurrence wins, exact
/// duplicates collapse), so replace needs no external resource.
inline BilingualDictionary extract_dictionary(
    const ParallelCorpus& corpus,
    const std::optional<AlignmentSet>& alignments) {
  BilingualDictionary dictionary;
  std::set<std::pair<Token, Token>> seen;
  for (const auto& pair : corpus.pairs) {
    const LinkSet links = alignments ? alignments->links[pair.index]
                                     : naive_align(pair);
    for (const auto& [src_idx, tgt_idx] : links) {
      const Token& src = pair.source[src_idx];
      const Token& tgt = pair.target[tgt_idx];
      if (seen.emplace(src, tgt).second) {
        dictionary.entries.push_back({{src}, {tgt}});
      }
    }
  }
  return dictionary;
}

/// Runs every task in spec.tasks over the whole corpus and returns the
/// synthetic pairs only, task-major then by pair index; the caller appends
/// them to the original via concat_corpora. Output size is
/// |tasks| * |corpus|. Pair seeds come from (master seed, task name, pair
/// index), so pairs can be processed in any order.
inline ParallelCorpus run_mtl(const ParallelCorpus& corpus,
                              const MtlSpec& spec, SeedSpec seed) {
  if (spec.alignments &&
      spec.alignments->links.size() != corpus.size()) {
    throw LineCountMismatchError(
        "alignment set covers " +
        std::to_string(spec.alignments->links.size()) +
        " pairs but the corpus has " + std::to_string(corpus.size()));
  }
  const bool wants_replace =
      std::find(spec.tasks.begin(), spec.tasks.end(), MtlTask::Replace) !=
      spec.tasks.end();
  BilingualDictionary extracted;
  const BilingualDictionary* dictionary = nullptr;
  if (wants_replace) {
    if (spec.dictionary && !spec.dictionary->empty()) {
      dictionary = &*spec.dictionary;
    } else {
      extracted = extract_dictionary(corpus, spec.alignments);
      dictionary = &extracted;
    }
  }

  ParallelCorpus synthetic;
  synthetic.source_tag = corpus.source_tag;
  synthetic.target_tag = corpus.target_tag;
  synthetic.pairs.reserve(spec.tasks.size() * corpus.size());
  for (const MtlTask task : spec.tasks) {
    for (const auto& pair : corpus.pairs) {
      SplitMix64 rng(
          derive_item_seed(seed.master_seed, task_name(task), pair.index));
      SentencePair result;
      switch (task) {
        case MtlTask::Swap:
          result = task_swap(pair, spec.alpha, rng);
          break;
        case MtlTask::Token:
          result = task_token(pair, spec.alpha, spec.unk_token, rng);
          break;
        case MtlTask::Source:
          result = task_source(pair);
          break;
        case MtlTask::Reverse:
          result = task_reverse(pair);
          break;
        case MtlTask::Replace: {
          const LinkSet links = spec.alignments
                                    ? spec.alignments->links[pair.index]
                                    : naive_align(pair);
          result = task_replace(pair, spec.alpha, *dictionary, links, rng);
          break;
        }
      }
      synthetic.add_pair(std::move(result.source), std::move(result.target));
    }
  }
  return synthetic;
}

}  // namespace paraug

#endif  // PARAUG_MTL_DA_HPP_
