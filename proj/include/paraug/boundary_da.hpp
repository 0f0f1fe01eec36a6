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
// Sentence boundary augmentation: adjacent pairs are concatenated with a
// proportional cut, dropping the head of the first sentence and keeping the
// head of the second.

#ifndef PARAUG_BOUNDARY_DA_HPP_
#define PARAUG_BOUNDARY_DA_HPP_

#include <cmath>
#include <cstddef>

#include "paraug/corpus.hpp"
#include "paraug/sampling.hpp"

namespace paraug {

struct BoundarySpec {
  double p_max = 0.3;
  SeedSpec seed;
};

namespace detail {

inline std::size_t boundary_cut(double p, std::size_t length) {
  return static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(length)));
}

inline Sentence splice(const Sentence& first, const Sentence& second,
                       double p) {
  const std::size_t drop = boundary_cut(p, first.size());
  const std::size_t keep = boundary_cut(p, second.size());
  Sentence out(first.begin() + static_cast<std::ptrdiff_t>(drop),
               first.end());
  out.insert(out.end(), second.begin(),
             second.begin() + static_cast<std::ptrdiff_t>(keep));
  return out;
}

}  // namespace detail

/// Joins two adjacent pairs: the output is S1 minus its first ceil(p*|S1|)
/// tokens followed by the first ceil(p*|S2|) tokens of S2, and likewise for
/// the targets. A single p drives all four cuts.
inline SentencePair truncate_pair(const SentencePair& first,
                                  const SentencePair& second, double p) {
  SentencePair out;
  out.source = detail::splice(first.source, second.source, p);
  out.target = detail::splice(first.target, second.target, p);
  out.index = first.index;
  return out;
}

/// Walks the corpus in non-overlapping adjacent pairs (0,1), (2,3), ... and
/// emits one spliced pair per window with p drawn from Uniform(0, p_max).
/// A trailing unpaired sentence is dropped, so the synthetic corpus has
/// exactly floor(n/2) pairs; the caller appends it to the original. The
/// seed stream is ("boundary", index of the window's first pair).
inline ParallelCorpus augment_boundary(const ParallelCorpus& corpus,
                                       const BoundarySpec& spec) {
  ParallelCorpus synthetic;
  synthetic.source_tag = corpus.source_tag;
  synthetic.target_tag = corpus.target_tag;
  synthetic.pairs.reserve(corpus.size() / 2);
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    SplitMix64 rng(derive_item_seed(spec.seed.master_seed, "boundary", i));
    const double p = uniform_real(rng, 0.0, spec.p_max);
    SentencePair spliced =
        truncate_pair(corpus.pairs[i], corpus.pairs[i + 1], p);
    synthetic.add_pair(std::move(spliced.source), std::move(spliced.target));
  }
  return synthetic;
}

}  // namespace paraug

#endif  // PARAUG_BOUNDARY_DA_HPP_
