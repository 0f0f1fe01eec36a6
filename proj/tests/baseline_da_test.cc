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

#include "paraug/baseline_da.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "paraug/corpus.hpp"
#include "paraug/errors.hpp"
#include "paraug/mtl_da.hpp"
#include "paraug/sampling.hpp"
#include "test_util.hpp"

namespace paraug {
namespace {

using paraug_test::make_corpus;
using paraug_test::TempDir;

TEST(LoadThesaurus, ParsesRowsAndStripsSpaces) {
  TempDir dir;
  const auto path = dir.write(
      "syn.tsv", "lạnh\trét, buốt\nnhanh\t mau \nto\tlớn,bự , khổng lồ\n");
  const Thesaurus thesaurus = load_thesaurus(path);
  ASSERT_EQ(thesaurus.size(), 3u);
  EXPECT_EQ(thesaurus.entries.at("lạnh"), (std::vector<Token>{"rét", "buốt"}));
  EXPECT_EQ(thesaurus.entries.at("nhanh"), (std::vector<Token>{"mau"}));
  EXPECT_EQ(thesaurus.entries.at("to"),
            (std::vector<Token>{"lớn", "bự", "khổng lồ"}));
}

TEST(LoadThesaurus, LaterRowsOverrideEarlierOnes) {
  TempDir dir;
  const auto path = dir.write("syn.tsv", "a\tx\na\ty\n");
  const Thesaurus thesaurus = load_thesaurus(path);
  ASSERT_EQ(thesaurus.size(), 1u);
  EXPECT_EQ(thesaurus.entries.at("a"), (std::vector<Token>{"y"}));
}

TEST(LoadThesaurus, EmptyFileGivesEmptyThesaurus) {
  TempDir dir;
  EXPECT_TRUE(load_thesaurus(dir.write("syn.tsv", "")).empty());
  EXPECT_TRUE(load_thesaurus(dir.write("blank.tsv", "\n\n")).empty());
}

TEST(LoadThesaurus, MalformedRowsThrow) {
  TempDir dir;
  EXPECT_THROW(load_thesaurus(dir.write("a.tsv", "word-without-tab\n")),
               MalformedRowError);
  EXPECT_THROW(load_thesaurus(dir.write("b.tsv", "a\tx\tz\n")),
               MalformedRowError);
  EXPECT_THROW(load_thesaurus(dir.write("c.tsv", "a\t , ,\n")),
               MalformedRowError);
  EXPECT_THROW(load_thesaurus(dir.write("d.tsv", "\tx\n")),
               MalformedRowError);
  EXPECT_THROW(load_thesaurus(dir.path() / "missing.tsv"), IoError);
}

Thesaurus small_thesaurus() {
  Thesaurus thesaurus;
  thesaurus.entries["w0"] = {"x0"};
  thesaurus.entries["w2"] = {"x2"};
  return thesaurus;
}

EdaSpec spec_with(std::vector<EdaOp> operations, double alpha = 0.5) {
  EdaSpec spec;
  spec.alpha = alpha;
  spec.operations = std::move(operations);
  spec.synonym_source = small_thesaurus();
  return spec;
}

TEST(EdaAugment, SynonymReplacementOnlyTouchesThesaurusWords) {
  const auto corpus = make_corpus({{"s", "w0 w1 w2"}});
  const ParallelCorpus out = eda_augment(
      corpus, spec_with({EdaOp::SynonymReplacement}, 1.0), {9});
  // floor(1.0 * 3) = 3 wanted, two eligible positions.
  EXPECT_EQ(out.pairs[0].target, (Sentence{"x0", "w1", "x2"}));
  EXPECT_EQ(out.pairs[0].source, corpus.pairs[0].source);
}

TEST(EdaAugment, SynonymReplacementCountProperty) {
  SplitMix64 meta(31);
  const Thesaurus thesaurus = small_thesaurus();
  for (int trial = 0; trial < 10000; ++trial) {
    Sentence target;
    const std::size_t t = bounded(meta, 14);
    for (std::size_t i = 0; i < t; ++i) {
      target.push_back("w" + std::to_string(bounded(meta, 4)));
    }
    const double alpha = uniform_real(meta, 0.0, 1.0);
    ParallelCorpus corpus;
    corpus.add_pair({"s"}, Sentence(target));
    const ParallelCorpus out = eda_augment(
        corpus, spec_with({EdaOp::SynonymReplacement}, alpha), {meta.next()});
    const Sentence& result = out.pairs[0].target;
    ASSERT_EQ(result.size(), t);
    std::size_t eligible = 0;
    std::size_t changed = 0;
    for (std::size_t i = 0; i < t; ++i) {
      if (thesaurus.entries.count(target[i])) ++eligible;
      if (result[i] != target[i]) {
        ++changed;
        ASSERT_EQ(result[i], target[i] == "w0" ? "x0" : "x2");
      }
    }
    ASSERT_EQ(changed, std::min(affected_count(alpha, t), eligible));
  }
}

TEST(EdaAugment, RandomInsertionAddsSynonymTokens) {
  const auto corpus = make_corpus({{"s", "w0 w1"}});
  const ParallelCorpus out =
      eda_augment(corpus, spec_with({EdaOp::RandomInsertion}, 1.0), {4});
  const Sentence& result = out.pairs[0].target;
  ASSERT_EQ(result.size(), 4u);  // floor(1.0 * 2) = 2 insertions
  EXPECT_EQ(std::count(result.begin(), result.end(), Token("x0")), 2);
}

TEST(EdaAugment, RandomInsertionSizeProperty) {
  SplitMix64 meta(37);
  const Thesaurus thesaurus = small_thesaurus();
  for (int trial = 0; trial < 10000; ++trial) {
    Sentence target;
    const std::size_t t = bounded(meta, 14);
    bool has_eligible = false;
    for (std::size_t i = 0; i < t; ++i) {
      target.push_back("w" + std::to_string(bounded(meta, 4)));
      has_eligible = has_eligible || thesaurus.entries.count(target.back());
    }
    const double alpha = uniform_real(meta, 0.0, 1.0);
    ParallelCorpus corpus;
    corpus.add_pair({"s"}, Sentence(target));
    const ParallelCorpus out = eda_augment(
        corpus, spec_with({EdaOp::RandomInsertion}, alpha), {meta.next()});
    const Sentence& result = out.pairs[0].target;
    const std::size_t added = has_eligible ? affected_count(alpha, t) : 0;
    ASSERT_EQ(result.size(), t + added);
    for (const Token& token : result) {
      ASSERT_TRUE(token == "x0" || token == "x2" ||
                  std::find(target.begin(), target.end(), token) !=
                      target.end());
    }
  }
}

TEST(EdaAugment, RandomSwapMatchesStandaloneSwapTask) {
  SplitMix64 meta(41);
  for (int trial = 0; trial < 2000; ++trial) {
    SentencePair pair;
    const std::size_t t = bounded(meta, 14);
    for (std::size_t i = 0; i < t; ++i) {
      pair.target.push_back("w" + std::to_string(bounded(meta, 5)));
    }
    pair.source = {"s"};
    const double alpha = uniform_real(meta, 0.0, 1.0);
    const std::uint64_t master = meta.next();
    ParallelCorpus corpus;
    corpus.add_pair(Sentence(pair.source), Sentence(pair.target));
    const ParallelCorpus out =
        eda_augment(corpus, spec_with({EdaOp::RandomSwap}, alpha), {master});
    SplitMix64 rng(derive_item_seed(master, "eda", 0));
    ASSERT_EQ(out.pairs[0].target, task_swap(pair, alpha, rng).target);
  }
}

TEST(EdaAugment, RandomDeletionKeepsSubsequenceAndNeverEmpties) {
  SplitMix64 meta(43);
  for (int trial = 0; trial < 10000; ++trial) {
    Sentence target;
    const std::size_t t = 1 + bounded(meta, 13);
    for (std::size_t i = 0; i < t; ++i) {
      target.push_back("w" + std::to_string(i));
    }
    const double alpha = uniform_real(meta, 0.0, 1.0);
    ParallelCorpus corpus;
    corpus.add_pair({"s"}, Sentence(target));
    const ParallelCorpus out = eda_augment(
        corpus, spec_with({EdaOp::RandomDeletion}, alpha), {meta.next()});
    const Sentence& result = out.pairs[0].target;
    ASSERT_FALSE(result.empty());
    ASSERT_LE(result.size(), t);
    // Distinct input tokens: a retained subsequence is order-preserving.
    std::size_t cursor = 0;
    for (const Token& token : result) {
      while (cursor < t && target[cursor] != token) ++cursor;
      ASSERT_LT(cursor, t) << "not a subsequence";
      ++cursor;
    }
  }
}

TEST(EdaAugment, DeletionAtZeroAlphaIsIdentity) {
  const auto corpus = make_corpus({{"s", "a b c d"}});
  const ParallelCorpus out =
      eda_augment(corpus, spec_with({EdaOp::RandomDeletion}, 0.0), {1});
  EXPECT_EQ(out.pairs[0].target, corpus.pairs[0].target);
}

TEST(EdaAugment, DeletionAtFullAlphaRetainsOneToken) {
  const auto corpus = make_corpus({{"s", "a b c d"}});
  for (std::uint64_t master = 0; master < 50; ++master) {
    const ParallelCorpus out =
        eda_augment(corpus, spec_with({EdaOp::RandomDeletion}, 1.0), {master});
    ASSERT_EQ(out.pairs[0].target.size(), 1u);
    const Token& kept = out.pairs[0].target[0];
    ASSERT_TRUE(kept == "a" || kept == "b" || kept == "c" || kept == "d");
  }
}

TEST(EdaAugment, EmptyOperationListIsInvalid) {
  const auto corpus = make_corpus({{"s", "a"}});
  EXPECT_THROW(eda_augment(corpus, spec_with({}), {0}), std::invalid_argument);
}

TEST(EdaAugment, EmptyThesaurusDisablesLexicalOpsWithWarning) {
  const auto corpus = make_corpus({{"s", "a b c d e f"}});
  EdaSpec spec;  // all four operations, no thesaurus
  spec.alpha = 0.0;
  testing::internal::CaptureStderr();
  const ParallelCorpus out = eda_augment(corpus, spec, {3});
  const std::string warning = testing::internal::GetCapturedStderr();
  EXPECT_NE(warning.find("empty thesaurus"), std::string::npos);
  ASSERT_EQ(out.size(), 1u);
  // alpha 0 makes the surviving swap/deletion operations identities.
  EXPECT_EQ(out.pairs[0].target, corpus.pairs[0].target);
}

TEST(EdaAugment, EmptyThesaurusWithOnlyLexicalOpsThrows) {
  const auto corpus = make_corpus({{"s", "a"}});
  EdaSpec spec;
  spec.operations = {EdaOp::SynonymReplacement, EdaOp::RandomInsertion};
  testing::internal::CaptureStderr();
  EXPECT_THROW(eda_augment(corpus, spec, {0}), EmptyThesaurusError);
  testing::internal::GetCapturedStderr();
}

TEST(EdaAugment, OneSyntheticPairPerInputPairInOrder) {
  const auto corpus = make_corpus(
      {{"s1", "w0 w1 w2"}, {"s2", "w2 w3"}, {"s3", "w0"}});
  const ParallelCorpus out =
      eda_augment(corpus, spec_with({EdaOp::RandomSwap}), {0});
  ASSERT_EQ(out.size(), corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(out.pairs[i].source, corpus.pairs[i].source);
    EXPECT_EQ(out.pairs[i].index, i);
  }
}

TEST(EdaAugment, DeterministicAndSeedSensitive) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (int i = 0; i < 60; ++i) {
    rows.emplace_back("s", "w0 w1 w2 w3 w0 w2 w1 w3");
  }
  const ParallelCorpus corpus = make_corpus(rows);
  EdaSpec spec = spec_with({EdaOp::SynonymReplacement, EdaOp::RandomInsertion,
                            EdaOp::RandomSwap, EdaOp::RandomDeletion});
  const ParallelCorpus a = eda_augment(corpus, spec, {5});
  const ParallelCorpus b = eda_augment(corpus, spec, {5});
  EXPECT_EQ(a, b);
  const ParallelCorpus c = eda_augment(corpus, spec, {6});
  EXPECT_NE(a, c);
  EXPECT_EQ(a.size(), corpus.size());
  EXPECT_EQ(a.source_tag, corpus.source_tag);
}

TEST(CosineSimilarity, KnownGeometries) {
  EXPECT_DOUBLE_EQ(cosine_similarity({1.0, 0.0}, {0.0, 1.0}), 0.0);
  EXPECT_DOUBLE_EQ(cosine_similarity({2.0, 0.0}, {5.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(cosine_similarity({1.0, 0.0}, {-3.0, 0.0}), -1.0);
  EXPECT_DOUBLE_EQ(cosine_similarity({0.0, 0.0}, {1.0, 1.0}), 0.0);
  EXPECT_NEAR(cosine_similarity({1.0, 1.0}, {1.0, 0.0}), std::sqrt(0.5),
              1e-12);
}

EmbeddingTable small_table() {
  EmbeddingTable table;
  table.dimension = 2;
  table.vectors["a"] = {1.0, 0.0};
  table.vectors["b"] = {0.9, 0.1};
  table.vectors["c"] = {0.0, 1.0};
  return table;
}

TEST(NearestNeighbor, RanksByCosineSimilarity) {
  const EmbeddingTable table = small_table();
  EXPECT_EQ(nearest_neighbor(table, "a", 1), std::optional<Token>("b"));
  EXPECT_EQ(nearest_neighbor(table, "a", 2), std::optional<Token>("c"));
  EXPECT_EQ(nearest_neighbor(table, "c", 1), std::optional<Token>("b"));
  EXPECT_EQ(nearest_neighbor(table, "a", 3), std::nullopt);
  EXPECT_EQ(nearest_neighbor(table, "a", 0), std::nullopt);
  EXPECT_EQ(nearest_neighbor(table, "oov", 1), std::nullopt);
}

TEST(NearestNeighbor, TiesBreakLexicographically) {
  EmbeddingTable table;
  table.dimension = 2;
  table.vectors["a"] = {1.0, 0.0};
  table.vectors["b"] = {1.0, 0.0};
  table.vectors["c"] = {1.0, 0.0};
  EXPECT_EQ(nearest_neighbor(table, "a", 1), std::optional<Token>("b"));
  EXPECT_EQ(nearest_neighbor(table, "a", 2), std::optional<Token>("c"));
  EXPECT_EQ(nearest_neighbor(table, "b", 1), std::optional<Token>("a"));
}

TEST(NearestNeighbor, MatchesExhaustiveScan) {
  std::mt19937_64 meta(55);
  std::uniform_int_distribution<int> component(-3, 3);
  std::uniform_int_distribution<std::size_t> table_size(2, 60);
  for (int trial = 0; trial < 500; ++trial) {
    EmbeddingTable table;
    table.dimension = 3;
    const std::size_t n = table_size(meta);
    for (std::size_t i = 0; i < n; ++i) {
      table.vectors["w" + std::to_string(i)] = {
          static_cast<double>(component(meta)),
          static_cast<double>(component(meta)),
          static_cast<double>(component(meta))};
    }
    const Token query = "w" + std::to_string(meta() % n);
    // Own scan with the same normative formula and tie rule.
    const std::vector<double>& q = table.vectors.at(query);
    std::vector<std::pair<double, Token>> scored;
    for (const auto& [token, vec] : table.vectors) {
      if (token == query) continue;
      double dot = 0.0;
      double nq = 0.0;
      double nv = 0.0;
      for (std::size_t d = 0; d < 3; ++d) {
        dot += q[d] * vec[d];
        nq += q[d] * q[d];
        nv += vec[d] * vec[d];
      }
      const double sim = (nq == 0.0 || nv == 0.0)
                             ? 0.0
                             : dot / (std::sqrt(nq) * std::sqrt(nv));
      scored.emplace_back(sim, token);
    }
    std::sort(scored.begin(), scored.end(),
              [](const auto& lhs, const auto& rhs) {
                if (lhs.first != rhs.first) return lhs.first > rhs.first;
                return lhs.second < rhs.second;
              });
    for (std::size_t rank = 1; rank <= std::min<std::size_t>(4, scored.size());
         ++rank) {
      ASSERT_EQ(nearest_neighbor(table, query, rank),
                std::optional<Token>(scored[rank - 1].second))
          << "trial " << trial << " rank " << rank;
    }
    ASSERT_EQ(nearest_neighbor(table, query, scored.size() + 1), std::nullopt);
  }
}

TEST(EmbedReplace, ReplacesWithNearestNeighbor) {
  const auto corpus = make_corpus({{"s", "a"}});
  EmbedReplaceSpec spec;
  spec.alpha = 1.0;
  spec.embeddings = small_table();
  const ParallelCorpus out = embed_replace(corpus, spec, {0});
  EXPECT_EQ(out.pairs[0].target, (Sentence{"b"}));
  EXPECT_EQ(out.pairs[0].source, corpus.pairs[0].source);
}

TEST(EmbedReplace, SecondRankNeighbor) {
  const auto corpus = make_corpus({{"s", "a"}});
  EmbedReplaceSpec spec;
  spec.alpha = 1.0;
  spec.embeddings = small_table();
  spec.neighbor_rank = 2;
  const ParallelCorpus out = embed_replace(corpus, spec, {0});
  EXPECT_EQ(out.pairs[0].target, (Sentence{"c"}));
}

TEST(EmbedReplace, ZeroAlphaIsIdentity) {
  const auto corpus = make_corpus({{"s", "a b c"}});
  EmbedReplaceSpec spec;
  spec.alpha = 0.0;
  spec.embeddings = small_table();
  const ParallelCorpus out = embed_replace(corpus, spec, {0});
  EXPECT_EQ(out.pairs[0].target, corpus.pairs[0].target);
}

TEST(EmbedReplace, OutOfVocabularyTokensAreNeverSelected) {
  const auto corpus = make_corpus({{"s", "x y z"}});
  EmbedReplaceSpec spec;
  spec.alpha = 1.0;
  spec.embeddings = small_table();
  const ParallelCorpus out = embed_replace(corpus, spec, {0});
  EXPECT_EQ(out.pairs[0].target, corpus.pairs[0].target);
}

TEST(EmbedReplace, MissingNeighborLeavesTokenInPlace) {
  const auto corpus = make_corpus({{"s", "a a"}});
  EmbedReplaceSpec spec;
  spec.alpha = 1.0;
  EmbeddingTable lonely;
  lonely.dimension = 2;
  lonely.vectors["a"] = {1.0, 0.0};
  spec.embeddings = lonely;
  const ParallelCorpus out = embed_replace(corpus, spec, {0});
  EXPECT_EQ(out.pairs[0].target, corpus.pairs[0].target);
}

TEST(EmbedReplace, EmptyTableThrows) {
  const auto corpus = make_corpus({{"s", "a"}});
  EmbedReplaceSpec spec;
  EXPECT_THROW(embed_replace(corpus, spec, {0}), EmptyEmbeddingsError);
}

TEST(EmbedReplace, CountAndLengthProperty) {
  SplitMix64 meta(61);
  const EmbeddingTable table = small_table();
  for (int trial = 0; trial < 10000; ++trial) {
    Sentence target;
    const std::size_t t = bounded(meta, 14);
    std::size_t eligible = 0;
    for (std::size_t i = 0; i < t; ++i) {
      if (bounded(meta, 2) == 0) {
        target.push_back(bounded(meta, 2) == 0 ? "a" : "c");
        ++eligible;
      } else {
        target.push_back("oov" + std::to_string(i));
      }
    }
    const double alpha = uniform_real(meta, 0.0, 1.0);
    ParallelCorpus corpus;
    corpus.add_pair({"s"}, Sentence(target));
    EmbedReplaceSpec spec;
    spec.alpha = alpha;
    spec.embeddings = table;
    const ParallelCorpus out = embed_replace(corpus, spec, {meta.next()});
    const Sentence& result = out.pairs[0].target;
    ASSERT_EQ(result.size(), t);
    std::size_t changed = 0;
    for (std::size_t i = 0; i < t; ++i) {
      if (result[i] != target[i]) {
        ++changed;
        ASSERT_EQ(result[i], "b");  // nearest neighbor of both a and c
      }
    }
    ASSERT_EQ(changed, std::min(affected_count(alpha, t), eligible));
  }
}

TEST(EmbedReplace, DeterministicAndSeedSensitive) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (int i = 0; i < 60; ++i) rows.emplace_back("s", "a c a c a c");
  const ParallelCorpus corpus = make_corpus(rows);
  EmbedReplaceSpec spec;
  spec.embeddings = small_table();
  const ParallelCorpus a = embed_replace(corpus, spec, {11});
  EXPECT_EQ(a, embed_replace(corpus, spec, {11}));
  EXPECT_NE(a, embed_replace(corpus, spec, {12}));
}

}  // namespace
}  // namespace paraug
