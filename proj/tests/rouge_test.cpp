// Copyright 2026 The docsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "docsum/rouge.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "docsum/random.hpp"
#include "json.hpp"
#include "test_support.hpp"

namespace docsum {
namespace {

TokenSeq toks(const std::string& text) {
  std::istringstream in(text);
  TokenSeq out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

void expect_triple(const RougeScore& s, double p, double r, double f, double tol = 1e-12) {
  EXPECT_NEAR(s.precision, p, tol);
  EXPECT_NEAR(s.recall, r, tol);
  EXPECT_NEAR(s.f_measure, f, tol);
}

TEST(RougeN, IdenticalAndDisjoint) {
  const TokenSeq a = toks("the bank raised rates");
  for (int n : {1, 2}) {
    expect_triple(rouge_n(a, a, n), 1, 1, 1);
    expect_triple(rouge_n(a, toks("team won final match"), n), 0, 0, 0);
  }
}

TEST(RougeN, BigramWorkedExample) {
  expect_triple(rouge_n(toks("a b c"), toks("a b d"), 2), 0.5, 0.5, 0.5);
}

TEST(RougeN, ShorterThanN) {
  expect_triple(rouge_n(toks("a"), toks("a b"), 2), 0, 0, 0);
  expect_triple(rouge_n(TokenSeq{}, toks("a b"), 1), 0, 0, 0);
  EXPECT_THROW(rouge_n(toks("a b c"), toks("a b c"), 3), std::invalid_argument);
}

TEST(RougeL, WorkedExample) {
  expect_triple(rouge_l(toks("a x b y c"), toks("a b c")), 3.0 / 5.0, 1.0, 0.75);
  expect_triple(rouge_l(toks("a b c"), toks("a b c")), 1, 1, 1);
  expect_triple(rouge_l(TokenSeq{}, toks("a b c")), 0, 0, 0);
}

TEST(ScoreAgainstGoldens, SingleGoldenIsIdentity) {
  const TokenSeq cand = toks("a b c d");
  const std::vector<TokenSeq> refs = {toks("a c d e")};
  const RougeScores s = score_against_goldens(cand, refs);
  const RougeScores direct = rouge(cand, refs[0]);
  for (RougeVariant v : {RougeVariant::R1, RougeVariant::R2, RougeVariant::RL}) {
    EXPECT_EQ(s.get(v).f_measure, direct.get(v).f_measure);
    EXPECT_EQ(s.get(v).precision, direct.get(v).precision);
  }
}

TEST(ScoreAgainstGoldens, MeanOfTwoDisjointGoldens) {
  const TokenSeq cand = toks("a b c");
  const std::vector<TokenSeq> refs = {toks("a b c"), toks("x y z")};
  const RougeScores s = score_against_goldens(cand, refs);
  expect_triple(s.r1, 0.5, 0.5, 0.5);
  expect_triple(s.r2, 0.5, 0.5, 0.5);
  expect_triple(s.rl, 0.5, 0.5, 0.5);
  const RougeScores best = score_against_goldens(cand, refs, RougeAggregation::Max);
  expect_triple(best.r1, 1, 1, 1);
}

TEST(ScoreAgainstGoldens, PermutationInvariant) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<TokenSeq> refs(2 + rng.below(4));
    for (TokenSeq& r : refs) {
      for (std::size_t k = 1 + rng.below(12); k > 0; --k) r.push_back(std::string(1, 'a' + rng.below(6)));
    }
    TokenSeq cand;
    for (std::size_t k = 1 + rng.below(12); k > 0; --k) cand.push_back(std::string(1, 'a' + rng.below(6)));
    const RougeScores before = score_against_goldens(cand, refs);
    rng.shuffle(refs);
    const RougeScores after = score_against_goldens(cand, refs);
    for (RougeVariant v : {RougeVariant::R1, RougeVariant::R2, RougeVariant::RL}) {
      EXPECT_NEAR(before.get(v).f_measure, after.get(v).f_measure, 1e-15);
    }
  }
}

TEST(ScoreAgainstGoldens, PairedCandidates) {
  const std::vector<TokenSeq> cands = {toks("a b"), toks("x y z")};
  const std::vector<TokenSeq> refs = {toks("a b"), toks("x y z")};
  expect_triple(score_against_goldens(cands, refs).rl, 1, 1, 1);
  const std::vector<TokenSeq> one = {toks("a")};
  EXPECT_THROW(score_against_goldens(one, refs), std::invalid_argument);
}

// Swap, LCS bound, clipping and F definition over random token sequences.
TEST(Rouge, Properties) {
  Rng rng(99);
  auto random_seq = [&] {
    TokenSeq s;
    for (std::size_t k = rng.below(15); k > 0; --k) s.push_back(std::string(1, 'a' + rng.below(5)));
    return s;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const TokenSeq a = random_seq();
    const TokenSeq b = random_seq();
    for (int n : {1, 2}) {
      EXPECT_DOUBLE_EQ(rouge_n(a, b, n).precision, rouge_n(b, a, n).recall);
    }
    const RougeScore l = rouge_l(a, b);
    const double lcs = l.precision * static_cast<double>(a.size());
    EXPECT_LE(lcs, static_cast<double>(std::min(a.size(), b.size())) + 1e-9);
    EXPECT_EQ(l.f_measure == 1.0, !a.empty() && a == b);
    for (const RougeScore& s : {rouge_n(a, b, 1), rouge_n(a, b, 2), l}) {
      EXPECT_GE(s.precision, 0.0);
      EXPECT_LE(s.f_measure, 1.0);
      EXPECT_DOUBLE_EQ(s.f_measure, f_measure(s.precision, s.recall));
    }
    if (!a.empty() && !b.empty()) {
      // Repeating a candidate unigram never pushes its match past the reference count.
      TokenSeq padded = a;
      const std::string w = a[rng.below(a.size())];
      const auto in_ref = static_cast<double>(std::count(b.begin(), b.end(), w));
      for (int k = 0; k < 5; ++k) padded.push_back(w);
      const double overlap_before = rouge_n(a, b, 1).recall * static_cast<double>(b.size());
      const double overlap_after = rouge_n(padded, b, 1).recall * static_cast<double>(b.size());
      const auto in_cand = static_cast<double>(std::count(a.begin(), a.end(), w));
      EXPECT_LE(overlap_after - overlap_before, std::max(0.0, in_ref - in_cand) + 1e-9);
    }
  }
}

TEST(Rouge, GoldenFile) {
  const auto cases = nlohmann::json::parse(
      testing::read_file(testing::fixture_path("rouge_golden.json")))["cases"];
  ASSERT_EQ(cases.size(), 25u);
  for (const auto& c : cases) {
    const TokenSeq cand = c["candidate"].get<TokenSeq>();
    const TokenSeq ref = c["reference"].get<TokenSeq>();
    const RougeScores s = rouge(cand, ref);
    for (RougeVariant v : {RougeVariant::R1, RougeVariant::R2, RougeVariant::RL}) {
      const auto& e = c[std::string(to_string(v))];
      SCOPED_TRACE(c["name"].get<std::string>() + " " + std::string(to_string(v)));
      expect_triple(s.get(v), e["p"], e["r"], e["f"], 1e-9);
    }
  }
}

TEST(Rouge, TokensKeepStopwords) {
  const Sentence s = analyze_sentence("The bank of England", 0, testing::english());
  const std::vector<Sentence> v = {s};
  EXPECT_EQ(rouge_tokens(v), (TokenSeq{"the", "bank", "of", "england"}));
}

TEST(Rouge, AggregationNames) {
  EXPECT_EQ(parse_rouge_aggregation("max"), RougeAggregation::Max);
  EXPECT_EQ(to_string(RougeAggregation::Mean), "mean");
  EXPECT_EQ(to_string(RougeVariant::RL), "rougeL");
}

}  // namespace
}  // namespace docsum
