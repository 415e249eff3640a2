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

#ifndef DOCSUM_SUMMARIZE_HPP_
#define DOCSUM_SUMMARIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "docsum/corpus.hpp"
#include "docsum/ranker.hpp"

namespace docsum {

struct RankedSentence {
  std::size_t index = 0;
  double score = 0.0;
  bool selected = false;
};

struct Summary {
  std::string document_id;
  std::vector<std::size_t> indices;  // strictly ascending
  std::string text;                  // selected raw sentences joined by spaces

  bool operator==(const Summary&) const = default;
};

// Summary length as a sentence count or as a percentage of the document's
// sentences (rounded up, at least one).
class Cutoff {
 public:
  static Cutoff sentences(std::size_t count);
  static Cutoff percent(double pct);

  std::size_t resolve(std::size_t n_sentences) const;

 private:
  bool is_percent_ = false;
  std::size_t count_ = 1;
  double pct_ = 0.0;
};

// Scores every admissible sentence with the ranker (raw, unclamped scores).
// `stream` only matters for random rankers.
std::vector<RankedSentence> rank(const Document& doc, const TrainedRanker& ranker,
                                 std::uint64_t stream = 0);
// Same, but first checks that the ranker was trained on `expected`.
std::vector<RankedSentence> rank(const Document& doc, const TrainedRanker& ranker,
                                 FeatureSet expected, std::uint64_t stream = 0);

// Uniform random scores for the admissible sentences.
std::vector<RankedSentence> random_ranking(const Document& doc, std::uint64_t seed);

// Takes the `cutoff` best scores (ties go to the earlier sentence), marks
// them selected and returns them in document order. Throws
// std::invalid_argument when cutoff is 0.
Summary select(const Document& doc, std::span<RankedSentence> ranked, std::size_t cutoff);

// Cut-off equal to the golden's sentence count.
Summary summarize_like_golden(const Document& doc, std::span<RankedSentence> ranked,
                              const GoldenSummary& golden);
Summary summarize_like_golden(const Document& doc, const TrainedRanker& ranker,
                              const GoldenSummary& golden, std::uint64_t stream = 0);

// Uniform sample of admissible sentences without replacement, document order.
Summary random_summary(const Document& doc, std::size_t cutoff, std::uint64_t seed);

Summary summarize(const Document& doc, const TrainedRanker& ranker, const Cutoff& cutoff,
                  std::uint64_t stream = 0);

}  // namespace docsum

#endif  // DOCSUM_SUMMARIZE_HPP_
