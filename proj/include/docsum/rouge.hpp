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

#ifndef DOCSUM_ROUGE_HPP_
#define DOCSUM_ROUGE_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docsum/corpus.hpp"

namespace docsum {

enum class RougeVariant { R1, R2, RL };

std::string_view to_string(RougeVariant v);  // "rouge1" | "rouge2" | "rougeL"

struct RougeScore {
  RougeVariant variant = RougeVariant::R1;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

struct RougeScores {
  RougeScore r1{RougeVariant::R1};
  RougeScore r2{RougeVariant::R2};
  RougeScore rl{RougeVariant::RL};

  const RougeScore& get(RougeVariant v) const;
  RougeScore& get(RougeVariant v);
};

enum class RougeAggregation { Mean, Max };

std::string_view to_string(RougeAggregation a);
RougeAggregation parse_rouge_aggregation(std::string_view name);

using TokenSeq = std::vector<std::string>;

// 2PR / (P + R), or 0 when P + R = 0.
double f_measure(double precision, double recall);

// Clipped n-gram overlap. Precision divides by the candidate's n-gram count,
// recall by the reference's; a side shorter than n yields all zeros.
RougeScore rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference,
                   int n);

// Longest common subsequence over the whole token sequences.
RougeScore rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference);

RougeScores rouge(std::span<const std::string> candidate, std::span<const std::string> reference);

// Pairs candidates[i] with references[i] (the candidate regenerated at each
// reference's length) and aggregates per variant: Mean averages P, R and F
// separately; Max keeps the pair with the highest F.
RougeScores score_against_goldens(std::span<const TokenSeq> candidates,
                                  std::span<const TokenSeq> references,
                                  RougeAggregation aggregation = RougeAggregation::Mean);
// One candidate against every reference.
RougeScores score_against_goldens(const TokenSeq& candidate, std::span<const TokenSeq> references,
                                  RougeAggregation aggregation = RougeAggregation::Mean);

// Arithmetic mean of several score sets (e.g. macro average over documents).
RougeScores mean_scores(std::span<const RougeScores> scores);

// Normalized tokens of the given sentences, stopwords retained, in order.
TokenSeq rouge_tokens(std::span<const Sentence> sentences);
TokenSeq rouge_tokens(const Document& doc, std::span<const std::size_t> sentence_indices);

}  // namespace docsum

#endif  // DOCSUM_ROUGE_HPP_
