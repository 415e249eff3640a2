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

#include <algorithm>
#include <map>
#include <stdexcept>

#include "docsum/error.hpp"

namespace docsum {
namespace {

using NgramCounts = std::map<std::vector<std::string_view>, int>;

NgramCounts count_ngrams(std::span<const std::string> tokens, std::size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> gram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                       tokens.begin() + static_cast<std::ptrdiff_t>(i + n));
    ++counts[gram];
  }
  return counts;
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

RougeScore make_score(RougeVariant v, double overlap, double cand_total, double ref_total) {
  RougeScore s;
  s.variant = v;
  s.precision = cand_total > 0 ? overlap / cand_total : 0.0;
  s.recall = ref_total > 0 ? overlap / ref_total : 0.0;
  s.f_measure = f_measure(s.precision, s.recall);
  return s;
}

constexpr RougeVariant kVariants[] = {RougeVariant::R1, RougeVariant::R2, RougeVariant::RL};

}  // namespace

std::string_view to_string(RougeVariant v) {
  switch (v) {
    case RougeVariant::R1: return "rouge1";
    case RougeVariant::R2: return "rouge2";
    case RougeVariant::RL: return "rougeL";
  }
  return "rouge1";
}

const RougeScore& RougeScores::get(RougeVariant v) const {
  switch (v) {
    case RougeVariant::R1: return r1;
    case RougeVariant::R2: return r2;
    case RougeVariant::RL: return rl;
  }
  return r1;
}

RougeScore& RougeScores::get(RougeVariant v) {
  return const_cast<RougeScore&>(static_cast<const RougeScores&>(*this).get(v));
}

std::string_view to_string(RougeAggregation a) { return a == RougeAggregation::Mean ? "mean" : "max"; }

RougeAggregation parse_rouge_aggregation(std::string_view name) {
  if (name == "mean") return RougeAggregation::Mean;
  if (name == "max") return RougeAggregation::Max;
  throw ValidationError("unknown ROUGE aggregation: " + std::string(name));
}

double f_measure(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

RougeScore rouge_n(std::span<const std::string> candidate, std::span<const std::string> reference,
                   int n) {
  if (n != 1 && n != 2) throw std::invalid_argument("rouge_n: n must be 1 or 2");
  const RougeVariant variant = n == 1 ? RougeVariant::R1 : RougeVariant::R2;
  const auto size = static_cast<std::size_t>(n);
  if (candidate.size() < size || reference.size() < size) return RougeScore{variant};
  const NgramCounts cand = count_ngrams(candidate, size);
  const NgramCounts ref = count_ngrams(reference, size);
  double overlap = 0.0;
  for (const auto& [gram, count] : cand) {
    if (auto it = ref.find(gram); it != ref.end()) overlap += std::min(count, it->second);
  }
  return make_score(variant, overlap, static_cast<double>(candidate.size() - size + 1),
                    static_cast<double>(reference.size() - size + 1));
}

RougeScore rouge_l(std::span<const std::string> candidate, std::span<const std::string> reference) {
  const double lcs = static_cast<double>(lcs_length(candidate, reference));
  return make_score(RougeVariant::RL, lcs, static_cast<double>(candidate.size()),
                    static_cast<double>(reference.size()));
}

RougeScores rouge(std::span<const std::string> candidate, std::span<const std::string> reference) {
  return {rouge_n(candidate, reference, 1), rouge_n(candidate, reference, 2),
          rouge_l(candidate, reference)};
}

RougeScores score_against_goldens(std::span<const TokenSeq> candidates,
                                  std::span<const TokenSeq> references,
                                  RougeAggregation aggregation) {
  if (candidates.size() != references.size()) {
    throw std::invalid_argument("score_against_goldens: one candidate per reference required");
  }
  if (references.empty()) throw std::invalid_argument("score_against_goldens: no references");
  std::vector<RougeScores> per_reference;
  for (std::size_t i = 0; i < references.size(); ++i) {
    per_reference.push_back(rouge(candidates[i], references[i]));
  }
  if (aggregation == RougeAggregation::Mean) return mean_scores(per_reference);
  RougeScores best = per_reference.front();
  for (const RougeScores& s : per_reference) {
    for (RougeVariant v : kVariants) {
      if (s.get(v).f_measure > best.get(v).f_measure) best.get(v) = s.get(v);
    }
  }
  return best;
}

RougeScores score_against_goldens(const TokenSeq& candidate, std::span<const TokenSeq> references,
                                  RougeAggregation aggregation) {
  std::vector<TokenSeq> candidates(references.size(), candidate);
  return score_against_goldens(candidates, references, aggregation);
}

RougeScores mean_scores(std::span<const RougeScores> scores) {
  RougeScores out;
  if (scores.empty()) return out;
  const double n = static_cast<double>(scores.size());
  for (RougeVariant v : kVariants) {
    RougeScore& acc = out.get(v);
    for (const RougeScores& s : scores) {
      acc.precision += s.get(v).precision;
      acc.recall += s.get(v).recall;
      acc.f_measure += s.get(v).f_measure;
    }
    acc.precision /= n;
    acc.recall /= n;
    acc.f_measure /= n;
  }
  return out;
}

TokenSeq rouge_tokens(std::span<const Sentence> sentences) {
  TokenSeq out;
  for (const Sentence& s : sentences) {
    for (const Token& t : s.tokens) out.push_back(t.normalized);
  }
  return out;
}

TokenSeq rouge_tokens(const Document& doc, std::span<const std::size_t> sentence_indices) {
  TokenSeq out;
  for (std::size_t idx : sentence_indices) {
    for (const Token& t : doc.sentences.at(idx).tokens) out.push_back(t.normalized);
  }
  return out;
}

}  // namespace docsum
