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

#include "docsum/summarize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "docsum/error.hpp"
#include "docsum/random.hpp"

namespace docsum {

Cutoff Cutoff::sentences(std::size_t count) {
  if (count == 0) throw std::invalid_argument("cutoff must be >= 1 sentence");
  Cutoff c;
  c.count_ = count;
  return c;
}

Cutoff Cutoff::percent(double pct) {
  if (!(pct > 0.0 && pct <= 100.0)) throw std::invalid_argument("cutoff percent must be in (0, 100]");
  Cutoff c;
  c.is_percent_ = true;
  c.pct_ = pct;
  return c;
}

std::size_t Cutoff::resolve(std::size_t n_sentences) const {
  if (!is_percent_) return count_;
  const auto n = static_cast<std::size_t>(std::ceil(pct_ / 100.0 * static_cast<double>(n_sentences)));
  return std::max<std::size_t>(1, n);
}

std::vector<RankedSentence> rank(const Document& doc, const TrainedRanker& ranker,
                                 std::uint64_t stream) {
  const FeatureMatrix local = prepare_matrix(ranker, doc);
  const std::vector<double> scores = predict(ranker.model, local, stream);
  std::vector<RankedSentence> out;
  out.reserve(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out.push_back({local.refs()[i].sentence_index, scores[i], false});
  }
  return out;
}

std::vector<RankedSentence> rank(const Document& doc, const TrainedRanker& ranker,
                                 FeatureSet expected, std::uint64_t stream) {
  if (ranker.feature_set != expected) {
    throw ValidationError("model was trained on feature set " +
                          std::string(to_string(ranker.feature_set)) + ", not " +
                          std::string(to_string(expected)));
  }
  return rank(doc, ranker, stream);
}

std::vector<RankedSentence> random_ranking(const Document& doc, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RankedSentence> out;
  for (const Sentence& s : doc.sentences) {
    if (s.admissible()) out.push_back({s.index, rng.uniform01(), false});
  }
  return out;
}

Summary select(const Document& doc, std::span<RankedSentence> ranked, std::size_t cutoff) {
  if (cutoff == 0) throw std::invalid_argument("select: cutoff must be >= 1");
  std::vector<std::size_t> order(ranked.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ranked[a].score != ranked[b].score) return ranked[a].score > ranked[b].score;
    return ranked[a].index < ranked[b].index;
  });
  const std::size_t take = std::min(cutoff, ranked.size());
  Summary summary;
  summary.document_id = doc.id;
  for (RankedSentence& r : ranked) r.selected = false;
  for (std::size_t i = 0; i < take; ++i) {
    ranked[order[i]].selected = true;
    summary.indices.push_back(ranked[order[i]].index);
  }
  std::sort(summary.indices.begin(), summary.indices.end());
  for (std::size_t idx : summary.indices) {
    if (!summary.text.empty()) summary.text += ' ';
    summary.text += doc.sentences.at(idx).raw;
  }
  return summary;
}

Summary summarize_like_golden(const Document& doc, std::span<RankedSentence> ranked,
                              const GoldenSummary& golden) {
  if (golden.sentences.empty()) return Summary{doc.id, {}, {}};
  return select(doc, ranked, golden.sentences.size());
}

Summary summarize_like_golden(const Document& doc, const TrainedRanker& ranker,
                              const GoldenSummary& golden, std::uint64_t stream) {
  auto ranked = rank(doc, ranker, stream);
  return summarize_like_golden(doc, ranked, golden);
}

Summary random_summary(const Document& doc, std::size_t cutoff, std::uint64_t seed) {
  if (cutoff == 0) throw std::invalid_argument("random_summary: cutoff must be >= 1");
  std::vector<std::size_t> pool;
  for (const Sentence& s : doc.sentences) {
    if (s.admissible()) pool.push_back(s.index);
  }
  Rng rng(seed);
  rng.shuffle(pool);
  pool.resize(std::min(cutoff, pool.size()));
  std::sort(pool.begin(), pool.end());
  Summary summary;
  summary.document_id = doc.id;
  summary.indices = pool;
  for (std::size_t idx : pool) {
    if (!summary.text.empty()) summary.text += ' ';
    summary.text += doc.sentences[idx].raw;
  }
  return summary;
}

Summary summarize(const Document& doc, const TrainedRanker& ranker, const Cutoff& cutoff,
                  std::uint64_t stream) {
  auto ranked = rank(doc, ranker, stream);
  return select(doc, ranked, cutoff.resolve(doc.sentences.size()));
}

}  // namespace docsum
