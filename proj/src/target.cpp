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

#include "docsum/target.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace docsum {
namespace {

std::map<std::string, double> term_frequencies(const Sentence& s) {
  std::map<std::string, double> tf;
  for (const Token& t : s.content_tokens) tf[t.normalized] += 1.0;
  return tf;
}

}  // namespace

double cosine_similarity(const Sentence& a, const Sentence& b) {
  if (a.content_tokens.empty() || b.content_tokens.empty()) return 0.0;
  const auto ta = term_frequencies(a);
  const auto tb = term_frequencies(b);
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (const auto& [term, count] : ta) {
    na += count * count;
    if (auto it = tb.find(term); it != tb.end()) dot += count * it->second;
  }
  for (const auto& [term, count] : tb) nb += count * count;
  return std::clamp(dot / std::sqrt(na * nb), 0.0, 1.0);
}

TargetAssignment assign_target(const Sentence& sentence, std::span<const GoldenSummary> goldens) {
  if (goldens.empty()) throw std::invalid_argument("assign_target: no golden summaries");
  TargetAssignment out;
  out.ref.sentence_index = sentence.index;
  double sum = 0.0;
  for (const GoldenSummary& g : goldens) {
    double best = 0.0;
    for (const Sentence& gs : g.sentences) best = std::max(best, cosine_similarity(sentence, gs));
    out.per_golden_max.push_back(best);
    sum += best;
  }
  out.target = sum / static_cast<double>(goldens.size());
  return out;
}

void attach_targets(FeatureMatrix& matrix, std::span<const Document* const> docs) {
  std::unordered_map<std::string, const Document*> by_id;
  for (const Document* d : docs) by_id.emplace(d->id, d);
  std::vector<double> targets;
  targets.reserve(matrix.rows());
  for (const SentenceRef& ref : matrix.refs()) {
    auto it = by_id.find(ref.document_id);
    if (it == by_id.end()) {
      throw std::invalid_argument("attach_targets: unknown document " + ref.document_id);
    }
    const Document& doc = *it->second;
    targets.push_back(assign_target(doc.sentences.at(ref.sentence_index), doc.goldens).target);
  }
  matrix.set_targets(std::move(targets));
}

}  // namespace docsum
