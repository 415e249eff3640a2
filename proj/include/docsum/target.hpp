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

#ifndef DOCSUM_TARGET_HPP_
#define DOCSUM_TARGET_HPP_

#include <span>
#include <vector>

#include "docsum/corpus.hpp"
#include "docsum/features.hpp"

namespace docsum {

struct TargetAssignment {
  SentenceRef ref;
  double target = 0.0;
  // Best similarity to each golden, in golden order.
  std::vector<double> per_golden_max;
};

// Cosine of the term-frequency vectors over normalized content tokens.
// 0 when either side has no content.
double cosine_similarity(const Sentence& a, const Sentence& b);

// Mean over goldens of the best similarity to any sentence of that golden.
// An empty golden contributes 0. Throws std::invalid_argument without goldens.
TargetAssignment assign_target(const Sentence& sentence, std::span<const GoldenSummary> goldens);

// Fills the target column of a matrix from its row references.
void attach_targets(FeatureMatrix& matrix, std::span<const Document* const> docs);

}  // namespace docsum

#endif  // DOCSUM_TARGET_HPP_
