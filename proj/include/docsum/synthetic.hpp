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

#ifndef DOCSUM_SYNTHETIC_HPP_
#define DOCSUM_SYNTHETIC_HPP_

#include <cstddef>
#include <cstdint>

#include "docsum/corpus.hpp"

namespace docsum {

struct SyntheticOptions {
  std::size_t documents = 60;
  std::size_t min_sentences = 5;
  std::size_t max_sentences = 40;
  std::size_t goldens_per_document = 5;
  std::uint64_t seed = 2020;
};

// Generates an English-like corpus whose golden summaries are drawn from a
// latent sentence salience: a lead bias (with a weaker tail bias) measured
// relative to document length, sentence length relative to the document's
// mean, the share of sentence-specific vocabulary (high TF-ISF), and cue
// phrases. Four categories differ in sentence length, document length,
// number density and golden size. Deterministic for a given seed.
RawCorpusFile generate_synthetic_corpus(const SyntheticOptions& options);

}  // namespace docsum

#endif  // DOCSUM_SYNTHETIC_HPP_
