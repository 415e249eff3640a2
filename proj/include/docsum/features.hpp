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

#ifndef DOCSUM_FEATURES_HPP_
#define DOCSUM_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "docsum/analyzer.hpp"
#include "docsum/corpus.hpp"

namespace docsum {

enum class FeatureSet { Unaware, Aware, AwareDoc };

std::string_view to_string(FeatureSet set);
// "unaware" | "aware" | "aware_doc"; throws ValidationError otherwise.
FeatureSet parse_feature_set(std::string_view name);

// Maps a normalized content token to the term used for TF-ISF, e.g. a
// stemmer. An empty function is the identity.
using TermMapper = std::function<std::string(std::string_view)>;

// Per-document quantities shared by the document-aware features.
struct DocumentStats {
  std::size_t n_sentences = 0;
  std::size_t n_words = 0;
  // Indexed by Pos, counted over content tokens.
  std::array<std::size_t, 6> pos_counts{};
  std::unordered_map<std::string, std::size_t> term_sentence_frequency;
  double avg_sentence_length = 0.0;
  std::string category;

  std::size_t pos_count(Pos pos) const { return pos_counts[static_cast<std::size_t>(pos)]; }

  static DocumentStats compute(const Document& doc, const TermMapper& mapper = {});
};

struct FeatureOptions {
  // Spread parameter of cosine_position; larger values flatten it.
  double alpha = 2.0;
  // Cue phrases as normalized token sequences.
  std::vector<std::vector<std::string>> cue_phrases;
  // Closed category set, in one-hot column order.
  std::vector<std::string> categories;
  TermMapper term_mapper;

  // Cue phrases taken from the analyzer's config, tokenized by the analyzer.
  static FeatureOptions from(const Analyzer& analyzer, std::vector<std::string> categories,
                             double alpha = 2.0);
};

// -- Document-unaware features ---------------------------------------------

// 1 / (index + 1).
double ordinal_position(std::size_t index);
// Token count, stopwords included.
double raw_length(const Sentence& s);
// Share of content tokens tagged `pos`; 0 for a sentence without content.
double sentence_pos_ratio(const Sentence& s, Pos pos);
// Number tokens over all tokens.
double numerical_ratio(const Sentence& s);
// Cue phrase occurrences, matched greedily left to right without overlap
// (longest phrase first at each position).
double cue_words(const Sentence& s, const std::vector<std::vector<std::string>>& cue_phrases);

// -- Document-aware features -----------------------------------------------

// (cos(2*pi*index/(T-1)) + alpha - 1) / alpha; 1 for single-sentence
// documents. Ranges over [(alpha-2)/alpha, 1], peaking at both ends.
double cosine_position(std::size_t index, std::size_t n_sentences, double alpha);
// Token count divided by the document's mean sentence length.
double relative_length(const Sentence& s, const DocumentStats& stats);
// Sum over distinct content terms of tf * ln(T / sf), divided by the
// sentence's content length. 0 without content.
double tf_isf(const Sentence& s, const DocumentStats& stats, const TermMapper& mapper = {});
// Sentence count of `pos` over document count of `pos`; 0 when the document
// has none.
double doc_pos_ratio(const Sentence& s, const DocumentStats& stats, Pos pos);

// [n_sentences, n_words, one-hot(category) ...]. Throws ValidationError when
// the category is not in `categories`.
std::vector<double> document_features(const DocumentStats& stats,
                                      std::span<const std::string> categories);

// -- Vectors and matrices -----------------------------------------------------

struct SentenceRef {
  std::string document_id;
  std::size_t sentence_index = 0;

  bool operator==(const SentenceRef&) const = default;
};

struct FeatureVector {
  FeatureSet set = FeatureSet::Unaware;
  SentenceRef ref;
  std::vector<double> values;  // in feature_columns(set, ...) order
};

std::vector<std::string> feature_columns(FeatureSet set,
                                         std::span<const std::string> categories = {});

FeatureVector feature_vector(const Document& doc, const DocumentStats& stats,
                             std::size_t sentence_index, FeatureSet set,
                             const FeatureOptions& options);

// Row-major feature matrix with an optional target column.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(FeatureSet set, std::vector<std::string> columns)
      : set_(set), columns_(std::move(columns)) {}

  FeatureSet feature_set() const { return set_; }
  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t rows() const { return refs_.size(); }
  std::size_t cols() const { return columns_.size(); }
  bool empty() const { return refs_.empty(); }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols(), cols()};
  }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols(), cols()}; }
  double at(std::size_t i, std::size_t j) const { return data_[i * cols() + j]; }
  double& at(std::size_t i, std::size_t j) { return data_[i * cols() + j]; }

  const std::vector<SentenceRef>& refs() const { return refs_; }
  bool has_targets() const { return has_targets_; }
  const std::vector<double>& targets() const { return targets_; }
  void set_targets(std::vector<double> targets);

  // Throws std::invalid_argument if the vector's set or width differs.
  void append(const FeatureVector& v);
  void append_row(const SentenceRef& ref, std::span<const double> values,
                  const double* target = nullptr);

  FeatureMatrix select_rows(std::span<const std::size_t> indices) const;

  bool operator==(const FeatureMatrix&) const = default;

 private:
  FeatureSet set_ = FeatureSet::Unaware;
  std::vector<std::string> columns_;
  std::vector<SentenceRef> refs_;
  std::vector<double> data_;
  std::vector<double> targets_;
  bool has_targets_ = false;
};

// One row per admissible sentence, in document order then sentence order.
// Throws ValidationError when there is no row to emit.
FeatureMatrix build_matrix(std::span<const Document* const> docs, FeatureSet set,
                           const FeatureOptions& options);
FeatureMatrix build_matrix(const Corpus& corpus, FeatureSet set, const FeatureOptions& options);
FeatureMatrix build_matrix(const Document& doc, FeatureSet set, const FeatureOptions& options);

// Header: document_id, sentence_index, feature columns, then target if any.
void write_csv(const FeatureMatrix& matrix, std::ostream& out);

}  // namespace docsum

#endif  // DOCSUM_FEATURES_HPP_
