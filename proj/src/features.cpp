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

#include "docsum/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "docsum/csv.hpp"
#include "docsum/error.hpp"

namespace docsum {
namespace {

std::string map_term(const TermMapper& mapper, const std::string& term) {
  return mapper ? mapper(term) : term;
}

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

std::size_t count_pos(const std::vector<Token>& tokens, Pos pos) {
  std::size_t n = 0;
  for (const Token& t : tokens) n += t.pos == pos;
  return n;
}

constexpr Pos kSentencePos[] = {Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb};
constexpr Pos kDocumentPos[] = {Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb,
                                Pos::Number};

}  // namespace

std::string_view to_string(FeatureSet set) {
  switch (set) {
    case FeatureSet::Unaware: return "unaware";
    case FeatureSet::Aware: return "aware";
    case FeatureSet::AwareDoc: return "aware_doc";
  }
  return "unaware";
}

FeatureSet parse_feature_set(std::string_view name) {
  if (name == "unaware") return FeatureSet::Unaware;
  if (name == "aware") return FeatureSet::Aware;
  if (name == "aware_doc") return FeatureSet::AwareDoc;
  throw ValidationError("unknown feature set: " + std::string(name));
}

DocumentStats DocumentStats::compute(const Document& doc, const TermMapper& mapper) {
  DocumentStats stats;
  stats.category = doc.category;
  stats.n_sentences = doc.sentences.size();
  for (const Sentence& s : doc.sentences) {
    stats.n_words += s.tokens.size();
    for (const Token& t : s.content_tokens) ++stats.pos_counts[static_cast<std::size_t>(t.pos)];
    std::unordered_map<std::string, bool> seen;
    for (const Token& t : s.content_tokens) {
      std::string term = map_term(mapper, t.normalized);
      if (!seen.emplace(term, true).second) continue;
      ++stats.term_sentence_frequency[term];
    }
  }
  stats.avg_sentence_length =
      ratio(static_cast<double>(stats.n_words), static_cast<double>(stats.n_sentences));
  return stats;
}

FeatureOptions FeatureOptions::from(const Analyzer& analyzer, std::vector<std::string> categories,
                                    double alpha) {
  FeatureOptions options;
  options.alpha = alpha;
  options.categories = std::move(categories);
  for (const std::string& phrase : analyzer.config().cue_phrases) {
    auto terms = analyzer.terms(phrase);
    if (!terms.empty()) options.cue_phrases.push_back(std::move(terms));
  }
  return options;
}

double ordinal_position(std::size_t index) { return 1.0 / static_cast<double>(index + 1); }

double raw_length(const Sentence& s) { return static_cast<double>(s.tokens.size()); }

double sentence_pos_ratio(const Sentence& s, Pos pos) {
  return ratio(static_cast<double>(count_pos(s.content_tokens, pos)),
               static_cast<double>(s.content_tokens.size()));
}

double numerical_ratio(const Sentence& s) {
  return ratio(static_cast<double>(count_pos(s.tokens, Pos::Number)),
               static_cast<double>(s.tokens.size()));
}

double cue_words(const Sentence& s, const std::vector<std::vector<std::string>>& cue_phrases) {
  const auto& tokens = s.tokens;
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t best = 0;
    for (const auto& phrase : cue_phrases) {
      if (phrase.size() <= best || i + phrase.size() > tokens.size()) continue;
      bool match = true;
      for (std::size_t k = 0; k < phrase.size() && match; ++k) {
        match = tokens[i + k].normalized == phrase[k];
      }
      if (match) best = phrase.size();
    }
    if (best > 0) {
      ++count;
      i += best;
    } else {
      ++i;
    }
  }
  return static_cast<double>(count);
}

double cosine_position(std::size_t index, std::size_t n_sentences, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("cosine_position: alpha must be > 0");
  if (index >= n_sentences) throw std::invalid_argument("cosine_position: index out of range");
  if (n_sentences == 1) return 1.0;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(index) /
                       static_cast<double>(n_sentences - 1);
  return (std::cos(angle) + alpha - 1.0) / alpha;
}

double relative_length(const Sentence& s, const DocumentStats& stats) {
  return ratio(static_cast<double>(s.tokens.size()), stats.avg_sentence_length);
}

double tf_isf(const Sentence& s, const DocumentStats& stats, const TermMapper& mapper) {
  if (s.content_tokens.empty() || stats.n_sentences == 0) return 0.0;
  // Ordered container keeps the floating-point summation order stable.
  std::vector<std::pair<std::string, std::size_t>> tf;
  for (const Token& t : s.content_tokens) {
    std::string term = map_term(mapper, t.normalized);
    auto it = std::find_if(tf.begin(), tf.end(), [&](const auto& e) { return e.first == term; });
    if (it == tf.end()) {
      tf.emplace_back(std::move(term), 1);
    } else {
      ++it->second;
    }
  }
  const double T = static_cast<double>(stats.n_sentences);
  double sum = 0.0;
  for (const auto& [term, count] : tf) {
    auto it = stats.term_sentence_frequency.find(term);
    // A term missing from the stats only happens with mismatched inputs;
    // treat it as occurring in this sentence alone.
    const double sf = it == stats.term_sentence_frequency.end()
                          ? 1.0
                          : static_cast<double>(it->second);
    sum += static_cast<double>(count) * std::log(T / sf);
  }
  return sum / static_cast<double>(s.content_tokens.size());
}

double doc_pos_ratio(const Sentence& s, const DocumentStats& stats, Pos pos) {
  return ratio(static_cast<double>(count_pos(s.content_tokens, pos)),
               static_cast<double>(stats.pos_count(pos)));
}

std::vector<double> document_features(const DocumentStats& stats,
                                      std::span<const std::string> categories) {
  std::vector<double> out{static_cast<double>(stats.n_sentences),
                          static_cast<double>(stats.n_words)};
  bool found = false;
  for (const std::string& c : categories) {
    const bool hit = c == stats.category;
    found = found || hit;
    out.push_back(hit ? 1.0 : 0.0);
  }
  if (!found) throw ValidationError("unknown category: " + stats.category);
  return out;
}

std::vector<std::string> feature_columns(FeatureSet set, std::span<const std::string> categories) {
  switch (set) {
    case FeatureSet::Unaware:
      return {"ordinal_position", "length",          "noun_ratio",
              "verb_ratio",       "adjective_ratio", "adverb_ratio",
              "numerical_ratio",  "cue_words",       "tf_isf"};
    case FeatureSet::Aware:
      return {"cosine_position",  "relative_length",     "doc_noun_ratio",
              "doc_verb_ratio",   "doc_adjective_ratio", "doc_adverb_ratio",
              "doc_number_ratio", "cue_words",           "tf_isf"};
    case FeatureSet::AwareDoc: {
      auto columns = feature_columns(FeatureSet::Aware);
      columns.emplace_back("doc_sentences");
      columns.emplace_back("doc_words");
      for (const std::string& c : categories) columns.push_back("category=" + c);
      return columns;
    }
  }
  return {};
}

FeatureVector feature_vector(const Document& doc, const DocumentStats& stats,
                             std::size_t sentence_index, FeatureSet set,
                             const FeatureOptions& options) {
  const Sentence& s = doc.sentences.at(sentence_index);
  FeatureVector v;
  v.set = set;
  v.ref = {doc.id, sentence_index};
  auto& x = v.values;
  if (set == FeatureSet::Unaware) {
    x.push_back(ordinal_position(sentence_index));
    x.push_back(raw_length(s));
    for (Pos pos : kSentencePos) x.push_back(sentence_pos_ratio(s, pos));
    x.push_back(numerical_ratio(s));
    x.push_back(cue_words(s, options.cue_phrases));
    x.push_back(tf_isf(s, stats, options.term_mapper));
    return v;
  }
  x.push_back(cosine_position(sentence_index, stats.n_sentences, options.alpha));
  x.push_back(relative_length(s, stats));
  for (Pos pos : kDocumentPos) x.push_back(doc_pos_ratio(s, stats, pos));
  x.push_back(cue_words(s, options.cue_phrases));
  x.push_back(tf_isf(s, stats, options.term_mapper));
  if (set == FeatureSet::AwareDoc) {
    for (double d : document_features(stats, options.categories)) x.push_back(d);
  }
  return v;
}

void FeatureMatrix::set_targets(std::vector<double> targets) {
  if (targets.size() != rows()) throw std::invalid_argument("set_targets: size mismatch");
  targets_ = std::move(targets);
  has_targets_ = true;
}

void FeatureMatrix::append_row(const SentenceRef& ref, std::span<const double> values,
                               const double* target) {
  if (values.size() != cols()) throw std::invalid_argument("append_row: width mismatch");
  if (!empty() && (target != nullptr) != has_targets_) {
    throw std::invalid_argument("append_row: target presence must match existing rows");
  }
  refs_.push_back(ref);
  data_.insert(data_.end(), values.begin(), values.end());
  if (target != nullptr) {
    targets_.push_back(*target);
    has_targets_ = true;
  }
}

void FeatureMatrix::append(const FeatureVector& v) {
  if (v.set != set_) throw std::invalid_argument("append: feature set mismatch");
  append_row(v.ref, v.values);
}

FeatureMatrix FeatureMatrix::select_rows(std::span<const std::size_t> indices) const {
  FeatureMatrix out(set_, columns_);
  out.has_targets_ = has_targets_;
  for (std::size_t i : indices) {
    out.refs_.push_back(refs_.at(i));
    auto r = row(i);
    out.data_.insert(out.data_.end(), r.begin(), r.end());
    if (has_targets_) out.targets_.push_back(targets_[i]);
  }
  return out;
}

FeatureMatrix build_matrix(std::span<const Document* const> docs, FeatureSet set,
                           const FeatureOptions& options) {
  FeatureMatrix matrix(set, feature_columns(set, options.categories));
  for (const Document* doc : docs) {
    const DocumentStats stats = DocumentStats::compute(*doc, options.term_mapper);
    for (const Sentence& s : doc->sentences) {
      if (!s.admissible()) continue;
      matrix.append(feature_vector(*doc, stats, s.index, set, options));
    }
  }
  if (matrix.empty()) throw ValidationError("feature matrix would be empty");
  return matrix;
}

FeatureMatrix build_matrix(const Corpus& corpus, FeatureSet set, const FeatureOptions& options) {
  std::vector<const Document*> docs;
  for (const Document& d : corpus.documents) docs.push_back(&d);
  if (set == FeatureSet::AwareDoc && options.categories.empty()) {
    FeatureOptions with_categories = options;
    with_categories.categories = corpus.categories();
    return build_matrix(docs, set, with_categories);
  }
  return build_matrix(docs, set, options);
}

FeatureMatrix build_matrix(const Document& doc, FeatureSet set, const FeatureOptions& options) {
  const Document* docs[] = {&doc};
  return build_matrix(docs, set, options);
}

void write_csv(const FeatureMatrix& matrix, std::ostream& out) {
  out << "document_id,sentence_index";
  for (const std::string& c : matrix.columns()) out << ',' << csv_field(c);
  if (matrix.has_targets()) out << ",target";
  out << '\n';
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    out << csv_field(matrix.refs()[i].document_id) << ',' << matrix.refs()[i].sentence_index;
    for (double v : matrix.row(i)) out << ',' << format_number(v);
    if (matrix.has_targets()) out << ',' << format_number(matrix.targets()[i]);
    out << '\n';
  }
}

}  // namespace docsum
