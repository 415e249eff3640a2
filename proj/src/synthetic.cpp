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

#include "docsum/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "docsum/analyzer.hpp"
#include "docsum/random.hpp"

namespace docsum {
namespace {

struct Style {
  const char* category;
  double mean_length;     // words per sentence
  std::size_t min_sentences;
  std::size_t max_sentences;
  double number_rate;     // per word
  std::size_t golden_size;
};

constexpr Style kStyles[] = {
    {"economy", 21.0, 16, 40, 0.10, 4},
    {"sport", 9.0, 5, 14, 0.06, 2},
    {"science", 14.0, 8, 28, 0.03, 3},
    {"politics", 16.0, 10, 34, 0.02, 3},
};

constexpr const char* kSyllables[] = {"ka", "lo", "mu", "ri", "ta", "ne", "zu", "pa", "vo",
                                      "sin", "dor", "kel", "mar", "tun", "gor", "bir", "sa"};

constexpr const char* kCueOpeners[] = {"In conclusion,", "Overall,", "In summary,", "To sum up,"};

struct Vocabulary {
  std::vector<std::string> nouns, verbs, adjectives, adverbs, stopwords;
  std::set<std::string> reserved;
};

Vocabulary english_vocabulary() {
  const AnalyzerConfig config = AnalyzerConfig::english_defaults();
  Vocabulary v;
  for (const auto& [word, pos] : config.lexicon) {
    if (config.stopwords.contains(word) || word.find(' ') != std::string::npos) continue;
    switch (pos) {
      case Pos::Noun: v.nouns.push_back(word); break;
      case Pos::Verb: v.verbs.push_back(word); break;
      case Pos::Adjective: v.adjectives.push_back(word); break;
      case Pos::Adverb: v.adverbs.push_back(word); break;
      default: break;
    }
    v.reserved.insert(word);
  }
  for (const std::string& w : config.stopwords) {
    v.stopwords.push_back(w);
    v.reserved.insert(w);
  }
  for (const std::string& w : config.number_words) v.reserved.insert(w);
  // The lexicon is a hash map; sort for a deterministic vocabulary.
  for (auto* list : {&v.nouns, &v.verbs, &v.adjectives, &v.adverbs, &v.stopwords}) {
    std::sort(list->begin(), list->end());
  }
  return v;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  return items[rng.below(items.size())];
}

std::string pseudo_word(Rng& rng) {
  std::string w;
  const std::size_t syllables = 2 + rng.below(2);
  for (std::size_t i = 0; i < syllables; ++i) w += kSyllables[rng.below(std::size(kSyllables))];
  return w;
}

std::string number_literal(Rng& rng) {
  switch (rng.below(3)) {
    case 0: return std::to_string(1 + rng.below(999));
    case 1: return std::to_string(rng.below(100)) + "." + std::to_string(rng.below(10));
    default: return std::to_string(1990 + rng.below(35));
  }
}

struct PlannedSentence {
  std::vector<std::string> words;
  double salience = 0.0;
};

std::string render(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string w = words[i];
    if (i == 0 && !w.empty() && w[0] >= 'a' && w[0] <= 'z') w[0] = static_cast<char>(w[0] - 32);
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out + ".";
}

}  // namespace

RawCorpusFile generate_synthetic_corpus(const SyntheticOptions& options) {
  if (options.min_sentences < 2 || options.min_sentences > options.max_sentences) {
    throw std::invalid_argument("synthetic corpus: need 2 <= min_sentences <= max_sentences");
  }
  if (options.goldens_per_document == 0) {
    throw std::invalid_argument("synthetic corpus: need at least one golden per document");
  }
  const Vocabulary vocab = english_vocabulary();
  Rng rng(options.seed);
  RawCorpusFile corpus;

  for (std::size_t d = 0; d < options.documents; ++d) {
    const Style& style = kStyles[d % std::size(kStyles)];
    const std::size_t lo = std::clamp(style.min_sentences, options.min_sentences, options.max_sentences);
    const std::size_t hi = std::clamp(style.max_sentences, lo, options.max_sentences);
    const std::size_t n = lo + rng.below(hi - lo + 1);

    // Words shared across the document's sentences (low TF-ISF).
    std::vector<std::string> filler;
    for (int i = 0; i < 6; ++i) filler.push_back(pick(rng, vocab.nouns));
    for (int i = 0; i < 3; ++i) filler.push_back(pick(rng, vocab.verbs));
    for (int i = 0; i < 3; ++i) filler.push_back(pick(rng, vocab.adjectives));
    filler.push_back(pick(rng, vocab.adverbs));

    std::set<std::string> used;
    auto fresh_word = [&] {
      for (;;) {
        std::string w = pseudo_word(rng);
        if (!vocab.reserved.contains(w) && used.insert(w).second) return w;
      }
    };

    std::vector<PlannedSentence> plan(n);
    std::vector<double> lengths(n);
    std::vector<double> informativeness(n);
    std::vector<bool> cue(n);
    for (std::size_t i = 0; i < n; ++i) {
      lengths[i] = std::max(4.0, std::round(style.mean_length * std::exp(0.4 * rng.normal())));
      informativeness[i] = 0.1 + 0.8 * rng.uniform01();
      cue[i] = rng.uniform01() < 0.06;
    }
    double mean_length = 0.0;
    for (double l : lengths) mean_length += l;
    mean_length /= static_cast<double>(n);

    for (std::size_t i = 0; i < n; ++i) {
      PlannedSentence& s = plan[i];
      if (cue[i]) s.words.push_back(kCueOpeners[rng.below(std::size(kCueOpeners))]);
      const auto length = static_cast<std::size_t>(lengths[i]);
      while (s.words.size() < length) {
        const double u = rng.uniform01();
        if (u < style.number_rate) {
          s.words.push_back(number_literal(rng));
        } else if (u < style.number_rate + 0.35) {
          s.words.push_back(pick(rng, vocab.stopwords));
        } else if (rng.uniform01() < informativeness[i]) {
          s.words.push_back(fresh_word());
        } else {
          s.words.push_back(pick(rng, filler));
        }
      }
      const double p = static_cast<double>(i) / static_cast<double>(n - 1);
      const double lead = std::exp(-p / 0.2);
      const double tail = std::exp(-(1.0 - p) / 0.2);
      s.salience = 2.0 * lead + 1.5 * tail + 1.2 * (lengths[i] / mean_length - 1.0) +
                   1.5 * (informativeness[i] - 0.5) + (cue[i] ? 1.0 : 0.0) + 0.4 * rng.normal();
    }

    RawDocument doc;
    doc.id = std::string(style.category) + "-" + std::to_string(1000 + d).substr(1);
    doc.category = style.category;
    for (const PlannedSentence& s : plan) {
      if (!doc.text.empty()) doc.text += ' ';
      doc.text += render(s.words);
    }

    for (std::size_t g = 0; g < options.goldens_per_document; ++g) {
      // Gumbel top-k: a sample without replacement proportional to
      // exp(salience / temperature).
      const double temperature = 0.6;
      std::vector<std::pair<double, std::size_t>> keys;
      for (std::size_t i = 0; i < n; ++i) {
        double u = rng.uniform01();
        while (u <= 0.0) u = rng.uniform01();
        keys.emplace_back(plan[i].salience / temperature - std::log(-std::log(u)), i);
      }
      std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
      });
      const auto jitter = static_cast<long>(rng.below(3)) - 1;
      const long wanted = static_cast<long>(style.golden_size) + jitter;
      const auto k = static_cast<std::size_t>(std::clamp<long>(wanted, 1, static_cast<long>(n) - 1));
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < k; ++i) chosen.push_back(keys[i].second);
      std::sort(chosen.begin(), chosen.end());

      std::string golden;
      for (std::size_t idx : chosen) {
        std::vector<std::string> words = plan[idx].words;
        // Human extracts are sometimes lightly edited.
        if (words.size() > 4 && rng.uniform01() < 0.25) {
          words.erase(words.begin() + 1 + static_cast<std::ptrdiff_t>(rng.below(words.size() - 1)));
        }
        if (!golden.empty()) golden += ' ';
        golden += render(words);
      }
      doc.golden_summaries.push_back(std::move(golden));
    }
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

}  // namespace docsum
