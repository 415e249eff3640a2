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

#include <initializer_list>
#include <string_view>

#include "docsum/analyzer.hpp"

namespace docsum {
namespace {

constexpr std::string_view kStopwords[] = {
    "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and",
    "any", "are", "as", "at", "be", "because", "been", "before", "being", "below",
    "between", "both", "but", "by", "can", "could", "did", "do", "does", "doing", "down",
    "during", "each", "few", "for", "from", "further", "had", "has", "have", "having",
    "he", "her", "here", "hers", "herself", "him", "himself", "his", "how", "i", "if",
    "in", "into", "is", "it", "its", "itself", "just", "me", "more", "most", "my",
    "myself", "no", "nor", "not", "now", "of", "off", "on", "once", "only", "or",
    "other", "our", "ours", "ourselves", "out", "over", "own", "same", "she", "should",
    "so", "some", "such", "than", "that", "the", "their", "theirs", "them",
    "themselves", "then", "there", "these", "they", "this", "those", "through", "to",
    "too", "under", "until", "up", "very", "was", "we", "were", "what", "when", "where",
    "which", "while", "who", "whom", "why", "will", "with", "would", "you", "your",
    "yours", "yourself", "yourselves", "said", "says", "may", "might", "must", "shall",
    "upon", "within", "without", "yet", "per", "via", "among", "since", "however",
};

constexpr std::string_view kCuePhrases[] = {
    "in conclusion", "overall",   "to summarize",     "in a nutshell", "in summary",
    "to sum up",     "in short",  "in brief",         "to conclude",   "most importantly",
    "in essence",    "above all", "the main point is",
};

constexpr std::string_view kAbbreviations[] = {
    "dr.",  "mr.",  "mrs.", "ms.",   "prof.", "inc.", "ltd.", "co.",  "corp.", "jr.",
    "sr.",  "st.",  "vs.",  "etc.",  "e.g.",  "i.e.", "u.s.", "u.k.", "no.",   "fig.",
    "jan.", "feb.", "mar.", "apr.",  "aug.",  "sep.", "sept.", "oct.", "nov.", "dec.",
    "gen.", "gov.", "sen.", "rep.",  "approx.", "dept.", "est.", "mt.",
};

constexpr std::string_view kNumberWords[] = {
    "zero",    "one",     "two",      "three",   "four",     "five",    "six",
    "seven",   "eight",   "nine",     "ten",     "eleven",   "twelve",  "thirteen",
    "fifteen", "twenty",  "thirty",   "forty",   "fifty",    "sixty",   "seventy",
    "eighty",  "ninety",  "hundred",  "thousand", "million", "billion", "trillion",
    "dozen",   "first",   "second",   "third",   "half",
};

constexpr std::string_view kNouns[] = {
    "government", "minister",  "parliament", "election", "policy",    "market",
    "economy",    "bank",      "price",      "inflation", "budget",   "company",
    "investor",   "share",     "growth",     "trade",     "export",   "import",
    "team",       "player",    "match",      "season",    "coach",    "goal",
    "league",     "club",      "fan",        "stadium",   "victory",  "defeat",
    "scientist",  "research",  "study",      "experiment", "data",    "result",
    "university", "laboratory", "energy",    "climate",   "species",  "cell",
    "patient",    "doctor",    "hospital",   "health",    "disease",  "treatment",
    "city",       "country",   "region",     "people",    "family",   "child",
    "school",     "student",   "teacher",    "report",    "agency",   "official",
    "court",      "law",       "reform",     "vote",      "party",    "leader",
    "president",  "council",   "committee",  "plan",      "project",  "program",
    "system",     "network",   "technology", "device",    "product",  "service",
    "water",      "oil",       "gas",        "power",     "road",     "car",
    "year",       "month",     "week",       "day",       "time",     "history",
    "culture",    "festival",  "museum",     "art",       "music",    "film",
    "book",       "author",    "news",       "story",     "event",    "crowd",
    "weather",    "storm",     "rain",       "crisis",    "risk",     "cost",
    "tax",        "worker",    "job",        "industry",  "factory",  "farm",
    "crop",       "food",      "village",    "island",    "border",   "army",
    "peace",      "talks",     "deal",       "agreement", "meeting",  "summit",
    "conclusion", "summary",   "nutshell",   "decision",  "question", "answer",
    "cats",       "cat",       "dog",        "smith",      "percent",  "interest",
};

constexpr std::string_view kVerbs[] = {
    "announced", "said",      "reported", "rose",      "fell",      "increased",
    "decreased", "won",       "lost",     "scored",    "played",    "signed",
    "found",     "showed",    "discovered", "published", "launched", "opened",
    "closed",    "approved",  "rejected", "warned",    "expected",  "planned",
    "voted",     "elected",   "met",      "visited",   "built",     "produced",
    "grew",      "dropped",   "reached",  "began",     "ended",     "returned",
    "left",      "arrived",   "ran",      "run",       "runs",      "win",
    "wins",      "announce",  "report",   "show",      "shows",     "make",
    "makes",     "made",      "take",     "took",      "give",      "gave",
    "say",       "see",       "saw",      "continue",  "continued", "remain",
    "remained",  "became",    "become",   "led",       "lead",      "leads",
    "raised",    "cut",       "faced",    "helped",    "claimed",   "argued",
    "confirmed", "denied",    "agreed",   "hosted",    "attended",  "celebrated",
    "expect",    "believe",   "help",     "explain",   "compete",   "broke",
    "came",      "stood",     "formed",   "passed",    "remains",   "appears",
    "measures",  "warns",     "threatens", "highlights",
};

constexpr std::string_view kAdjectives[] = {
    "new",       "old",        "large",     "small",     "big",       "high",
    "low",       "major",      "minor",     "important", "national",  "local",
    "global",    "economic",   "political", "public",    "private",   "strong",
    "weak",      "early",      "late",      "final",     "recent",    "young",
    "senior",    "official",   "annual",    "main",      "key",       "free",
    "hard",      "easy",       "good",      "bad",       "great",     "best",
    "worst",     "long",       "short",     "rapid",     "slow",      "clear",
    "rare",      "common",     "social",    "cultural",  "scientific", "medical",
    "foreign",   "domestic",   "financial", "military",  "green",     "dark",
    "bright",    "historic",   "modern",    "ancient",   "full",      "open",
    "central",   "previous",   "careful",   "tiny",      "toxic",     "remote",
    "distant",   "resilient",  "indoor",    "next",      "last",      "consecutive",
};

constexpr std::string_view kAdverbs[] = {
    "quickly",   "slowly",    "recently",   "finally",   "already",  "still",
    "again",     "often",     "rarely",     "never",     "always",   "sharply",
    "nearly",    "almost",    "largely",    "mostly",    "widely",   "highly",
    "strongly",  "clearly",   "significantly", "steadily", "today",  "yesterday",
    "soon",      "later",     "together",   "abroad",    "well",     "even",
    "overall",
};

template <typename Range>
void add_tags(std::unordered_map<std::string, Pos>& lexicon, const Range& words, Pos pos) {
  for (std::string_view w : words) lexicon.emplace(std::string(w), pos);
}

}  // namespace

AnalyzerConfig AnalyzerConfig::english_defaults() {
  AnalyzerConfig config;
  for (std::string_view w : kStopwords) config.stopwords.emplace(w);
  for (std::string_view p : kCuePhrases) config.cue_phrases.emplace_back(p);
  for (std::string_view a : kAbbreviations) config.abbreviations.emplace(a);
  for (std::string_view n : kNumberWords) config.number_words.emplace(n);
  add_tags(config.lexicon, kNouns, Pos::Noun);
  add_tags(config.lexicon, kVerbs, Pos::Verb);
  add_tags(config.lexicon, kAdjectives, Pos::Adjective);
  add_tags(config.lexicon, kAdverbs, Pos::Adverb);
  return config;
}

}  // namespace docsum
