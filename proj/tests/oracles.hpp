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


// Slow reference implementations used to check the library.

#ifndef DOCSUM_TESTS_ORACLES_HPP_
#define DOCSUM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "docsum/corpus.hpp"
#include "docsum/regression.hpp"

namespace docsum::oracle {

using Rows = std::vector<std::vector<double>>;

// Exhaustive CART: every feature, every cut between adjacent distinct values,
// SSE recomputed from scratch for each candidate. First strictly best split
// wins (lowest feature, then lowest cut).
struct BruteTree {
  const Rows& x;
  const std::vector<double>& y;
  int max_depth;
  std::size_t min_leaf;
  std::vector<TreeNode> nodes;

  static double sse(const std::vector<std::size_t>& idx, const std::vector<double>& y) {
    if (idx.empty()) return 0.0;
    double mean = 0.0;
    for (std::size_t i : idx) mean += y[i];
    mean /= static_cast<double>(idx.size());
    double s = 0.0;
    for (std::size_t i : idx) s += (y[i] - mean) * (y[i] - mean);
    return s;
  }

  int grow(const std::vector<std::size_t>& idx, int depth) {
    const int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    double mean = 0.0;
    for (std::size_t i : idx) mean += y[i];
    nodes[id].value = mean / static_cast<double>(idx.size());
    nodes[id].samples = idx.size();
    const double parent = sse(idx, y);
    std::set<double> distinct_y;
    for (std::size_t i : idx) distinct_y.insert(y[i]);
    if (depth >= max_depth || idx.size() < 2 * min_leaf || distinct_y.size() == 1) return id;

    int best_f = -1;
    double best_t = 0.0;
    const double tol = 1e-9 * parent;
    double best_gain = 0.0;
    for (std::size_t f = 0; f < x[0].size(); ++f) {
      std::set<double> values;
      for (std::size_t i : idx) values.insert(x[i][f]);
      for (auto it = values.begin(); std::next(it) != values.end(); ++it) {
        const double lo = *it;
        const double hi = *std::next(it);
        std::vector<std::size_t> l, r;
        for (std::size_t i : idx) (x[i][f] <= lo ? l : r).push_back(i);
        if (l.size() < min_leaf || r.size() < min_leaf) continue;
        const double gain = parent - sse(l, y) - sse(r, y);
        if (gain > best_gain + tol) {
          best_gain = gain;
          best_f = static_cast<int>(f);
          const double mid = lo + (hi - lo) / 2.0;
          best_t = mid < hi ? mid : lo;
        }
      }
    }
    if (best_f < 0) return id;
    std::vector<std::size_t> l, r;
    for (std::size_t i : idx) (x[i][static_cast<std::size_t>(best_f)] <= best_t ? l : r).push_back(i);
    nodes[id].feature = best_f;
    nodes[id].threshold = best_t;
    const int left = grow(l, depth + 1);
    nodes[id].left = left;
    const int right = grow(r, depth + 1);
    nodes[id].right = right;
    return id;
  }
};

inline std::vector<TreeNode> brute_tree(const Rows& x, const std::vector<double>& y, int max_depth,
                                        std::size_t min_leaf) {
  BruteTree t{x, y, max_depth, min_leaf, {}};
  std::vector<std::size_t> all(y.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  t.grow(all, 0);
  return t.nodes;
}

// Cosine over an explicit vocabulary vector of content words.
inline double brute_cosine(const Sentence& a, const Sentence& b) {
  std::set<std::string> vocab;
  for (const Token& t : a.content_tokens) vocab.insert(t.normalized);
  for (const Token& t : b.content_tokens) vocab.insert(t.normalized);
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (const std::string& w : vocab) {
    double ca = 0.0, cb = 0.0;
    for (const Token& t : a.content_tokens) ca += t.normalized == w;
    for (const Token& t : b.content_tokens) cb += t.normalized == w;
    dot += ca * cb;
    na += ca * ca;
    nb += cb * cb;
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::min(1.0, dot / (std::sqrt(na) * std::sqrt(nb)));
}

// Mean over goldens of the best match among that golden's sentences.
inline double brute_target(const Sentence& s, const std::vector<GoldenSummary>& goldens) {
  double total = 0.0;
  for (const GoldenSummary& g : goldens) {
    std::vector<double> sims;
    for (const Sentence& gs : g.sentences) sims.push_back(brute_cosine(s, gs));
    total += sims.empty() ? 0.0 : *std::max_element(sims.begin(), sims.end());
  }
  return total / static_cast<double>(goldens.size());
}

// Least squares with intercept by conjugate gradient on the normal equations.
// Returns weights followed by the intercept.
inline std::vector<double> least_squares_cg(const Rows& x, const std::vector<double>& y,
                                            int sweeps = 20) {
  const std::size_t n = x.size();
  const std::size_t p = x[0].size() + 1;
  auto design = [&](std::size_t i, std::size_t j) { return j + 1 == p ? 1.0 : x[i][j]; };
  auto normal_apply = [&](const std::vector<double>& v) {
    std::vector<double> xv(n, 0.0), out(p, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < p; ++j) xv[i] += design(i, j) * v[j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < p; ++j) out[j] += design(i, j) * xv[i];
    return out;
  };
  std::vector<double> b(p, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) b[j] += design(i, j) * y[i];
  std::vector<double> w(p, 0.0);
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    std::vector<double> aw = normal_apply(w);
    std::vector<double> r(p), d(p);
    double rr = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      r[j] = b[j] - aw[j];
      d[j] = r[j];
      rr += r[j] * r[j];
    }
    for (std::size_t it = 0; it < p && rr > 0.0; ++it) {
      const std::vector<double> ad = normal_apply(d);
      double dad = 0.0;
      for (std::size_t j = 0; j < p; ++j) dad += d[j] * ad[j];
      if (dad <= 0.0) break;
      const double step = rr / dad;
      double rr_new = 0.0;
      for (std::size_t j = 0; j < p; ++j) {
        w[j] += step * d[j];
        r[j] -= step * ad[j];
        rr_new += r[j] * r[j];
      }
      for (std::size_t j = 0; j < p; ++j) d[j] = r[j] + (rr_new / rr) * d[j];
      rr = rr_new;
    }
  }
  return w;
}

}  // namespace docsum::oracle

#endif  // DOCSUM_TESTS_ORACLES_HPP_
