#!/usr/bin/env python3
# Copyright 2026 The docsum Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the ROUGE test fixtures.

rouge_golden.json: exact values from a brute-force oracle (fractions,
LCS by subset enumeration). rouge_reference.json: values from the
`rouge_score` package (pip install rouge-score).
"""

import itertools
import json
import random
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path


def f_measure(p, r):
    return Fraction(0) if p + r == 0 else 2 * p * r / (p + r)


def ngram_score(cand, ref, n):
    if len(cand) < n or len(ref) < n:
        return (Fraction(0),) * 3
    c = Counter(tuple(cand[i:i + n]) for i in range(len(cand) - n + 1))
    r = Counter(tuple(ref[i:i + n]) for i in range(len(ref) - n + 1))
    overlap = sum(min(v, r[g]) for g, v in c.items())
    p = Fraction(overlap, sum(c.values()))
    rec = Fraction(overlap, sum(r.values()))
    return p, rec, f_measure(p, rec)


def is_subsequence(seq, other):
    it = iter(other)
    return all(tok in it for tok in seq)


def lcs_length(a, b):
    # Longest subsequence of the shorter side that also occurs in the other.
    short, long_ = (a, b) if len(a) <= len(b) else (b, a)
    for size in range(len(short), 0, -1):
        for idx in itertools.combinations(range(len(short)), size):
            if is_subsequence([short[i] for i in idx], long_):
                return size
    return 0


def lcs_score(cand, ref):
    if not cand or not ref:
        return (Fraction(0),) * 3
    l = lcs_length(cand, ref)
    p = Fraction(l, len(cand))
    r = Fraction(l, len(ref))
    return p, r, f_measure(p, r)


def triple(t):
    return {"p": float(t[0]), "r": float(t[1]), "f": float(t[2])}


def golden_cases():
    fixed = [
        ("bigram_worked", "a b c", "a b d"),
        ("lcs_worked", "a x b y c", "a b c"),
        ("identical", "the cat sat on the mat", "the cat sat on the mat"),
        ("disjoint", "one two three", "four five six"),
        ("empty_candidate", "", "a b c"),
        ("empty_reference", "a b c", ""),
        ("single_token_bigram", "a", "a b"),
        ("clipped_repeats", "the the the the cat", "the cat sat"),
        ("reversed", "e d c b a", "a b c d e"),
        ("two_goldens_first", "a b c d", "a b c d"),
        ("subset", "a b", "x a y b z"),
        ("superset", "x a y b z", "a b"),
        ("repeated_bigrams", "a b a b a b", "a b a b"),
    ]
    rng = random.Random(20260101)
    vocab = "a b c d e f g".split()
    for i in range(25 - len(fixed)):
        cand = " ".join(rng.choice(vocab) for _ in range(rng.randint(1, 10)))
        ref = " ".join(rng.choice(vocab) for _ in range(rng.randint(1, 10)))
        fixed.append((f"random_{i:02d}", cand, ref))
    out = []
    for name, cand, ref in fixed:
        c, r = cand.split(), ref.split()
        out.append({
            "name": name, "candidate": c, "reference": r,
            "rouge1": triple(ngram_score(c, r, 1)),
            "rouge2": triple(ngram_score(c, r, 2)),
            "rougeL": triple(lcs_score(c, r)),
        })
    return out


def reference_cases():
    from rouge_score import rouge_scorer
    scorer = rouge_scorer.RougeScorer(["rouge1", "rouge2", "rougeL"], use_stemmer=False)
    rng = random.Random(7)
    vocab = ("bank rates rose market fell team won match goal species frog new data year "
             "the of in a and to officials said growth slow 2025 3 percent").split()
    out = []
    for i in range(10):
        ref = [rng.choice(vocab) for _ in range(rng.randint(8, 30))]
        cand = list(ref)
        for _ in range(rng.randint(1, 10)):
            op = rng.random()
            pos = rng.randrange(len(cand) + 1)
            if op < 0.4:
                cand.insert(pos, rng.choice(vocab))
            elif op < 0.7 and cand:
                del cand[min(pos, len(cand) - 1)]
            elif cand:
                cand[min(pos, len(cand) - 1)] = rng.choice(vocab)
        scores = scorer.score(" ".join(ref), " ".join(cand))
        entry = {"name": f"pair_{i:02d}", "candidate": " ".join(cand), "reference": " ".join(ref)}
        for key, s in scores.items():
            entry[key] = {"p": s.precision, "r": s.recall, "f": s.fmeasure}
        out.append(entry)
    return out


def main():
    root = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/fixtures")
    (root / "rouge_golden.json").write_text(json.dumps({"cases": golden_cases()}, indent=1) + "\n")
    (root / "rouge_reference.json").write_text(json.dumps({"cases": reference_cases()}, indent=1) + "\n")


if __name__ == "__main__":
    main()
