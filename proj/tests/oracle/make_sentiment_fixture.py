#!/usr/bin/env python3
# Copyright 2026 The kpx Authors.
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

"""Builds tests/data/sentiment_reference.tsv: 500 phrases drawn from the
bundled lexicon with boosters, negations and contrast words injected, scored
by the reference vaderSentiment 3.3.2 package with compound rounding off.

    pip install vaderSentiment==3.3.2
    python3 make_sentiment_fixture.py ../../data/sentiment_lexicon.tsv > ../data/sentiment_reference.tsv
"""

import random
import re
import sys

import vaderSentiment.vaderSentiment as vs

vs.round = lambda x, n=None: x  # unrounded compound

BOOSTERS = ["very", "extremely", "really", "so", "totally", "slightly", "barely",
            "kind of", "sort of", "somewhat", "hardly", "most", "less"]
NEGATIONS = ["not", "never", "isn't", "don't", "without", "nothing", "cannot", "no"]
FILLER = ["the", "a", "it", "is", "was", "this", "to", "of", "and", "we", "they", "mask",
          "public", "area", "home", "people", "today", "virus"]
IDIOMS = ["the bomb", "kiss of death", "yeah right", "to die for", "bus stop", "bad ass",
          "cut the mustard", "the shit", "beating heart"]


def main(lexicon_path):
    words = []
    with open(lexicon_path, encoding="utf-8") as f:
        for line in f:
            w = line.split("\t")[0]
            if re.fullmatch(r"[a-z]+", w):
                words.append(w)
    words.sort()
    rng = random.Random(2024)
    sia = vs.SentimentIntensityAnalyzer()

    def word():
        return rng.choice(words)

    phrases = set()
    while len(phrases) < 500:
        n = rng.randint(1, 6)
        toks = [word() if rng.random() < 0.6 else rng.choice(FILLER) for _ in range(n)]
        kind = rng.random()
        if kind < 0.25:
            toks.insert(rng.randint(0, len(toks)), rng.choice(BOOSTERS))
        elif kind < 0.45:
            toks.insert(rng.randint(0, len(toks)), rng.choice(NEGATIONS))
        elif kind < 0.55:
            toks.insert(rng.randint(0, len(toks)), rng.choice(BOOSTERS))
            toks.insert(0, rng.choice(NEGATIONS))
        elif kind < 0.65:
            toks = toks + ["but"] + [word() for _ in range(rng.randint(1, 3))]
        elif kind < 0.70:
            toks = [rng.choice(["least", "at least", "very least"])] + toks
        elif kind < 0.75:
            toks = rng.choice(["never so", "never this", "without doubt", "no or", "no nor"]).split() + toks
        elif kind < 0.80:
            toks.insert(rng.randint(0, len(toks)), rng.choice(IDIOMS))
        elif kind < 0.87:
            i = rng.randrange(len(toks))
            toks[i] = toks[i].upper()
            if rng.random() < 0.5:
                toks.insert(i, "VERY")
        elif kind < 0.94:
            toks[-1] = toks[-1] + rng.choice(["!", "!!", "!!!!!", "??", "???", "????", "?!"])
        if not any(t.strip() for t in toks):
            continue
        phrases.add(" ".join(toks))

    print("phrase\tcompound")
    for p in sorted(phrases):
        print("%s\t%r" % (p, sia.polarity_scores(p)["compound"]))


if __name__ == "__main__":
    main(sys.argv[1])
