// Copyright 2026 The kpx Authors.
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

// Sentence splitting, tokenization, lexicon+rules POS tagging and
// POS-aware lemmatization.

#ifndef KPX_ANNOTATE_HPP_
#define KPX_ANNOTATE_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kpx/pos_tag.hpp"
#include "kpx/tables.hpp"

namespace kpx {

struct TaggedToken {
  std::string surface;
  std::string lemma;
  PosTag tag = PosTag::NN;
  std::size_t sentence_index = 0;
  std::size_t token_index = 0;

  bool operator==(const TaggedToken&) const = default;
};

/// Splits after runs of . ! ? that end a whitespace token. A lone period
/// does not split after a listed abbreviation (compared lowercase, final
/// period removed) or a single capital initial.
std::vector<std::string> split_sentences(std::string_view text, const WordSet& abbreviations);

/// Whitespace split, then leading and trailing runs of . ! ? ; : , become
/// tokens of their own. Hyphens and apostrophes stay inside words.
std::vector<std::string> tokenize(std::string_view sentence);

class TaggerLexicon {
 public:
  /// TSV `wordform<TAB>tag`. Lowercase wordforms match case-insensitively;
  /// wordforms containing capitals match only exactly.
  static TaggerLexicon load(const std::filesystem::path& path);

  void add(std::string_view form, PosTag tag);
  std::optional<PosTag> exact(std::string_view form) const;
  std::optional<PosTag> lower(std::string_view lowercase_form) const;
  std::size_t size() const { return lower_.size() + exact_.size(); }

 private:
  StringMap<PosTag> lower_;
  StringMap<PosTag> exact_;
};

/// Deterministic tagger: lexicon lookup (exact case, then lowercase), then
/// number/shape/suffix rules for unknown words, then NN.
class PosTagger {
 public:
  explicit PosTagger(TaggerLexicon lexicon);

  PosTag tag_one(std::string_view token) const;
  std::vector<std::pair<std::string, PosTag>> tag(const std::vector<std::string>& tokens) const;

  const TaggerLexicon& lexicon() const { return lexicon_; }

 private:
  PosTag unknown_word(std::string_view token) const;

  TaggerLexicon lexicon_;
};

enum class LemmaClass { noun, verb, adj, adv };

/// Exception rows (form != lemma) and known base forms (form == lemma), keyed
/// by POS class.
class LemmaTable {
 public:
  /// TSV `form<TAB>lemma<TAB>pos-class` with pos-class in noun|verb|adj|adv.
  static LemmaTable load(const std::filesystem::path& path);

  void add(std::string_view form, std::string_view lemma, LemmaClass cls);
  /// Follows exception chains so every exception target is terminal, and
  /// registers targets as base forms.
  void finalize();

  const std::string* exception(std::string_view form, LemmaClass cls) const;
  bool is_base(std::string_view form, LemmaClass cls) const;

 private:
  std::array<StringMap<std::string>, 4> exceptions_;
  std::array<WordSet, 4> bases_;
};

class Lemmatizer {
 public:
  explicit Lemmatizer(LemmaTable table);

  /// Lowercases, then exception lookup, then suffix stripping validated
  /// against known base forms, else the lowercased token.
  std::string lemma(std::string_view token, PosTag tag) const;

  std::vector<TaggedToken> lemmatize(const std::vector<std::pair<std::string, PosTag>>& tagged,
                                     std::size_t sentence_index = 0) const;

 private:
  std::string by_rules(const std::string& word, LemmaClass cls) const;

  LemmaTable table_;
};

/// Sentence split, tokenize, tag and lemmatize a clean document.
class Annotator {
 public:
  Annotator(WordSet abbreviations, PosTagger tagger, Lemmatizer lemmatizer);

  std::vector<std::vector<TaggedToken>> annotate(std::string_view text) const;

  const PosTagger& tagger() const { return tagger_; }
  const Lemmatizer& lemmatizer() const { return lemmatizer_; }
  const WordSet& abbreviations() const { return abbreviations_; }

 private:
  WordSet abbreviations_;
  PosTagger tagger_;
  Lemmatizer lemmatizer_;
};

}  // namespace kpx

#endif  // KPX_ANNOTATE_HPP_
