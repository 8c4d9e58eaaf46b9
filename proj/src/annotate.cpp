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

#include "kpx/annotate.hpp"

#include "kpx/error.hpp"
#include "kpx/text.hpp"

namespace kpx {

namespace {

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_detachable(char c) {
  return is_terminal(c) || c == ';' || c == ':' || c == ',';
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool is_consonant(char c) { return text::ascii_is_alpha(c) && !is_vowel(c); }

// consonant-vowel-consonant ending, final consonant not w/x/y ("hop", "stor")
bool ends_cvc(std::string_view s) {
  if (s.size() < 3) return false;
  const char a = s[s.size() - 3], b = s[s.size() - 2], c = s[s.size() - 1];
  return is_consonant(a) && is_vowel(b) && is_consonant(c) && c != 'w' && c != 'x' && c != 'y';
}

bool ends_doubled_consonant(std::string_view s) {
  return s.size() >= 2 && s.back() == s[s.size() - 2] && is_consonant(s.back());
}

std::optional<LemmaClass> lemma_class(PosTag tag) {
  if (is_noun(tag)) return LemmaClass::noun;
  if (is_verb(tag) || tag == PosTag::MD) return LemmaClass::verb;
  if (is_adjective(tag)) return LemmaClass::adj;
  if (is_adverb(tag)) return LemmaClass::adv;
  return std::nullopt;
}

bool is_base_tag(PosTag tag) {
  switch (tag) {
    case PosTag::NN: case PosTag::NNP: case PosTag::VB: case PosTag::VBP:
    case PosTag::JJ: case PosTag::RB: case PosTag::MD:
      return true;
    default:
      return false;
  }
}

PosTag punctuation_tag(std::string_view token) {
  switch (token.front()) {
    case '.': case '!': case '?': return PosTag::Period;
    case ',': return PosTag::Comma;
    case ';': case ':': case '-': return PosTag::Colon;
    case '\'': return PosTag::CloseQuote;
    default: return PosTag::SYM;
  }
}

bool has_alnum(std::string_view token) {
  for (std::size_t pos = 0; pos < token.size();) {
    const char32_t cp = text::decode(token, pos);
    if (text::is_letter(cp) || text::is_digit(cp)) return true;
  }
  return false;
}

bool is_numeric(std::string_view token) {
  bool digit = false;
  for (char c : token) {
    if (text::ascii_is_digit(c)) digit = true;
    else if (c != '.' && c != ',' && c != '-') return false;
  }
  return digit;
}

}  // namespace

// ---------------------------------------------------------------------------
// Segmentation

std::vector<std::string> split_sentences(std::string_view input, const WordSet& abbreviations) {
  std::vector<std::string> sentences;
  std::size_t sentence_start = std::string_view::npos;
  std::size_t pos = 0;
  while (pos < input.size()) {
    // Next whitespace-delimited token [tok_start, tok_end).
    const std::size_t tok_start = pos;
    std::size_t tok_end = pos;
    bool in_token = false;
    std::size_t scan = pos;
    std::size_t start = pos;
    while (scan < input.size()) {
      const std::size_t before = scan;
      const char32_t cp = text::decode(input, scan);
      if (text::is_space(cp)) {
        if (in_token) break;
        start = scan;
        continue;
      }
      if (!in_token) start = before;
      in_token = true;
      tok_end = scan;
    }
    pos = scan;
    if (!in_token) break;
    (void)tok_start;
    if (sentence_start == std::string_view::npos) sentence_start = start;

    const std::string_view token = input.substr(start, tok_end - start);
    if (!is_terminal(token.back())) continue;
    std::size_t run = token.size();
    while (run > 0 && is_terminal(token[run - 1])) --run;
    const std::string_view word = token.substr(0, run);
    const std::string_view punct = token.substr(run);
    if (punct == "." && !word.empty()) {
      const bool initial = word.size() == 1 && word[0] >= 'A' && word[0] <= 'Z';
      if (initial || abbreviations.contains(text::to_lower(word))) continue;
    }
    sentences.emplace_back(input.substr(sentence_start, tok_end - sentence_start));
    sentence_start = std::string_view::npos;
  }
  if (sentence_start != std::string_view::npos) {
    std::string tail = text::collapse_whitespace(input.substr(sentence_start));
    if (!tail.empty()) sentences.push_back(std::move(tail));
  }
  return sentences;
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> tokens;
  for (std::string_view chunk : text::split_whitespace(sentence)) {
    std::size_t lead = 0;
    while (lead < chunk.size() && is_detachable(chunk[lead])) ++lead;
    if (lead == chunk.size()) {
      tokens.emplace_back(chunk);
      continue;
    }
    std::size_t trail = chunk.size();
    while (trail > lead && is_detachable(chunk[trail - 1])) --trail;
    if (lead > 0) tokens.emplace_back(chunk.substr(0, lead));
    tokens.emplace_back(chunk.substr(lead, trail - lead));
    if (trail < chunk.size()) tokens.emplace_back(chunk.substr(trail));
  }
  return tokens;
}

// ---------------------------------------------------------------------------
// Tagging

TaggerLexicon TaggerLexicon::load(const std::filesystem::path& path) {
  TaggerLexicon lexicon;
  for (const auto& row : load_tsv(path, 2)) {
    const auto tag = parse_pos_tag(row[1]);
    if (!tag) throw ConfigError(path.string() + ": unknown tag \"" + row[1] + "\" for " + row[0]);
    lexicon.add(row[0], *tag);
  }
  return lexicon;
}

void TaggerLexicon::add(std::string_view form, PosTag tag) {
  const std::string lowered = text::to_lower(form);
  if (lowered == form) {
    lower_[lowered] = tag;
  } else {
    exact_[std::string(form)] = tag;
  }
}

std::optional<PosTag> TaggerLexicon::exact(std::string_view form) const {
  const auto it = exact_.find(form);
  if (it == exact_.end()) return std::nullopt;
  return it->second;
}

std::optional<PosTag> TaggerLexicon::lower(std::string_view lowercase_form) const {
  const auto it = lower_.find(lowercase_form);
  if (it == lower_.end()) return std::nullopt;
  return it->second;
}

PosTagger::PosTagger(TaggerLexicon lexicon) : lexicon_(std::move(lexicon)) {}

PosTag PosTagger::tag_one(std::string_view token) const {
  if (token.empty() || !has_alnum(token)) return token.empty() ? PosTag::SYM : punctuation_tag(token);
  if (const auto tag = lexicon_.exact(token)) return *tag;
  const std::string lowered = text::to_lower(token);
  if (const auto tag = lexicon_.lower(lowered)) return *tag;
  return unknown_word(token);
}

PosTag PosTagger::unknown_word(std::string_view token) const {
  if (is_numeric(token)) return PosTag::CD;
  std::size_t first = 0;
  if (text::is_upper(text::decode(token, first))) return PosTag::NNP;

  const std::string w = text::to_lower(token);
  if (w.find('-') != std::string::npos) return PosTag::JJ;
  if (w.size() > 4 && ends_with(w, "ing")) return PosTag::VBG;
  if (w.size() > 3 && ends_with(w, "ed")) return PosTag::VBD;
  if (w.size() > 3 && ends_with(w, "ly")) return PosTag::RB;
  if (w.size() > 3 && ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us") &&
      !ends_with(w, "is")) {
    // Plural noun or third-person verb, decided by what the stem is.
    std::vector<std::string> stems = {w.substr(0, w.size() - 1)};
    if (ends_with(w, "es")) stems.push_back(w.substr(0, w.size() - 2));
    if (ends_with(w, "ies")) stems.push_back(w.substr(0, w.size() - 3) + "y");
    for (const auto& stem : stems) {
      if (const auto tag = lexicon_.lower(stem)) {
        if (*tag == PosTag::VB || *tag == PosTag::VBP) return PosTag::VBZ;
        if (is_noun(*tag)) return PosTag::NNS;
      }
    }
    return PosTag::NNS;
  }
  for (std::string_view suffix : {"able", "ible", "ful", "ous", "ive", "less", "ical", "ish"}) {
    if (w.size() > suffix.size() + 2 && ends_with(w, suffix)) return PosTag::JJ;
  }
  return PosTag::NN;
}

std::vector<std::pair<std::string, PosTag>> PosTagger::tag(
    const std::vector<std::string>& tokens) const {
  std::vector<std::pair<std::string, PosTag>> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.emplace_back(t, tag_one(t));
  return out;
}

// ---------------------------------------------------------------------------
// Lemmatization

LemmaTable LemmaTable::load(const std::filesystem::path& path) {
  LemmaTable table;
  for (const auto& row : load_tsv(path, 3)) {
    LemmaClass cls;
    if (row[2] == "noun") cls = LemmaClass::noun;
    else if (row[2] == "verb") cls = LemmaClass::verb;
    else if (row[2] == "adj") cls = LemmaClass::adj;
    else if (row[2] == "adv") cls = LemmaClass::adv;
    else throw ConfigError(path.string() + ": unknown POS class \"" + row[2] + "\"");
    table.add(row[0], row[1], cls);
  }
  table.finalize();
  return table;
}

void LemmaTable::add(std::string_view form, std::string_view lemma, LemmaClass cls) {
  const auto i = static_cast<std::size_t>(cls);
  std::string f = text::to_lower(form);
  std::string l = text::to_lower(lemma);
  if (f == l) {
    bases_[i].insert(std::move(f));
  } else {
    exceptions_[i].try_emplace(std::move(f), std::move(l));
  }
}

void LemmaTable::finalize() {
  for (std::size_t i = 0; i < exceptions_.size(); ++i) {
    for (auto& [form, lemma] : exceptions_[i]) {
      for (int hop = 0; hop < 4; ++hop) {
        const auto next = exceptions_[i].find(lemma);
        if (next == exceptions_[i].end() || next->second == lemma || next->first == form) break;
        lemma = next->second;
      }
    }
    for (const auto& [form, lemma] : exceptions_[i]) bases_[i].insert(lemma);
    // An exception target must not itself be rewritten again.
    for (auto it = exceptions_[i].begin(); it != exceptions_[i].end();) {
      if (exceptions_[i].contains(it->second)) {
        it = exceptions_[i].erase(it);
      } else {
        ++it;
      }
    }
  }
}

const std::string* LemmaTable::exception(std::string_view form, LemmaClass cls) const {
  const auto& map = exceptions_[static_cast<std::size_t>(cls)];
  const auto it = map.find(form);
  return it == map.end() ? nullptr : &it->second;
}

bool LemmaTable::is_base(std::string_view form, LemmaClass cls) const {
  return bases_[static_cast<std::size_t>(cls)].contains(form);
}

Lemmatizer::Lemmatizer(LemmaTable table) : table_(std::move(table)) {}

std::string Lemmatizer::lemma(std::string_view token, PosTag tag) const {
  std::string word = text::to_lower(token);
  const auto cls = lemma_class(tag);
  if (!cls) return word;
  if (const std::string* exc = table_.exception(word, *cls)) return *exc;
  if (table_.is_base(word, *cls) || is_base_tag(tag)) return word;
  return by_rules(word, *cls);
}

std::string Lemmatizer::by_rules(const std::string& w, LemmaClass cls) const {
  auto known = [&](const std::string& s) { return !s.empty() && table_.is_base(s, cls); };
  auto strip = [&](std::size_t n) { return w.substr(0, w.size() - n); };

  // -ed / -ing / -er / -est: undoubling, e-restoration, or the bare stem.
  auto inflected_stem = [&](std::size_t suffix_len) -> std::optional<std::string> {
    const std::string stem = strip(suffix_len);
    if (stem.empty()) return std::nullopt;
    if (ends_doubled_consonant(stem) && !known(stem)) {
      const std::string undoubled = stem.substr(0, stem.size() - 1);
      if (known(undoubled)) return undoubled;
    }
    const std::string with_e = stem + "e";
    const bool plain_ok = known(stem);
    const bool e_ok = known(with_e);
    if (plain_ok && e_ok) return ends_cvc(stem) ? with_e : stem;
    if (e_ok) return with_e;
    if (plain_ok) return stem;
    return std::nullopt;
  };

  switch (cls) {
    case LemmaClass::noun: {
      static const std::pair<std::string_view, std::string_view> kRules[] = {
          {"ies", "y"}, {"ses", "s"}, {"xes", "x"}, {"zes", "z"}, {"ches", "ch"},
          {"shes", "sh"}, {"men", "man"}, {"ves", "f"}, {"ves", "fe"}, {"s", ""}};
      for (const auto& [suffix, repl] : kRules) {
        if (w.size() > suffix.size() && ends_with(w, suffix)) {
          std::string candidate = strip(suffix.size()) + std::string(repl);
          if (known(candidate)) return candidate;
        }
      }
      break;
    }
    case LemmaClass::verb: {
      if (ends_with(w, "ies") && w.size() > 4) {
        std::string c = strip(3) + "y";
        if (known(c)) return c;
      }
      if (ends_with(w, "ied") && w.size() > 4) {
        std::string c = strip(3) + "y";
        if (known(c)) return c;
      }
      if (ends_with(w, "es") && w.size() > 3) {
        if (std::string c = strip(1); known(c)) return c;  // -es -> -e
        if (std::string c = strip(2); known(c)) return c;
      }
      if (ends_with(w, "s") && !ends_with(w, "ss") && w.size() > 2) {
        if (std::string c = strip(1); known(c)) return c;
      }
      if (ends_with(w, "ed") && w.size() > 3) {
        if (auto c = inflected_stem(2)) return *c;
      }
      if (ends_with(w, "ing") && w.size() > 4) {
        if (auto c = inflected_stem(3)) return *c;
      }
      break;
    }
    case LemmaClass::adj: {
      for (std::string_view suffix : {"er", "est"}) {
        if (!ends_with(w, suffix) || w.size() <= suffix.size() + 1) continue;
        if (w[w.size() - suffix.size() - 1] == 'i') {
          std::string c = strip(suffix.size() + 1) + "y";
          if (known(c)) return c;
        }
        if (auto c = inflected_stem(suffix.size())) return *c;
      }
      break;
    }
    case LemmaClass::adv:
      break;
  }
  return w;
}

std::vector<TaggedToken> Lemmatizer::lemmatize(
    const std::vector<std::pair<std::string, PosTag>>& tagged, std::size_t sentence_index) const {
  std::vector<TaggedToken> out;
  out.reserve(tagged.size());
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    const auto& [surface, tag] = tagged[i];
    out.push_back({surface, lemma(surface, tag), tag, sentence_index, i});
  }
  return out;
}

// ---------------------------------------------------------------------------

Annotator::Annotator(WordSet abbreviations, PosTagger tagger, Lemmatizer lemmatizer)
    : abbreviations_(std::move(abbreviations)),
      tagger_(std::move(tagger)),
      lemmatizer_(std::move(lemmatizer)) {}

std::vector<std::vector<TaggedToken>> Annotator::annotate(std::string_view text) const {
  std::vector<std::vector<TaggedToken>> sentences;
  const auto raw = split_sentences(text, abbreviations_);
  for (std::size_t s = 0; s < raw.size(); ++s) {
    const auto tokens = tokenize(raw[s]);
    if (tokens.empty()) continue;
    sentences.push_back(lemmatizer_.lemmatize(tagger_.tag(tokens), sentences.size()));
  }
  return sentences;
}

}  // namespace kpx
