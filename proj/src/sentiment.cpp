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

#include "kpx/sentiment.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "kpx/error.hpp"
#include "kpx/text.hpp"

namespace kpx {

namespace vader {
namespace {

constexpr double B_INCR = kBoosterIncrement;
constexpr double B_DECR = -kBoosterIncrement;

const StringMap<double>& booster_dict() {
  static const StringMap<double> dict = {
      {"absolutely", B_INCR}, {"amazingly", B_INCR}, {"awfully", B_INCR},
      {"completely", B_INCR}, {"considerable", B_INCR}, {"considerably", B_INCR},
      {"decidedly", B_INCR}, {"deeply", B_INCR}, {"effing", B_INCR}, {"enormous", B_INCR},
      {"enormously", B_INCR}, {"entirely", B_INCR}, {"especially", B_INCR},
      {"exceptional", B_INCR}, {"exceptionally", B_INCR}, {"extreme", B_INCR},
      {"extremely", B_INCR}, {"fabulously", B_INCR}, {"flipping", B_INCR}, {"flippin", B_INCR},
      {"frackin", B_INCR}, {"fracking", B_INCR}, {"fricking", B_INCR}, {"frickin", B_INCR},
      {"frigging", B_INCR}, {"friggin", B_INCR}, {"fully", B_INCR}, {"fuckin", B_INCR},
      {"fucking", B_INCR}, {"fuggin", B_INCR}, {"fugging", B_INCR}, {"greatly", B_INCR},
      {"hella", B_INCR}, {"highly", B_INCR}, {"hugely", B_INCR}, {"incredible", B_INCR},
      {"incredibly", B_INCR}, {"intensely", B_INCR}, {"major", B_INCR}, {"majorly", B_INCR},
      {"more", B_INCR}, {"most", B_INCR}, {"particularly", B_INCR}, {"purely", B_INCR},
      {"quite", B_INCR}, {"really", B_INCR}, {"remarkably", B_INCR}, {"so", B_INCR},
      {"substantially", B_INCR}, {"thoroughly", B_INCR}, {"total", B_INCR}, {"totally", B_INCR},
      {"tremendous", B_INCR}, {"tremendously", B_INCR}, {"uber", B_INCR},
      {"unbelievably", B_INCR}, {"unusually", B_INCR}, {"utter", B_INCR}, {"utterly", B_INCR},
      {"very", B_INCR},
      {"almost", B_DECR}, {"barely", B_DECR}, {"hardly", B_DECR}, {"just enough", B_DECR},
      {"kind of", B_DECR}, {"kinda", B_DECR}, {"kindof", B_DECR}, {"kind-of", B_DECR},
      {"less", B_DECR}, {"little", B_DECR}, {"marginal", B_DECR}, {"marginally", B_DECR},
      {"occasional", B_DECR}, {"occasionally", B_DECR}, {"partly", B_DECR}, {"scarce", B_DECR},
      {"scarcely", B_DECR}, {"slight", B_DECR}, {"slightly", B_DECR}, {"somewhat", B_DECR},
      {"sort of", B_DECR}, {"sorta", B_DECR}, {"sortof", B_DECR}, {"sort-of", B_DECR}};
  return dict;
}

const WordSet& negations() {
  static const WordSet words = {
      "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
      "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
      "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
      "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
      "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing", "nowhere",
      "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
      "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't",
      "without", "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom", "despite"};
  return words;
}

const StringMap<double>& special_cases() {
  static const StringMap<double> cases = {
      {"the shit", 3}, {"the bomb", 3}, {"bad ass", 1.5}, {"badass", 1.5}, {"bus stop", 0.0},
      {"yeah right", -2}, {"kiss of death", -1.5}, {"to die for", 3}, {"beating heart", 3.5}};
  return cases;
}

bool is_ascii_punct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
         (c >= '{' && c <= '~');
}

// Python str.isupper(): at least one cased character and none lowercase.
bool is_all_caps(std::string_view word) {
  bool cased = false;
  for (std::size_t pos = 0; pos < word.size();) {
    const char32_t cp = text::decode(word, pos);
    if (text::is_lower(cp)) return false;
    if (text::is_upper(cp)) cased = true;
  }
  return cased;
}

// Whitespace split; leading/trailing ASCII punctuation stripped unless that
// leaves two characters or fewer (emoticons).
std::vector<std::string> words_and_emoticons(std::string_view s) {
  std::vector<std::string> out;
  for (std::string_view w : text::split_whitespace(s)) {
    std::size_t b = 0, e = w.size();
    while (b < e && is_ascii_punct(w[b])) ++b;
    while (e > b && is_ascii_punct(w[e - 1])) --e;
    const std::string_view stripped = w.substr(b, e - b);
    out.emplace_back(text::length(stripped) <= 2 ? w : stripped);
  }
  return out;
}

bool allcap_differential(const std::vector<std::string>& words) {
  std::size_t caps = 0;
  for (const auto& w : words) caps += is_all_caps(w) ? 1 : 0;
  const std::size_t diff = words.size() - caps;
  return diff > 0 && diff < words.size();
}

bool negated(std::string_view lower_word) {
  return negations().contains(lower_word) || lower_word.find("n't") != std::string_view::npos;
}

double scalar_inc_dec(const std::string& word, const std::string& lower, double valence,
                      bool cap_diff) {
  double scalar = booster(lower);
  if (scalar == 0.0) return 0.0;
  if (valence < 0) scalar *= -1;
  if (is_all_caps(word) && cap_diff) scalar += valence > 0 ? kCapsIncrement : -kCapsIncrement;
  return scalar;
}

class Scorer {
 public:
  Scorer(std::string_view text, const SentimentLexicon& lex)
      : text_(text), lex_(lex), words_(words_and_emoticons(text)) {
    lower_.reserve(words_.size());
    for (const auto& w : words_) lower_.push_back(text::to_lower(w));
    cap_diff_ = allcap_differential(words_);
  }

  double compound() {
    std::vector<double> sentiments;
    const std::size_t n = words_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (booster_dict().contains(lower_[i]) ||
          (i + 1 < n && lower_[i] == "kind" && lower_[i + 1] == "of")) {
        sentiments.push_back(0.0);
        continue;
      }
      sentiments.push_back(valence_at(i));
    }
    but_check(sentiments);
    if (sentiments.empty()) return 0.0;

    double sum = 0.0;
    for (double s : sentiments) sum += s;
    const double emphasis = punctuation_emphasis();
    if (sum > 0) {
      sum += emphasis;
    } else if (sum < 0) {
      sum -= emphasis;
    }
    return normalize(sum);
  }

 private:
  bool in_lexicon(std::size_t i) const { return lex_.contains(lower_[i]); }

  double valence_at(std::size_t i) const {
    const auto base = lex_.valence(lower_[i]);
    if (!base) return 0.0;
    double valence = *base;
    const std::size_t n = words_.size();

    if (lower_[i] == "no" && i != n - 1 && in_lexicon(i + 1)) valence = 0.0;
    if ((i > 0 && lower_[i - 1] == "no") || (i > 1 && lower_[i - 2] == "no") ||
        (i > 2 && lower_[i - 3] == "no" && (lower_[i - 1] == "or" || lower_[i - 1] == "nor"))) {
      valence = *base * kNegationScalar;
    }

    if (is_all_caps(words_[i]) && cap_diff_) valence += valence > 0 ? kCapsIncrement : -kCapsIncrement;

    for (std::size_t start = 0; start < 3; ++start) {
      if (i <= start) continue;
      const std::size_t j = i - (start + 1);
      if (in_lexicon(j)) continue;
      double s = scalar_inc_dec(words_[j], lower_[j], valence, cap_diff_);
      if (start == 1 && s != 0) s *= 0.95;
      if (start == 2 && s != 0) s *= 0.9;
      valence += s;
      valence = negation_check(valence, start, i);
      if (start == 2) valence = special_idioms_check(valence, i);
    }
    return least_check(valence, i);
  }

  double negation_check(double valence, std::size_t start, std::size_t i) const {
    const auto& w = lower_;
    if (start == 0) {
      if (negated(w[i - 1])) valence *= kNegationScalar;
    } else if (start == 1) {
      if (w[i - 2] == "never" && (w[i - 1] == "so" || w[i - 1] == "this")) {
        valence *= 1.25;
      } else if (w[i - 2] == "without" && w[i - 1] == "doubt") {
      } else if (negated(w[i - 2])) {
        valence *= kNegationScalar;
      }
    } else {
      if ((w[i - 3] == "never" && (w[i - 2] == "so" || w[i - 2] == "this")) ||
          (w[i - 1] == "so" || w[i - 1] == "this")) {
        valence *= 1.25;
      } else if (w[i - 3] == "without" && (w[i - 2] == "doubt" || w[i - 1] == "doubt")) {
      } else if (negated(w[i - 3])) {
        valence *= kNegationScalar;
      }
    }
    return valence;
  }

  double special_idioms_check(double valence, std::size_t i) const {
    const auto& w = lower_;
    const std::string onezero = w[i - 1] + " " + w[i];
    const std::string twoonezero = w[i - 2] + " " + w[i - 1] + " " + w[i];
    const std::string twoone = w[i - 2] + " " + w[i - 1];
    const std::string threetwoone = w[i - 3] + " " + w[i - 2] + " " + w[i - 1];
    const std::string threetwo = w[i - 3] + " " + w[i - 2];

    for (const std::string* seq : {&onezero, &twoonezero, &twoone, &threetwoone, &threetwo}) {
      const auto it = special_cases().find(*seq);
      if (it != special_cases().end()) {
        valence = it->second;
        break;
      }
    }
    if (w.size() - 1 > i) {
      const auto it = special_cases().find(w[i] + " " + w[i + 1]);
      if (it != special_cases().end()) valence = it->second;
    }
    if (w.size() - 1 > i + 1) {
      const auto it = special_cases().find(w[i] + " " + w[i + 1] + " " + w[i + 2]);
      if (it != special_cases().end()) valence = it->second;
    }
    for (const std::string* gram : {&threetwoone, &threetwo, &twoone}) {
      const auto it = booster_dict().find(*gram);
      if (it != booster_dict().end()) valence += it->second;
    }
    return valence;
  }

  double least_check(double valence, std::size_t i) const {
    if (i > 1 && !in_lexicon(i - 1) && lower_[i - 1] == "least") {
      if (lower_[i - 2] != "at" && lower_[i - 2] != "very") valence *= kNegationScalar;
    } else if (i > 0 && !in_lexicon(i - 1) && lower_[i - 1] == "least") {
      valence *= kNegationScalar;
    }
    return valence;
  }

  // The reference locates each value by its first equal element in the
  // partially rewritten list; that indexing is kept.
  void but_check(std::vector<double>& sentiments) const {
    const auto it = std::find(lower_.begin(), lower_.end(), "but");
    if (it == lower_.end()) return;
    const auto bi = static_cast<std::size_t>(it - lower_.begin());
    for (std::size_t k = 0; k < sentiments.size(); ++k) {
      const double value = sentiments[k];
      const auto si = static_cast<std::size_t>(
          std::find(sentiments.begin(), sentiments.end(), value) - sentiments.begin());
      if (si < bi) {
        sentiments[si] = value * 0.5;
      } else if (si > bi) {
        sentiments[si] = value * 1.5;
      }
    }
  }

  double punctuation_emphasis() const {
    const auto ep = std::min<std::ptrdiff_t>(std::count(text_.begin(), text_.end(), '!'), 4);
    const auto qm = std::count(text_.begin(), text_.end(), '?');
    double qm_amp = 0.0;
    if (qm > 1) qm_amp = qm <= 3 ? static_cast<double>(qm) * 0.18 : 0.96;
    return static_cast<double>(ep) * 0.292 + qm_amp;
  }

  std::string_view text_;
  const SentimentLexicon& lex_;
  std::vector<std::string> words_;
  std::vector<std::string> lower_;
  bool cap_diff_ = false;
};

}  // namespace

double booster(std::string_view lowercase_word) {
  const auto it = booster_dict().find(lowercase_word);
  return it == booster_dict().end() ? 0.0 : it->second;
}

bool is_negation(std::string_view lowercase_word) { return negated(lowercase_word); }

double normalize(double sum) {
  const double v = sum / std::sqrt(sum * sum + kNormalizationAlpha);
  return std::clamp(v, -1.0, 1.0);
}

}  // namespace vader

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& path) {
  SentimentLexicon lex;
  for (const auto& row : load_tsv(path, 2)) {
    const std::string& field = row[1];
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size() || errno != 0 || !std::isfinite(v))
      throw ConfigError(path.string() + ": bad valence \"" + field + "\" for " + row[0]);
    std::string token = row[0];
    while (!token.empty() && (token.back() == ' ' || token.back() == '\r')) token.pop_back();
    lex.add(token, v);
  }
  return lex;
}

void SentimentLexicon::add(std::string_view token, double valence) {
  entries_.insert_or_assign(std::string(token), valence);
}

std::optional<double> SentimentLexicon::valence(std::string_view lowercase_token) const {
  const auto it = entries_.find(lowercase_token);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

double sentiment_score(std::string_view text, const SentimentLexicon& lexicon) {
  return vader::Scorer(text, lexicon).compound();
}

}  // namespace kpx
