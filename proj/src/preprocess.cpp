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

#include "kpx/preprocess.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "kpx/csv.hpp"
#include "kpx/error.hpp"
#include "kpx/text.hpp"

namespace kpx {

namespace {

bool is_scheme_char(char c) {
  return text::ascii_is_alpha(c) || text::ascii_is_digit(c) || c == '+' || c == '.' || c == '-';
}

bool iequals_at(std::string_view s, std::size_t pos, std::string_view lower_needle) {
  if (pos + lower_needle.size() > s.size()) return false;
  for (std::size_t k = 0; k < lower_needle.size(); ++k) {
    char c = s[pos + k];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
    if (c != lower_needle[k]) return false;
  }
  return true;
}

// Start of the first URL-shaped substring in `token`, or npos.
std::size_t find_url(std::string_view token) {
  std::size_t best = std::string_view::npos;
  for (std::size_t p = token.find("://"); p != std::string_view::npos;
       p = token.find("://", p + 1)) {
    std::size_t start = p;
    while (start > 0 && is_scheme_char(token[start - 1])) --start;
    while (start < p && !text::ascii_is_alpha(token[start])) ++start;
    if (start < p) {
      best = start;
      break;
    }
  }
  for (std::size_t p = 0; p + 4 <= token.size() && p < best; ++p) {
    if (iequals_at(token, p, "www.")) {
      best = p;
      break;
    }
  }
  return best;
}

bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

struct Entity {
  std::string_view name;
  char32_t cp;
};

constexpr std::array kEntities = {
    Entity{"amp", '&'},      Entity{"lt", '<'},        Entity{"gt", '>'},
    Entity{"quot", '"'},     Entity{"apos", '\''},     Entity{"nbsp", ' '},
    Entity{"copy", 0xA9},    Entity{"reg", 0xAE},      Entity{"trade", 0x2122},
    Entity{"hellip", 0x2026}, Entity{"mdash", 0x2014}, Entity{"ndash", 0x2013},
    Entity{"lsquo", 0x2018}, Entity{"rsquo", 0x2019},  Entity{"ldquo", 0x201C},
    Entity{"rdquo", 0x201D}, Entity{"laquo", 0xAB},    Entity{"raquo", 0xBB},
    Entity{"bull", 0x2022},  Entity{"middot", 0xB7},   Entity{"deg", 0xB0},
    Entity{"euro", 0x20AC},  Entity{"pound", 0xA3},    Entity{"cent", 0xA2},
    Entity{"yen", 0xA5},     Entity{"sect", 0xA7},     Entity{"para", 0xB6},
    Entity{"times", 0xD7},   Entity{"divide", 0xF7},   Entity{"plusmn", 0xB1},
    Entity{"frac12", 0xBD},  Entity{"frac14", 0xBC},   Entity{"frac34", 0xBE},
    Entity{"iexcl", 0xA1},   Entity{"iquest", 0xBF},   Entity{"shy", 0xAD},
    Entity{"aacute", 0xE1},  Entity{"agrave", 0xE0},   Entity{"acirc", 0xE2},
    Entity{"auml", 0xE4},    Entity{"atilde", 0xE3},   Entity{"aring", 0xE5},
    Entity{"ccedil", 0xE7},  Entity{"eacute", 0xE9},   Entity{"egrave", 0xE8},
    Entity{"ecirc", 0xEA},   Entity{"euml", 0xEB},     Entity{"iacute", 0xED},
    Entity{"igrave", 0xEC},  Entity{"icirc", 0xEE},    Entity{"iuml", 0xEF},
    Entity{"ntilde", 0xF1},  Entity{"oacute", 0xF3},   Entity{"ograve", 0xF2},
    Entity{"ocirc", 0xF4},   Entity{"ouml", 0xF6},     Entity{"otilde", 0xF5},
    Entity{"oslash", 0xF8},  Entity{"uacute", 0xFA},   Entity{"ugrave", 0xF9},
    Entity{"ucirc", 0xFB},   Entity{"uuml", 0xFC},     Entity{"yacute", 0xFD},
    Entity{"szlig", 0xDF},   Entity{"Aacute", 0xC1},   Entity{"Eacute", 0xC9},
    Entity{"Ntilde", 0xD1},  Entity{"Ouml", 0xD6},     Entity{"Uuml", 0xDC},
    Entity{"Auml", 0xC4},    Entity{"Ccedil", 0xC7},
};

std::string remove_tags(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == '<') {
      std::size_t j = i + 1;
      if (j < s.size() && (s[j] == '/' || s[j] == '!')) ++j;
      const bool starts_name = j < s.size() && (text::ascii_is_alpha(s[j]) || s[j] == '-');
      if (starts_name) {
        const auto close = s.find_first_of("<>", j);
        if (close != std::string_view::npos && s[close] == '>') {
          out.push_back(' ');
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

std::string decode_entities(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    const auto semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(s[i++]);
      continue;
    }
    const std::string_view body = s.substr(i + 1, semi - i - 1);
    bool decoded = false;
    if (body.size() >= 2 && body[0] == '#') {
      const bool hex = body[1] == 'x' || body[1] == 'X';
      const std::string_view digits = body.substr(hex ? 2 : 1);
      char32_t cp = 0;
      bool ok = !digits.empty() && digits.size() <= 8;
      for (char c : digits) {
        if (!ok) break;
        int v = -1;
        if (text::ascii_is_digit(c)) v = c - '0';
        else if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
        if (v < 0) ok = false;
        else cp = cp * (hex ? 16 : 10) + static_cast<char32_t>(v);
      }
      if (ok) {
        if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = text::kReplacement;
        text::append_utf8(out, cp);
        decoded = true;
      }
    } else {
      for (const auto& e : kEntities) {
        if (e.name == body) {
          text::append_utf8(out, e.cp);
          decoded = true;
          break;
        }
      }
    }
    if (decoded) {
      i = semi + 1;
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

bool is_sentence_punct(char c) {
  return c == '.' || c == '!' || c == '?' || c == ';' || c == ':' || c == ',';
}

bool is_number_word(std::string_view token) {
  bool need_digit = true;
  for (char c : token) {
    if (text::ascii_is_digit(c)) {
      need_digit = false;
    } else if ((c == '.' || c == ',') && !need_digit) {
      need_digit = true;
    } else {
      return false;
    }
  }
  return !need_digit;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExpansionTable

ExpansionTable ExpansionTable::parse(std::istream& in, std::string_view header_key,
                                     const std::string& origin) {
  ExpansionTable table;
  csv::Reader reader(in);
  bool first = true;
  while (auto row = reader.next()) {
    const std::string where = origin + ":" + std::to_string(reader.line());
    if (reader.error()) throw ConfigError(where + ": unterminated quoted field");
    const bool blank = row->size() == 1 && text::collapse_whitespace((*row)[0]).empty();
    if (blank || (!row->empty() && !(*row)[0].empty() && (*row)[0][0] == '#')) continue;
    if (row->size() != 2) throw ConfigError(where + ": expected 2 columns");
    if (first && text::to_lower((*row)[0]) == header_key) {
      first = false;
      continue;
    }
    first = false;
    const std::string key = text::collapse_whitespace((*row)[0]);
    if (key.empty()) throw ConfigError(where + ": empty key");
    table.add(key, text::collapse_whitespace((*row)[1]));
  }
  return table;
}

ExpansionTable ExpansionTable::load(const std::filesystem::path& path,
                                    std::string_view header_key) {
  auto in = open_data_file(path);
  return parse(in, header_key, path.string());
}

void ExpansionTable::add(std::string_view key, std::string expansion) {
  std::string normalized;
  for (std::size_t pos = 0; pos < key.size();) {
    const char32_t cp = text::decode(key, pos);
    text::append_utf8(normalized, is_apostrophe(cp) ? U'\'' : text::to_lower(cp));
  }
  entries_[normalized] = std::move(expansion);
}

const std::string* ExpansionTable::find(std::string_view lowercase_key) const {
  const auto it = entries_.find(lowercase_key);
  return it == entries_.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// Steps

std::string strip_social_artifacts(std::string_view input) {
  std::string out;
  for (std::string_view token : text::split_whitespace(input)) {
    if (token.front() == '@' || token.front() == '#') continue;
    const auto url = find_url(token);
    if (url != std::string_view::npos) token = token.substr(0, url);
    if (token.empty()) continue;
    if (!out.empty()) out.push_back(' ');
    out.append(token);
  }
  return out;
}

std::string expand_contractions(std::string_view input, const ExpansionTable& contractions) {
  std::string out;
  out.reserve(input.size());
  std::size_t pos = 0;
  while (pos < input.size()) {
    std::size_t start = pos;
    char32_t cp = text::decode(input, pos);
    const bool word_char = (cp < 0x80 && text::ascii_is_alpha(static_cast<char>(cp))) ||
                           is_apostrophe(cp);
    if (!word_char) {
      out.append(input.substr(start, pos - start));
      continue;
    }
    // Maximal run of ASCII letters and apostrophes.
    std::string key;
    bool leading_upper = false;
    bool seen_letter = false;
    std::size_t end = start;
    for (std::size_t p = start; p < input.size();) {
      const std::size_t before = p;
      cp = text::decode(input, p);
      if (is_apostrophe(cp)) {
        key.push_back('\'');
      } else if (cp < 0x80 && text::ascii_is_alpha(static_cast<char>(cp))) {
        if (!seen_letter) leading_upper = cp >= 'A' && cp <= 'Z';
        seen_letter = true;
        key.push_back(static_cast<char>(text::to_lower(cp)));
      } else {
        p = before;
        end = p;
        break;
      }
      end = p;
    }
    pos = end;
    const std::string* expansion = contractions.find(key);
    if (expansion == nullptr || expansion->empty()) {
      out.append(input.substr(start, end - start));
      continue;
    }
    std::string replaced = *expansion;
    if (leading_upper && replaced[0] >= 'a' && replaced[0] <= 'z') {
      replaced[0] = static_cast<char>(replaced[0] - 32);
    }
    out += replaced;
  }
  return text::collapse_whitespace(out);
}

std::string decode_html(std::string_view input) {
  constexpr int kMaxDecodePasses = 5;
  std::string current(input);
  for (int pass = 0; pass < kMaxDecodePasses; ++pass) {
    std::string next = decode_entities(remove_tags(current));
    if (next == current) break;
    current = std::move(next);
  }
  return text::collapse_whitespace(current);
}

bool in_keep_set(char32_t cp) {
  if (text::is_letter(cp) || text::is_digit(cp) || text::is_space(cp)) return true;
  switch (cp) {
    case '.': case '!': case '?': case ';': case ':': case ',': case '\'': case '-':
      return true;
    default:
      return false;
  }
}

std::string strip_special_chars(std::string_view input) {
  std::string out;
  out.reserve(input.size());
  for (std::size_t pos = 0; pos < input.size();) {
    const char32_t cp = text::decode(input, pos);
    if (in_keep_set(cp)) text::append_utf8(out, text::is_space(cp) ? U' ' : cp);
  }
  return text::collapse_whitespace(out);
}

std::string compress_repeats(std::string_view input) {
  std::string out;
  out.reserve(input.size());
  char32_t last = 0;
  int run = 0;
  for (std::size_t pos = 0; pos < input.size();) {
    const char32_t cp = text::decode(input, pos);
    run = (cp == last) ? run + 1 : 1;
    last = cp;
    if (run <= 2 || text::is_space(cp)) text::append_utf8(out, cp);
  }
  return text::collapse_whitespace(out);
}

std::string expand_slang(std::string_view input, const ExpansionTable& slang) {
  std::string out;
  for (std::string_view token : text::split_whitespace(input)) {
    std::size_t lead = 0;
    while (lead < token.size() && is_sentence_punct(token[lead])) ++lead;
    std::size_t trail = token.size();
    while (trail > lead && is_sentence_punct(token[trail - 1])) --trail;
    const std::string_view core = token.substr(lead, trail - lead);
    if (!out.empty()) out.push_back(' ');
    const std::string* expansion = core.empty() ? nullptr : slang.find(text::to_lower(core));
    if (expansion == nullptr) {
      out.append(token);
    } else {
      out.append(token.substr(0, lead));
      out.append(*expansion);
      out.append(token.substr(trail));
    }
  }
  return text::collapse_whitespace(out);
}

std::string remove_number_words(std::string_view input) {
  std::string out;
  for (std::string_view token : text::split_whitespace(input)) {
    if (is_number_word(token)) continue;
    if (!out.empty()) out.push_back(' ');
    out.append(token);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Preprocessor

const std::vector<std::string>& Preprocessor::step_names() {
  static const std::vector<std::string> names = {
      "strip_social_artifacts", "expand_contractions", "decode_html",
      "strip_special_chars",    "compress_repeats",    "expand_slang",
      "remove_number_words"};
  return names;
}

Preprocessor::Preprocessor(ExpansionTable contractions, ExpansionTable slang)
    : contractions_(std::move(contractions)), slang_(std::move(slang)) {}

std::string Preprocessor::single_pass(std::string_view input,
                                      std::vector<std::string>* applied) const {
  std::string current = text::sanitize_utf8(input);
  const auto& names = step_names();
  auto step = [&](std::size_t index, std::string next) {
    if (applied && next != current &&
        std::find(applied->begin(), applied->end(), names[index]) == applied->end()) {
      applied->push_back(names[index]);
    }
    current = std::move(next);
  };
  for (std::size_t i = 0; i < names.size(); ++i) step(i, apply_step(i, current));
  return current;
}

std::string Preprocessor::apply_step(std::size_t index, std::string_view text) const {
  switch (index) {
    case 0: return strip_social_artifacts(text);
    case 1: return expand_contractions(text, contractions_);
    case 2: return decode_html(text);
    case 3: return strip_special_chars(text);
    case 4: return compress_repeats(text);
    case 5: return expand_slang(text, slang_);
    case 6: return remove_number_words(text);
    default: throw std::out_of_range("preprocess step index");
  }
}

std::string Preprocessor::operator()(std::string_view text) const {
  return clean({}, text).text;
}

CleanDocument Preprocessor::clean(std::string id, std::string_view input) const {
  CleanDocument doc;
  doc.id = std::move(id);
  doc.text = single_pass(input, &doc.steps_applied);
  for (int pass = 1; pass < kMaxPasses; ++pass) {
    std::string next = single_pass(doc.text, &doc.steps_applied);
    if (next == doc.text) break;
    doc.text = std::move(next);
  }
  return doc;
}

}  // namespace kpx
