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

#include <gtest/gtest.h>

#include <sstream>

#include "kpx/csv.hpp"
#include "kpx/error.hpp"
#include "kpx/pos_tag.hpp"
#include "kpx/tables.hpp"
#include "kpx/text.hpp"
#include "support.hpp"

namespace kpx {
namespace {

TEST(Text, SanitizeReplacesIllFormedBytes) {
  std::size_t replaced = 0;
  EXPECT_EQ(text::sanitize_utf8("ok\xff" "x\xc3", &replaced), "ok\xEF\xBF\xBDx\xEF\xBF\xBD");
  EXPECT_EQ(replaced, 2u);
  EXPECT_EQ(text::sanitize_utf8("caf\xC3\xA9"), "caf\xC3\xA9");
}

TEST(Text, OverlongAndSurrogateAreRejected) {
  std::size_t replaced = 0;
  text::sanitize_utf8("\xC0\xAF", &replaced);
  EXPECT_GE(replaced, 1u);
  replaced = 0;
  text::sanitize_utf8("\xED\xA0\x80", &replaced);
  EXPECT_GE(replaced, 1u);
}

TEST(Text, CaseMappingAndClasses) {
  EXPECT_EQ(text::to_lower("HeLLo \xC3\x89T\xC3\x89"), "hello \xC3\xA9t\xC3\xA9");
  EXPECT_TRUE(text::is_letter(U'é'));
  EXPECT_FALSE(text::is_letter(U'!'));
  EXPECT_TRUE(text::is_upper(U'A'));
  EXPECT_TRUE(text::is_lower(U'z'));
  EXPECT_TRUE(text::is_space(U' '));
  EXPECT_EQ(text::length("\xC3\xA9t\xC3\xA9"), 3u);
}

TEST(Text, WhitespaceHelpers) {
  EXPECT_EQ(text::collapse_whitespace("  a \t b\n\nc  "), "a b c");
  const auto parts = text::split_whitespace(" x  yy z ");
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[1], "yy");
  EXPECT_EQ(text::join({"a", "b", "c"}, " "), "a b c");
  EXPECT_EQ(text::join({}, " "), "");
}

TEST(Csv, QuotedFieldsAndLineBreaks) {
  std::istringstream in("id,text\n1,\"a, \"\"quoted\"\"\nline\"\r\n2,plain\n");
  csv::Reader r(in);
  EXPECT_EQ(*r.next(), (std::vector<std::string>{"id", "text"}));
  EXPECT_EQ(*r.next(), (std::vector<std::string>{"1", "a, \"quoted\"\nline"}));
  EXPECT_EQ(r.line(), 2u);
  EXPECT_EQ(*r.next(), (std::vector<std::string>{"2", "plain"}));
  EXPECT_FALSE(r.next().has_value());
}

TEST(Csv, UnterminatedQuoteFlagsError) {
  std::istringstream in("1,\"open\n");
  csv::Reader r(in);
  r.next();
  EXPECT_TRUE(r.error());
}

TEST(Csv, EscapeRoundTrip) {
  EXPECT_EQ(csv::escape("plain"), "plain");
  EXPECT_EQ(csv::escape("a,b"), "\"a,b\"");
  EXPECT_EQ(csv::escape("say \"hi\""), "\"say \"\"hi\"\"\"");
  std::istringstream in(csv::format_row({"x,y", "q\"", "z"}) + "\n");
  csv::Reader r(in);
  EXPECT_EQ(*r.next(), (std::vector<std::string>{"x,y", "q\"", "z"}));
}

TEST(Tables, WordListSkipsCommentsAndLowercases) {
  std::istringstream in("# comment\nThe\n\n  And \n");
  const WordSet w = parse_word_list(in);
  EXPECT_EQ(w.size(), 2u);
  EXPECT_TRUE(w.contains("the"));
  EXPECT_TRUE(w.contains("and"));
}

TEST(Tables, MissingFileIsConfigError) {
  EXPECT_THROW(load_word_list("/nonexistent/kpx/list.txt"), ConfigError);
  EXPECT_THROW(load_tsv("/nonexistent/kpx/x.tsv", 2), ConfigError);
}

TEST(Tables, ShortTsvRowIsConfigError) {
  const auto dir = testing::temp_dir("tsv");
  std::ofstream(dir / "bad.tsv") << "word\tNN\nlonely\n";
  try {
    load_tsv(dir / "bad.tsv", 2);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos);
  }
}

TEST(PosTags, NamesRoundTrip) {
  EXPECT_EQ(kPosTagCount, 45u);
  for (PosTag t : all_pos_tags()) EXPECT_EQ(parse_pos_tag(to_string(t)), t);
  EXPECT_EQ(parse_pos_tag("PRP$"), PosTag::PRP_S);
  EXPECT_FALSE(parse_pos_tag("XYZ").has_value());
  EXPECT_TRUE(is_noun(PosTag::NNPS));
  EXPECT_TRUE(is_verb(PosTag::VBZ));
  EXPECT_FALSE(is_verb(PosTag::MD));
}

}  // namespace
}  // namespace kpx
