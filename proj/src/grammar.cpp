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

#include "kpx/grammar.hpp"

#include <algorithm>
#include <bitset>
#include <map>

#include "kpx/error.hpp"

namespace kpx {

namespace {

using TagSet = std::bitset<kPosTagCount>;

// Thompson NFA: every state has epsilon edges and at most one labeled edge.
struct Nfa {
  struct Node {
    std::vector<int> eps;
    TagSet label;
    int target = -1;
  };
  std::vector<Node> nodes;

  int add() {
    nodes.emplace_back();
    return static_cast<int>(nodes.size()) - 1;
  }
};

struct Fragment {
  int start;
  int accept;
};

class Parser {
 public:
  Parser(std::string_view src, Nfa& nfa) : src_(src), nfa_(nfa) {}

  Fragment parse() {
    skip_space();
    bool braced = false;
    if (peek() == '{') {
      braced = true;
      ++pos_;
    }
    Fragment body = sequence(braced ? '}' : '\0');
    skip_space();
    if (braced) {
      if (peek() != '}') fail(pos_, "unbalanced '{'");
      ++pos_;
      skip_space();
    }
    if (pos_ < src_.size()) {
      switch (src_[pos_]) {
        case ')': fail(pos_, "unbalanced ')'");
        case '}': fail(pos_, "unbalanced '}'");
        case '>': fail(pos_, "unbalanced '>'");
        default: fail(pos_, "unexpected character after pattern");
      }
    }
    return body;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw GrammarError(at, msg);
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                  src_[pos_] == '\r'))
      ++pos_;
  }

  Fragment empty() {
    const int s = nfa_.add();
    return {s, s};
  }

  Fragment concat(Fragment a, Fragment b) {
    nfa_.nodes[a.accept].eps.push_back(b.start);
    return {a.start, b.accept};
  }

  // Stops at `closer`, at ')' and at end of input; the caller checks which.
  Fragment sequence(char closer) {
    Fragment frag = empty();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '\0' || c == ')' || (closer != '\0' && c == closer)) break;
      if (c == '}') fail(pos_, "unbalanced '}'");
      if (c == '{') fail(pos_, "'{' is only allowed around the whole pattern");
      if (c == '>') fail(pos_, "unbalanced '>'");
      if (c == '?' || c == '*' || c == '+') fail(pos_, "quantifier without a preceding atom");
      frag = concat(frag, item(closer));
    }
    return frag;
  }

  Fragment item(char closer) {
    Fragment frag;
    if (peek() == '(') {
      const std::size_t open = pos_++;
      frag = sequence(closer);
      skip_space();
      if (peek() != ')') fail(open, "unbalanced '('");
      ++pos_;
    } else if (peek() == '<') {
      frag = atom();
    } else {
      fail(pos_, std::string("unexpected character '") + peek() + "'");
    }
    const char q = peek();
    if (q != '?' && q != '*' && q != '+') return frag;
    ++pos_;
    const char after = peek();
    if (after == '?' || after == '*' || after == '+') fail(pos_, "misplaced quantifier");

    const int s = nfa_.add();
    const int a = nfa_.add();
    nfa_.nodes[s].eps.push_back(frag.start);
    nfa_.nodes[frag.accept].eps.push_back(a);
    if (q == '?' || q == '*') nfa_.nodes[s].eps.push_back(a);
    if (q == '*' || q == '+') nfa_.nodes[frag.accept].eps.push_back(frag.start);
    return {s, a};
  }

  Fragment atom() {
    const std::size_t open = pos_++;
    const std::size_t close = src_.find_first_of("<>", pos_);
    if (close == std::string_view::npos || src_[close] == '<') fail(open, "unbalanced '<'");
    std::string_view body = src_.substr(pos_, close - pos_);
    pos_ = close + 1;

    if (body.empty()) fail(open, "empty tag pattern");
    for (std::size_t i = 0; i < body.size(); ++i) {
      const char c = body[i];
      if (c == ' ' || c == '\t' || c == '(' || c == ')' || c == '{' || c == '}')
        fail(open + 1 + i, "invalid character in tag pattern");
    }
    TagSet set;
    const std::size_t star = body.find('*');
    if (star != std::string_view::npos) {
      if (star != body.size() - 1 || star == 0 || body[star - 1] != '.')
        fail(open + 1 + star, "'*' inside a tag pattern must be a trailing \".*\"");
      const std::string_view prefix = body.substr(0, body.size() - 2);
      for (PosTag t : all_pos_tags()) {
        if (to_string(t).substr(0, prefix.size()) == prefix) set.set(index_of(t));
      }
      if (set.none()) fail(open, "tag prefix \"" + std::string(prefix) + "\" matches no tag");
    } else {
      const auto tag = parse_pos_tag(body);
      if (!tag) fail(open, "unknown tag \"" + std::string(body) + "\"");
      set.set(index_of(*tag));
    }
    const int s = nfa_.add();
    const int a = nfa_.add();
    nfa_.nodes[s].label = set;
    nfa_.nodes[s].target = a;
    return {s, a};
  }

  std::string_view src_;
  Nfa& nfa_;
  std::size_t pos_ = 0;
};

std::vector<int> closure(const Nfa& nfa, std::vector<int> states) {
  std::vector<char> seen(nfa.nodes.size(), 0);
  std::vector<int> stack = states;
  for (int s : states) seen[s] = 1;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int e : nfa.nodes[s].eps) {
      if (!seen[e]) {
        seen[e] = 1;
        states.push_back(e);
        stack.push_back(e);
      }
    }
  }
  std::sort(states.begin(), states.end());
  return states;
}

}  // namespace

CompiledGrammar CompiledGrammar::compile(std::string_view source) {
  Nfa nfa;
  const Fragment root = Parser(source, nfa).parse();

  CompiledGrammar g;
  g.source_ = std::string(source);

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> sets;
  auto intern = [&](std::vector<int> set) {
    auto [it, inserted] = ids.try_emplace(set, static_cast<int>(sets.size()));
    if (inserted) {
      State st;
      st.next.fill(kDead);
      st.accepting = std::binary_search(set.begin(), set.end(), root.accept);
      g.states_.push_back(st);
      sets.push_back(std::move(set));
    }
    return it->second;
  };

  intern(closure(nfa, {root.start}));
  for (std::size_t d = 0; d < sets.size(); ++d) {
    for (std::size_t sym = 0; sym < kPosTagCount; ++sym) {
      std::vector<int> moved;
      for (int s : sets[d]) {
        const auto& node = nfa.nodes[s];
        if (node.target >= 0 && node.label.test(sym)) moved.push_back(node.target);
      }
      if (moved.empty()) continue;
      const int to = intern(closure(nfa, std::move(moved)));
      g.states_[d].next[sym] = to;
    }
  }

  // Some accepting state must be reachable through at least one tag.
  std::vector<char> seen(g.states_.size(), 0);
  std::vector<int> stack;
  for (int to : g.states_[0].next) {
    if (to != kDead && !seen[to]) {
      seen[to] = 1;
      stack.push_back(to);
    }
  }
  bool nonempty = false;
  while (!stack.empty() && !nonempty) {
    const int s = stack.back();
    stack.pop_back();
    nonempty = g.states_[s].accepting;
    for (int to : g.states_[s].next) {
      if (to != kDead && !seen[to]) {
        seen[to] = 1;
        stack.push_back(to);
      }
    }
  }
  if (!nonempty) throw GrammarError(0, "pattern matches only the empty sequence");
  return g;
}

bool CompiledGrammar::accepts(std::span<const PosTag> tags) const {
  if (tags.empty()) return false;
  int s = 0;
  for (PosTag t : tags) {
    s = states_[s].next[index_of(t)];
    if (s == kDead) return false;
  }
  return states_[s].accepting;
}

std::size_t CompiledGrammar::longest_match(std::span<const PosTag> tags, std::size_t start) const {
  std::size_t best = 0;
  int s = 0;
  for (std::size_t i = start; i < tags.size(); ++i) {
    s = states_[s].next[index_of(tags[i])];
    if (s == kDead) break;
    if (states_[s].accepting) best = i - start + 1;
  }
  return best;
}

}  // namespace kpx
