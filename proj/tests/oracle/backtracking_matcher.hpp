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

// Reference matcher for tag patterns, used only by tests. It interprets the
// pattern tree directly: each node maps a set of start offsets to the set of
// reachable end offsets (bit i = offset i), so every alternative is explored.

#ifndef KPX_TESTS_BACKTRACKING_MATCHER_HPP_
#define KPX_TESTS_BACKTRACKING_MATCHER_HPP_

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kpx/pos_tag.hpp"

namespace oracle {

class BacktrackingMatcher {
 public:
  explicit BacktrackingMatcher(const std::string& pattern) {
    for (char c : pattern) {
      if (c != ' ' && c != '\t' && c != '\n') src_ += c;
    }
    if (!src_.empty() && src_.front() == '{') {
      if (src_.back() != '}') throw std::invalid_argument("unclosed brace");
      src_ = src_.substr(1, src_.size() - 2);
    }
    root_ = parse_seq();
    if (i_ != src_.size()) throw std::invalid_argument("trailing input");
  }

  /// All end offsets reachable from `start`, as a bitmask relative to start.
  std::uint64_t ends(std::span<const kpx::PosTag> tags, std::size_t start) const {
    if (tags.size() - start > 63) throw std::length_error("oracle handles at most 63 tokens");
    return eval(*root_, tags.subspan(start), 1);
  }

  bool accepts(std::span<const kpx::PosTag> tags) const {
    return !tags.empty() && ((ends(tags, 0) >> tags.size()) & 1U);
  }

  std::size_t longest_match(std::span<const kpx::PosTag> tags, std::size_t start) const {
    const std::uint64_t e = ends(tags, start) & ~std::uint64_t{1};
    return e == 0 ? 0 : static_cast<std::size_t>(63 - std::countl_zero(e));
  }

  /// [start, end) pairs under greedy leftmost-longest chunking.
  std::vector<std::pair<std::size_t, std::size_t>> chunk(std::span<const kpx::PosTag> tags) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < tags.size();) {
      const std::size_t len = longest_match(tags, i);
      if (len == 0) {
        ++i;
      } else {
        out.emplace_back(i, i + len);
        i += len;
      }
    }
    return out;
  }

 private:
  enum class Kind { Atom, Seq, Opt, Star, Plus };

  struct Node {
    Kind kind;
    std::string name;  // Atom: tag name or prefix
    bool prefix = false;
    std::vector<std::unique_ptr<Node>> kids;
  };

  std::unique_ptr<Node> parse_seq() {
    auto seq = std::make_unique<Node>(Node{Kind::Seq, {}, false, {}});
    while (i_ < src_.size() && src_[i_] != ')') {
      std::unique_ptr<Node> item;
      if (src_[i_] == '(') {
        ++i_;
        item = parse_seq();
        if (i_ >= src_.size() || src_[i_] != ')') throw std::invalid_argument("unclosed group");
        ++i_;
      } else if (src_[i_] == '<') {
        const auto close = src_.find('>', i_);
        if (close == std::string::npos) throw std::invalid_argument("unclosed atom");
        std::string body = src_.substr(i_ + 1, close - i_ - 1);
        i_ = close + 1;
        item = std::make_unique<Node>(Node{Kind::Atom, body, false, {}});
        if (body.size() >= 2 && body.substr(body.size() - 2) == ".*") {
          item->name = body.substr(0, body.size() - 2);
          item->prefix = true;
        }
      } else {
        throw std::invalid_argument("unexpected character");
      }
      if (i_ < src_.size() && (src_[i_] == '?' || src_[i_] == '*' || src_[i_] == '+')) {
        const Kind k = src_[i_] == '?' ? Kind::Opt : src_[i_] == '*' ? Kind::Star : Kind::Plus;
        ++i_;
        auto wrap = std::make_unique<Node>(Node{k, {}, false, {}});
        wrap->kids.push_back(std::move(item));
        item = std::move(wrap);
      }
      seq->kids.push_back(std::move(item));
    }
    return seq;
  }

  static bool atom_matches(const Node& n, kpx::PosTag t) {
    const std::string_view name = kpx::to_string(t);
    if (n.prefix) return name.substr(0, n.name.size()) == n.name;
    return name == n.name;
  }

  static std::uint64_t eval(const Node& n, std::span<const kpx::PosTag> tags, std::uint64_t starts) {
    switch (n.kind) {
      case Kind::Atom: {
        std::uint64_t out = 0;
        for (std::size_t p = 0; p < tags.size(); ++p) {
          if (((starts >> p) & 1U) && atom_matches(n, tags[p])) out |= std::uint64_t{1} << (p + 1);
        }
        return out;
      }
      case Kind::Seq: {
        std::uint64_t cur = starts;
        for (const auto& k : n.kids) cur = eval(*k, tags, cur);
        return cur;
      }
      case Kind::Opt:
        return starts | eval(*n.kids[0], tags, starts);
      case Kind::Star:
      case Kind::Plus: {
        std::uint64_t reached = n.kind == Kind::Star ? starts : 0;
        std::uint64_t frontier = starts;
        while (frontier) {
          const std::uint64_t next = eval(*n.kids[0], tags, frontier);
          frontier = next & ~reached;
          reached |= next;
        }
        return reached;
      }
    }
    return 0;
  }

  std::string src_;
  std::size_t i_ = 0;
  std::unique_ptr<Node> root_;
};

}  // namespace oracle

#endif  // KPX_TESTS_BACKTRACKING_MATCHER_HPP_
