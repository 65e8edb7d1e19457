// Copyright 2026 The FrostKit Authors.
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

#include "frostkit/text.h"

#include <string>
#include <utility>
#include <vector>

#include "doctest.h"

namespace frostkit {
namespace {

using Type = Token::Type;

std::vector<std::pair<std::string, Type>> Toks(std::string_view text) {
  std::vector<std::pair<std::string, Type>> out;
  for (const Token &t : Tokenize(text)) {
    out.emplace_back(std::string(t.View(text)), t.type);
  }
  return out;
}

TEST_CASE("tokenizer splits words, numbers and punctuation") {
  auto t = Toks("Walsall have signed Leahy, aged 25.");
  REQUIRE(t.size() == 8);
  CHECK(t[0] == std::pair<std::string, Type>{"Walsall", Type::kWord});
  CHECK(t[4] == std::pair<std::string, Type>{",", Type::kPunct});
  CHECK(t[6] == std::pair<std::string, Type>{"25", Type::kNumber});
  CHECK(t[7] == std::pair<std::string, Type>{".", Type::kPunct});
}

TEST_CASE("acronyms and ordinals are single tokens") {
  auto t = Toks("U.S. troops, 21st 3rdly");
  CHECK(t[0] == std::pair<std::string, Type>{"U.S.", Type::kAcronym});
  CHECK(t[3] == std::pair<std::string, Type>{"21st", Type::kOrdinal});
  // A suffix followed by more letters is not an ordinal.
  CHECK(t[4] == std::pair<std::string, Type>{"3", Type::kNumber});
  CHECK(t[5] == std::pair<std::string, Type>{"rdly", Type::kWord});
  // One initial is not an acronym.
  CHECK(Toks("A. Smith")[0].second == Type::kWord);
}

TEST_CASE("numbers take thousands groups and decimals") {
  CHECK(Toks("1,234.5")[0].first == "1,234.5");
  CHECK(Toks("1,2345").size() == 3);
  CHECK(Toks("1,23")[0].first == "1");
  CHECK(Toks("3.")[0].first == "3");
}

TEST_CASE("apostrophes join words except possessive s") {
  CHECK(Toks("don't")[0].first == "don't");
  CHECK(Toks("O'Neil")[0].first == "O'Neil");
  auto t = Toks("Leahy's move");
  REQUIRE(t.size() == 4);
  CHECK(t[0].first == "Leahy");
  CHECK(t[1].first == "'");
  CHECK(t[2].first == "s");
  CHECK(Toks("Leahy'sson")[0].first == "Leahy'sson");
}

TEST_CASE("latin letters beyond ASCII are word characters") {
  auto t = Toks("Zo\xC3\xAB went to M\xC3\xBCnchen \xC3\x97 2");
  CHECK(t[0].first == "Zo\xC3\xAB");
  CHECK(t[3].first == "M\xC3\xBCnchen");
  CHECK(t[4].second == Type::kPunct);
}

TEST_CASE("empty and whitespace-only input has no tokens") {
  CHECK(Tokenize("").empty());
  CHECK(Tokenize(" \t\n ").empty());
}

TEST_CASE("offsets cover the token bytes") {
  std::string text = "  ab  \xC3\xA9t\xC3\xA9 .";
  for (const Token &t : Tokenize(text)) {
    CHECK(t.begin < t.end);
    CHECK(t.end <= text.size());
  }
  auto t = Tokenize(text);
  REQUIRE(t.size() == 3);
  CHECK(t[1].begin == 6);
  CHECK(t[1].end == 11);
}

TEST_CASE("case folding") {
  CHECK(FoldCase("Walsall") == "walsall");
  CHECK(FoldCase("\xC3\x89" "COLE") == "\xC3\xA9" "cole");
  CHECK(FoldCase("A-1 \xE2\x82\xAC") == "a-1 \xE2\x82\xAC");
  CHECK(StartsUpper("\xC3\x89t\xC3\xA9"));
  CHECK_FALSE(StartsUpper("\xC3\xA9t\xC3\xA9"));
  CHECK_FALSE(StartsUpper(""));
}

TEST_CASE("utf-8 decoding replaces invalid bytes") {
  char32_t cp = 0;
  CHECK(DecodeUtf8("\xC3\xA9", 0, &cp) == 2);
  CHECK(cp == 0xE9);
  CHECK(DecodeUtf8("\xC3", 0, &cp) == 1);
  CHECK(cp == 0xFFFD);
  CHECK(DecodeUtf8("\xFF" "a", 0, &cp) == 1);
  CHECK(cp == 0xFFFD);
  std::string out;
  AppendUtf8(0x20AC, &out);
  CHECK(out == "\xE2\x82\xAC");
}

TEST_CASE("trim and whitespace split") {
  CHECK(Trim("  a b \n") == "a b");
  CHECK(Trim("   ").empty());
  auto parts = SplitWhitespace(" a  b\tc\n");
  REQUIRE(parts.size() == 3);
  CHECK(parts[2] == "c");
}

}  // namespace
}  // namespace frostkit
