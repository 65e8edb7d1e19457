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

#include "frostkit/chain.h"

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "frostkit/annotate.h"
#include "frostkit/text.h"
#include "test_generators.h"

namespace frostkit {
namespace {

const char kFrozenS1[] =
    "\"Frozen,\" the latest Disney musical, preaches the importance of "
    "embracing your true nature.";
const char kFrozenS2[] =
    "It depicts fearless Princess Anna who joins forces with mountaineer "
    "Kristoff and his reindeer sidekick to find estranged sister, Snow Queen "
    "Elsa, and break her icy spell.";

AnnotatedText AnnotateNamed(const std::string &text) {
  static const HeuristicRecognizer *recognizer = new HeuristicRecognizer();
  return Annotate(text, KindSet::All(), *recognizer);
}

TEST_CASE("Frozen chain at both levels") {
  std::string summary = std::string(kFrozenS1) + " " + kFrozenS2;
  AnnotatedText a = AnnotateNamed(summary);
  EntityChain chain = BuildChain(a);
  CHECK(chain.groups ==
        std::vector<EntityGroup>{
            {"Frozen", "Disney"},
            {"Princess Anna", "Kristoff", "Snow Queen Elsa"}});
  CHECK(SerializeSummaryLevel({chain, summary}) ==
        "[ENTITYCHAIN] Frozen | Disney ||| Princess Anna | Kristoff | Snow "
        "Queen Elsa [SUMMARY] " + summary);
  CHECK(SerializeSentenceLevel(BuildSentenceLevelTarget(a)) ==
        std::string("[ENTITYCHAIN] Frozen | Disney [SUMMARY] ") + kFrozenS1 +
            " [ENTITYCHAIN] Princess Anna | Kristoff | Snow Queen Elsa "
            "[SUMMARY] " + kFrozenS2);
}

TEST_CASE("Walsall single-sentence chain") {
  std::string summary =
      "Walsall have signed Falkirk defender Leahy on a free transfer.";
  EntityChain chain = BuildChain(AnnotateNamed(summary));
  CHECK(chain.groups ==
        std::vector<EntityGroup>{{"Walsall", "Falkirk", "Leahy"}});
  CHECK(SerializeSummaryLevel({chain, summary}) ==
        "[ENTITYCHAIN] Walsall | Falkirk | Leahy [SUMMARY] " + summary);
}

TEST_CASE("entity-free summaries") {
  EntityChain chain = BuildChain(AnnotateNamed("it rained. it stopped."));
  CHECK(chain.groups == std::vector<EntityGroup>{{}});
  chain = BuildChain(AnnotateNamed("It rained. It stopped."));
  CHECK(chain.groups == std::vector<EntityGroup>{{}, {}});
  CHECK(chain.empty());
  CHECK(SerializeSummaryLevel({EntityChain{}, "Hello."}) ==
        "[ENTITYCHAIN] [SUMMARY] Hello.");
  CHECK(SerializeSentenceLevel({{{{}, "s1"}}}) == "[ENTITYCHAIN] [SUMMARY] s1");
  CHECK(SerializeSentenceLevel({{{{}, "s1"}, {{"X"}, "s2"}}}) ==
        "[ENTITYCHAIN] [SUMMARY] s1 [ENTITYCHAIN] X [SUMMARY] s2");
}

TEST_CASE("empty groups are empty slots") {
  EntityChain chain{{{"A"}, {}, {"B", "C"}}};
  CHECK(RenderChainBody(chain) == "A ||| ||| B | C");
  CHECK(chain.EntityCount() == 3);
  CHECK(chain.Flatten() == std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("reserved tokens are rejected") {
  CHECK_THROWS_AS(ValidateEntity("a | b"), InvalidEntity);
  CHECK_THROWS_AS(ValidateEntity(""), InvalidEntity);
  CHECK_THROWS_AS(ValidateEntity(" a"), InvalidEntity);
  CHECK_THROWS_AS(ValidateEntity("x [summary] y"), InvalidEntity);
  CHECK_NOTHROW(ValidateEntity("[MASK]"));
  CHECK_THROWS_AS(SerializeSummaryLevel({{{{"A|B"}}}, "s"}), InvalidEntity);
  CHECK_THROWS_AS(SerializeSummaryLevel({{{{"A"}}}, "a [EntityChain] b"}),
                  InvalidSummary);
  CHECK(ContainsMarker("x [Summary]"));
  CHECK_FALSE(ContainsMarker("[SUMMARY"));
}

TEST_CASE("parsing well-formed strings") {
  ParsedTarget p = ParseAugmented(
      "[EntityChain] Walsall | Falkirk [Summary] Walsall won.");
  CHECK_FALSE(p.malformed);
  CHECK(p.level == PlanLevel::kSummary);
  CHECK(p.chain.groups == std::vector<EntityGroup>{{"Walsall", "Falkirk"}});
  CHECK(p.summary == "Walsall won.");

  p = ParseAugmented("[ENTITYCHAIN] A [SUMMARY] s1 [ENTITYCHAIN] [SUMMARY] s2");
  CHECK_FALSE(p.malformed);
  CHECK(p.level == PlanLevel::kSentence);
  CHECK(p.chain.groups == std::vector<EntityGroup>{{"A"}, {}});
  CHECK(p.segments == std::vector<std::string>{"s1", "s2"});
  CHECK(p.summary == "s1 s2");
}

TEST_CASE("recovery from malformed strings") {
  ParsedTarget p = ParseAugmented("no markers at all");
  CHECK(p.malformed);
  CHECK(p.chain.empty());
  CHECK(p.summary == "no markers at all");

  p = ParseAugmented("A | B [SUMMARY] text");
  CHECK(p.malformed);
  CHECK(p.chain.groups == std::vector<EntityGroup>{{"A", "B"}});
  CHECK(p.summary == "text");

  p = ParseAugmented("junk [ENTITYCHAIN] A [SUMMARY] text");
  CHECK(p.malformed);
  CHECK(p.summary == "text");

  p = ParseAugmented("[ENTITYCHAIN] A | | B [SUMMARY] text");
  CHECK(p.malformed);
  CHECK(p.chain.groups == std::vector<EntityGroup>{{"A", "B"}});

  p = ParseAugmented("[ENTITYCHAIN] A [ENTITYCHAIN] B [SUMMARY] text");
  CHECK(p.malformed);
  CHECK(p.summary == "text");

  p = ParseAugmented("[ENTITYCHAIN] A [SUMMARY]");
  CHECK_FALSE(p.malformed);
  CHECK(p.summary.empty());

  p = ParseAugmented("");
  CHECK(p.malformed);
  CHECK(p.summary.empty());
}

TEST_CASE("strip_chain") {
  CHECK(StripChain("[ENTITYCHAIN] A | B [SUMMARY] hello") == "hello");
  CHECK(StripChain("hello") == "hello");
  CHECK(StripChain("[ENTITYCHAIN] Walsall | Falkirk | Liam Leahy | two "
                   "[SUMMARY] Walsall have signed Falkirk defender Leahy on "
                   "a two-year deal.") ==
        "Walsall have signed Falkirk defender Leahy on a two-year deal.");
}

TEST_CASE("property: summary-level round trip") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 1000; ++i) {
    AugmentedTarget t = testing::RandomSummaryTarget(&rng);
    std::string s = SerializeSummaryLevel(t);
    ParsedTarget p = ParseAugmented(s);
    INFO(s);
    REQUIRE_FALSE(p.malformed);
    REQUIRE(p.ToAugmented() == t);
  }
}

TEST_CASE("property: sentence-level round trip") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 1000; ++i) {
    SentenceLevelTarget t = testing::RandomSentenceTarget(&rng);
    std::string s = SerializeSentenceLevel(t);
    ParsedTarget p = ParseAugmented(s);
    INFO(s);
    REQUIRE_FALSE(p.malformed);
    REQUIRE(p.ToSentenceLevel() == t);
  }
}

TEST_CASE("property: strip_chain is idempotent on arbitrary strings") {
  std::mt19937_64 rng(303);
  const std::vector<std::string> pieces = {
      "[ENTITYCHAIN]", "[summary]", "[SUMMARY]", "|", "|||", "a", "B c",
      " ", "  ", "[", "]", "x.", "\n", "[EntityChain]"};
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    int n = static_cast<int>(rng() % 12);
    for (int k = 0; k < n; ++k) s += pieces[rng() % pieces.size()];
    std::string once = StripChain(s);
    INFO("input: " << s << " | stripped: " << once);
    REQUIRE(StripChain(once) == once);
    // Without a [SUMMARY] marker the whole string is kept as the summary.
    if (FoldCase(s).find("[summary]") != std::string::npos) {
      REQUIRE_FALSE(ContainsMarker(once));
    }
  }
}

TEST_CASE("property: no consecutive separators without empty groups") {
  std::mt19937_64 rng(404);
  for (int i = 0; i < 1000; ++i) {
    AugmentedTarget t = testing::RandomSummaryTarget(&rng);
    std::erase_if(t.chain.groups,
                  [](const EntityGroup &g) { return g.empty(); });
    if (t.chain.groups.empty()) continue;
    std::string s = SerializeSummaryLevel(t);
    std::string_view body(s);
    body = body.substr(0, body.find(kSummaryMarker));
    std::vector<std::string_view> tokens = SplitWhitespace(body);
    for (size_t k = 1; k < tokens.size(); ++k) {
      bool a = tokens[k - 1] == "|" || tokens[k - 1] == "|||";
      bool b = tokens[k] == "|" || tokens[k] == "|||";
      REQUIRE_FALSE((a && b));
    }
    REQUIRE_FALSE(ContainsMarker(s.substr(s.find(kSummaryMarker) +
                                          kSummaryMarker.size())));
  }
}

TEST_CASE("property: chain flattens to the span texts in order") {
  std::mt19937_64 rng(505);
  const std::vector<std::string> words = {
      "Walsall", "signed", "two", "on", "3", "May", "Leeds", "United", "of",
      "Bank", ".", "It", "rained", "1,500", "Monday"};
  for (int i = 0; i < 300; ++i) {
    std::string text;
    int n = static_cast<int>(rng() % 20);
    for (int k = 0; k < n; ++k) text += words[rng() % words.size()] + " ";
    AnnotatedText a = AnnotateNamed(text);
    std::vector<std::string> spans;
    for (const EntitySpan &s : a.spans) spans.push_back(s.text);
    EntityChain chain = BuildChain(a);
    REQUIRE(chain.Flatten() == spans);
    REQUIRE(chain.groups.size() == a.sentences.size());
  }
}

}  // namespace
}  // namespace frostkit
