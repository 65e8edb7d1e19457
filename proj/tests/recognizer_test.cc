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

#include "frostkit/recognizer.h"

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "frostkit/annotate.h"

namespace frostkit {
namespace {

using V = std::vector<std::string>;

V Named(std::string_view text, const NamedEntityRecognizer &r) {
  V out;
  for (const EntitySpan &s : RecognizeNamed(text, r)) out.push_back(s.text);
  return out;
}

TEST_CASE("heuristic finds capitalized runs") {
  HeuristicRecognizer r;
  CHECK(Named("Walsall have signed Falkirk defender Leahy", r) ==
        V{"Walsall", "Falkirk", "Leahy"});
  CHECK(Named("it depicts fearless Princess Anna who joins", r) ==
        V{"Princess Anna"});
  CHECK(Named("all lowercase words here", r).empty());
}

TEST_CASE("heuristic joins connectors and hyphens") {
  HeuristicRecognizer r;
  CHECK(Named("a loan from Bank of England staff", r) == V{"Bank of England"});
  CHECK(Named("shares in Coca-Cola fell", r) == V{"Coca-Cola"});
  CHECK(Named("Ludwig van Beethoven wrote", r) == V{"Ludwig van Beethoven"});
  // A connector needs capitalized words on both sides.
  CHECK(Named("the Bank of england", r) == V{"Bank"});
}

TEST_CASE("heuristic skips stopwords and bare temporal runs") {
  HeuristicRecognizer r;
  CHECK(Named("The club said Mr Smith left", r) == V{"Smith"});
  CHECK(Named("on Monday in March", r).empty());
  CHECK(Named("Theresa May spoke", r) == V{"Theresa May"});
  CHECK(HeuristicRecognizer::IsStopword("the"));
  CHECK_FALSE(HeuristicRecognizer::IsStopword("walsall"));
}

TEST_CASE("heuristic runs stop at punctuation and blank lines") {
  HeuristicRecognizer r;
  CHECK(Named("Glasgow, Leeds and Cardiff", r) ==
        V{"Glasgow", "Leeds", "Cardiff"});
  CHECK(Named("Port Ellis\n\nHarbour", r) == V{"Port Ellis", "Harbour"});
  CHECK(Named("Port Ellis\nHarbour", r) == V{"Port Ellis\nHarbour"});
}

TEST_CASE("gazetteer entries match case-sensitively") {
  HeuristicRecognizer r({"ebay", "BBC Sport"});
  CHECK(r.gazetteer_size() == 2);
  CHECK(Named("bought on ebay", r) == V{"ebay"});
  CHECK(Named("bought on Ebay", r) == V{"Ebay"});
  CHECK(Named("says BBC Sport today", r) == V{"BBC Sport"});
}

TEST_CASE("gazetteer file skips comments and blanks") {
  std::string path = "recognizer_test_gazetteer.txt";
  {
    std::ofstream out(path);
    out << "# comment\n\n  ebay  \nBBC Sport\n";
  }
  V entries = LoadGazetteer(path);
  std::remove(path.c_str());
  CHECK(entries == V{"ebay", "BBC Sport"});
  CHECK_THROWS_AS(LoadGazetteer("/nonexistent/gazetteer"), FrostError);
}

TEST_CASE("pass-through returns supplied spans verbatim") {
  PassThroughRecognizer r;
  std::vector<SuppliedSpan> supplied = {
      {"Frozen", EntityKind::kNamed, 1, 7},
      {"Disney", EntityKind::kNamed, std::nullopt, std::nullopt}};
  std::string text = "\"Frozen,\" the latest Disney musical";
  RecognizeRequest request{text, "1", "summary", &supplied};
  auto spans = r.Recognize(request);
  REQUIRE(spans.size() == 2);
  CHECK(spans[0].text == "Frozen");
  CHECK(spans[0].start == 1);
  CHECK(spans[1].start == 21);
  CHECK(spans[1].end == 27);
  CHECK(r.authoritative());
}

TEST_CASE("pass-through without annotations is an error") {
  PassThroughRecognizer r;
  RecognizeRequest request{"text", "9", "summary", nullptr};
  CHECK_THROWS_AS(r.Recognize(request), MissingAnnotations);
}

TEST_CASE("supplied spans are validated") {
  std::string text = "Walsall beat Falkirk";
  CHECK_THROWS_AS(PlaceSuppliedSpans(text, {{"Walsall", EntityKind::kNamed,
                                             1, 8}}),
                  InvalidAnnotation);
  CHECK_THROWS_AS(PlaceSuppliedSpans(text, {{"Leeds", EntityKind::kNamed,
                                             std::nullopt, std::nullopt}}),
                  InvalidAnnotation);
  CHECK_THROWS_AS(PlaceSuppliedSpans(text, {{" Walsall", EntityKind::kNamed,
                                             std::nullopt, std::nullopt}}),
                  InvalidAnnotation);
  CHECK_THROWS_AS(PlaceSuppliedSpans(text, {{"Walsall", EntityKind::kNamed,
                                             0, 99}}),
                  InvalidAnnotation);
}

TEST_CASE("text search resumes after the previous span") {
  std::string text = "Leeds and Leeds";
  auto spans = PlaceSuppliedSpans(
      text, {{"Leeds", EntityKind::kNamed, std::nullopt, std::nullopt},
             {"Leeds", EntityKind::kNamed, std::nullopt, std::nullopt}});
  REQUIRE(spans.size() == 2);
  CHECK(spans[0].start == 0);
  CHECK(spans[1].start == 10);
}

TEST_CASE("external recognizer looks spans up by id and field") {
  std::unordered_map<std::string, FieldSpans> by_id;
  by_id["7"]["summary"] = {{"Leeds", EntityKind::kNamed, 0, 5}};
  ExternalRecognizer r(std::move(by_id));
  std::string text = "Leeds won";
  auto spans = r.Recognize({text, "7", "summary", nullptr});
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].text == "Leeds");
  CHECK_THROWS_AS(r.Recognize({text, "7", "document", nullptr}),
                  MissingAnnotations);
  CHECK_THROWS_AS(r.Recognize({text, "8", "summary", nullptr}),
                  MissingAnnotations);
}

TEST_CASE("external side file") {
  std::string path = "recognizer_test_side.jsonl";
  {
    std::ofstream out(path);
    out << "{\"_meta\": {}}\n"
        << "{\"id\": 3, \"entities\": [{\"text\": \"Leeds\", \"kind\": "
           "\"named\"}]}\n\n"
        << "{\"id\": \"4\", \"entities\": {\"document\": [\"Cardiff\"]}}\n";
  }
  ExternalRecognizer r = ExternalRecognizer::FromFile(path);
  CHECK(r.size() == 2);
  CHECK(r.Recognize({"in Leeds", "3", "summary", nullptr}).size() == 1);
  CHECK(r.Recognize({"in Cardiff", "4", "document", nullptr}).size() == 1);
  {
    std::ofstream out(path);
    out << "{\"id\": 3}\n";
  }
  CHECK_THROWS_WITH_AS(ExternalRecognizer::FromFile(path),
                       doctest::Contains(":1:"), FrostError);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace frostkit
