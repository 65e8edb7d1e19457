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

#include "frostkit/record.h"

#include <sstream>
#include <string>

#include "doctest.h"

namespace frostkit {
namespace {

TEST_CASE("record fields") {
  DatasetRecord r = RecordFromJson(Json::parse(
      R"({"id": 12, "document": "d", "summary": "s", "extra": [1]})"));
  CHECK(r.id == "12");
  CHECK(*r.document == "d");
  CHECK(*r.summary == "s");
  CHECK_FALSE(r.predicted.has_value());
  CHECK_FALSE(r.has_entities);
  CHECK(r.Require("summary") == "s");
  CHECK_THROWS_WITH_AS(r.Require("predicted"),
                       doctest::Contains("record 12"), DataError);
  CHECK(r.raw["extra"][0] == 1);
}

TEST_CASE("bad records") {
  CHECK_THROWS_AS(RecordFromJson(Json::parse("[1]")), DataError);
  CHECK_THROWS_AS(RecordFromJson(Json::parse(R"({"summary": "s"})")),
                  DataError);
  CHECK_THROWS_AS(RecordFromJson(Json::parse(R"({"id": 1.5})")), DataError);
  CHECK_THROWS_AS(RecordFromJson(Json::parse(R"({"id": "1", "summary": 3})")),
                  DataError);
  CHECK_THROWS_AS(
      RecordFromJson(Json::parse(R"({"id": "1", "entities": "Leeds"})")),
      DataError);
}

TEST_CASE("entity annotations by field") {
  DatasetRecord r = RecordFromJson(Json::parse(
      R"({"id": "1", "entities": {"summary": ["Leeds",
          {"text": "3 May", "kind": "date", "start": 4, "end": 9}],
          "predicted": []}})"));
  REQUIRE(r.has_entities);
  const auto *summary = r.EntitiesFor("summary");
  REQUIRE(summary != nullptr);
  REQUIRE(summary->size() == 2);
  CHECK((*summary)[0].text == "Leeds");
  CHECK((*summary)[0].kind == EntityKind::kNamed);
  CHECK_FALSE((*summary)[0].start.has_value());
  CHECK((*summary)[1].kind == EntityKind::kDate);
  CHECK(*(*summary)[1].end == 9);
  CHECK(r.EntitiesFor("predicted")->empty());
  CHECK(r.EntitiesFor("document") == nullptr);
}

TEST_CASE("a bare entity array annotates the summary") {
  DatasetRecord r =
      RecordFromJson(Json::parse(R"({"id": "1", "entities": ["A"]})"));
  CHECK(r.EntitiesFor("summary")->size() == 1);
}

TEST_CASE("bad spans") {
  CHECK_THROWS_AS(SuppliedSpansFromJson(Json::parse(R"([{"kind": "named"}])")),
                  DataError);
  CHECK_THROWS_AS(
      SuppliedSpansFromJson(Json::parse(R"([{"text": "a", "kind": "thing"}])")),
      DataError);
  CHECK_THROWS_AS(
      SuppliedSpansFromJson(Json::parse(R"([{"text": "a", "start": 0}])")),
      DataError);
  CHECK_THROWS_AS(
      SuppliedSpansFromJson(
          Json::parse(R"([{"text": "a", "start": -1, "end": 0}])")),
      DataError);
  CHECK_THROWS_AS(SuppliedSpansFromJson(Json::parse("[3]")), DataError);
}

TEST_CASE("chain json round trip") {
  EntityChain chain{{{"A", "B"}, {}, {"C"}}};
  Json j = ChainToJson(chain);
  CHECK(j.dump() == R"([["A","B"],[],["C"]])");
  CHECK(ChainFromJson(j) == chain);
  CHECK_THROWS_AS(ChainFromJson(Json::parse(R"(["A"])")), DataError);
  CHECK_THROWS_AS(ChainFromJson(Json::parse(R"([[1]])")), DataError);
}

TEST_CASE("span json") {
  EntitySpan s{"two", EntityKind::kNumber, 4, 7, 1};
  CHECK(SpansToJson({s}).dump() ==
        R"([{"text":"two","kind":"number","start":4,"end":7,"sent":1}])");
}

TEST_CASE("jsonl reader skips blanks and headers and reports bad lines") {
  std::istringstream in(
      "{\"_meta\": {\"command\": \"x\"}}\n\n{\"id\": 1}\n{oops\n  \n"
      "{\"_meta\": {\"command\": \"y\"}}\n{\"id\": 2}");
  JsonlReader reader(&in, "in.jsonl");
  JsonlLine line;
  REQUIRE(reader.Next(&line));
  CHECK(line.line_no == 3);
  CHECK(line.value["id"] == 1);
  REQUIRE(reader.Next(&line));
  CHECK(line.line_no == 4);
  CHECK_FALSE(line.error.empty());
  REQUIRE(reader.Next(&line));
  CHECK(line.line_no == 7);
  CHECK(line.error.empty());
  CHECK_FALSE(reader.Next(&line));
  CHECK(reader.meta()["command"] == "x");
}

TEST_CASE("writer keeps key order and replaces invalid utf-8") {
  Json j = {{"z", 1}, {"a", "b\xFF"}};
  std::ostringstream out;
  WriteJsonLine(j, &out);
  CHECK(out.str() == "{\"z\":1,\"a\":\"b\xEF\xBF\xBD\"}\n");
}

}  // namespace
}  // namespace frostkit
