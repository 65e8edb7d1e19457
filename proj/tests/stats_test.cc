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

#include "frostkit/stats.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "frostkit/annotate.h"

namespace frostkit {
namespace {

const HeuristicRecognizer &Heuristic() {
  static const HeuristicRecognizer *r = new HeuristicRecognizer();
  return *r;
}

CorpusStats StatsOf(const std::vector<std::string> &summaries) {
  CorpusStats s;
  for (const std::string &t : summaries) {
    s.Add(Annotate(t, KindSet::All(), Heuristic()));
  }
  return s;
}

TEST_CASE("unique entities fold case") {
  CorpusStats s = StatsOf({"Leeds beat LEEDS and Derby."});
  CHECK(s.avg_entities() == 3.0);
  CHECK(s.avg_unique_entities() == 2.0);
  CHECK(s.kind_totals[0] == 3);
}

TEST_CASE("averages") {
  CorpusStats s = StatsOf({"It rained. Then it stopped.",
                           "Leeds won two games on 3 May 2015."});
  CHECK(s.n_records == 2);
  CHECK(s.avg_sentences() == 1.5);
  CHECK(s.pct_no_entities() == 50.0);
  CHECK(s.kind_totals == std::array<size_t, 3>{1, 1, 1});
  CorpusStats empty;
  CHECK(empty.avg_entities() == 0.0);
  CHECK(empty.pct_no_entities() == 0.0);
}

TEST_CASE("markdown row") {
  CorpusStats s = StatsOf({"Leeds won.", "It rained."});
  std::string md = StatsMarkdown(s, "mini");
  CHECK(md.find("| dataset | records |") == 0);
  CHECK(md.find("| mini | 2 | 1.00 | 0.50 | 0.50 | 50.00 | 1 | 0 | 0 |\n") !=
        std::string::npos);
}

TEST_CASE("property: totals are additive and order free") {
  std::mt19937_64 rng(12);
  const std::vector<std::string> pool = {
      "Leeds won.", "It rained. It stopped.", "Two men met on Monday.",
      "Paris and Rome and PARIS.", "nothing here", "In 2015 Derby lost 3-1."};
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<std::string> texts;
    for (size_t k = rng() % 10; k > 0; --k) {
      texts.push_back(pool[rng() % pool.size()]);
    }
    size_t cut = texts.empty() ? 0 : rng() % texts.size();
    CorpusStats whole = StatsOf(texts);
    CorpusStats left = StatsOf({texts.begin(), texts.begin() + cut});
    left += StatsOf({texts.begin() + cut, texts.end()});
    REQUIRE(left == whole);
    std::shuffle(texts.begin(), texts.end(), rng);
    REQUIRE(StatsOf(texts) == whole);
  }
}

TEST_CASE("mini corpus matches the oracle") {
  std::ifstream in(FROSTKIT_TEST_DATA "/mini_corpus.jsonl");
  std::ifstream oracle_in(FROSTKIT_TEST_DATA "/oracle_expected.json");
  REQUIRE(in);
  REQUIRE(oracle_in);
  Json oracle = Json::parse(oracle_in)["stats"];
  PassThroughRecognizer passthrough;
  CorpusStats s;
  JsonlReader reader(&in, "mini_corpus.jsonl");
  JsonlLine line;
  while (reader.Next(&line)) {
    REQUIRE(line.error.empty());
    DatasetRecord r = RecordFromJson(line.value);
    s.Add(Annotate(r.Require("summary"), KindSet::All(), passthrough,
                   {r.id, "summary", r.EntitiesFor("summary")}));
  }
  CHECK(s.n_records == oracle["n_records"].get<size_t>());
  CHECK(s.avg_sentences() ==
        doctest::Approx(oracle["avg_sentences"].get<double>()));
  CHECK(s.avg_entities() ==
        doctest::Approx(oracle["avg_entities"].get<double>()));
  CHECK(s.avg_unique_entities() ==
        doctest::Approx(oracle["avg_unique_entities"].get<double>()));
  CHECK(s.pct_no_entities() ==
        doctest::Approx(oracle["pct_no_entities"].get<double>()));
  CHECK(s.kind_totals[0] == oracle["totals"]["named"].get<size_t>());
  CHECK(s.kind_totals[1] == oracle["totals"]["date"].get<size_t>());
  CHECK(s.kind_totals[2] == oracle["totals"]["number"].get<size_t>());
}

}  // namespace
}  // namespace frostkit
