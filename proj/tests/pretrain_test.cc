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

#include "frostkit/pretrain.h"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "frostkit/annotate.h"
#include "frostkit/chain.h"

namespace frostkit {
namespace {

using Indices = std::vector<size_t>;

AnnotatedText Doc(const std::string &text) {
  static const HeuristicRecognizer *r = new HeuristicRecognizer();
  return Annotate(text, KindSet::All(), *r);
}

TEST_CASE("budget") {
  CHECK(GapSentenceBudget(1, 5) == 1);
  CHECK(GapSentenceBudget(2, 5) == 1);
  CHECK(GapSentenceBudget(4, 5) == 2);
  CHECK(GapSentenceBudget(10, 5) == 3);
  CHECK(GapSentenceBudget(14, 5) == 5);
  CHECK(GapSentenceBudget(30, 5) == 5);
  CHECK(GapSentenceBudget(30, 2) == 2);
}

TEST_CASE("selection sizes and conventions") {
  GapSelection s = SelectGapSentences(Doc("Leeds won. Derby lost."));
  CHECK(s.selected.size() == 1);

  s = SelectGapSentences(Doc("Leeds won the cup."));
  CHECK(s.scores == std::vector<double>{0.0});
  CHECK(s.selected == Indices{0});

  s = SelectGapSentences(Doc("Leeds won. Leeds won. Rain fell."));
  CHECK(s.scores[0] == s.scores[1]);
  CHECK(s.scores[0] > s.scores[2]);

  // No shared words: every score is zero and the earliest sentences win.
  s = SelectGapSentences(
      Doc("Alpha one. Bravo two. Charlie three. Delta four. Echo five."));
  CHECK(s.selected == Indices{0, 1});

  // Every score is 1/6, reached through different ratios.
  s = SelectGapSentences(
      Doc("Later on 3 fell games May. Then Leeds. Then. Later said two."));
  CHECK(s.selected == Indices{0, 1});

  CHECK_THROWS_AS(SelectGapSentences(Doc("A b."), 0), std::invalid_argument);
  CHECK_THROWS_AS(SelectGapSentences(Doc("   ")), EmptyDocument);
}

TEST_CASE("pretraining examples") {
  AnnotatedText doc = Doc("Leeds won. Paris and Rome fell. It rained.");
  PretrainExample e = BuildPretrainExample(doc, {{0, 1}, {}});
  CHECK(e.masked_input == "[MASK] [MASK] It rained.");
  CHECK(e.target ==
        "[ENTITYCHAIN] Leeds ||| Paris | Rome [SUMMARY] Leeds won. Paris "
        "and Rome fell.");

  e = BuildPretrainExample(Doc("It rained. It poured."), {{0}, {}});
  CHECK(e.target == "[ENTITYCHAIN] [SUMMARY] It rained.");
  CHECK(e.masked_input == "[MASK] It poured.");

  e = BuildPretrainExample(doc, {{2}, {}}, "<gap>");
  CHECK(e.masked_input == "Leeds won. Paris and Rome fell. <gap>");
}

// Independent selection: sentence i is chosen iff fewer than `budget`
// sentences rank ahead of it, ranking by score then by position.
Indices BruteSelect(const std::vector<double> &scores, size_t budget) {
  Indices out;
  for (size_t i = 0; i < scores.size(); ++i) {
    size_t ahead = 0;
    for (size_t j = 0; j < scores.size(); ++j) {
      if (scores[j] > scores[i] || (scores[j] == scores[i] && j < i)) ++ahead;
    }
    if (ahead < budget) out.push_back(i);
  }
  return out;
}

TEST_CASE("property: selection and reconstruction") {
  std::mt19937_64 rng(31);
  const std::vector<std::string> words = {"Leeds", "won", "the", "cup",
                                          "Derby", "lost", "two", "games",
                                          "in", "May", "rain", "fell"};
  for (int iter = 0; iter < 200; ++iter) {
    std::string text;
    size_t n = 1 + rng() % 12;
    for (size_t s = 0; s < n; ++s) {
      std::string sentence = "Then";
      for (size_t k = rng() % 6; k > 0; --k) {
        sentence += " " + words[rng() % words.size()];
      }
      text += sentence + ". ";
    }
    AnnotatedText doc = Doc(text);
    int n_max = 1 + static_cast<int>(rng() % 5);
    GapSelection sel = SelectGapSentences(doc, n_max);
    REQUIRE(sel.selected ==
            BruteSelect(sel.scores,
                        GapSentenceBudget(doc.sentences.size(), n_max)));

    PretrainExample e = BuildPretrainExample(doc, sel);
    ParsedTarget target = ParseAugmented(e.target);
    REQUIRE_FALSE(target.malformed);
    REQUIRE(target.chain.groups.size() == sel.selected.size());
    // Putting the selected sentences back yields the document.
    std::string rebuilt = e.masked_input;
    for (size_t index : sel.selected) {
      size_t at = rebuilt.find(kDefaultMaskToken);
      REQUIRE(at != std::string::npos);
      rebuilt.replace(at, std::string(kDefaultMaskToken).size(),
                      std::string(doc.Sentence(index)));
    }
    REQUIRE(rebuilt == doc.text);
  }
}

}  // namespace
}  // namespace frostkit
