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

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "frostkit/chain.h"
#include "frostkit/rouge.h"

namespace frostkit {

std::vector<double> ScoreSentences(const AnnotatedText &document, bool stem) {
  const size_t n = document.sentences.size();
  std::vector<std::vector<std::string>> tokens(n);
  for (size_t i = 0; i < n; ++i) {
    tokens[i] = RougeTokens(document.Sentence(i), stem);
  }
  std::vector<double> scores(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<std::string> rest;
    for (size_t j = 0; j < n; ++j) {
      if (j != i) rest.insert(rest.end(), tokens[j].begin(), tokens[j].end());
    }
    scores[i] = RougeN(tokens[i], rest, 1).f1;
  }
  return scores;
}

size_t GapSentenceBudget(size_t n, int n_max) {
  size_t cap = (3 * n + 9) / 10;
  return std::min(cap, static_cast<size_t>(std::max(n_max, 0)));
}

GapSelection SelectGapSentences(const AnnotatedText &document, int n_max,
                                bool stem) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  if (document.sentences.empty()) {
    throw EmptyDocument("document has no sentences");
  }
  GapSelection selection;
  selection.scores = ScoreSentences(document, stem);
  std::vector<size_t> order(selection.scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return selection.scores[a] > selection.scores[b];
  });
  order.resize(GapSentenceBudget(order.size(), n_max));
  std::sort(order.begin(), order.end());
  selection.selected = std::move(order);
  return selection;
}

PretrainExample BuildPretrainExample(const AnnotatedText &document,
                                     const GapSelection &selection,
                                     const std::string &mask_token) {
  PretrainExample example;
  AugmentedTarget target;
  std::vector<std::string> sentences;
  size_t cursor = 0;
  for (size_t index : selection.selected) {
    const SentenceRange &range = document.sentences.at(index);
    example.masked_input.append(document.text, cursor, range.start - cursor);
    example.masked_input += mask_token;
    cursor = range.end;

    EntityGroup group;
    for (const EntitySpan &span : document.spans) {
      if (span.sent == static_cast<int>(index)) group.push_back(span.text);
    }
    target.chain.groups.push_back(std::move(group));
    if (!target.summary.empty()) target.summary += ' ';
    target.summary += document.Sentence(index);
  }
  example.masked_input.append(document.text, cursor);
  example.target = SerializeSummaryLevel(target);
  return example;
}

}  // namespace frostkit
