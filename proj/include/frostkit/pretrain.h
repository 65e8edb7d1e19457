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

// Gap-sentence pretraining examples. Each sentence is scored by ROUGE-1 F1
// against the rest of the document; the best ones are cut out of the input
// and become the target, prefixed with their entity chain:
//
//   input:  "S1 [MASK] S3 S4 [MASK]"
//   target: "[ENTITYCHAIN] e1 | e2 ||| e3 [SUMMARY] S2 S5"

#ifndef FROSTKIT_PRETRAIN_H_
#define FROSTKIT_PRETRAIN_H_

#include <string>
#include <vector>

#include "frostkit/entity.h"

namespace frostkit {

class EmptyDocument : public FrostError {
 public:
  using FrostError::FrostError;
};

inline constexpr int kDefaultMaxGapSentences = 5;
inline constexpr char kDefaultMaskToken[] = "[MASK]";

// Score of sentence i against the concatenation of all other sentences.
std::vector<double> ScoreSentences(const AnnotatedText &document,
                                   bool stem = true);

// Number of sentences selected from an n-sentence document: at most
// `n_max` and at most 30% of the sentences, rounded up.
size_t GapSentenceBudget(size_t n, int n_max);

struct GapSelection {
  // Sentence indices in document order.
  std::vector<size_t> selected;
  std::vector<double> scores;
};

// Highest scores win, ties go to the earlier sentence. Throws
// EmptyDocument for documents without sentences and std::invalid_argument
// for n_max < 1.
GapSelection SelectGapSentences(const AnnotatedText &document,
                                int n_max = kDefaultMaxGapSentences,
                                bool stem = true);

struct PretrainExample {
  std::string masked_input;
  std::string target;
};

// Replaces each selected sentence by `mask_token` and builds the
// summary-level target from the selected sentences and their entities.
PretrainExample BuildPretrainExample(const AnnotatedText &document,
                                     const GapSelection &selection,
                                     const std::string &mask_token =
                                         kDefaultMaskToken);

}  // namespace frostkit

#endif  // FROSTKIT_PRETRAIN_H_
