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

// ROUGE-N and summary-level ROUGE-L.
//
// Text is normalized the way the reference scorer does it: lowercase,
// every character outside [a-z0-9] becomes a space, tokens are split on
// whitespace and, with stemming on, tokens longer than three characters
// are Porter-stemmed.

#ifndef FROSTKIT_ROUGE_H_
#define FROSTKIT_ROUGE_H_

#include <string>
#include <string_view>
#include <vector>

namespace frostkit {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// P = overlap / candidate, R = overlap / reference (0 for empty totals);
// F1 is their harmonic mean, 0 when both are 0.
RougeScore ScoreFromCounts(size_t overlap, size_t candidate_total,
                           size_t reference_total);

std::vector<std::string> RougeTokens(std::string_view text, bool stem = true);

// Clipped n-gram overlap. Empty n-gram lists score 0.
RougeScore RougeN(const std::vector<std::string> &candidate,
                  const std::vector<std::string> &reference, int n);

size_t LcsLength(const std::vector<std::string> &a,
                 const std::vector<std::string> &b);

RougeScore RougeL(const std::vector<std::string> &candidate,
                  const std::vector<std::string> &reference);

}  // namespace frostkit

#endif  // FROSTKIT_ROUGE_H_
