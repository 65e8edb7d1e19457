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

#include "frostkit/rouge.h"

#include <algorithm>
#include <map>

#include "frostkit/porter.h"

namespace frostkit {
namespace {

using NgramCounts = std::map<std::vector<std::string>, size_t>;

NgramCounts CountNgrams(const std::vector<std::string> &tokens, int n,
                        size_t *total) {
  NgramCounts counts;
  *total = 0;
  if (n <= 0 || tokens.size() < static_cast<size_t>(n)) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + i,
                                      tokens.begin() + i + n)];
    ++*total;
  }
  return counts;
}

}  // namespace

RougeScore ScoreFromCounts(size_t overlap, size_t candidate_total,
                           size_t reference_total) {
  RougeScore s;
  s.precision = candidate_total == 0
                    ? 0.0
                    : static_cast<double>(overlap) / candidate_total;
  s.recall = reference_total == 0
                 ? 0.0
                 : static_cast<double>(overlap) / reference_total;
  // Equals 2PR/(P+R) but rounds once, so equal ratios give equal scores.
  if (overlap > 0) {
    s.f1 = 2.0 * static_cast<double>(overlap) /
           static_cast<double>(candidate_total + reference_total);
  }
  return s;
}

std::vector<std::string> RougeTokens(std::string_view text, bool stem) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&]() {
    if (current.empty()) return;
    if (stem && current.size() > 3) current = PorterStem(current);
    tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : text) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      current += c;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

RougeScore RougeN(const std::vector<std::string> &candidate,
                  const std::vector<std::string> &reference, int n) {
  size_t cand_total, ref_total;
  NgramCounts cand = CountNgrams(candidate, n, &cand_total);
  NgramCounts ref = CountNgrams(reference, n, &ref_total);
  size_t overlap = 0;
  for (const auto &[gram, count] : cand) {
    auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  return ScoreFromCounts(overlap, cand_total, ref_total);
}

size_t LcsLength(const std::vector<std::string> &a,
                 const std::vector<std::string> &b) {
  std::vector<size_t> prev(b.size() + 1, 0), row(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      row[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], row[j - 1]);
    }
    std::swap(prev, row);
  }
  return prev[b.size()];
}

RougeScore RougeL(const std::vector<std::string> &candidate,
                  const std::vector<std::string> &reference) {
  return ScoreFromCounts(LcsLength(candidate, reference), candidate.size(),
                         reference.size());
}

}  // namespace frostkit
