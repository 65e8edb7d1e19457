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

#ifndef FROSTKIT_SENTENCES_H_
#define FROSTKIT_SENTENCES_H_

#include <string_view>
#include <vector>

#include "frostkit/entity.h"

namespace frostkit {

// Rule-based sentence splitter. A boundary is placed at a whitespace run
// when either
//   - the run contains two or more newlines, or
//   - it is preceded by a terminator run [.!?]+ (optionally followed by
//     closing quotes/brackets, which stay with the sentence) and followed
//     by an upper-case letter, a digit, or an opening quote/bracket.
// A single '.' does not end a sentence when the word it closes is a listed
// abbreviation (Dr., Mr., Mrs., St., No., e.g., ...) or matches
// (?:[A-Z]\.)+ (initials, U.S.).
//
// Ranges are byte offsets, trimmed of surrounding whitespace, disjoint and
// in order.
std::vector<SentenceRange> SegmentSentences(std::string_view text);

// True if `word` (including its final '.') is treated as an abbreviation.
bool IsAbbreviation(std::string_view word);

}  // namespace frostkit

#endif  // FROSTKIT_SENTENCES_H_
