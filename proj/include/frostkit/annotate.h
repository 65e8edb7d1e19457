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

#ifndef FROSTKIT_ANNOTATE_H_
#define FROSTKIT_ANNOTATE_H_

#include <string_view>
#include <vector>

#include "frostkit/entity.h"
#include "frostkit/recognizer.h"

namespace frostkit {

// Identity and pre-annotations of the record a text belongs to.
struct RecordContext {
  std::string_view id;
  std::string_view field;
  const std::vector<SuppliedSpan> *supplied = nullptr;
};

// Named spans from the recognizer, restricted to kind Named.
std::vector<EntitySpan> RecognizeNamed(std::string_view text,
                                       const NamedEntityRecognizer &recognizer,
                                       const RecordContext &context = {});

// Keeps a non-overlapping subset of `candidates`: spans are accepted in
// order of kind precedence (Named > Date > Number), then length (longest
// first), then start (leftmost first). The result is sorted by start.
std::vector<EntitySpan> ResolveOverlaps(std::vector<EntitySpan> candidates);

// Segments `text`, runs the enabled detectors and resolves overlaps.
// Sentence boundaries falling strictly inside an accepted span are removed
// so that every span lies in exactly one sentence. Throws
// std::invalid_argument for an empty kind set and propagates recognizer
// errors.
AnnotatedText Annotate(std::string_view text, const KindSet &kinds,
                       const NamedEntityRecognizer &recognizer,
                       const RecordContext &context = {});

}  // namespace frostkit

#endif  // FROSTKIT_ANNOTATE_H_
