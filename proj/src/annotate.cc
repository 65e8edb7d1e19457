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

#include "frostkit/annotate.h"

#include <algorithm>
#include <stdexcept>

#include "frostkit/grammar.h"
#include "frostkit/sentences.h"

namespace frostkit {

std::vector<EntitySpan> RecognizeNamed(std::string_view text,
                                       const NamedEntityRecognizer &recognizer,
                                       const RecordContext &context) {
  RecognizeRequest request{text, context.id, context.field, context.supplied};
  std::vector<EntitySpan> spans = recognizer.Recognize(request);
  std::erase_if(spans, [](const EntitySpan &s) {
    return s.kind != EntityKind::kNamed;
  });
  return ResolveOverlaps(std::move(spans));
}

std::vector<EntitySpan> ResolveOverlaps(std::vector<EntitySpan> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const EntitySpan &a, const EntitySpan &b) {
                     if (KindRank(a.kind) != KindRank(b.kind)) {
                       return KindRank(a.kind) < KindRank(b.kind);
                     }
                     if (a.length() != b.length()) {
                       return a.length() > b.length();
                     }
                     return a.start < b.start;
                   });
  std::vector<EntitySpan> accepted;
  for (EntitySpan &candidate : candidates) {
    if (candidate.start >= candidate.end) continue;
    bool clash = std::any_of(
        accepted.begin(), accepted.end(),
        [&](const EntitySpan &a) { return a.Overlaps(candidate); });
    if (!clash) accepted.push_back(std::move(candidate));
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const EntitySpan &a, const EntitySpan &b) {
              return a.start < b.start;
            });
  return accepted;
}

AnnotatedText Annotate(std::string_view text, const KindSet &kinds,
                       const NamedEntityRecognizer &recognizer,
                       const RecordContext &context) {
  if (kinds.empty()) throw std::invalid_argument("empty entity kind set");

  std::vector<EntitySpan> candidates;
  if (recognizer.authoritative()) {
    RecognizeRequest request{text, context.id, context.field, context.supplied};
    candidates = recognizer.Recognize(request);
  } else {
    if (kinds.Contains(EntityKind::kNamed)) {
      RecognizeRequest request{text, context.id, context.field, context.supplied};
      candidates = recognizer.Recognize(request);
    }
    if (kinds.Contains(EntityKind::kDate)) {
      auto dates = DetectDates(text);
      candidates.insert(candidates.end(), dates.begin(), dates.end());
    }
    if (kinds.Contains(EntityKind::kNumber)) {
      auto numbers = DetectNumbers(text);
      candidates.insert(candidates.end(), numbers.begin(), numbers.end());
    }
  }
  std::erase_if(candidates,
                [&](const EntitySpan &s) { return !kinds.Contains(s.kind); });

  AnnotatedText out;
  out.text = std::string(text);
  out.spans = ResolveOverlaps(std::move(candidates));

  // Merge sentences whose boundary would split an accepted span.
  std::vector<SentenceRange> sentences = SegmentSentences(text);
  std::vector<SentenceRange> merged;
  for (const SentenceRange &range : sentences) {
    bool split = false;
    if (!merged.empty()) {
      size_t gap_begin = merged.back().end;
      size_t gap_end = range.start;
      split = std::any_of(out.spans.begin(), out.spans.end(),
                          [&](const EntitySpan &s) {
                            return s.start < gap_end && s.end > gap_begin;
                          });
    }
    if (split) {
      merged.back().end = range.end;
    } else {
      merged.push_back(range);
    }
  }
  out.sentences = std::move(merged);

  size_t sent = 0;
  for (EntitySpan &span : out.spans) {
    while (sent + 1 < out.sentences.size() &&
           out.sentences[sent].end <= span.start) {
      ++sent;
    }
    span.sent = static_cast<int>(sent);
  }
  return out;
}

}  // namespace frostkit
