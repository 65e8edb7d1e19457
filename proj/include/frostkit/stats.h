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

// Corpus statistics over annotated target summaries: sentence and entity
// averages, share of entity-free targets and entity totals per kind.
// Unique entities are counted per record after lowercasing.

#ifndef FROSTKIT_STATS_H_
#define FROSTKIT_STATS_H_

#include <array>
#include <string>
#include <string_view>

#include "frostkit/entity.h"
#include "frostkit/record.h"

namespace frostkit {

struct CorpusStats {
  size_t n_records = 0;
  size_t failures = 0;
  size_t total_sentences = 0;
  size_t total_entities = 0;
  size_t total_unique_entities = 0;
  size_t no_entity_records = 0;
  // Indexed by EntityKind.
  std::array<size_t, 3> kind_totals = {0, 0, 0};

  double avg_sentences() const;
  double avg_entities() const;
  double avg_unique_entities() const;
  double pct_no_entities() const;

  void Add(const AnnotatedText &summary);
  void AddFailure() { ++failures; }
  // Totals are additive, so partial results merge exactly.
  CorpusStats &operator+=(const CorpusStats &other);
  bool operator==(const CorpusStats &other) const = default;
};

Json StatsToJson(const CorpusStats &stats);

// Header, separator and one row shaped like a dataset statistics table.
std::string StatsMarkdown(const CorpusStats &stats, std::string_view name);

}  // namespace frostkit

#endif  // FROSTKIT_STATS_H_
