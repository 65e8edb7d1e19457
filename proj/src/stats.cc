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

#include <cstdio>
#include <unordered_set>

#include "frostkit/text.h"

namespace frostkit {
namespace {

double Ratio(size_t num, size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / den;
}

}  // namespace

double CorpusStats::avg_sentences() const {
  return Ratio(total_sentences, n_records);
}

double CorpusStats::avg_entities() const {
  return Ratio(total_entities, n_records);
}

double CorpusStats::avg_unique_entities() const {
  return Ratio(total_unique_entities, n_records);
}

double CorpusStats::pct_no_entities() const {
  return 100.0 * Ratio(no_entity_records, n_records);
}

void CorpusStats::Add(const AnnotatedText &summary) {
  ++n_records;
  total_sentences += summary.sentences.size();
  total_entities += summary.spans.size();
  std::unordered_set<std::string> unique;
  for (const EntitySpan &span : summary.spans) {
    unique.insert(FoldCase(span.text));
    ++kind_totals[static_cast<size_t>(span.kind)];
  }
  total_unique_entities += unique.size();
  if (summary.spans.empty()) ++no_entity_records;
}

CorpusStats &CorpusStats::operator+=(const CorpusStats &other) {
  n_records += other.n_records;
  failures += other.failures;
  total_sentences += other.total_sentences;
  total_entities += other.total_entities;
  total_unique_entities += other.total_unique_entities;
  no_entity_records += other.no_entity_records;
  for (size_t k = 0; k < kind_totals.size(); ++k) {
    kind_totals[k] += other.kind_totals[k];
  }
  return *this;
}

Json StatsToJson(const CorpusStats &s) {
  Json j;
  j["n_records"] = s.n_records;
  j["failures"] = s.failures;
  j["avg_sentences"] = s.avg_sentences();
  j["avg_entities"] = s.avg_entities();
  j["avg_unique_entities"] = s.avg_unique_entities();
  j["pct_no_entities"] = s.pct_no_entities();
  j["totals"] = {{"named", s.kind_totals[0]},
                 {"date", s.kind_totals[1]},
                 {"number", s.kind_totals[2]}};
  j["total_sentences"] = s.total_sentences;
  j["total_entities"] = s.total_entities;
  j["total_unique_entities"] = s.total_unique_entities;
  j["no_entity_records"] = s.no_entity_records;
  return j;
}

std::string StatsMarkdown(const CorpusStats &s, std::string_view name) {
  char row[512];
  std::snprintf(row, sizeof(row),
                "| %.*s | %zu | %.2f | %.2f | %.2f | %.2f | %zu | %zu | %zu |\n",
                static_cast<int>(name.size()), name.data(), s.n_records,
                s.avg_sentences(), s.avg_entities(), s.avg_unique_entities(),
                s.pct_no_entities(), s.kind_totals[0], s.kind_totals[1],
                s.kind_totals[2]);
  return std::string(
             "| dataset | records | avg. sent. | avg. ent. | avg. uniq. ent. "
             "| % target (no ent.) | named | date | number |\n"
             "|---|---|---|---|---|---|---|---|---|\n") +
         row;
}

}  // namespace frostkit
