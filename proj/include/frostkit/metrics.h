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

// Evaluation of predicted summaries: summary ROUGE, ROUGE between the
// entity chains of prediction and reference (plan ROUGE), entity F1
// against the reference (EntF1), entity precision against the source
// document (EntPrec) and average length.
//
// Entity sets are lowercased and deduplicated. Empty-set conventions:
// empty prediction and empty reference score 1; an empty reference with a
// non-empty prediction scores 0; a prediction without entities has
// EntPrec 1.

#ifndef FROSTKIT_METRICS_H_
#define FROSTKIT_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frostkit/annotate.h"
#include "frostkit/chain.h"
#include "frostkit/control.h"
#include "frostkit/entity.h"
#include "frostkit/recognizer.h"
#include "frostkit/record.h"
#include "frostkit/rouge.h"

namespace frostkit {

struct EntityCounts {
  size_t matched = 0;
  size_t predicted = 0;
  size_t reference = 0;

  EntityCounts &operator+=(const EntityCounts &other);
};

struct EntityScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

EntityScore EntityScoreFromCounts(const EntityCounts &counts);

// Lowercased entity texts of `annotated`, first occurrence order, no
// duplicates.
std::vector<std::string> EntitySet(const AnnotatedText &annotated);

EntityCounts MatchEntitySets(const std::vector<std::string> &predicted,
                             const std::vector<std::string> &reference);

struct PlanRouge {
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rougeL;
};

// ROUGE between the flattened chains. When neither chain has an n-gram of
// the order being scored, the score is 1 for identical token sequences
// and 0 otherwise.
PlanRouge ScorePlan(const EntityChain &predicted, const EntityChain &reference,
                    bool stem = true);

// Whitespace token count.
size_t SummaryLength(std::string_view summary);

struct EvalOptions {
  KindSet kinds = KindSet::All();
  MatchPolicy policy;
  bool stem = true;
};

struct EvalExample {
  std::string_view id;
  // Raw model output, possibly with a chain prefix.
  std::string_view predicted;
  std::string_view reference;
  std::string_view document;
  const std::vector<SuppliedSpan> *predicted_entities = nullptr;
  const std::vector<SuppliedSpan> *reference_entities = nullptr;
};

struct ExampleScores {
  RougeScore rouge1, rouge2, rouge4, rougeL;
  PlanRouge plan;
  EntityCounts entity;
  EntityScore entf1;
  // Unique predicted entities found in the document.
  size_t supported = 0;
  double entprec = 1.0;
  size_t length = 0;
  bool malformed = false;
};

ExampleScores ScoreExample(const EvalExample &example,
                           const EvalOptions &options,
                           const NamedEntityRecognizer &recognizer);

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

struct EvalReport {
  size_t n_examples = 0;
  size_t malformed_count = 0;
  // Means of the per-example scores.
  RougeScore rouge1, rouge2, rouge4, rougeL;
  PlanRouge plan;
  EntityScore entf1_macro;
  EntityScore entf1_micro;
  EntityCounts entity_totals;
  double entprec = 1.0;
  double entprec_micro = 1.0;
  double avg_length = 0.0;
  // 95% percentile intervals by metric name, when requested.
  std::map<std::string, Interval> bootstrap;
};

// Aggregates example scores in insertion order. Reordering the examples
// changes the means only by floating-point rounding.
class EvalAccumulator {
 public:
  void Add(const ExampleScores &scores) { examples_.push_back(scores); }
  size_t size() const { return examples_.size(); }

  EvalReport Finish() const;
  // Adds percentile intervals from `resamples` resamples drawn with `seed`.
  EvalReport Finish(int resamples, uint64_t seed) const;

 private:
  std::vector<ExampleScores> examples_;
};

// Scores aligned vectors; throws DataError on a length mismatch.
EvalReport Evaluate(const std::vector<std::string> &predictions,
                    const std::vector<std::string> &references,
                    const std::vector<std::string> &documents,
                    const EvalOptions &options,
                    const NamedEntityRecognizer &recognizer);

// Per-example EntPrec macro average over aligned predictions/documents.
double EntityPrecision(const std::vector<std::string> &predictions,
                       const std::vector<std::string> &documents,
                       const EvalOptions &options,
                       const NamedEntityRecognizer &recognizer);

Json ReportToJson(const EvalReport &report);

// Header and value row: summary_r1,summary_r2,summary_rl,plan_r1,plan_r2,
// plan_rl,entf1,entprec,avg_length. ROUGE and entity values are F1.
std::string ReportCsv(const EvalReport &report);

}  // namespace frostkit

#endif  // FROSTKIT_METRICS_H_
