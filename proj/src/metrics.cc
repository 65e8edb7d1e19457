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

#include "frostkit/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <unordered_set>

#include "frostkit/text.h"

namespace frostkit {
namespace {

std::vector<std::string> FlatTokens(const EntityChain &chain, bool stem) {
  std::string joined;
  for (const std::string &entity : chain.Flatten()) {
    if (!joined.empty()) joined += ' ';
    joined += entity;
  }
  return RougeTokens(joined, stem);
}

RougeScore PlanScore(const std::vector<std::string> &pred,
                     const std::vector<std::string> &ref, int n) {
  size_t order = n == 0 ? 1 : static_cast<size_t>(n);
  if (pred.size() < order && ref.size() < order) {
    double v = pred == ref ? 1.0 : 0.0;
    return RougeScore{v, v, v};
  }
  return n == 0 ? RougeL(pred, ref) : RougeN(pred, ref, n);
}

void AddScore(RougeScore *sum, const RougeScore &s) {
  sum->precision += s.precision;
  sum->recall += s.recall;
  sum->f1 += s.f1;
}

void Divide(RougeScore *s, double n) {
  s->precision /= n;
  s->recall /= n;
  s->f1 /= n;
}

Json RougeJson(const RougeScore &s) {
  return Json{{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

Json EntityJson(const EntityScore &s) {
  return Json{{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

// Headline values used for bootstrap intervals.
const std::vector<
    std::pair<const char *, std::function<double(const EvalReport &)>>> &
BootstrapMetrics() {
  static const auto *metrics = new std::vector<
      std::pair<const char *, std::function<double(const EvalReport &)>>>{
      {"summary_r1", [](const EvalReport &r) { return r.rouge1.f1; }},
      {"summary_r2", [](const EvalReport &r) { return r.rouge2.f1; }},
      {"summary_rl", [](const EvalReport &r) { return r.rougeL.f1; }},
      {"plan_r1", [](const EvalReport &r) { return r.plan.rouge1.f1; }},
      {"plan_r2", [](const EvalReport &r) { return r.plan.rouge2.f1; }},
      {"plan_rl", [](const EvalReport &r) { return r.plan.rougeL.f1; }},
      {"entf1", [](const EvalReport &r) { return r.entf1_macro.f1; }},
      {"entprec", [](const EvalReport &r) { return r.entprec; }},
      {"avg_length", [](const EvalReport &r) { return r.avg_length; }},
  };
  return *metrics;
}

EvalReport Aggregate(const std::vector<const ExampleScores *> &examples) {
  EvalReport r;
  r.n_examples = examples.size();
  if (examples.empty()) return r;
  size_t supported = 0;
  double entprec = 0, length = 0;
  for (const ExampleScores *e : examples) {
    if (e->malformed) ++r.malformed_count;
    AddScore(&r.rouge1, e->rouge1);
    AddScore(&r.rouge2, e->rouge2);
    AddScore(&r.rouge4, e->rouge4);
    AddScore(&r.rougeL, e->rougeL);
    AddScore(&r.plan.rouge1, e->plan.rouge1);
    AddScore(&r.plan.rouge2, e->plan.rouge2);
    AddScore(&r.plan.rougeL, e->plan.rougeL);
    r.entf1_macro.precision += e->entf1.precision;
    r.entf1_macro.recall += e->entf1.recall;
    r.entf1_macro.f1 += e->entf1.f1;
    r.entity_totals += e->entity;
    supported += e->supported;
    entprec += e->entprec;
    length += static_cast<double>(e->length);
  }
  double n = static_cast<double>(examples.size());
  for (RougeScore *s : {&r.rouge1, &r.rouge2, &r.rouge4, &r.rougeL,
                        &r.plan.rouge1, &r.plan.rouge2, &r.plan.rougeL}) {
    Divide(s, n);
  }
  r.entf1_macro.precision /= n;
  r.entf1_macro.recall /= n;
  r.entf1_macro.f1 /= n;
  r.entf1_micro = EntityScoreFromCounts(r.entity_totals);
  r.entprec = entprec / n;
  r.entprec_micro =
      r.entity_totals.predicted == 0
          ? 1.0
          : static_cast<double>(supported) / r.entity_totals.predicted;
  r.avg_length = length / n;
  return r;
}

}  // namespace

EntityCounts &EntityCounts::operator+=(const EntityCounts &other) {
  matched += other.matched;
  predicted += other.predicted;
  reference += other.reference;
  return *this;
}

EntityScore EntityScoreFromCounts(const EntityCounts &c) {
  EntityScore s;
  if (c.predicted > 0) {
    s.precision = static_cast<double>(c.matched) / c.predicted;
  } else {
    s.precision = c.reference == 0 ? 1.0 : 0.0;
  }
  if (c.reference > 0) {
    s.recall = static_cast<double>(c.matched) / c.reference;
  } else {
    s.recall = c.predicted == 0 ? 1.0 : 0.0;
  }
  if (s.precision + s.recall > 0) {
    s.f1 = 2 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

std::vector<std::string> EntitySet(const AnnotatedText &annotated) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const EntitySpan &span : annotated.spans) {
    std::string key = FoldCase(span.text);
    if (seen.insert(key).second) out.push_back(std::move(key));
  }
  return out;
}

EntityCounts MatchEntitySets(const std::vector<std::string> &predicted,
                             const std::vector<std::string> &reference) {
  std::unordered_set<std::string> ref(reference.begin(), reference.end());
  std::unordered_set<std::string> pred(predicted.begin(), predicted.end());
  EntityCounts c;
  c.predicted = pred.size();
  c.reference = ref.size();
  for (const std::string &e : pred) c.matched += ref.count(e);
  return c;
}

PlanRouge ScorePlan(const EntityChain &predicted, const EntityChain &reference,
                    bool stem) {
  std::vector<std::string> pred = FlatTokens(predicted, stem);
  std::vector<std::string> ref = FlatTokens(reference, stem);
  return PlanRouge{PlanScore(pred, ref, 1), PlanScore(pred, ref, 2),
                   PlanScore(pred, ref, 0)};
}

size_t SummaryLength(std::string_view summary) {
  return SplitWhitespace(summary).size();
}

ExampleScores ScoreExample(const EvalExample &example,
                           const EvalOptions &options,
                           const NamedEntityRecognizer &recognizer) {
  ExampleScores s;
  ParsedTarget parsed = ParseAugmented(example.predicted);
  s.malformed = parsed.malformed;
  const std::string &summary = parsed.summary;

  std::vector<std::string> pred_tokens = RougeTokens(summary, options.stem);
  std::vector<std::string> ref_tokens =
      RougeTokens(example.reference, options.stem);
  s.rouge1 = RougeN(pred_tokens, ref_tokens, 1);
  s.rouge2 = RougeN(pred_tokens, ref_tokens, 2);
  s.rouge4 = RougeN(pred_tokens, ref_tokens, 4);
  s.rougeL = RougeL(pred_tokens, ref_tokens);
  s.length = SummaryLength(summary);

  AnnotatedText pred_ann =
      Annotate(summary, options.kinds, recognizer,
               {example.id, "predicted", example.predicted_entities});
  AnnotatedText ref_ann =
      Annotate(example.reference, options.kinds, recognizer,
               {example.id, "summary", example.reference_entities});
  s.plan = ScorePlan(BuildChain(pred_ann), BuildChain(ref_ann), options.stem);

  std::vector<std::string> pred_set = EntitySet(pred_ann);
  s.entity = MatchEntitySets(pred_set, EntitySet(ref_ann));
  s.entf1 = EntityScoreFromCounts(s.entity);

  // Support is checked on the first surface form of each unique entity.
  SupportIndex index(example.document, options.policy);
  std::unordered_set<std::string> seen;
  for (const EntitySpan &span : pred_ann.spans) {
    if (!seen.insert(FoldCase(span.text)).second) continue;
    if (index.Supports(span.text)) ++s.supported;
  }
  s.entprec = pred_set.empty()
                  ? 1.0
                  : static_cast<double>(s.supported) / pred_set.size();
  return s;
}

EvalReport EvalAccumulator::Finish() const {
  std::vector<const ExampleScores *> all;
  all.reserve(examples_.size());
  for (const ExampleScores &e : examples_) all.push_back(&e);
  return Aggregate(all);
}

EvalReport EvalAccumulator::Finish(int resamples, uint64_t seed) const {
  EvalReport report = Finish();
  if (resamples <= 0 || examples_.empty()) return report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, examples_.size() - 1);
  const auto &metrics = BootstrapMetrics();
  std::vector<std::vector<double>> values(metrics.size());
  std::vector<const ExampleScores *> sample(examples_.size());
  for (int b = 0; b < resamples; ++b) {
    for (auto &slot : sample) slot = &examples_[pick(rng)];
    EvalReport r = Aggregate(sample);
    for (size_t m = 0; m < metrics.size(); ++m) {
      values[m].push_back(metrics[m].second(r));
    }
  }
  for (size_t m = 0; m < metrics.size(); ++m) {
    std::vector<double> &v = values[m];
    std::sort(v.begin(), v.end());
    size_t lo = static_cast<size_t>(std::floor(0.025 * (v.size() - 1)));
    size_t hi = static_cast<size_t>(std::ceil(0.975 * (v.size() - 1)));
    report.bootstrap[metrics[m].first] = Interval{v[lo], v[hi]};
  }
  return report;
}

EvalReport Evaluate(const std::vector<std::string> &predictions,
                    const std::vector<std::string> &references,
                    const std::vector<std::string> &documents,
                    const EvalOptions &options,
                    const NamedEntityRecognizer &recognizer) {
  if (predictions.size() != references.size() ||
      predictions.size() != documents.size()) {
    throw DataError("prediction, reference and document counts differ");
  }
  EvalAccumulator acc;
  for (size_t i = 0; i < predictions.size(); ++i) {
    std::string id = std::to_string(i);
    acc.Add(ScoreExample({id, predictions[i], references[i], documents[i]},
                         options, recognizer));
  }
  return acc.Finish();
}

double EntityPrecision(const std::vector<std::string> &predictions,
                       const std::vector<std::string> &documents,
                       const EvalOptions &options,
                       const NamedEntityRecognizer &recognizer) {
  if (predictions.size() != documents.size()) {
    throw DataError("prediction and document counts differ");
  }
  if (predictions.empty()) return 1.0;
  double sum = 0;
  for (size_t i = 0; i < predictions.size(); ++i) {
    std::string id = std::to_string(i);
    std::string summary = StripChain(predictions[i]);
    AnnotatedText ann =
        Annotate(summary, options.kinds, recognizer, {id, "predicted"});
    std::vector<std::string> unique = EntitySet(ann);
    if (unique.empty()) {
      sum += 1.0;
      continue;
    }
    SupportIndex index(documents[i], options.policy);
    std::unordered_set<std::string> seen;
    size_t supported = 0;
    for (const EntitySpan &span : ann.spans) {
      if (seen.insert(FoldCase(span.text)).second && index.Supports(span.text)) {
        ++supported;
      }
    }
    sum += static_cast<double>(supported) / unique.size();
  }
  return sum / predictions.size();
}

Json ReportToJson(const EvalReport &r) {
  Json j;
  j["n_examples"] = r.n_examples;
  j["malformed_count"] = r.malformed_count;
  j["summary_rouge"] = {{"rouge1", RougeJson(r.rouge1)},
                        {"rouge2", RougeJson(r.rouge2)},
                        {"rouge4", RougeJson(r.rouge4)},
                        {"rougeL", RougeJson(r.rougeL)}};
  j["plan_rouge"] = {{"rouge1", RougeJson(r.plan.rouge1)},
                     {"rouge2", RougeJson(r.plan.rouge2)},
                     {"rougeL", RougeJson(r.plan.rougeL)}};
  Json micro = EntityJson(r.entf1_micro);
  micro["matched"] = r.entity_totals.matched;
  micro["predicted"] = r.entity_totals.predicted;
  micro["reference"] = r.entity_totals.reference;
  j["entf1"] = {{"macro", EntityJson(r.entf1_macro)}, {"micro", micro}};
  j["entprec"] = r.entprec;
  j["entprec_micro"] = r.entprec_micro;
  j["avg_length"] = r.avg_length;
  if (!r.bootstrap.empty()) {
    Json b = Json::object();
    for (const auto &[name, interval] : r.bootstrap) {
      b[name] = {{"low", interval.low}, {"high", interval.high}};
    }
    j["bootstrap"] = std::move(b);
  }
  return j;
}

std::string ReportCsv(const EvalReport &r) {
  char row[512];
  std::snprintf(row, sizeof(row),
                "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.2f\n", r.rouge1.f1,
                r.rouge2.f1, r.rougeL.f1, r.plan.rouge1.f1, r.plan.rouge2.f1,
                r.plan.rougeL.f1, r.entf1_macro.f1, r.entprec, r.avg_length);
  return std::string(
             "summary_r1,summary_r2,summary_rl,plan_r1,plan_r2,plan_rl,"
             "entf1,entprec,avg_length\n") +
         row;
}

}  // namespace frostkit
