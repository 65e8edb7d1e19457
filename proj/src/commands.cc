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

#include "frostkit/commands.h"

#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "frostkit/annotate.h"
#include "frostkit/metrics.h"
#include "frostkit/parallel.h"
#include "frostkit/stats.h"
#include "frostkit/text.h"

namespace frostkit {
namespace {

// Records per worker and batch. Bounds memory regardless of corpus size.
constexpr size_t kBatchPerWorker = 256;

constexpr const char *kTextFields[] = {"document", "summary", "predicted"};

struct Item {
  size_t line_no = 0;
  std::optional<DatasetRecord> record;
  std::string error;
};

// Produces the next item of a stream; false at the end.
using Source = std::function<bool(Item *)>;

Source JsonlSource(JsonlReader *reader) {
  return [reader](Item *item) {
    JsonlLine line;
    if (!reader->Next(&line)) return false;
    item->line_no = line.line_no;
    item->record.reset();
    item->error = line.error;
    if (line.error.empty()) {
      try {
        item->record = RecordFromJson(std::move(line.value));
      } catch (const std::exception &e) {
        item->error = e.what();
      }
    }
    return true;
  };
}

Source TextSource(std::istream *in) {
  auto line_no = std::make_shared<size_t>(0);
  return [in, line_no](Item *item) {
    std::string text;
    while (std::getline(*in, text)) {
      ++*line_no;
      if (Trim(text).empty()) continue;
      item->line_no = *line_no;
      item->error.clear();
      DatasetRecord record;
      record.id = std::to_string(*line_no);
      record.document = std::move(text);
      item->record = std::move(record);
      return true;
    }
    return false;
  };
}

class Reporter {
 public:
  Reporter(std::ostream *err, const RunConfig &config)
      : err_(err), strict_(config.strict) {}

  void Error(const std::string &source, size_t line_no,
             const std::string &message) {
    ++errors_;
    *err_ << source;
    if (line_no > 0) *err_ << ":" << line_no;
    *err_ << ": " << message << "\n";
  }

  void Error(const std::string &source, const Item &item,
             const std::string &message) {
    std::string text = message;
    if (item.record) text = "record " + item.record->id + ": " + message;
    Error(source, item.line_no, text);
  }

  size_t errors() const { return errors_; }
  int status() const { return strict_ && errors_ > 0 ? kExitData : kExitOk; }

 private:
  std::ostream *err_;
  bool strict_;
  size_t errors_ = 0;
};

template <typename R>
struct Outcome {
  R value{};
  std::string error;
};

// Runs `fn` over all records of `source` in parallel batches and hands the
// successful results to `sink` in input order. Failures are reported.
template <typename Fn, typename Sink>
void ForEachRecord(const Source &source, const std::string &name,
                   const RunConfig &config, Reporter *reporter, Fn fn,
                   Sink sink) {
  using R = std::invoke_result_t<Fn &, const DatasetRecord &>;
  const size_t batch_size =
      kBatchPerWorker * static_cast<size_t>(std::max(config.workers, 1));
  std::vector<Item> batch;
  bool more = true;
  while (more) {
    batch.clear();
    Item item;
    while (batch.size() < batch_size && (more = source(&item))) {
      batch.push_back(std::move(item));
      item = Item();
    }
    if (batch.empty()) break;
    auto outcomes =
        ParallelMap(batch, config.workers, [&](const Item &it) -> Outcome<R> {
          Outcome<R> out;
          if (!it.record) {
            out.error = it.error;
            return out;
          }
          try {
            out.value = fn(*it.record);
          } catch (const std::exception &e) {
            out.error = e.what();
          }
          return out;
        });
    for (size_t i = 0; i < batch.size(); ++i) {
      if (!outcomes[i].error.empty()) {
        reporter->Error(name, batch[i], outcomes[i].error);
      } else {
        sink(*batch[i].record, outcomes[i].value);
      }
    }
  }
}

Json MetaLine(const RunConfig &config) {
  return Json{{"_meta", config.ToJson()}};
}

std::string FieldText(const DatasetRecord &record, std::string_view field) {
  const std::string &text = record.Require(field);
  return field == "predicted" ? StripChain(text) : text;
}

AnnotatedText AnnotateField(const DatasetRecord &record,
                            std::string_view field, const std::string &text,
                            const RunConfig &config,
                            const NamedEntityRecognizer &recognizer) {
  return Annotate(text, config.kinds, recognizer,
                  {record.id, field, record.EntitiesFor(field)});
}

// Loads a whole JSON Lines file into an id map. Duplicates keep the first
// record and are reported.
std::unordered_map<std::string, DatasetRecord> LoadById(const Input &in,
                                                        Reporter *reporter) {
  std::unordered_map<std::string, DatasetRecord> by_id;
  JsonlReader reader(in.stream, in.name);
  Source source = JsonlSource(&reader);
  Item item;
  while (source(&item)) {
    if (!item.record) {
      reporter->Error(in.name, item.line_no, item.error);
      continue;
    }
    std::string id = item.record->id;
    if (!by_id.emplace(id, std::move(*item.record)).second) {
      reporter->Error(in.name, item.line_no, "duplicate id " + id);
    }
  }
  return by_id;
}

}  // namespace

Json RunConfig::ToJson() const {
  Json j;
  j["tool"] = "frostkit";
  j["command"] = command;
  j["kinds"] = kinds.ToString();
  j["level"] = PlanLevelName(level);
  j["recognizer"] = recognizer;
  if (!entities_path.empty()) j["entities"] = entities_path;
  if (!gazetteer_path.empty()) j["gazetteer"] = gazetteer_path;
  j["stemming"] = stem;
  j["policy"] = {{"case_fold", policy.case_fold},
                 {"whitespace_collapse", policy.whitespace_collapse},
                 {"unit", "token"}};
  j["n_max"] = n_max;
  j["mask_token"] = mask_token;
  j["seed"] = seed;
  j["bootstrap"] = bootstrap;
  return j;
}

std::unique_ptr<NamedEntityRecognizer> MakeRecognizer(const RunConfig &config) {
  if (config.recognizer == "passthrough") {
    return std::make_unique<PassThroughRecognizer>();
  }
  if (config.recognizer == "heuristic") {
    std::vector<std::string> gazetteer;
    if (!config.gazetteer_path.empty()) {
      gazetteer = LoadGazetteer(config.gazetteer_path);
    }
    return std::make_unique<HeuristicRecognizer>(std::move(gazetteer));
  }
  if (config.recognizer == "external") {
    if (config.entities_path.empty()) {
      throw FrostError("the external recognizer needs an entity side file");
    }
    return std::make_unique<ExternalRecognizer>(
        ExternalRecognizer::FromFile(config.entities_path));
  }
  throw FrostError("unknown recognizer \"" + config.recognizer + "\"");
}

int RunAnnotate(const Input &in, std::ostream *out, std::ostream *err,
                const RunConfig &config) {
  auto recognizer = MakeRecognizer(config);
  Reporter reporter(err, config);
  JsonlReader reader(in.stream, in.name);
  WriteJsonLine(MetaLine(config), out);
  ForEachRecord(
      JsonlSource(&reader), in.name, config, &reporter,
      [&](const DatasetRecord &record) {
        Json entities = Json::object();
        std::string missing;
        for (const char *field : kTextFields) {
          bool present = (field == std::string_view("document") && record.document) ||
                         (field == std::string_view("summary") && record.summary) ||
                         (field == std::string_view("predicted") && record.predicted);
          if (!present) continue;
          try {
            AnnotatedText ann = AnnotateField(
                record, field, FieldText(record, field), config, *recognizer);
            entities[field] = SpansToJson(ann.spans);
          } catch (const MissingAnnotations &e) {
            // Gold annotations may cover only some fields.
            missing = e.what();
          }
        }
        if (entities.empty()) {
          throw MissingAnnotations(missing.empty() ? "record has no text fields"
                                                   : missing);
        }
        Json result = record.raw;
        result["entities"] = std::move(entities);
        return result;
      },
      [&](const DatasetRecord &, const Json &result) {
        WriteJsonLine(result, out);
      });
  return reporter.status();
}

int RunAugment(const Input &in, std::ostream *out, std::ostream *err,
               const RunConfig &config) {
  auto recognizer = MakeRecognizer(config);
  Reporter reporter(err, config);
  JsonlReader reader(in.stream, in.name);
  WriteJsonLine(MetaLine(config), out);
  ForEachRecord(
      JsonlSource(&reader), in.name, config, &reporter,
      [&](const DatasetRecord &record) {
        const std::string &document = record.Require("document");
        const std::string &summary = record.Require("summary");
        AnnotatedText ann =
            AnnotateField(record, "summary", summary, config, *recognizer);
        std::string target;
        if (config.level == PlanLevel::kSentence) {
          target = SerializeSentenceLevel(BuildSentenceLevelTarget(ann));
        } else {
          target = SerializeSummaryLevel({BuildChain(ann), summary});
        }
        return Json{{"id", record.raw["id"]},
                    {"source", document},
                    {"target", std::move(target)}};
      },
      [&](const DatasetRecord &, const Json &result) {
        WriteJsonLine(result, out);
      });
  return reporter.status();
}

Json FilterCountsToJson(const FilterCounts &counts) {
  return Json{{"kept", counts.kept},
              {"rejected", counts.rejected},
              {"errors", counts.errors}};
}

int RunFilter(const Input &in, std::ostream *kept, std::ostream *rejected,
              std::ostream *err, const RunConfig &config,
              FilterCounts *counts) {
  auto recognizer = MakeRecognizer(config);
  Reporter reporter(err, config);
  JsonlReader reader(in.stream, in.name);
  *counts = FilterCounts();
  WriteJsonLine(MetaLine(config), kept);
  WriteJsonLine(MetaLine(config), rejected);
  ForEachRecord(
      JsonlSource(&reader), in.name, config, &reporter,
      [&](const DatasetRecord &record) {
        FilterDecision decision;
        try {
          const std::string &summary = record.Require("summary");
          decision = ClassifyExtractive(
              record.Require("document"), summary, config.kinds, *recognizer,
              config.policy, {record.id, "summary", record.EntitiesFor("summary")});
        } catch (const std::exception &e) {
          decision.kept = false;
          decision.error = e.what();
        }
        return decision;
      },
      [&](const DatasetRecord &record, const FilterDecision &decision) {
        if (decision.kept) {
          ++counts->kept;
          WriteJsonLine(record.raw, kept);
          return;
        }
        ++counts->rejected;
        Json result = record.raw;
        if (!decision.error.empty()) {
          ++counts->errors;
          reporter.Error(in.name, 0, "record " + record.id + ": " + decision.error);
          result["reject_reason"] = "error: " + decision.error;
        } else {
          result["reject_reason"] = "unsupported_entities";
        }
        result["unsupported"] = decision.unsupported;
        WriteJsonLine(result, rejected);
      });
  // Unparseable lines cannot be routed; they only count as errors.
  counts->errors = reporter.errors();
  return reporter.status();
}

int RunDropPrompt(const Input &predictions, const Input *documents,
                  std::ostream *out, std::ostream *err,
                  const RunConfig &config) {
  Reporter reporter(err, config);
  std::unordered_map<std::string, DatasetRecord> docs;
  if (documents != nullptr) docs = LoadById(*documents, &reporter);
  JsonlReader reader(predictions.stream, predictions.name);
  WriteJsonLine(MetaLine(config), out);
  ForEachRecord(
      JsonlSource(&reader), predictions.name, config, &reporter,
      [&](const DatasetRecord &record) {
        const std::string *document = nullptr;
        if (documents != nullptr) {
          auto it = docs.find(record.id);
          if (it == docs.end()) {
            throw DataError("missing id " + record.id + " in " +
                            documents->name);
          }
          document = &it->second.Require("document");
        } else {
          document = &record.Require("document");
        }
        ParsedTarget parsed = ParseAugmented(record.Require("predicted"));
        DropResult drop = DropPrompt(parsed.chain, *document, config.policy);
        Json report;
        report["kept"] = drop.report.kept;
        report["dropped"] = drop.report.dropped;
        Json partial = Json::array();
        for (const auto &[original, retained] : drop.report.partially_kept) {
          partial.push_back(Json::array({original, retained}));
        }
        report["partially_kept"] = std::move(partial);
        Json result = record.raw;
        result["chain"] = ChainToJson(parsed.chain);
        result["chain_dropped"] = ChainToJson(drop.chain);
        result["drop_report"] = std::move(report);
        result["prompt"] = MakePrompt(drop.chain);
        result["malformed"] = parsed.malformed;
        return result;
      },
      [&](const DatasetRecord &, const Json &result) {
        WriteJsonLine(result, out);
      });
  return reporter.status();
}

int RunEvaluate(const Input &predictions, const Input &references,
                const Input &documents, std::ostream *out, std::ostream *err,
                const RunConfig &config, bool csv) {
  auto recognizer = MakeRecognizer(config);
  Reporter reporter(err, config);
  auto refs = LoadById(references, &reporter);
  auto docs = LoadById(documents, &reporter);
  EvalOptions options;
  options.kinds = config.kinds;
  options.policy = config.policy;
  options.stem = config.stem;

  EvalAccumulator acc;
  std::unordered_set<std::string> seen;
  JsonlReader reader(predictions.stream, predictions.name);
  ForEachRecord(
      JsonlSource(&reader), predictions.name, config, &reporter,
      [&](const DatasetRecord &record) {
        auto ref = refs.find(record.id);
        if (ref == refs.end()) {
          throw DataError("missing id " + record.id + " in " + references.name);
        }
        auto doc = docs.find(record.id);
        if (doc == docs.end()) {
          throw DataError("missing id " + record.id + " in " + documents.name);
        }
        EvalExample example;
        example.id = record.id;
        example.predicted = record.Require("predicted");
        example.reference = ref->second.Require("summary");
        example.document = doc->second.Require("document");
        example.predicted_entities = record.EntitiesFor("predicted");
        example.reference_entities = ref->second.EntitiesFor("summary");
        return ScoreExample(example, options, *recognizer);
      },
      [&](const DatasetRecord &record, const ExampleScores &scores) {
        if (!seen.insert(record.id).second) {
          reporter.Error(predictions.name, 0, "duplicate id " + record.id);
          return;
        }
        acc.Add(scores);
      });
  for (const auto &[id, record] : refs) {
    if (!seen.count(id)) {
      reporter.Error(references.name, 0, "id " + id + " has no prediction");
    }
  }

  EvalReport report = acc.Finish(config.bootstrap, config.seed);
  if (csv) {
    *out << ReportCsv(report);
  } else {
    Json j = MetaLine(config);
    j.update(ReportToJson(report));
    *out << j.dump(2, ' ', false, Json::error_handler_t::replace) << "\n";
  }
  return reporter.status();
}

int RunStats(const Input &in, std::ostream *out, std::ostream *err,
             const RunConfig &config, bool markdown) {
  auto recognizer = MakeRecognizer(config);
  Reporter reporter(err, config);
  JsonlReader reader(in.stream, in.name);
  CorpusStats stats;
  ForEachRecord(
      JsonlSource(&reader), in.name, config, &reporter,
      [&](const DatasetRecord &record) {
        CorpusStats one;
        one.Add(AnnotateField(record, "summary", record.Require("summary"),
                              config, *recognizer));
        return one;
      },
      [&](const DatasetRecord &, const CorpusStats &one) { stats += one; });
  stats.failures = reporter.errors();
  if (stats.failures > 0) {
    *err << in.name << ": " << stats.failures
         << " record(s) excluded from the statistics\n";
  }
  if (markdown) {
    *out << StatsMarkdown(stats, in.name);
  } else {
    Json j = MetaLine(config);
    j.update(StatsToJson(stats));
    *out << j.dump(2, ' ', false, Json::error_handler_t::replace) << "\n";
  }
  return reporter.status();
}

int RunPretrainPrep(const Input &in, std::ostream *out, std::ostream *err,
                    const RunConfig &config, bool plain_text) {
  auto recognizer = MakeRecognizer(config);
  Reporter reporter(err, config);
  JsonlReader reader(in.stream, in.name);
  Source source = plain_text ? TextSource(in.stream) : JsonlSource(&reader);
  WriteJsonLine(MetaLine(config), out);
  ForEachRecord(
      source, in.name, config, &reporter,
      [&](const DatasetRecord &record) {
        AnnotatedText ann = AnnotateField(
            record, "document", record.Require("document"), config, *recognizer);
        GapSelection selection =
            SelectGapSentences(ann, config.n_max, config.stem);
        PretrainExample example =
            BuildPretrainExample(ann, selection, config.mask_token);
        Json id = record.raw.is_null() ? Json(record.id) : record.raw["id"];
        return Json{{"id", std::move(id)},
                    {"masked_input", std::move(example.masked_input)},
                    {"target", std::move(example.target)}};
      },
      [&](const DatasetRecord &, const Json &result) {
        WriteJsonLine(result, out);
      });
  return reporter.status();
}

}  // namespace frostkit
