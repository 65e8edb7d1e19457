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

// Command-line front end:
//
//   frostkit annotate      -i corpus.jsonl -o annotated.jsonl
//   frostkit augment       -i corpus.jsonl -o train.jsonl --level sentence
//   frostkit filter        -i corpus.jsonl --kept k.jsonl --rejected r.jsonl
//   frostkit drop-prompt   --predictions p.jsonl --documents d.jsonl
//   frostkit evaluate      --predictions p.jsonl --references r.jsonl
//   frostkit stats         -i corpus.jsonl --markdown
//   frostkit pretrain-prep -i docs.jsonl --n-max 5
//
// "-" stands for stdin/stdout. FROSTKIT_GAZETTEER names a gazetteer file
// for the heuristic recognizer.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "frostkit/commands.h"

namespace {

using frostkit::Input;
using frostkit::RunConfig;

struct Flags {
  std::string kinds = "named,date,number";
  std::string level = "summary";
  std::string recognizer = "heuristic";
  std::string entities;
  std::string gazetteer;
  bool no_stem = false;
  bool case_sensitive = false;
  bool keep_whitespace = false;
  int n_max = frostkit::kDefaultMaxGapSentences;
  std::string mask_token = frostkit::kDefaultMaskToken;
  bool strict = false;
  int workers = 1;
  uint64_t seed = 0;
  int bootstrap = 0;

  std::string input = "-";
  std::string output = "-";
  std::string kept;
  std::string rejected;
  std::string counts = "-";
  std::string predictions;
  std::string references;
  std::string documents;
  bool csv = false;
  bool markdown = false;
  bool text = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void AddCommonFlags(CLI::App *cmd, Flags *f) {
  cmd->add_option("--kinds", f->kinds,
                  "Entity kinds to use: any of named,date,number");
  cmd->add_option("--recognizer", f->recognizer, "Named entity recognizer")
      ->check(CLI::IsMember({"passthrough", "heuristic", "external"}));
  cmd->add_option("--entities", f->entities,
                  "Entity side file for --recognizer external");
  cmd->add_option("--gazetteer", f->gazetteer,
                  "Gazetteer for the heuristic recognizer (default: "
                  "$FROSTKIT_GAZETTEER)");
  cmd->add_flag("--no-stem", f->no_stem, "Disable Porter stemming in ROUGE");
  cmd->add_flag("--case-sensitive", f->case_sensitive,
                "Match entities against documents case-sensitively");
  cmd->add_flag("--keep-whitespace", f->keep_whitespace,
                "Require identical whitespace between matched tokens");
  cmd->add_flag("--strict", f->strict, "Exit with status 2 on any bad record");
  cmd->add_option("--workers", f->workers, "Worker threads")
      ->check(CLI::Range(1, 1024));
}

RunConfig MakeConfig(const std::string &command, const Flags &f) {
  RunConfig config;
  config.command = command;
  try {
    config.kinds = frostkit::KindSet::Parse(f.kinds);
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("--kinds: ") + e.what());
  }
  config.level = f.level == "sentence" ? frostkit::PlanLevel::kSentence
                                       : frostkit::PlanLevel::kSummary;
  config.recognizer = f.recognizer;
  config.entities_path = f.entities;
  config.gazetteer_path = f.gazetteer;
  if (config.gazetteer_path.empty()) {
    if (const char *env = std::getenv("FROSTKIT_GAZETTEER")) {
      config.gazetteer_path = env;
    }
  }
  if (config.recognizer == "external" && config.entities_path.empty()) {
    throw UsageError("--recognizer external requires --entities");
  }
  config.stem = !f.no_stem;
  config.policy.case_fold = !f.case_sensitive;
  config.policy.whitespace_collapse = !f.keep_whitespace;
  config.n_max = f.n_max;
  config.mask_token = f.mask_token;
  config.seed = f.seed;
  config.bootstrap = f.bootstrap;
  config.strict = f.strict;
  config.workers = f.workers;
  return config;
}

// Owns opened files; "-" maps to the standard streams.
class Files {
 public:
  Input Open(const std::string &path) {
    if (path == "-") return Input{&std::cin, "<stdin>"};
    auto in = std::make_unique<std::ifstream>(path);
    if (!*in) throw UsageError("cannot open " + path);
    inputs_.push_back(std::move(in));
    return Input{inputs_.back().get(), path};
  }

  std::ostream *Create(const std::string &path) {
    if (path == "-") return &std::cout;
    auto out = std::make_unique<std::ofstream>(path);
    if (!*out) throw UsageError("cannot create " + path);
    outputs_.push_back(std::move(out));
    return outputs_.back().get();
  }

 private:
  std::vector<std::unique_ptr<std::ifstream>> inputs_;
  std::vector<std::unique_ptr<std::ofstream>> outputs_;
};

int Dispatch(const std::string &command, const Flags &f) {
  RunConfig config = MakeConfig(command, f);
  Files files;
  std::ostream *err = &std::cerr;
  if (command == "annotate") {
    Input in = files.Open(f.input);
    return frostkit::RunAnnotate(in, files.Create(f.output), err, config);
  }
  if (command == "augment") {
    Input in = files.Open(f.input);
    return frostkit::RunAugment(in, files.Create(f.output), err, config);
  }
  if (command == "filter") {
    Input in = files.Open(f.input);
    std::ostream *kept = files.Create(f.kept);
    std::ostream *rejected = files.Create(f.rejected);
    frostkit::FilterCounts counts;
    int status =
        frostkit::RunFilter(in, kept, rejected, err, config, &counts);
    frostkit::WriteJsonLine(frostkit::FilterCountsToJson(counts),
                            files.Create(f.counts));
    return status;
  }
  if (command == "drop-prompt") {
    Input predictions = files.Open(f.predictions);
    std::ostream *out = files.Create(f.output);
    if (f.documents.empty()) {
      return frostkit::RunDropPrompt(predictions, nullptr, out, err, config);
    }
    Input documents = files.Open(f.documents);
    return frostkit::RunDropPrompt(predictions, &documents, out, err, config);
  }
  if (command == "evaluate") {
    Input predictions = files.Open(f.predictions);
    Input references = files.Open(f.references);
    Input documents =
        files.Open(f.documents.empty() ? f.references : f.documents);
    return frostkit::RunEvaluate(predictions, references, documents,
                                 files.Create(f.output), err, config, f.csv);
  }
  if (command == "stats") {
    Input in = files.Open(f.input);
    return frostkit::RunStats(in, files.Create(f.output), err, config,
                              f.markdown);
  }
  Input in = files.Open(f.input);
  return frostkit::RunPretrainPrep(in, files.Create(f.output), err, config,
                                   f.text);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"FrostKit: entity-chain content planning for summarization"};
  app.require_subcommand(1);
  Flags f;

  auto io = [&f](CLI::App *cmd) {
    cmd->add_option("-i,--input", f.input, "Input JSON Lines ('-' = stdin)");
    cmd->add_option("-o,--output", f.output, "Output path ('-' = stdout)");
  };

  CLI::App *annotate = app.add_subcommand(
      "annotate", "Fill \"entities\" with detected spans");
  io(annotate);

  CLI::App *augment = app.add_subcommand(
      "augment", "Write {id, source, target} training records");
  io(augment);
  augment->add_option("--level", f.level, "Plan level")
      ->check(CLI::IsMember({"summary", "sentence"}));

  CLI::App *filter = app.add_subcommand(
      "filter", "Split records by whether the summary chain is extractive");
  filter->add_option("-i,--input", f.input, "Input JSON Lines ('-' = stdin)");
  filter->add_option("--kept", f.kept, "Output for kept records")->required();
  filter->add_option("--rejected", f.rejected, "Output for rejected records")
      ->required();
  filter->add_option("--counts", f.counts, "Output for the counts object");

  CLI::App *drop = app.add_subcommand(
      "drop-prompt", "Drop unsupported entities from predicted chains");
  drop->add_option("--predictions", f.predictions, "Prediction records")
      ->required();
  drop->add_option("--documents", f.documents,
                   "Document records (default: documents in predictions)");
  drop->add_option("-o,--output", f.output, "Output path ('-' = stdout)");

  CLI::App *evaluate = app.add_subcommand(
      "evaluate", "Score predictions against references and documents");
  evaluate->add_option("--predictions", f.predictions, "Prediction records")
      ->required();
  evaluate->add_option("--references", f.references, "Reference records")
      ->required();
  evaluate->add_option("--documents", f.documents,
                       "Document records (default: the reference file)");
  evaluate->add_option("-o,--output", f.output, "Output path ('-' = stdout)");
  evaluate->add_flag("--csv", f.csv, "Write a CSV row instead of JSON");
  evaluate->add_option("--bootstrap", f.bootstrap,
                       "Bootstrap resamples for confidence intervals")
      ->check(CLI::Range(0, 1000000));
  evaluate->add_option("--seed", f.seed, "Bootstrap seed");

  CLI::App *stats = app.add_subcommand(
      "stats", "Corpus statistics over target summaries");
  io(stats);
  stats->add_flag("--markdown", f.markdown, "Render a markdown table row");

  CLI::App *pretrain = app.add_subcommand(
      "pretrain-prep", "Build gap-sentence pretraining examples");
  io(pretrain);
  pretrain->add_option("--n-max", f.n_max, "Maximum gap sentences")
      ->check(CLI::Range(1, 1000000));
  pretrain->add_option("--mask-token", f.mask_token, "Mask token");
  pretrain->add_flag("--text", f.text,
                     "Input is plain text, one document per line");

  for (CLI::App *cmd :
       {annotate, augment, filter, drop, evaluate, stats, pretrain}) {
    AddCommonFlags(cmd, &f);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return frostkit::kExitUsage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return Dispatch(command, f);
  } catch (const UsageError &e) {
    std::cerr << "frostkit " << command << ": " << e.what() << "\n";
    return frostkit::kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "frostkit " << command << ": " << e.what() << "\n";
    return frostkit::kExitData;
  }
}
