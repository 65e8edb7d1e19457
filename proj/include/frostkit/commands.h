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

// Streaming subcommands behind the frostkit tool. Each reads JSON Lines,
// writes a {"_meta": config} header followed by one line per record, and
// reports bad records on the error stream as "name:line: message".
// Records are processed in parallel batches; output order always follows
// input order. Return values are exit codes: 0 on success, 2 if a record
// failed and the run is strict.

#ifndef FROSTKIT_COMMANDS_H_
#define FROSTKIT_COMMANDS_H_

#include <cstdint>
#include <istream>
#include <memory>
#include <ostream>
#include <string>

#include "frostkit/chain.h"
#include "frostkit/control.h"
#include "frostkit/entity.h"
#include "frostkit/pretrain.h"
#include "frostkit/recognizer.h"
#include "frostkit/record.h"

namespace frostkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

struct RunConfig {
  std::string command;
  KindSet kinds = KindSet::All();
  PlanLevel level = PlanLevel::kSummary;
  // passthrough, heuristic or external.
  std::string recognizer = "heuristic";
  // Side file for the external recognizer.
  std::string entities_path;
  // Gazetteer for the heuristic recognizer, empty for none.
  std::string gazetteer_path;
  bool stem = true;
  MatchPolicy policy;
  int n_max = kDefaultMaxGapSentences;
  std::string mask_token = kDefaultMaskToken;
  uint64_t seed = 0;
  int bootstrap = 0;
  bool strict = false;
  int workers = 1;

  // Settings that affect output. Workers and strictness are left out so
  // that outputs do not depend on them.
  Json ToJson() const;
};

// Throws FrostError for unknown names or unreadable files.
std::unique_ptr<NamedEntityRecognizer> MakeRecognizer(const RunConfig &config);

struct Input {
  std::istream *stream;
  std::string name;
};

int RunAnnotate(const Input &in, std::ostream *out, std::ostream *err,
                const RunConfig &config);

// Writes {id, source, target} records.
int RunAugment(const Input &in, std::ostream *out, std::ostream *err,
               const RunConfig &config);

struct FilterCounts {
  size_t kept = 0;
  size_t rejected = 0;
  size_t errors = 0;
};

// Kept records are copied unchanged; rejected ones gain "reject_reason"
// and "unsupported". `counts` receives the totals.
int RunFilter(const Input &in, std::ostream *kept, std::ostream *rejected,
              std::ostream *err, const RunConfig &config,
              FilterCounts *counts);

Json FilterCountsToJson(const FilterCounts &counts);

// Documents are looked up by id in `documents`, or taken from the
// prediction record itself when `documents` is null.
int RunDropPrompt(const Input &predictions, const Input *documents,
                  std::ostream *out, std::ostream *err,
                  const RunConfig &config);

// References and documents are joined to predictions by id. Writes one
// JSON report, or a CSV row when `csv` is set.
int RunEvaluate(const Input &predictions, const Input &references,
                const Input &documents, std::ostream *out, std::ostream *err,
                const RunConfig &config, bool csv);

int RunStats(const Input &in, std::ostream *out, std::ostream *err,
             const RunConfig &config, bool markdown);

// With `plain_text`, every non-blank line is one document and ids are
// line numbers.
int RunPretrainPrep(const Input &in, std::ostream *out, std::ostream *err,
                    const RunConfig &config, bool plain_text);

}  // namespace frostkit

#endif  // FROSTKIT_COMMANDS_H_
