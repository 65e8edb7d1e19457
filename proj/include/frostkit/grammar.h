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

// Date and number grammars. Both operate on the annotation token stream
// (see Tokenize) and report spans with `sent` left at 0; Annotate assigns
// sentence indices.
//
// Date grammar. Building blocks:
//   MONTH    January..December, or Jan Feb Mar Apr Jun Jul Aug Sep Sept Oct
//            Nov Dec optionally followed by an adjacent '.'; case-sensitive
//   DAY      1-2 digit number or ordinal with value 1..31
//   YEAR     4-digit number 1000..2999 not preceded by a currency sign
//   SEP      whitespace, optionally preceded by ','
// Patterns, tried at every token, longest wins:
//   DAY SEP MONTH SEP YEAR     "25 March 2015"
//   MONTH SEP DAY SEP YEAR     "March 25, 2015"
//   DAY SEP MONTH              "3 May"
//   MONTH SEP DAY              "March 25"
//   MONTH SEP YEAR             "March 2015"
//   MONTH                      full month names only
//   WEEKDAY                    Monday..Sunday
//   YYYY-MM-DD                 ISO, no internal spaces
//   D/M/YY[YY]                 slashed, no internal spaces
//   YEAR                       standalone year
//
// Number grammar (characters claimed by a date are excluded):
//   NUM (SEP1 MULT)*           "1,234.5", "1.5 million"
//   CARD (SEP1 CARD)*          "two", "twenty-five", "two hundred"
//   ORDINAL                    "1st", "22nd"
// where CARD is one..twenty, thirty..ninety, hundred, thousand, million,
// billion (any case), MULT is the last four of those, and SEP1 is a single
// space or hyphen.

#ifndef FROSTKIT_GRAMMAR_H_
#define FROSTKIT_GRAMMAR_H_

#include <string_view>
#include <vector>

#include "frostkit/entity.h"

namespace frostkit {

std::vector<EntitySpan> DetectDates(std::string_view text);
std::vector<EntitySpan> DetectNumbers(std::string_view text);

// True for month names (full or abbreviated) and weekday names.
bool IsTemporalWord(std::string_view word);

}  // namespace frostkit

#endif  // FROSTKIT_GRAMMAR_H_
