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

#include "frostkit/grammar.h"

#include <algorithm>
#include <array>
#include <optional>

#include "frostkit/text.h"

namespace frostkit {
namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "January", "February", "March",     "April",   "May",      "June",
    "July",    "August",   "September", "October", "November", "December"};

constexpr std::array<std::string_view, 12> kMonthAbbreviations = {
    "Jan", "Feb", "Mar", "Apr", "Jun", "Jul",
    "Aug", "Sep", "Sept", "Oct", "Nov", "Dec"};

constexpr std::array<std::string_view, 7> kWeekdays = {
    "Monday", "Tuesday", "Wednesday", "Thursday",
    "Friday", "Saturday", "Sunday"};

constexpr std::array<std::string_view, 31> kCardinals = {
    "one",      "two",      "three",   "four",     "five",    "six",
    "seven",    "eight",    "nine",    "ten",      "eleven",  "twelve",
    "thirteen", "fourteen", "fifteen", "sixteen",  "seventeen",
    "eighteen", "nineteen", "twenty",  "thirty",   "forty",   "fifty",
    "sixty",    "seventy",  "eighty",  "ninety",   "hundred", "thousand",
    "million",  "billion"};

constexpr std::array<std::string_view, 4> kMultipliers = {
    "hundred", "thousand", "million", "billion"};

template <size_t N>
bool Contains(const std::array<std::string_view, N> &list,
              std::string_view word) {
  return std::find(list.begin(), list.end(), word) != list.end();
}

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), IsAsciiDigit);
}

int DigitValue(std::string_view s) {
  int value = 0;
  for (char c : s) value = value * 10 + (c - '0');
  return value;
}

// Token-stream view with the small predicates the grammars need.
class Stream {
 public:
  explicit Stream(std::string_view text)
      : text_(text), tokens_(Tokenize(text)) {}

  size_t size() const { return tokens_.size(); }
  const Token &token(size_t i) const { return tokens_[i]; }
  std::string_view view(size_t i) const { return tokens_[i].View(text_); }

  bool Adjacent(size_t a, size_t b) const {
    return tokens_[a].end == tokens_[b].begin;
  }

  std::string_view Gap(size_t a, size_t b) const {
    return text_.substr(tokens_[a].end, tokens_[b].begin - tokens_[a].end);
  }

  bool IsPunct(size_t i, char c) const {
    return i < size() && tokens_[i].type == Token::Type::kPunct &&
           view(i).size() == 1 && view(i)[0] == c;
  }

  // Plain digit run of the given width range.
  std::optional<int> Digits(size_t i, size_t min_width,
                            size_t max_width) const {
    if (i >= size() || tokens_[i].type != Token::Type::kNumber) {
      return std::nullopt;
    }
    std::string_view v = view(i);
    if (!AllDigits(v) || v.size() < min_width || v.size() > max_width) {
      return std::nullopt;
    }
    return DigitValue(v);
  }

  // Index after a month unit starting at i, or nullopt.
  std::optional<size_t> Month(size_t i, bool full_only) const {
    if (i >= size() || tokens_[i].type != Token::Type::kWord) {
      return std::nullopt;
    }
    std::string_view v = view(i);
    if (Contains(kMonths, v)) return i + 1;
    if (full_only || !Contains(kMonthAbbreviations, v)) return std::nullopt;
    if (IsPunct(i + 1, '.') && Adjacent(i, i + 1)) return i + 2;
    return i + 1;
  }

  bool Day(size_t i) const {
    if (i >= size()) return false;
    std::string_view v = view(i);
    if (tokens_[i].type == Token::Type::kOrdinal) {
      v = v.substr(0, v.size() - 2);
    } else if (tokens_[i].type != Token::Type::kNumber) {
      return false;
    }
    if (!AllDigits(v) || v.size() > 2) return false;
    int value = DigitValue(v);
    return value >= 1 && value <= 31;
  }

  bool Year(size_t i) const {
    auto value = Digits(i, 4, 4);
    if (!value || *value < 1000 || *value > 2999) return false;
    std::string_view before = text_.substr(0, tokens_[i].begin);
    for (std::string_view sign : {"$", "\xC2\xA3", "\xE2\x82\xAC"}) {
      if (before.ends_with(sign)) return false;
    }
    return true;
  }

  // Index of the token following a date separator after token `prev`:
  // whitespace, optionally preceded by an adjacent comma.
  std::optional<size_t> Sep(size_t prev) const {
    size_t next = prev + 1;
    if (next >= size()) return std::nullopt;
    if (IsPunct(next, ',') && Adjacent(prev, next)) {
      if (next + 1 >= size()) return std::nullopt;
      std::string_view gap = Gap(next, next + 1);
      if (gap.empty() || !Trim(gap).empty()) return std::nullopt;
      return next + 1;
    }
    std::string_view gap = Gap(prev, next);
    if (gap.empty() || !Trim(gap).empty()) return std::nullopt;
    return next;
  }

  // Index of the token following a single space or hyphen after `prev`.
  std::optional<size_t> Sep1(size_t prev) const {
    size_t next = prev + 1;
    if (next >= size()) return std::nullopt;
    if (Gap(prev, next) == " ") return next;
    if (IsPunct(next, '-') && Adjacent(prev, next) && next + 1 < size() &&
        Adjacent(next, next + 1)) {
      return next + 1;
    }
    return std::nullopt;
  }

  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::vector<Token> tokens_;
};

// End token (exclusive) of the longest date starting at token i, or 0.
size_t MatchDate(const Stream &s, size_t i) {
  size_t best = 0;
  auto consider = [&](size_t end) {
    if (end == 0) return;
    if (best == 0 || s.token(end - 1).end > s.token(best - 1).end) best = end;
  };

  // DAY SEP MONTH [SEP YEAR]
  if (s.Day(i)) {
    if (auto m = s.Sep(i)) {
      if (auto m_end = s.Month(*m, false)) {
        consider(*m_end);
        if (auto y = s.Sep(*m_end - 1); y && s.Year(*y)) consider(*y + 1);
      }
    }
  }
  // MONTH [SEP DAY [SEP YEAR] | SEP YEAR]
  if (auto m_end = s.Month(i, false)) {
    if (s.Month(i, true)) consider(*m_end);
    if (auto d = s.Sep(*m_end - 1)) {
      if (s.Day(*d)) {
        consider(*d + 1);
        if (auto y = s.Sep(*d); y && s.Year(*y)) consider(*y + 1);
      }
      if (s.Year(*d)) consider(*d + 1);
    }
  }
  if (s.token(i).type == Token::Type::kWord && Contains(kWeekdays, s.view(i))) {
    consider(i + 1);
  }
  // YYYY-MM-DD
  if (s.Digits(i, 4, 4) && s.IsPunct(i + 1, '-') && s.Adjacent(i, i + 1)) {
    auto month = s.Digits(i + 2, 2, 2);
    auto day = s.Digits(i + 4, 2, 2);
    if (month && day && s.Adjacent(i + 1, i + 2) && s.IsPunct(i + 3, '-') &&
        s.Adjacent(i + 2, i + 3) && s.Adjacent(i + 3, i + 4) && *month >= 1 &&
        *month <= 12 && *day >= 1 && *day <= 31) {
      consider(i + 5);
    }
  }
  // D/M/YY or D/M/YYYY (either day-first or month-first)
  if (auto a = s.Digits(i, 1, 2)) {
    auto b = s.Digits(i + 2, 1, 2);
    auto y2 = s.Digits(i + 4, 2, 2);
    auto y4 = s.Digits(i + 4, 4, 4);
    if (b && (y2 || y4) && s.IsPunct(i + 1, '/') && s.IsPunct(i + 3, '/') &&
        s.Adjacent(i, i + 1) && s.Adjacent(i + 1, i + 2) &&
        s.Adjacent(i + 2, i + 3) && s.Adjacent(i + 3, i + 4) && *a >= 1 &&
        *a <= 31 && *b >= 1 && *b <= 31 && (*a <= 12 || *b <= 12)) {
      consider(i + 5);
    }
  }
  if (s.Year(i)) consider(i + 1);
  return best;
}

bool IsCardinal(const Stream &s, size_t i) {
  return i < s.size() && s.token(i).type == Token::Type::kWord &&
         Contains(kCardinals, FoldCase(s.view(i)));
}

bool IsMultiplier(const Stream &s, size_t i) {
  return i < s.size() && s.token(i).type == Token::Type::kWord &&
         Contains(kMultipliers, FoldCase(s.view(i)));
}

EntitySpan MakeSpan(const Stream &s, size_t first, size_t end,
                    EntityKind kind) {
  EntitySpan span;
  span.start = s.token(first).begin;
  span.end = s.token(end - 1).end;
  span.text = std::string(s.text().substr(span.start, span.end - span.start));
  span.kind = kind;
  return span;
}

std::vector<EntitySpan> DetectDatesIn(const Stream &s) {
  std::vector<EntitySpan> spans;
  size_t i = 0;
  while (i < s.size()) {
    size_t end = MatchDate(s, i);
    if (end > 0) {
      spans.push_back(MakeSpan(s, i, end, EntityKind::kDate));
      i = end;
    } else {
      ++i;
    }
  }
  return spans;
}

}  // namespace

bool IsTemporalWord(std::string_view word) {
  return Contains(kMonths, word) || Contains(kMonthAbbreviations, word) ||
         Contains(kWeekdays, word);
}

std::vector<EntitySpan> DetectDates(std::string_view text) {
  return DetectDatesIn(Stream(text));
}

std::vector<EntitySpan> DetectNumbers(std::string_view text) {
  Stream s(text);
  std::vector<EntitySpan> dates = DetectDatesIn(s);
  auto claimed = [&](const EntitySpan &span) {
    return std::any_of(dates.begin(), dates.end(), [&](const EntitySpan &d) {
      return d.Overlaps(span);
    });
  };

  std::vector<EntitySpan> spans;
  size_t i = 0;
  while (i < s.size()) {
    size_t end = 0;
    const Token &token = s.token(i);
    if (token.type == Token::Type::kOrdinal) {
      end = i + 1;
    } else if (token.type == Token::Type::kNumber) {
      end = i + 1;
      while (auto next = s.Sep1(end - 1)) {
        if (!IsMultiplier(s, *next)) break;
        end = *next + 1;
      }
    } else if (IsCardinal(s, i)) {
      end = i + 1;
      while (auto next = s.Sep1(end - 1)) {
        if (!IsCardinal(s, *next)) break;
        end = *next + 1;
      }
    }
    if (end == 0) {
      ++i;
      continue;
    }
    EntitySpan span = MakeSpan(s, i, end, EntityKind::kNumber);
    if (claimed(span)) {
      ++i;
      continue;
    }
    spans.push_back(std::move(span));
    i = end;
  }
  return spans;
}

}  // namespace frostkit
