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

#include "frostkit/porter.h"

#include <functional>
#include <vector>

namespace frostkit {
namespace {

bool IsVowelLetter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Consonant flag per position. 'y' is a consonant at the start of a word or
// after a vowel.
std::vector<bool> ConsonantFlags(std::string_view w) {
  std::vector<bool> flags(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    if (IsVowelLetter(w[i])) {
      flags[i] = false;
    } else if (w[i] == 'y') {
      flags[i] = i == 0 ? true : !flags[i - 1];
    } else {
      flags[i] = true;
    }
  }
  return flags;
}

bool IsConsonant(std::string_view w, size_t i) { return ConsonantFlags(w)[i]; }

// Number of VC sequences in [C](VC){m}[V].
int Measure(std::string_view stem) {
  std::vector<bool> flags = ConsonantFlags(stem);
  int m = 0;
  for (size_t i = 1; i < flags.size(); ++i) {
    if (!flags[i - 1] && flags[i]) ++m;
  }
  return m;
}

bool ContainsVowel(std::string_view stem) {
  for (bool consonant : ConsonantFlags(stem)) {
    if (!consonant) return true;
  }
  return false;
}

// *d
bool EndsDoubleConsonant(std::string_view w) {
  size_t n = w.size();
  return n >= 2 && w[n - 1] == w[n - 2] && IsConsonant(w, n - 1);
}

// *o
bool EndsCvc(std::string_view w) {
  size_t n = w.size();
  if (n < 3) return false;
  char last = w[n - 1];
  return IsConsonant(w, n - 3) && !IsConsonant(w, n - 2) &&
         IsConsonant(w, n - 1) && last != 'w' && last != 'x' && last != 'y';
}

bool EndsWith(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.substr(w.size() - suffix.size()) == suffix;
}

using Condition = std::function<bool(std::string_view)>;

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
  Condition condition;
};

// The first rule whose suffix matches decides: it applies if its
// condition holds on the stem, otherwise the word is left alone.
std::string ApplyRules(const std::string &word, const std::vector<Rule> &rules) {
  for (const Rule &rule : rules) {
    if (!EndsWith(word, rule.suffix)) continue;
    std::string stem = word.substr(0, word.size() - rule.suffix.size());
    if (!rule.condition || rule.condition(stem)) {
      return stem + std::string(rule.replacement);
    }
    return word;
  }
  return word;
}

bool PositiveMeasure(std::string_view stem) { return Measure(stem) > 0; }
bool MeasureAboveOne(std::string_view stem) { return Measure(stem) > 1; }

std::string Step1a(const std::string &w) {
  return ApplyRules(w, {{"sses", "ss", nullptr},
                        {"ies", "i", nullptr},
                        {"ss", "ss", nullptr},
                        {"s", "", nullptr}});
}

std::string Step1b(const std::string &w) {
  if (EndsWith(w, "eed")) {
    std::string stem = w.substr(0, w.size() - 3);
    return Measure(stem) > 0 ? stem + "ee" : w;
  }
  std::string stem;
  bool stripped = false;
  for (std::string_view suffix : {"ed", "ing"}) {
    if (EndsWith(w, suffix)) {
      stem = w.substr(0, w.size() - suffix.size());
      if (ContainsVowel(stem)) {
        stripped = true;
        break;
      }
    }
  }
  if (!stripped) return w;

  if (EndsWith(stem, "at") || EndsWith(stem, "bl") || EndsWith(stem, "iz")) {
    return stem + "e";
  }
  if (EndsDoubleConsonant(stem)) {
    char last = stem.back();
    if (last != 'l' && last != 's' && last != 'z') stem.pop_back();
    return stem;
  }
  if (Measure(stem) == 1 && EndsCvc(stem)) return stem + "e";
  return stem;
}

std::string Step1c(const std::string &w) {
  return ApplyRules(w, {{"y", "i", ContainsVowel}});
}

std::string Step2(const std::string &w) {
  return ApplyRules(w, {{"ational", "ate", PositiveMeasure},
                        {"tional", "tion", PositiveMeasure},
                        {"enci", "ence", PositiveMeasure},
                        {"anci", "ance", PositiveMeasure},
                        {"izer", "ize", PositiveMeasure},
                        {"abli", "able", PositiveMeasure},
                        {"alli", "al", PositiveMeasure},
                        {"entli", "ent", PositiveMeasure},
                        {"eli", "e", PositiveMeasure},
                        {"ousli", "ous", PositiveMeasure},
                        {"ization", "ize", PositiveMeasure},
                        {"ation", "ate", PositiveMeasure},
                        {"ator", "ate", PositiveMeasure},
                        {"alism", "al", PositiveMeasure},
                        {"iveness", "ive", PositiveMeasure},
                        {"fulness", "ful", PositiveMeasure},
                        {"ousness", "ous", PositiveMeasure},
                        {"aliti", "al", PositiveMeasure},
                        {"iviti", "ive", PositiveMeasure},
                        {"biliti", "ble", PositiveMeasure}});
}

std::string Step3(const std::string &w) {
  return ApplyRules(w, {{"icate", "ic", PositiveMeasure},
                        {"ative", "", PositiveMeasure},
                        {"alize", "al", PositiveMeasure},
                        {"iciti", "ic", PositiveMeasure},
                        {"ical", "ic", PositiveMeasure},
                        {"ful", "", PositiveMeasure},
                        {"ness", "", PositiveMeasure}});
}

std::string Step4(const std::string &w) {
  auto ion = [](std::string_view stem) {
    return Measure(stem) > 1 && (stem.back() == 's' || stem.back() == 't');
  };
  return ApplyRules(w, {{"al", "", MeasureAboveOne},
                        {"ance", "", MeasureAboveOne},
                        {"ence", "", MeasureAboveOne},
                        {"er", "", MeasureAboveOne},
                        {"ic", "", MeasureAboveOne},
                        {"able", "", MeasureAboveOne},
                        {"ible", "", MeasureAboveOne},
                        {"ant", "", MeasureAboveOne},
                        {"ement", "", MeasureAboveOne},
                        {"ment", "", MeasureAboveOne},
                        {"ent", "", MeasureAboveOne},
                        {"ion", "", ion},
                        {"ou", "", MeasureAboveOne},
                        {"ism", "", MeasureAboveOne},
                        {"ate", "", MeasureAboveOne},
                        {"iti", "", MeasureAboveOne},
                        {"ous", "", MeasureAboveOne},
                        {"ive", "", MeasureAboveOne},
                        {"ize", "", MeasureAboveOne}});
}

std::string Step5a(const std::string &w) {
  if (!EndsWith(w, "e")) return w;
  std::string stem = w.substr(0, w.size() - 1);
  int m = Measure(stem);
  if (m > 1 || (m == 1 && !EndsCvc(stem))) return stem;
  return w;
}

std::string Step5b(const std::string &w) {
  if (EndsWith(w, "ll") && Measure(std::string_view(w).substr(0, w.size() - 1)) > 1) {
    return w.substr(0, w.size() - 1);
  }
  return w;
}

}  // namespace

std::string PorterStem(std::string_view word) {
  std::string w(word);
  w = Step1a(w);
  w = Step1b(w);
  w = Step1c(w);
  w = Step2(w);
  w = Step3(w);
  w = Step4(w);
  w = Step5a(w);
  w = Step5b(w);
  return w;
}

}  // namespace frostkit
