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

#include "frostkit/chain.h"

#include <algorithm>
#include <optional>

#include "frostkit/text.h"

namespace frostkit {
namespace {

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

struct Marker {
  size_t pos;
  size_t len;
  bool chain;
};

std::vector<Marker> FindMarkers(std::string_view text) {
  std::string lower = AsciiLower(text);
  std::vector<Marker> markers;
  for (bool chain : {true, false}) {
    std::string needle = AsciiLower(chain ? kChainMarker : kSummaryMarker);
    size_t pos = lower.find(needle);
    while (pos != std::string::npos) {
      markers.push_back({pos, needle.size(), chain});
      pos = lower.find(needle, pos + needle.size());
    }
  }
  std::sort(markers.begin(), markers.end(),
            [](const Marker &a, const Marker &b) { return a.pos < b.pos; });
  return markers;
}

std::vector<std::string_view> SplitOn(std::string_view text,
                                      std::string_view sep) {
  std::vector<std::string_view> parts;
  size_t pos = 0;
  while (true) {
    size_t hit = text.find(sep, pos);
    if (hit == std::string_view::npos) {
      parts.push_back(text.substr(pos));
      return parts;
    }
    parts.push_back(text.substr(pos, hit - pos));
    pos = hit + sep.size();
  }
}

EntityGroup ParseGroup(std::string_view body, bool *malformed) {
  EntityGroup group;
  if (Trim(body).empty()) return group;
  for (std::string_view piece : SplitOn(body, kEntitySeparator)) {
    std::string_view entity = Trim(piece);
    if (entity.empty()) {
      *malformed = true;
      continue;
    }
    group.emplace_back(entity);
  }
  return group;
}

std::vector<EntityGroup> ParseChainBody(std::string_view body,
                                        bool *malformed) {
  std::vector<EntityGroup> groups;
  for (std::string_view piece : SplitOn(body, kSentenceSeparator)) {
    groups.push_back(ParseGroup(piece, malformed));
  }
  return groups;
}

std::string JoinNonEmpty(const std::vector<std::string> &parts) {
  std::string out;
  for (const std::string &p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::string RenderGroup(const EntityGroup &group) {
  std::string out;
  for (const std::string &entity : group) {
    ValidateEntity(entity);
    if (!out.empty()) {
      out += ' ';
      out += kEntitySeparator;
      out += ' ';
    }
    out += entity;
  }
  return out;
}

std::string RenderBlock(std::string_view body, std::string_view summary) {
  std::string out(kChainMarker);
  if (!body.empty()) {
    out += ' ';
    out += body;
  }
  out += ' ';
  out += kSummaryMarker;
  if (!summary.empty()) {
    out += ' ';
    out += summary;
  }
  return out;
}

std::string_view CheckedSummary(std::string_view summary) {
  summary = Trim(summary);
  if (ContainsMarker(summary)) {
    throw InvalidSummary("summary contains a marker token: " +
                         std::string(summary));
  }
  return summary;
}

}  // namespace

size_t EntityChain::EntityCount() const {
  size_t n = 0;
  for (const EntityGroup &g : groups) n += g.size();
  return n;
}

std::vector<std::string> EntityChain::Flatten() const {
  std::vector<std::string> flat;
  for (const EntityGroup &g : groups) flat.insert(flat.end(), g.begin(), g.end());
  return flat;
}

std::string_view PlanLevelName(PlanLevel level) {
  return level == PlanLevel::kSummary ? "summary" : "sentence";
}

EntityChain BuildChain(const AnnotatedText &summary) {
  EntityChain chain;
  chain.groups.resize(summary.sentences.size());
  for (const EntitySpan &span : summary.spans) {
    chain.groups[span.sent].push_back(span.text);
  }
  return chain;
}

SentenceLevelTarget BuildSentenceLevelTarget(const AnnotatedText &summary) {
  EntityChain chain = BuildChain(summary);
  SentenceLevelTarget target;
  for (size_t i = 0; i < summary.sentences.size(); ++i) {
    target.pairs.emplace_back(std::move(chain.groups[i]),
                              std::string(summary.Sentence(i)));
  }
  return target;
}

void ValidateEntity(std::string_view entity) {
  if (entity.empty() || Trim(entity).size() != entity.size()) {
    throw InvalidEntity("entity is empty or padded with whitespace: \"" +
                        std::string(entity) + "\"");
  }
  if (entity.find('|') != std::string_view::npos || ContainsMarker(entity)) {
    throw InvalidEntity("entity contains a reserved token: \"" +
                        std::string(entity) + "\"");
  }
}

bool ContainsMarker(std::string_view text) { return !FindMarkers(text).empty(); }

std::string RenderChainBody(const EntityChain &chain) {
  std::string out;
  for (size_t i = 0; i < chain.groups.size(); ++i) {
    std::string group = RenderGroup(chain.groups[i]);
    if (i > 0) {
      if (!out.empty()) out += ' ';
      out += kSentenceSeparator;
    }
    if (!group.empty()) {
      if (!out.empty()) out += ' ';
      out += group;
    }
  }
  return out;
}

std::string SerializeSummaryLevel(const AugmentedTarget &target) {
  std::string body = RenderChainBody(target.chain);
  return RenderBlock(body, CheckedSummary(target.summary));
}

std::string SerializeSentenceLevel(const SentenceLevelTarget &target) {
  if (target.pairs.empty()) return RenderBlock("", "");
  std::string out;
  for (const auto &[group, sentence] : target.pairs) {
    if (!out.empty()) out += ' ';
    out += RenderBlock(RenderGroup(group), CheckedSummary(sentence));
  }
  return out;
}

AugmentedTarget ParsedTarget::ToAugmented() const {
  return AugmentedTarget{chain, summary, level};
}

SentenceLevelTarget ParsedTarget::ToSentenceLevel() const {
  SentenceLevelTarget target;
  if (level == PlanLevel::kSentence) {
    for (size_t i = 0; i < chain.groups.size(); ++i) {
      target.pairs.emplace_back(chain.groups[i],
                                i < segments.size() ? segments[i] : "");
    }
  } else {
    target.pairs.emplace_back(chain.Flatten(), summary);
  }
  return target;
}

ParsedTarget ParseAugmented(std::string_view text) {
  ParsedTarget parsed;
  std::vector<Marker> markers = FindMarkers(text);
  bool has_summary = std::any_of(markers.begin(), markers.end(),
                                 [](const Marker &m) { return !m.chain; });
  if (!has_summary) {
    parsed.malformed = true;
    parsed.summary = std::string(Trim(text));
    parsed.segments.push_back(parsed.summary);
    return parsed;
  }

  struct Block {
    std::string chain_body;
    std::string summary;
  };
  std::vector<Block> blocks;
  std::optional<std::string> pending;

  std::string_view prefix = Trim(text.substr(0, markers.front().pos));
  if (!prefix.empty()) {
    parsed.malformed = true;
    if (!markers.front().chain) pending = std::string(prefix);
  }
  for (size_t k = 0; k < markers.size(); ++k) {
    const Marker &m = markers[k];
    size_t body_begin = m.pos + m.len;
    size_t body_end = k + 1 < markers.size() ? markers[k + 1].pos : text.size();
    std::string body(Trim(text.substr(body_begin, body_end - body_begin)));
    if (m.chain) {
      if (pending) {
        parsed.malformed = true;
        blocks.push_back({std::move(*pending), ""});
      }
      pending = std::move(body);
    } else {
      if (!pending) parsed.malformed = true;
      blocks.push_back({pending.value_or(""), std::move(body)});
      pending.reset();
    }
  }
  if (pending) {
    parsed.malformed = true;
    blocks.push_back({std::move(*pending), ""});
  }

  if (blocks.size() == 1) {
    parsed.level = PlanLevel::kSummary;
    parsed.chain.groups = ParseChainBody(blocks[0].chain_body, &parsed.malformed);
  } else {
    parsed.level = PlanLevel::kSentence;
    for (const Block &b : blocks) {
      auto groups = ParseChainBody(b.chain_body, &parsed.malformed);
      if (groups.size() > 1) parsed.malformed = true;
      EntityChain flat{std::move(groups)};
      parsed.chain.groups.push_back(flat.Flatten());
    }
  }
  for (Block &b : blocks) parsed.segments.push_back(std::move(b.summary));
  parsed.summary = JoinNonEmpty(parsed.segments);
  return parsed;
}

std::string StripChain(std::string_view text) {
  return ParseAugmented(text).summary;
}

}  // namespace frostkit
