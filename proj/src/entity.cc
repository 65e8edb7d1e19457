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

#include "frostkit/entity.h"

#include "frostkit/text.h"

namespace frostkit {

std::string_view KindName(EntityKind kind) {
  switch (kind) {
    case EntityKind::kNamed:
      return "named";
    case EntityKind::kDate:
      return "date";
    case EntityKind::kNumber:
      return "number";
  }
  return "named";
}

std::optional<EntityKind> ParseKind(std::string_view name) {
  std::string folded = FoldCase(Trim(name));
  if (folded == "named" || folded == "ne") return EntityKind::kNamed;
  if (folded == "date" || folded == "d") return EntityKind::kDate;
  if (folded == "number" || folded == "num") return EntityKind::kNumber;
  return std::nullopt;
}

int KindRank(EntityKind kind) { return static_cast<int>(kind); }

KindSet KindSet::All() {
  KindSet set;
  set.Insert(EntityKind::kNamed);
  set.Insert(EntityKind::kDate);
  set.Insert(EntityKind::kNumber);
  return set;
}

KindSet KindSet::Parse(std::string_view spec) {
  KindSet set;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view item = Trim(spec.substr(pos, comma - pos));
    if (!item.empty()) {
      auto kind = ParseKind(item);
      if (!kind) {
        throw std::invalid_argument("unknown entity kind: " + std::string(item));
      }
      set.Insert(*kind);
    }
    pos = comma + 1;
  }
  if (set.empty()) throw std::invalid_argument("empty entity kind set");
  return set;
}

std::vector<EntityKind> KindSet::Kinds() const {
  std::vector<EntityKind> kinds;
  for (EntityKind k :
       {EntityKind::kNamed, EntityKind::kDate, EntityKind::kNumber}) {
    if (Contains(k)) kinds.push_back(k);
  }
  return kinds;
}

std::string KindSet::ToString() const {
  std::string out;
  for (EntityKind k : Kinds()) {
    if (!out.empty()) out += ',';
    out += KindName(k);
  }
  return out;
}

}  // namespace frostkit
