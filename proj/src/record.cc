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

#include "frostkit/record.h"

#include "frostkit/text.h"

namespace frostkit {
namespace {

std::optional<std::string> OptionalString(const Json &json,
                                          const char *field) {
  auto it = json.find(field);
  if (it == json.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw DataError(std::string("field \"") + field + "\" is not a string");
  }
  return it->get<std::string>();
}

std::optional<size_t> OptionalOffset(const Json &json, const char *field) {
  auto it = json.find(field);
  if (it == json.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_unsigned() && !(it->is_number_integer() && *it >= 0)) {
    throw DataError(std::string("span field \"") + field +
                    "\" is not a non-negative integer");
  }
  return it->get<size_t>();
}

}  // namespace

std::string IdToString(const Json &id) {
  if (id.is_string()) return id.get<std::string>();
  if (id.is_number_integer()) return id.dump();
  throw DataError("record id must be a string or an integer");
}

std::vector<SuppliedSpan> SuppliedSpansFromJson(const Json &spans) {
  if (!spans.is_array()) throw DataError("entity list is not an array");
  std::vector<SuppliedSpan> out;
  for (const Json &s : spans) {
    SuppliedSpan span;
    if (s.is_string()) {
      span.text = s.get<std::string>();
    } else if (s.is_object()) {
      auto text = OptionalString(s, "text");
      if (!text) throw DataError("entity without \"text\"");
      span.text = *text;
      if (auto kind = OptionalString(s, "kind")) {
        auto parsed = ParseKind(*kind);
        if (!parsed) throw DataError("unknown entity kind \"" + *kind + "\"");
        span.kind = *parsed;
      }
      span.start = OptionalOffset(s, "start");
      span.end = OptionalOffset(s, "end");
      if (span.start.has_value() != span.end.has_value()) {
        throw DataError("entity \"" + span.text +
                        "\" has only one of start/end");
      }
    } else {
      throw DataError("entity is neither a string nor an object");
    }
    out.push_back(std::move(span));
  }
  return out;
}

FieldSpans FieldSpansFromJson(const Json &entities) {
  FieldSpans out;
  if (entities.is_array()) {
    out["summary"] = SuppliedSpansFromJson(entities);
  } else if (entities.is_object()) {
    for (const auto &[field, spans] : entities.items()) {
      out[field] = SuppliedSpansFromJson(spans);
    }
  } else {
    throw DataError("\"entities\" must be an array or an object");
  }
  return out;
}

Json SpansToJson(const std::vector<EntitySpan> &spans) {
  Json out = Json::array();
  for (const EntitySpan &s : spans) {
    out.push_back({{"text", s.text},
                   {"kind", KindName(s.kind)},
                   {"start", s.start},
                   {"end", s.end},
                   {"sent", s.sent}});
  }
  return out;
}

Json ChainToJson(const EntityChain &chain) {
  Json out = Json::array();
  for (const EntityGroup &group : chain.groups) out.push_back(group);
  return out;
}

EntityChain ChainFromJson(const Json &json) {
  if (!json.is_array()) throw DataError("chain is not an array of groups");
  EntityChain chain;
  for (const Json &group : json) {
    if (!group.is_array()) throw DataError("chain group is not an array");
    EntityGroup g;
    for (const Json &e : group) {
      if (!e.is_string()) throw DataError("chain entity is not a string");
      g.push_back(e.get<std::string>());
    }
    chain.groups.push_back(std::move(g));
  }
  return chain;
}

bool IsMetaLine(const Json &json) {
  return json.is_object() && json.contains("_meta");
}

const std::vector<SuppliedSpan> *DatasetRecord::EntitiesFor(
    std::string_view field) const {
  auto it = entities.find(std::string(field));
  return it == entities.end() ? nullptr : &it->second;
}

const std::string &DatasetRecord::Require(std::string_view field) const {
  const std::optional<std::string> *value = nullptr;
  if (field == "document") value = &document;
  if (field == "summary") value = &summary;
  if (field == "predicted") value = &predicted;
  if (value == nullptr || !value->has_value()) {
    throw DataError("record " + id + " has no \"" + std::string(field) +
                    "\" field");
  }
  return **value;
}

DatasetRecord RecordFromJson(Json json) {
  if (!json.is_object()) throw DataError("record is not a JSON object");
  auto id = json.find("id");
  if (id == json.end()) throw DataError("record without \"id\"");
  DatasetRecord record;
  record.id = IdToString(*id);
  record.document = OptionalString(json, "document");
  record.summary = OptionalString(json, "summary");
  record.predicted = OptionalString(json, "predicted");
  auto entities = json.find("entities");
  if (entities != json.end() && !entities->is_null()) {
    record.entities = FieldSpansFromJson(*entities);
    record.has_entities = true;
  }
  record.raw = std::move(json);
  return record;
}

JsonlReader::JsonlReader(std::istream *in, std::string name)
    : in_(in), name_(std::move(name)) {}

bool JsonlReader::Next(JsonlLine *line) {
  std::string text;
  while (std::getline(*in_, text)) {
    ++line_no_;
    if (Trim(text).empty()) continue;
    line->line_no = line_no_;
    line->error.clear();
    line->value = Json();
    try {
      line->value = Json::parse(text);
    } catch (const Json::exception &e) {
      line->error = e.what();
      return true;
    }
    if (IsMetaLine(line->value)) {
      if (meta_.is_null()) meta_ = line->value["_meta"];
      continue;
    }
    return true;
  }
  return false;
}

std::string DumpJson(const Json &json) {
  return json.dump(-1, ' ', false, Json::error_handler_t::replace);
}

void WriteJsonLine(const Json &json, std::ostream *out) {
  *out << DumpJson(json) << '\n';
}

}  // namespace frostkit
