// Copyright 2026 The Authors.
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

#include "bpp/io.h"

#include <fstream>
#include <map>
#include <sstream>

namespace bpp {

namespace {

using nlohmann::json;

int LineAt(const std::string& text, size_t offset) {
  int line = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

// Line of every element of the top-level arrays, keyed by member name.
std::map<std::string, std::vector<int>> ElementLines(const std::string& text) {
  std::map<std::string, std::vector<int>> out;
  int depth = 0, line = 1;
  bool in_string = false, escaped = false;
  std::string last_string, current_key, array_key;
  std::string buf;
  for (char ch : text) {
    if (ch == '\n') ++line;
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (ch == '\\') {
        escaped = true;
      } else if (ch == '"') {
        in_string = false;
        last_string = buf;
      } else {
        buf += ch;
      }
      continue;
    }
    switch (ch) {
      case '"':
        in_string = true;
        buf.clear();
        break;
      case ':':
        if (depth == 1) current_key = last_string;
        break;
      case '[':
        ++depth;
        if (depth == 2) array_key = current_key;
        break;
      case '{':
        ++depth;
        if (depth == 3 && !array_key.empty()) out[array_key].push_back(line);
        break;
      case ']':
      case '}':
        --depth;
        if (depth < 2) array_key.clear();
        break;
      default:
        if (depth == 2 && !array_key.empty() && ch != ',' &&
            !std::isspace(static_cast<unsigned char>(ch))) {
          // Scalar or nested array element; record its first character only.
          if (out[array_key].empty() || out[array_key].back() != -line) {
            out[array_key].push_back(-line);
          }
        }
    }
  }
  return out;
}

json ParseJson(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(source + ":" + std::to_string(LineAt(text, e.byte ? e.byte - 1 : 0)) +
                       ": " + e.what());
  }
}

class Locator {
 public:
  Locator(const std::string& text, std::string source)
      : lines_(ElementLines(text)), source_(std::move(source)) {}
  std::string At(const std::string& array, size_t index) const {
    auto it = lines_.find(array);
    std::string where = source_;
    if (it != lines_.end() && index < it->second.size()) {
      where += ":" + std::to_string(std::abs(it->second[index]));
    }
    return where + ": " + array + "[" + std::to_string(index) + "]";
  }
  const std::string& source() const { return source_; }

 private:
  std::map<std::string, std::vector<int>> lines_;
  std::string source_;
};

int64_t GetInt(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(where + ": missing \"" + key + "\"");
  if (!it->is_number_integer()) {
    throw InvalidInput(where + ": \"" + key + "\" must be an integer");
  }
  return it->get<int64_t>();
}

Rational GetSize(const json& obj, const std::string& where) {
  auto it = obj.find("size");
  if (it == obj.end()) throw InvalidInput(where + ": missing \"size\"");
  std::optional<Rational> r;
  if (it->is_string()) {
    r = ParseRational(it->get<std::string>());
  } else if (it->is_number_integer()) {
    r = Rational(it->get<long>());
  } else {
    throw InvalidInput(where + ": \"size\" must be a string such as \"3/7\" or \"0.25\"");
  }
  if (!r) throw InvalidInput(where + ": unparsable size " + it->dump());
  return *r;
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidInput(path + ": cannot open");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Instance ParseInstance(const std::string& text, const std::string& source) {
  json doc = ParseJson(text, source);
  Locator loc(text, source);
  if (!doc.is_object()) throw InvalidInput(source + ":1: top level must be an object");
  RawInstance raw;
  std::vector<std::string> where_item, where_group;
  if (doc.contains("items")) {
    const json& items = doc["items"];
    if (!items.is_array()) throw InvalidInput(source + ": \"items\" must be an array");
    for (size_t i = 0; i < items.size(); ++i) {
      std::string where = loc.At("items", i);
      if (!items[i].is_object()) throw InvalidInput(where + ": item must be an object");
      RawItem it;
      it.label = GetInt(items[i], "id", where);
      it.size = GetSize(items[i], where);
      if (items[i].contains("group")) it.group = GetInt(items[i], "group", where);
      raw.items.push_back(std::move(it));
      where_item.push_back(where);
    }
  }
  if (doc.contains("groups")) {
    const json& groups = doc["groups"];
    if (!groups.is_array()) throw InvalidInput(source + ": \"groups\" must be an array");
    for (size_t g = 0; g < groups.size(); ++g) {
      std::string where = loc.At("groups", g);
      if (!groups[g].is_object()) throw InvalidInput(where + ": group must be an object");
      RawGroup rg;
      rg.id = GetInt(groups[g], "id", where);
      rg.k = GetInt(groups[g], "k", where);
      if (groups[g].contains("members")) {
        const json& m = groups[g]["members"];
        if (!m.is_array()) throw InvalidInput(where + ": \"members\" must be an array");
        for (const json& x : m) {
          if (!x.is_number_integer()) throw InvalidInput(where + ": member ids must be integers");
          rg.members.push_back(x.get<int64_t>());
        }
      }
      raw.groups.push_back(std::move(rg));
      where_group.push_back(where);
    }
  }
  ValidationResult v = ValidateInstance(raw);
  if (!v.instance) {
    // Attach a line to each message through the id it names.
    std::map<int64_t, std::string> item_where, group_where;
    for (size_t i = 0; i < raw.items.size(); ++i) item_where.emplace(raw.items[i].label, where_item[i]);
    for (size_t g = 0; g < raw.groups.size(); ++g) group_where.emplace(raw.groups[g].id, where_group[g]);
    std::string msg;
    for (const std::string& e : v.errors) {
      std::string where = source;
      std::istringstream ss(e);
      std::string kind;
      int64_t id = 0;
      if (ss >> kind >> id) {
        if (kind == "item" && item_where.count(id)) where = item_where[id];
        if (kind == "group" && group_where.count(id)) where = group_where[id];
      }
      msg += (msg.empty() ? "" : "\n") + where + ": " + e;
    }
    throw InvalidInput(msg);
  }
  return std::move(*v.instance);
}

Instance LoadInstance(const std::string& path) { return ParseInstance(ReadFile(path), path); }

nlohmann::json InstanceJson(const Instance& inst) {
  json items = json::array(), groups = json::array();
  for (const Item& it : inst.items()) {
    items.push_back({{"id", it.label}, {"size", ToString(it.size)},
                     {"group", inst.group(it.group).id}});
  }
  for (const Group& g : inst.groups()) groups.push_back({{"id", g.id}, {"k", g.k}});
  return json{{"items", items}, {"groups", groups}};
}

nlohmann::json PackingJson(const Instance& inst, const Packing& p) {
  json bins = json::array();
  for (const Configuration& c : p.bins) {
    json b = json::array();
    for (int id : c.items) b.push_back(inst.item(id).label);
    bins.push_back(b);
  }
  return json{{"bins", bins}};
}

Packing ParsePacking(const Instance& inst, const std::string& text,
                     const std::string& source) {
  json doc = ParseJson(text, source);
  Locator loc(text, source);
  // Solver reports carry the same list under "packing".
  const std::string key = doc.is_object() && doc.contains("packing") ? "packing" : "bins";
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array()) {
    throw InvalidInput(source + ":1: expected {\"bins\": [[ids], ...]}");
  }
  std::map<int64_t, int> by_label;
  for (const Item& it : inst.items()) by_label[it.label] = it.id;
  Packing p;
  const json& bins = doc[key];
  for (size_t b = 0; b < bins.size(); ++b) {
    std::string where = loc.At(key, b);
    if (!bins[b].is_array()) throw InvalidInput(where + ": bin must be an array");
    std::vector<int> ids;
    for (const json& x : bins[b]) {
      if (!x.is_number_integer()) throw InvalidInput(where + ": item ids must be integers");
      auto it = by_label.find(x.get<int64_t>());
      if (it == by_label.end()) {
        throw InvalidInput(where + ": unknown item " + std::to_string(x.get<int64_t>()));
      }
      ids.push_back(it->second);
    }
    const size_t before = ids.size();
    Configuration c(ids);
    if (static_cast<size_t>(c.size()) != before) {
      throw InvalidInput(where + ": an item appears twice in the bin");
    }
    p.bins.push_back(std::move(c));
  }
  return p;
}

Packing LoadPacking(const Instance& inst, const std::string& path) {
  return ParsePacking(inst, ReadFile(path), path);
}

}  // namespace bpp
