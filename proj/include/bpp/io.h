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

// JSON formats.
//
// Instance: {"items":[{"id":1,"size":"1/3","group":7}],"groups":[{"id":7,"k":2}]}
// Sizes are strings, either p/q or an exact decimal. A group may also list
// "members" by item id. Packing: {"bins":[[1,4],[2]]} over item ids of the
// source description. A solver report with a "packing" list is accepted too.

#ifndef BPP_IO_H_
#define BPP_IO_H_

#include <string>

#include "bpp/core.h"
#include "json.hpp"

namespace bpp {

// Throws InvalidInput; every message names the source and a line.
Instance ParseInstance(const std::string& text, const std::string& source = "<input>");
Instance LoadInstance(const std::string& path);

nlohmann::json InstanceJson(const Instance& inst);

// Bins list source ids (labels).
nlohmann::json PackingJson(const Instance& inst, const Packing& p);

// Maps labels back to item ids; throws InvalidInput on unknown labels or
// malformed input. Validity is left to ValidatePacking.
Packing ParsePacking(const Instance& inst, const std::string& text,
                     const std::string& source = "<input>");
Packing LoadPacking(const Instance& inst, const std::string& path);

std::string ReadFile(const std::string& path);

}  // namespace bpp

#endif  // BPP_IO_H_
