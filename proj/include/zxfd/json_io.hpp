// Copyright 2026 zxfd contributors
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

#pragma once

#include <string>

#include <json.hpp>

#include "zxfd/diagram.hpp"

namespace zxfd {

using json = nlohmann::ordered_json;

json complex_to_json(const Complex& c);
Complex complex_from_json(const json& j, const std::string& field);

json node_kind_to_json(const NodeKind& k);
NodeKind node_kind_from_json(const std::string& name, const json& params);

/// Canonical JSON text: nodes ascending by id, wires normalized and sorted.
/// Round trip through deserialize is the identity on the canonical form.
std::string serialize(const Diagram& d);
json diagram_to_json(const Diagram& d);

Diagram deserialize(const std::string& text);
Diagram diagram_from_json(const json& j);

}  // namespace zxfd
