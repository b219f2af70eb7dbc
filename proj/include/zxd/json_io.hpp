// Copyright 2026 The zxd developers
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

#include "zxd/axioms.hpp"
#include "zxd/cpm.hpp"
#include "zxd/diagram.hpp"
#include "zxd/rewrite.hpp"
#include "zxd/tensor.hpp"

namespace zxd {

using Json = nlohmann::ordered_json;

/**
 * Diagram wire format.  Nodes carry port counts; a port reference is
 * {"node": id, "port": "in"|"out", "index": k} or
 * {"boundary": "in"|"out", "index": k}.  Wires are port-reference pairs;
 * parse(print(d)) is structurally equal to d and print is deterministic.
 */
Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

std::string print_diagram(const Diagram& d);
Diagram parse_diagram(const std::string& text);

Json tensor_to_json(const Tensor& t);
Json superop_to_json(const SuperOp& s);

Json proof_to_json(const ProofScript& s);
ProofScript proof_from_json(const Json& j);

Json soundness_to_json(const SoundnessReport& r);
std::string soundness_table(const SoundnessReport& r);

Json proof_report_to_json(const ProofReport& r);

}  // namespace zxd
