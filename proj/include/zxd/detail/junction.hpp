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

#include <utility>
#include <vector>

#include "zxd/diagram.hpp"

namespace zxd::detail {

/// An endpoint that is either a concrete port of the result diagram or one
/// of k junction points being fused away.  Used when gluing diagrams
/// (composition, rewriting).
struct Endpoint {
  bool junction = false;
  PortRef port;
  std::int32_t junction_id = -1;

  static Endpoint real(PortRef p) { return {false, p, -1}; }
  static Endpoint junct(std::int32_t j) { return {true, PortRef(), j}; }
};

/// Fuses wire chains across junction points into wires of *out.  Every
/// junction must have exactly two incident endpoints.  Closed cycles of
/// junction wires become an identity generator with a self-wire.
void resolve_junction_wires(Calculus calc, std::int32_t n_junctions,
                            const std::vector<std::pair<Endpoint, Endpoint>>& raw,
                            Diagram* out);

}  // namespace zxd::detail
