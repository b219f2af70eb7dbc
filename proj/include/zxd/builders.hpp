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

#include "zxd/diagram.hpp"

namespace zxd::build {

// Circuit-level builders.  Each returns a diagram of the requested
// calculus whose interpretation is exactly the named matrix: where the raw
// generator composite differs by a known scalar, explicit scalar gadgets
// are attached.  Builders missing from a calculus throw
// std::invalid_argument (e.g. cnot in ZW, which is cz of the fermionic
// crossing composed with a swap instead).

Diagram identity(std::int32_t n, Calculus c = Calculus::zx);
Diagram swap_wires(Calculus c = Calculus::zx);  // 2 -> 2 crossing
Diagram cup(Calculus c = Calculus::zx);         // 2 -> 0, (1 0 0 1)
Diagram cap(Calculus c = Calculus::zx);         // 0 -> 2, (1 0 0 1)^T
Diagram ground(std::int32_t n, Calculus c = Calculus::zx);
Diagram ket0(Calculus c = Calculus::zx);
Diagram ket1(Calculus c = Calculus::zx);
Diagram h(Calculus c = Calculus::zx);
Diagram s(Calculus c = Calculus::zx);
Diagram t(Calculus c = Calculus::zx);
Diagram rz(const Phase& alpha, Calculus c = Calculus::zx);
Diagram cnot(Calculus c = Calculus::zx);
Diagram cz(Calculus c = Calculus::zx);
Diagram global_phase(const Phase& alpha, Calculus c = Calculus::zx);

/// A single generator with all ports wired straight to the boundary.
Diagram generator(Calculus c, Node n);

// Generator shorthands.
Diagram z_spider(std::int32_t n, std::int32_t m, const Phase& alpha);
Diagram x_spider(std::int32_t n, std::int32_t m, const Phase& alpha);
Diagram h_box(std::int32_t n, std::int32_t m, const ScalarParam& a);
Diagram z_node(std::int32_t n, std::int32_t m, const ScalarParam& r);
Diagram w_node(std::int32_t n, std::int32_t m);

// Closed ZX scalar gadgets used to make builders and axioms scalar-exact.
Diagram zx_scalar_sqrt2_phase(const Phase& alpha);  // value sqrt(2) e^{i alpha}
Diagram zx_scalar_inv_sqrt2();                      // value 1/sqrt(2)
Diagram zx_scalar_two();                            // value 2 (a circle)

}  // namespace zxd::build
