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

#include <optional>
#include <string>
#include <vector>

#include "zxd/tensor.hpp"

namespace zxd {

/**
 * The 1- and 2-qubit Clifford groups, enumerated exactly (entries in
 * Z[i, 1/sqrt(2)]) by breadth-first closure over words in H, S and CNot,
 * deduplicated up to global phase (which for Clifford words is always a
 * power of w = e^{i pi/4}).
 */
struct CliffordGroup {
  int qubits = 0;
  std::vector<XMat> unitaries;     // canonical projective representatives, BFS order
  std::vector<std::string> words;  // a shortest generator word per element
};

/// Cached; qubits must be 1 or 2.  |C1| = 24 and |C2| = 11520 projectively.
const CliffordGroup& clifford_group(int qubits);

/// All stabilizer states on `qubits` qubits as exact unit column vectors in
/// a canonical projective form, sorted deterministically.  6 states on one
/// qubit, 60 on two.
const std::vector<XMat>& stabilizer_states(int qubits);

struct StabWitness {
  XMat unitary;     // Clifford U with U phi = w^phase_power conj(phi)
  std::string word;
  int phase_power;  // the global phase as a power of w
  double residual;  // float check of U phi - w^p conj(phi)
};

/**
 * Brute-force search over the bundled Clifford group for U with
 * U phi = conj(phi) up to global phase.  phi must be (projectively) one of
 * the bundled 1- or 2-qubit stabilizer states; otherwise throws
 * std::invalid_argument.
 */
std::optional<StabWitness> stab_conjugate_witness(const Tensor& phi);

/// Index lookup into stabilizer_states (projective, exact or float input).
std::optional<int> stabilizer_state_index(const Tensor& phi);

}  // namespace zxd
