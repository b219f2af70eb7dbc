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
#include <vector>

#include "zxd/cpm.hpp"
#include "zxd/diagram.hpp"
#include "zxd/tensor.hpp"

namespace zxd {

struct PurificationResult {
  Diagram pure;        // ground-free
  int ancilla_count;   // appended ancilla output wires
  // (ground node id in the original diagram, ancilla output index).
  std::vector<std::pair<std::int32_t, std::int32_t>> placement;
};

/// Removes each ground node in ascending id order and reroutes its input
/// wire to a fresh ancilla output appended at the right of the boundary.
/// Tracing the ancilla outputs of double(pure) recovers interpret_cpm.
PurificationResult purify(const Diagram& d);

/// f^dag f = 1 on the standard interpretation (exact when representable).
bool is_isometry(const Diagram& d, double tol = 1e-9);

/// discard . d = discard in CPM semantics: the output trace of the Choi
/// matrix is the identity on the input space.
bool is_causal(const Diagram& d, double tol = 1e-9);

struct IsoWitness {
  CMat u;  // isometry X -> Z
  CMat v;  // isometry Y -> Z
};

/**
 * Stinespring-style witness search in Qubit.  Given f: A -> B (x) X and
 * g: A -> B (x) Y (trailing split_f / split_g output wires form X / Y)
 * with tr_X double(f) = tr_Y double(g), produces isometries u: X -> Z,
 * v: Y -> Z with (1_B (x) u) f = (1_B (x) v) g.  The canonical dilation
 * comes from the eigendecomposition of the shared Choi matrix; each side's
 * environment factor is recovered by projection onto the orthogonal Kraus
 * operators and completed to an isometry on the unreachable complement.
 * Returns nullopt when the maps are not ~CP related.
 */
std::optional<IsoWitness> iso_witness_qubit(const Tensor& f, const Tensor& g, int split_f,
                                            int split_g, double tol = 1e-8);
std::optional<IsoWitness> iso_witness_qubit(const Diagram& f, const Diagram& g,
                                            int split_f, int split_g, double tol = 1e-8);

/// Verifies u^dag u = 1, v^dag v = 1 and (1 (x) u) f = (1 (x) v) g.
bool check_iso_related(const Tensor& f, const Tensor& g, int split_f, int split_g,
                       const IsoWitness& w, double tol = 1e-8);
bool check_iso_related(const Diagram& f, const Diagram& g, int split_f, int split_g,
                       const IsoWitness& w, double tol = 1e-8);

/**
 * The Clifford+T counterexample: phi = 1+2i and phi* = 1-2i are ~CP
 * related but not ~iso related, because the only candidate mediating
 * scalar (1+2i)/(1-2i) = (-3+4i)/5 is not in Z[i, 1/sqrt(2)].
 */
struct CliffordTCounterexample {
  ExactScalar phi;
  ExactScalar phi_conj;
  bool in_ring;             // (a) both scalars are ring elements
  bool cp_related;          // (b) cp_equal holds (|phi|^2 = |phi*|^2)
  bool quotient_in_ring;    // (c) must be false: phi / phi* has no ring value
  Complex float_quotient;   // (-3+4i)/5
  bool ok() const { return in_ring && cp_related && !quotient_in_ring; }
};

CliffordTCounterexample cliffordt_counterexample();

}  // namespace zxd
