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
#include <vector>

#include "zxd/axioms.hpp"
#include "zxd/diagram.hpp"

namespace zxd {

/**
 * An embedding of one side of a rule into a host diagram.
 *
 * node_map sends pattern nodes to host nodes; binding carries the solved
 * phase/parameter variables.  For every pattern boundary port (inputs
 * first, then outputs) the match records which host wire crosses the
 * interface there and which of its endpoints lies outside the matched
 * region.  Pattern wires joining two boundary ports (through-wires) claim
 * a host wire outright.
 */
struct Match {
  std::string rule;
  bool forward = true;      // true: matched the lhs, replacement is the rhs
  std::vector<int> legs;    // arity-slot assignment the pattern was built at
  Bindings binding;
  std::vector<std::int32_t> node_map;
  struct Attachment {
    std::int32_t host_wire = -1;
    bool outside_is_a = true;  // which endpoint of the host wire is outside
    bool through = false;      // claimed by a boundary-boundary pattern wire
  };
  std::vector<Attachment> attachments;  // one per pattern boundary port
};

/// All embeddings of the rule side selected by `forward` into the host, up
/// to the pattern's declared wire symmetries, deterministically ordered.
std::vector<Match> find_matches(const RewriteRule& rule, const std::vector<int>& legs,
                                bool forward, const Diagram& host, double tol = 1e-12);

/// Replaces the matched region by the instantiated opposite side.  Throws
/// std::invalid_argument when the match no longer fits the host.
Diagram apply_rewrite(const Diagram& host, const Match& m, const RewriteRule& rule);

// ---------------------------------------------------------------------------
// Proof scripts
// ---------------------------------------------------------------------------

struct ProofStep {
  std::string library;
  std::string rule;
  bool forward = true;       // L->R when true
  int index = 0;             // ordinal into the deterministic match list
  std::vector<int> legs;     // variadic leg counts
};

struct ProofScript {
  Diagram initial;
  std::vector<ProofStep> steps;
  Diagram final;
};

struct ProofOptions {
  bool semantic_check = false;  // CPM-compare every step
  int semantic_wire_limit = 6;  // skip the check above this boundary size
  double tol = 1e-9;
};

struct ProofStepReport {
  bool ok = false;
  int matches_found = 0;
  double semantic_residual = 0.0;
  bool semantic_checked = false;
  std::string error;
};

struct ProofReport {
  bool valid = false;
  int failed_step = -1;  // first failing step index, -1 when none
  bool final_matches = false;
  std::vector<ProofStepReport> steps;
  std::string error;
};

ProofReport verify_proof(const ProofScript& script, const ProofOptions& opts = {});

}  // namespace zxd
