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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zxd/diagram.hpp"
#include "zxd/tensor.hpp"

namespace zxd {

enum class SemanticsMode : std::uint8_t { pure, cpm };

/// Variable bindings for one rule instantiation.
struct Bindings {
  std::vector<Phase> phases;
  std::vector<ScalarParam> params;
};

/// Integer-linear phase expression: sum of coeff * var plus a constant.
struct PhaseExpr {
  std::vector<std::pair<int, int>> terms;  // (phase variable index, coefficient)
  Phase konst;

  static PhaseExpr constant(const Phase& p) { return {{}, p}; }
  static PhaseExpr var(int v, int coeff = 1) { return {{{v, coeff}}, Phase::zero()}; }
  PhaseExpr plus(const Phase& p) const {
    PhaseExpr e = *this;
    e.konst = e.konst + p;
    return e;
  }
  Phase eval(const Bindings& b) const;
  bool is_constant() const { return terms.empty(); }
  /// (var, coeff) when the expression is coeff*var + konst with coeff +-1.
  std::optional<std::pair<int, int>> single_var() const;
};

/// Small parameter expression tree for ZW/ZH rule templates.
struct ParamExpr {
  enum class Kind : std::uint8_t { constant, var, unit_phase, add, mul, scale };
  Kind kind = Kind::constant;
  ScalarParam konst;               // constant / scale factor
  int var = -1;                    // param variable (var) or phase variable (unit_phase)
  std::vector<ParamExpr> kids;     // add / mul / scale operands

  static ParamExpr constant(const ScalarParam& p);
  static ParamExpr var_ref(int v);
  /// e^{i alpha} for the phase variable alpha.
  static ParamExpr unit_of_phase(int phase_var);
  static ParamExpr add(ParamExpr a, ParamExpr b);
  static ParamExpr mul(ParamExpr a, ParamExpr b);
  static ParamExpr scaled(ParamExpr a, const ScalarParam& factor);

  ScalarParam eval(const Bindings& b) const;
  bool is_constant() const { return kind == Kind::constant; }
  bool is_var() const { return kind == Kind::var; }
};

struct PatNode {
  NodeKind kind = NodeKind::z_spider;
  std::int32_t n_in = 0;
  std::int32_t m_out = 0;
  std::optional<PhaseExpr> phase;
  std::optional<ParamExpr> param;
};

/**
 * One side of a rewrite rule at a fixed variadic-leg assignment: a diagram
 * whose node parameters may be expressions in the rule variables.
 */
struct Pattern {
  Calculus calc = Calculus::zx;
  std::vector<PatNode> nodes;
  std::vector<Wire> wires;
  std::int32_t n_in = 0;
  std::int32_t n_out = 0;
  // Groups of boundary positions that are interchangeable (variadic spider
  // legs); used to deduplicate matches.  Encoding: input k -> k, output
  // k -> n_in + k.
  std::vector<std::vector<std::int32_t>> symmetric_boundary_groups;

  std::int32_t add_node(PatNode n) {
    nodes.push_back(std::move(n));
    return static_cast<std::int32_t>(nodes.size()) - 1;
  }
  void add_wire(PortRef a, PortRef b) { wires.emplace_back(a, b); }

  Diagram instantiate(const Bindings& b) const;
  static Pattern from_diagram(const Diagram& d);
};

struct PhaseSlot {
  enum class Domain : std::uint8_t { any, pi2, boolean_pi };
  std::string name;
  Domain domain = Domain::any;
};

struct ParamSlot {
  enum class Domain : std::uint8_t { any, unit };
  std::string name;
  Domain domain = Domain::any;
};

struct AritySlot {
  std::string name;
  int min = 0;
  int max = 3;
};

struct RewriteRule {
  std::string name;
  Calculus calc = Calculus::zx;
  SemanticsMode mode = SemanticsMode::pure;
  // Set when the rule's published figure could not be transcribed verbatim
  // and a semantically verified stand-in is shipped instead.
  bool provisional = false;
  std::string note;
  std::vector<PhaseSlot> phase_slots;
  std::vector<ParamSlot> param_slots;
  std::vector<AritySlot> arity_slots;
  /// Builds (lhs, rhs) patterns for one assignment of the arity slots.
  std::function<std::pair<Pattern, Pattern>(const std::vector<int>&)> make;
};

struct RuleLibrary {
  std::string name;
  std::string description;
  std::vector<RewriteRule> rules;

  const RewriteRule* find(const std::string& rule_name) const;
};

/// zx-full | zx-pi2 | zw | zh | zx-ground | zw-ground | zh-ground.
const RuleLibrary& library(const std::string& name);
std::vector<std::string> library_names();

/// Concrete (lhs, rhs) diagrams for given arity and variable bindings.
std::pair<Diagram, Diagram> instantiate(const RewriteRule& rule,
                                        const std::vector<int>& arities,
                                        const Bindings& b);

// ---------------------------------------------------------------------------
// Soundness verification
// ---------------------------------------------------------------------------

struct RuleReport {
  std::string rule;
  bool provisional = false;
  int instantiations = 0;
  int exact_instantiations = 0;
  double max_residual = 0.0;
  // sound-exact: every instantiation equal on the exact backend;
  // sound: equal within tol; sound-projective: equal up to a recorded
  // global phase; unsound: some instantiation differs.
  std::string verdict;
  std::optional<Complex> scalar_factor;  // recorded phase when projective
  std::string note;                      // first failure, if any

  bool sound() const { return verdict != "unsound"; }
};

struct SoundnessReport {
  std::string library;
  double tol = 1e-9;
  int samples = 25;
  std::uint64_t seed = 0;
  int max_legs = 3;
  std::vector<RuleReport> rules;
  bool all_sound = false;
};

struct VerifyOptions {
  int samples = 25;       // random float draws per rule
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int max_legs = 3;       // clamp on variadic arity slots
  bool exact_pass = true; // pi/4-grid phases on the exact backend
};

RuleReport verify_rule(const RewriteRule& rule, const VerifyOptions& opts);
SoundnessReport verify_library(const std::string& name, const VerifyOptions& opts);

}  // namespace zxd
