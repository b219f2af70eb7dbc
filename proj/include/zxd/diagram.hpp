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

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zxd/exact_scalar.hpp"
#include "zxd/phase.hpp"

namespace zxd {

enum class Calculus : std::uint8_t { zx, zw, zh };

std::string to_string(Calculus c);
std::optional<Calculus> calculus_from_string(std::string_view s);

/**
 * Generator kinds.  Plain swaps, cups and caps are not nodes: in the open
 * graph representation a crossing is just two wires and a cup/cap is a
 * wire between two boundary ports of the same side, so the symmetric and
 * compact structure is graph-identity.  The fermionic crossing of ZW
 * carries a sign and therefore is a node.
 */
enum class NodeKind : std::uint8_t {
  z_spider,   // ZX, phase
  x_spider,   // ZX, phase
  hadamard,   // ZX, 1 -> 1
  z_node,     // ZW, complex parameter r
  w_node,     // ZW
  fswap,      // ZW, 2 -> 2
  zh_z,       // ZH, phase-free spider
  zh_x,       // ZH, phase-free spider with the explicit 1/2
  h_box,      // ZH, complex parameter a (default -1)
  not_node,   // ZH, 1 -> 1
  ground,     // shared, 1 -> 0
};

std::string to_string(NodeKind k);
std::optional<NodeKind> node_kind_from_string(std::string_view s);
bool kind_allowed_in(NodeKind k, Calculus c);
bool kind_has_phase(NodeKind k);
bool kind_has_param(NodeKind k);

/**
 * A complex node parameter (ZW r, ZH a).  The float view is always
 * populated; the exact view is present when the value lies in
 * Z[i, 1/sqrt(2)], which the exact backend requires.
 */
struct ScalarParam {
  std::complex<double> value{0.0, 0.0};
  std::optional<ExactScalar> exact;

  ScalarParam() : value(0.0, 0.0), exact(ExactScalar::zero()) {}
  ScalarParam(const ExactScalar& x) : value(x.to_complex()), exact(x) {}  // NOLINT
  explicit ScalarParam(std::complex<double> v) : value(v) {}
  static ScalarParam integer(long long n) { return ScalarParam(ExactScalar(n)); }
  /// e^{i a}; exact when the phase is a pi/4 multiple.
  static ScalarParam unit_phase(const Phase& a);

  bool approx_equal(const ScalarParam& o, double tol = 1e-12) const;
};

struct PortRef {
  enum class Kind : std::uint8_t { node_in, node_out, boundary_in, boundary_out };
  Kind kind = Kind::node_in;
  std::int32_t node = -1;  // node id; unused for boundary ports
  std::int32_t index = 0;

  static PortRef in(std::int32_t node, std::int32_t index) {
    return {Kind::node_in, node, index};
  }
  static PortRef out(std::int32_t node, std::int32_t index) {
    return {Kind::node_out, node, index};
  }
  static PortRef bin(std::int32_t index) { return {Kind::boundary_in, -1, index}; }
  static PortRef bout(std::int32_t index) { return {Kind::boundary_out, -1, index}; }

  bool is_boundary() const {
    return kind == Kind::boundary_in || kind == Kind::boundary_out;
  }
  auto tie() const { return std::tuple(static_cast<int>(kind), node, index); }
  bool operator==(const PortRef& o) const { return tie() == o.tie(); }
  bool operator<(const PortRef& o) const { return tie() < o.tie(); }
};

/// Undirected connection between exactly two ports, stored sorted.
struct Wire {
  PortRef a, b;
  Wire() = default;
  Wire(PortRef x, PortRef y) : a(x), b(y) {
    if (b < a) std::swap(a, b);
  }
  bool touches(const PortRef& p) const { return a == p || b == p; }
  PortRef other(const PortRef& p) const { return a == p ? b : a; }
  bool operator==(const Wire& o) const { return a == o.a && b == o.b; }
  bool operator<(const Wire& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
};

struct Node {
  NodeKind kind = NodeKind::z_spider;
  std::int32_t n_in = 0;
  std::int32_t m_out = 0;
  std::optional<Phase> phase;        // zx spiders
  std::optional<ScalarParam> param;  // z_node, h_box

  bool same_shape(const Node& o) const {
    return kind == o.kind && n_in == o.n_in && m_out == o.m_out;
  }
  bool approx_equal(const Node& o, double tol = 1e-12) const;
};

struct Violation {
  enum class Kind {
    dangling_port,
    duplicate_port,
    self_wire,
    calculus_mismatch,
    bad_arity,
    bad_boundary,
    missing_param,
  };
  Kind kind;
  std::string detail;
};

std::string to_string(Violation::Kind k);

/**
 * An open string diagram: generator nodes with ordered ports, undirected
 * wires, and ordered input/output boundaries.  Every port participates in
 * exactly one wire.  Values are immutable in spirit: all operations below
 * return fresh diagrams.
 */
class Diagram {
 public:
  explicit Diagram(Calculus c = Calculus::zx) : calc_(c) {}

  Calculus calculus() const { return calc_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Wire>& wires() const { return wires_; }
  std::int32_t num_inputs() const { return n_in_; }
  std::int32_t num_outputs() const { return n_out_; }
  bool contains_ground() const;

  // Construction helpers (used by builders, io and rewriting).
  std::int32_t add_node(Node n);
  void add_wire(PortRef a, PortRef b);
  void set_boundary(std::int32_t inputs, std::int32_t outputs) {
    n_in_ = inputs;
    n_out_ = outputs;
  }
  void sort_wires();

  std::vector<Violation> validate() const;
  void check_valid() const;  // throws std::invalid_argument on violations

  /// Strict structural equality: same node list, same wire set.
  bool structurally_equal(const Diagram& o, double tol = 1e-12) const;
  /// Structural equality up to a renaming of node ids.
  bool isomorphic(const Diagram& o, double tol = 1e-12) const;

  std::string debug_dump() const;

 private:
  Calculus calc_;
  std::vector<Node> nodes_;
  std::vector<Wire> wires_;
  std::int32_t n_in_ = 0;
  std::int32_t n_out_ = 0;
};

/// Sequential composition: d1 first, then d2.  Requires matching arity and
/// calculus.  Wire chains through the junction are fused; closed loops
/// become an identity spider with a self-wire (trace of the identity).
Diagram compose(const Diagram& d2, const Diagram& d1);

/// Parallel composition; boundaries concatenate with d1 first.
Diagram tensor(const Diagram& d1, const Diagram& d2);

/// Mirror: boundaries swap and every generator is replaced by its dagger.
/// Rejects diagrams containing ground.
Diagram dagger(const Diagram& d);

/// Entrywise conjugate: parameters conjugated in place, wiring untouched.
Diagram conjugate(const Diagram& d);

/// The identity node of a calculus (used to materialize closed loops).
Node identity_node(Calculus c);

}  // namespace zxd
