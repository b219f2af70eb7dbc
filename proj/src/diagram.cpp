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

#include "zxd/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zxd/detail/junction.hpp"

namespace zxd {

std::string to_string(Calculus c) {
  switch (c) {
    case Calculus::zx: return "zx";
    case Calculus::zw: return "zw";
    case Calculus::zh: return "zh";
  }
  return "?";
}

std::optional<Calculus> calculus_from_string(std::string_view s) {
  if (s == "zx") return Calculus::zx;
  if (s == "zw") return Calculus::zw;
  if (s == "zh") return Calculus::zh;
  return std::nullopt;
}

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::z_spider: return "z_spider";
    case NodeKind::x_spider: return "x_spider";
    case NodeKind::hadamard: return "hadamard";
    case NodeKind::z_node: return "z_node";
    case NodeKind::w_node: return "w_node";
    case NodeKind::fswap: return "fswap";
    case NodeKind::zh_z: return "zh_z";
    case NodeKind::zh_x: return "zh_x";
    case NodeKind::h_box: return "h_box";
    case NodeKind::not_node: return "not";
    case NodeKind::ground: return "ground";
  }
  return "?";
}

std::optional<NodeKind> node_kind_from_string(std::string_view s) {
  static const std::map<std::string, NodeKind, std::less<>> table = {
      {"z_spider", NodeKind::z_spider}, {"x_spider", NodeKind::x_spider},
      {"hadamard", NodeKind::hadamard}, {"z_node", NodeKind::z_node},
      {"w_node", NodeKind::w_node},     {"fswap", NodeKind::fswap},
      {"zh_z", NodeKind::zh_z},         {"zh_x", NodeKind::zh_x},
      {"h_box", NodeKind::h_box},       {"not", NodeKind::not_node},
      {"ground", NodeKind::ground},
  };
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

bool kind_allowed_in(NodeKind k, Calculus c) {
  if (k == NodeKind::ground) return true;
  switch (c) {
    case Calculus::zx:
      return k == NodeKind::z_spider || k == NodeKind::x_spider || k == NodeKind::hadamard;
    case Calculus::zw:
      return k == NodeKind::z_node || k == NodeKind::w_node || k == NodeKind::fswap;
    case Calculus::zh:
      return k == NodeKind::zh_z || k == NodeKind::zh_x || k == NodeKind::h_box ||
             k == NodeKind::not_node;
  }
  return false;
}

bool kind_has_phase(NodeKind k) {
  return k == NodeKind::z_spider || k == NodeKind::x_spider;
}

bool kind_has_param(NodeKind k) {
  return k == NodeKind::z_node || k == NodeKind::h_box;
}

ScalarParam ScalarParam::unit_phase(const Phase& a) {
  if (a.exact_representable()) {
    return ScalarParam(ExactScalar::omega_pow(a.omega_power()));
  }
  ScalarParam p{std::polar(1.0, a.to_radians())};
  return p;
}

bool ScalarParam::approx_equal(const ScalarParam& o, double tol) const {
  if (exact && o.exact) return *exact == *o.exact;
  return std::abs(value - o.value) <= tol;
}

bool Node::approx_equal(const Node& o, double tol) const {
  if (!same_shape(o)) return false;
  if (phase.has_value() != o.phase.has_value()) return false;
  if (phase && !phase->approx_equal(*o.phase, tol)) return false;
  if (param.has_value() != o.param.has_value()) return false;
  if (param && !param->approx_equal(*o.param, tol)) return false;
  return true;
}

std::string to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::dangling_port: return "DanglingPort";
    case Violation::Kind::duplicate_port: return "DuplicatePort";
    case Violation::Kind::self_wire: return "SelfWire";
    case Violation::Kind::calculus_mismatch: return "CalculusMismatch";
    case Violation::Kind::bad_arity: return "BadArity";
    case Violation::Kind::bad_boundary: return "BadBoundary";
    case Violation::Kind::missing_param: return "MissingParam";
  }
  return "?";
}

bool Diagram::contains_ground() const {
  return std::any_of(nodes_.begin(), nodes_.end(),
                     [](const Node& n) { return n.kind == NodeKind::ground; });
}

std::int32_t Diagram::add_node(Node n) {
  nodes_.push_back(std::move(n));
  return static_cast<std::int32_t>(nodes_.size()) - 1;
}

void Diagram::add_wire(PortRef a, PortRef b) { wires_.emplace_back(a, b); }

void Diagram::sort_wires() { std::sort(wires_.begin(), wires_.end()); }

namespace {

std::string port_str(const PortRef& p) {
  std::ostringstream os;
  switch (p.kind) {
    case PortRef::Kind::node_in: os << "n" << p.node << ".in" << p.index; break;
    case PortRef::Kind::node_out: os << "n" << p.node << ".out" << p.index; break;
    case PortRef::Kind::boundary_in: os << "in" << p.index; break;
    case PortRef::Kind::boundary_out: os << "out" << p.index; break;
  }
  return os.str();
}

}  // namespace

std::vector<Violation> Diagram::validate() const {
  std::vector<Violation> out;
  const auto n_nodes = static_cast<std::int32_t>(nodes_.size());

  for (std::int32_t id = 0; id < n_nodes; ++id) {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    if (!kind_allowed_in(n.kind, calc_)) {
      out.push_back({Violation::Kind::calculus_mismatch,
                     to_string(n.kind) + " node " + std::to_string(id) + " not in " +
                         to_string(calc_) + " calculus"});
    }
    bool arity_ok = n.n_in >= 0 && n.m_out >= 0;
    switch (n.kind) {
      case NodeKind::hadamard:
      case NodeKind::not_node: arity_ok = n.n_in == 1 && n.m_out == 1; break;
      case NodeKind::fswap: arity_ok = n.n_in == 2 && n.m_out == 2; break;
      case NodeKind::ground: arity_ok = n.n_in == 1 && n.m_out == 0; break;
      default: break;
    }
    if (!arity_ok) {
      out.push_back({Violation::Kind::bad_arity,
                     to_string(n.kind) + " node " + std::to_string(id) + " has arity (" +
                         std::to_string(n.n_in) + "," + std::to_string(n.m_out) + ")"});
    }
    if (kind_has_phase(n.kind) && !n.phase) {
      out.push_back({Violation::Kind::missing_param,
                     "node " + std::to_string(id) + " lacks a phase"});
    }
    if (kind_has_param(n.kind) && !n.param) {
      out.push_back({Violation::Kind::missing_param,
                     "node " + std::to_string(id) + " lacks a parameter"});
    }
  }
  if (n_in_ < 0 || n_out_ < 0) {
    out.push_back({Violation::Kind::bad_boundary, "negative boundary size"});
  }

  // Every port must appear in exactly one wire endpoint.
  std::map<PortRef, int> seen;
  for (const Wire& w : wires_) {
    if (w.a == w.b) {
      out.push_back({Violation::Kind::self_wire, "wire joins " + port_str(w.a) + " to itself"});
    }
    for (const PortRef& p : {w.a, w.b}) {
      bool known = false;
      switch (p.kind) {
        case PortRef::Kind::node_in:
          known = p.node >= 0 && p.node < n_nodes &&
                  p.index >= 0 && p.index < nodes_[static_cast<std::size_t>(p.node)].n_in;
          break;
        case PortRef::Kind::node_out:
          known = p.node >= 0 && p.node < n_nodes &&
                  p.index >= 0 && p.index < nodes_[static_cast<std::size_t>(p.node)].m_out;
          break;
        case PortRef::Kind::boundary_in: known = p.index >= 0 && p.index < n_in_; break;
        case PortRef::Kind::boundary_out: known = p.index >= 0 && p.index < n_out_; break;
      }
      if (!known) {
        out.push_back({Violation::Kind::bad_boundary,
                       "wire endpoint refers to unknown port " + port_str(p)});
        continue;
      }
      ++seen[p];
    }
  }
  auto expect_once = [&](const PortRef& p) {
    auto it = seen.find(p);
    const int c = it == seen.end() ? 0 : it->second;
    if (c == 0) {
      out.push_back({Violation::Kind::dangling_port, port_str(p) + " is not wired"});
    } else if (c > 1) {
      out.push_back({Violation::Kind::duplicate_port,
                     port_str(p) + " is wired " + std::to_string(c) + " times"});
    }
  };
  for (std::int32_t id = 0; id < n_nodes; ++id) {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    for (std::int32_t i = 0; i < n.n_in; ++i) expect_once(PortRef::in(id, i));
    for (std::int32_t j = 0; j < n.m_out; ++j) expect_once(PortRef::out(id, j));
  }
  for (std::int32_t i = 0; i < n_in_; ++i) expect_once(PortRef::bin(i));
  for (std::int32_t j = 0; j < n_out_; ++j) expect_once(PortRef::bout(j));
  return out;
}

void Diagram::check_valid() const {
  auto v = validate();
  if (!v.empty()) {
    std::ostringstream os;
    os << "invalid diagram:";
    for (const auto& x : v) os << " [" << to_string(x.kind) << "] " << x.detail << ";";
    throw std::invalid_argument(os.str());
  }
}

bool Diagram::structurally_equal(const Diagram& o, double tol) const {
  if (calc_ != o.calc_ || n_in_ != o.n_in_ || n_out_ != o.n_out_) return false;
  if (nodes_.size() != o.nodes_.size() || wires_.size() != o.wires_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].approx_equal(o.nodes_[i], tol)) return false;
  }
  auto wa = wires_;
  auto wb = o.wires_;
  std::sort(wa.begin(), wa.end());
  std::sort(wb.begin(), wb.end());
  return wa == wb;
}

namespace {

PortRef map_port(const PortRef& p, const std::vector<std::int32_t>& node_map) {
  if (p.is_boundary()) return p;
  PortRef q = p;
  q.node = node_map[static_cast<std::size_t>(p.node)];
  return q;
}

bool iso_search(const Diagram& a, const Diagram& b, std::vector<std::int32_t>& amap,
                std::vector<bool>& used, std::size_t next, const std::set<Wire>& bwires,
                double tol) {
  if (next == a.nodes().size()) return true;
  const Node& an = a.nodes()[next];
  for (std::size_t j = 0; j < b.nodes().size(); ++j) {
    if (used[j] || !an.approx_equal(b.nodes()[j], tol)) continue;
    amap[next] = static_cast<std::int32_t>(j);
    used[j] = true;
    bool ok = true;
    // Wires whose endpoints are both decided must exist in b.
    for (const Wire& w : a.wires()) {
      auto decided = [&](const PortRef& p) {
        return p.is_boundary() || static_cast<std::size_t>(p.node) <= next;
      };
      auto touches_next = [&](const PortRef& p) {
        return !p.is_boundary() && static_cast<std::size_t>(p.node) == next;
      };
      if ((touches_next(w.a) || touches_next(w.b)) && decided(w.a) && decided(w.b)) {
        if (!bwires.count(Wire(map_port(w.a, amap), map_port(w.b, amap)))) {
          ok = false;
          break;
        }
      }
    }
    if (ok && iso_search(a, b, amap, used, next + 1, bwires, tol)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool Diagram::isomorphic(const Diagram& o, double tol) const {
  if (calc_ != o.calc_ || n_in_ != o.n_in_ || n_out_ != o.n_out_) return false;
  if (nodes_.size() != o.nodes_.size() || wires_.size() != o.wires_.size()) return false;
  std::set<Wire> bwires(o.wires_.begin(), o.wires_.end());
  // Boundary-boundary wires contain no node and must match verbatim.
  for (const Wire& w : wires_) {
    if (w.a.is_boundary() && w.b.is_boundary() && !bwires.count(w)) return false;
  }
  std::vector<std::int32_t> amap(nodes_.size(), -1);
  std::vector<bool> used(nodes_.size(), false);
  return iso_search(*this, o, amap, used, 0, bwires, tol);
}

std::string Diagram::debug_dump() const {
  std::ostringstream os;
  os << to_string(calc_) << " diagram: " << n_in_ << " -> " << n_out_ << "\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    os << "  n" << i << ": " << to_string(n.kind) << "(" << n.n_in << "," << n.m_out << ")";
    if (n.phase) os << " phase=" << n.phase->to_string();
    if (n.param) {
      os << " param=";
      if (n.param->exact) {
        os << n.param->exact->to_string();
      } else {
        os << n.param->value.real() << (n.param->value.imag() < 0 ? "-" : "+")
           << std::abs(n.param->value.imag()) << "i";
      }
    }
    os << "\n";
  }
  for (const Wire& w : wires_) os << "  " << port_str(w.a) << " -- " << port_str(w.b) << "\n";
  return os.str();
}

Node identity_node(Calculus c) {
  Node n;
  n.n_in = 1;
  n.m_out = 1;
  switch (c) {
    case Calculus::zx:
      n.kind = NodeKind::z_spider;
      n.phase = Phase::zero();
      break;
    case Calculus::zw:
      n.kind = NodeKind::z_node;
      n.param = ScalarParam::integer(1);
      break;
    case Calculus::zh:
      n.kind = NodeKind::zh_z;
      break;
  }
  return n;
}

// ---------------------------------------------------------------------------
// compose / tensor / dagger / conjugate
// ---------------------------------------------------------------------------

namespace detail {

void resolve_junction_wires(Calculus calc, std::int32_t n_junctions,
                            const std::vector<std::pair<Endpoint, Endpoint>>& raw,
                            Diagram* out) {
  // Each junction must be touched by exactly two endpoints.
  std::vector<std::array<std::int32_t, 2>> incident(
      static_cast<std::size_t>(n_junctions), {-1, -1});
  for (std::size_t wi = 0; wi < raw.size(); ++wi) {
    for (int side = 0; side < 2; ++side) {
      const Endpoint& e = side == 0 ? raw[wi].first : raw[wi].second;
      if (!e.junction) continue;
      auto& slots = incident[static_cast<std::size_t>(e.junction_id)];
      const std::int32_t enc = static_cast<std::int32_t>(wi) * 2 + side;
      if (slots[0] < 0) {
        slots[0] = enc;
      } else if (slots[1] < 0) {
        slots[1] = enc;
      } else {
        throw std::logic_error("junction with more than two incident wires");
      }
    }
  }
  for (const auto& slots : incident) {
    if (slots[0] < 0 || slots[1] < 0) {
      throw std::logic_error("junction with fewer than two incident wires");
    }
  }

  std::vector<bool> visited(raw.size(), false);
  auto endpoint_at = [&](std::int32_t enc) -> const Endpoint& {
    return (enc % 2 == 0) ? raw[static_cast<std::size_t>(enc / 2)].first
                          : raw[static_cast<std::size_t>(enc / 2)].second;
  };
  auto walk = [&](std::size_t wi, int start_side) -> Endpoint {
    // Walks from raw[wi]'s endpoint on side start_side through junctions
    // until a real endpoint is reached; marks wires visited.
    std::int32_t enc = static_cast<std::int32_t>(wi) * 2 + start_side;
    visited[wi] = true;
    while (true) {
      const Endpoint& e = endpoint_at(enc);
      if (!e.junction) return e;
      const auto& slots = incident[static_cast<std::size_t>(e.junction_id)];
      const std::int32_t other = (slots[0] == enc) ? slots[1] : slots[0];
      // Hop across the junction, then across that wire.
      const std::int32_t next_wire = other / 2;
      visited[static_cast<std::size_t>(next_wire)] = true;
      enc = next_wire * 2 + (1 - other % 2);
    }
  };

  for (std::size_t wi = 0; wi < raw.size(); ++wi) {
    if (visited[wi]) continue;
    const bool a_real = !raw[wi].first.junction;
    const bool b_real = !raw[wi].second.junction;
    if (a_real && b_real) {
      visited[wi] = true;
      out->add_wire(raw[wi].first.port, raw[wi].second.port);
    } else if (a_real || b_real) {
      visited[wi] = true;
      const Endpoint far = walk(wi, a_real ? 1 : 0);
      out->add_wire(a_real ? raw[wi].first.port : raw[wi].second.port, far.port);
    }
  }
  // Whatever remains are closed cycles through junctions: each becomes the
  // trace of an identity wire, materialized as an identity generator with a
  // self-wire so it stays representable.
  for (std::size_t wi = 0; wi < raw.size(); ++wi) {
    if (visited[wi]) continue;
    visited[wi] = true;
    // Mark the rest of this cycle.
    std::int32_t enc = static_cast<std::int32_t>(wi) * 2 + 1;
    while (true) {
      const Endpoint& e = endpoint_at(enc);
      const auto& slots = incident[static_cast<std::size_t>(e.junction_id)];
      const std::int32_t other = (slots[0] == enc) ? slots[1] : slots[0];
      const std::int32_t next_wire = other / 2;
      if (next_wire == static_cast<std::int32_t>(wi)) break;  // cycle closed
      visited[static_cast<std::size_t>(next_wire)] = true;
      enc = next_wire * 2 + (1 - other % 2);
    }
    const std::int32_t id = out->add_node(identity_node(calc));
    out->add_wire(PortRef::in(id, 0), PortRef::out(id, 0));
  }
}

}  // namespace detail

Diagram compose(const Diagram& d2, const Diagram& d1) {
  if (d1.calculus() != d2.calculus()) {
    throw std::invalid_argument("compose: calculus mismatch (" + to_string(d1.calculus()) +
                                " vs " + to_string(d2.calculus()) + ")");
  }
  if (d1.num_outputs() != d2.num_inputs()) {
    throw std::invalid_argument(
        "compose: arity mismatch, d1 has " + std::to_string(d1.num_outputs()) +
        " outputs but d2 expects " + std::to_string(d2.num_inputs()) + " inputs");
  }
  Diagram out(d1.calculus());
  out.set_boundary(d1.num_inputs(), d2.num_outputs());
  for (const Node& n : d1.nodes()) out.add_node(n);
  const std::int32_t shift = static_cast<std::int32_t>(d1.nodes().size());
  for (const Node& n : d2.nodes()) out.add_node(n);

  const std::int32_t k = d1.num_outputs();
  using detail::Endpoint;
  std::vector<std::pair<Endpoint, Endpoint>> raw;
  auto from_d1 = [&](const PortRef& p) -> Endpoint {
    if (p.kind == PortRef::Kind::boundary_out) return Endpoint::junct(p.index);
    return Endpoint::real(p);
  };
  auto from_d2 = [&](const PortRef& p) -> Endpoint {
    if (p.kind == PortRef::Kind::boundary_in) return Endpoint::junct(p.index);
    PortRef q = p;
    if (!q.is_boundary()) q.node += shift;
    return Endpoint::real(q);
  };
  for (const Wire& w : d1.wires()) raw.emplace_back(from_d1(w.a), from_d1(w.b));
  for (const Wire& w : d2.wires()) raw.emplace_back(from_d2(w.a), from_d2(w.b));
  detail::resolve_junction_wires(out.calculus(), k, raw, &out);
  out.sort_wires();
  return out;
}

Diagram tensor(const Diagram& d1, const Diagram& d2) {
  if (d1.calculus() != d2.calculus()) {
    throw std::invalid_argument("tensor: calculus mismatch");
  }
  Diagram out(d1.calculus());
  out.set_boundary(d1.num_inputs() + d2.num_inputs(),
                   d1.num_outputs() + d2.num_outputs());
  for (const Node& n : d1.nodes()) out.add_node(n);
  const std::int32_t shift = static_cast<std::int32_t>(d1.nodes().size());
  for (const Node& n : d2.nodes()) out.add_node(n);
  for (const Wire& w : d1.wires()) out.add_wire(w.a, w.b);
  auto map2 = [&](PortRef p) {
    if (p.kind == PortRef::Kind::boundary_in) {
      p.index += d1.num_inputs();
    } else if (p.kind == PortRef::Kind::boundary_out) {
      p.index += d1.num_outputs();
    } else {
      p.node += shift;
    }
    return p;
  };
  for (const Wire& w : d2.wires()) out.add_wire(map2(w.a), map2(w.b));
  out.sort_wires();
  return out;
}

namespace {

Node dagger_node(const Node& n) {
  Node d = n;
  std::swap(d.n_in, d.m_out);
  if (kind_has_phase(n.kind) && n.phase) d.phase = -*n.phase;
  if (kind_has_param(n.kind) && n.param) {
    ScalarParam p;
    p.value = std::conj(n.param->value);
    if (n.param->exact) p.exact = n.param->exact->conj();
    d.param = p;
  }
  return d;
}

PortRef mirror_port(PortRef p) {
  switch (p.kind) {
    case PortRef::Kind::node_in: p.kind = PortRef::Kind::node_out; break;
    case PortRef::Kind::node_out: p.kind = PortRef::Kind::node_in; break;
    case PortRef::Kind::boundary_in: p.kind = PortRef::Kind::boundary_out; break;
    case PortRef::Kind::boundary_out: p.kind = PortRef::Kind::boundary_in; break;
  }
  return p;
}

}  // namespace

Diagram dagger(const Diagram& d) {
  if (d.contains_ground()) {
    throw std::invalid_argument(
        "dagger: diagram contains ground; the grounded calculus has no dagger");
  }
  Diagram out(d.calculus());
  out.set_boundary(d.num_outputs(), d.num_inputs());
  for (const Node& n : d.nodes()) out.add_node(dagger_node(n));
  for (const Wire& w : d.wires()) out.add_wire(mirror_port(w.a), mirror_port(w.b));
  out.sort_wires();
  return out;
}

Diagram conjugate(const Diagram& d) {
  Diagram out(d.calculus());
  out.set_boundary(d.num_inputs(), d.num_outputs());
  for (const Node& n : d.nodes()) {
    Node c = n;
    if (kind_has_phase(n.kind) && n.phase) c.phase = -*n.phase;
    if (kind_has_param(n.kind) && n.param) {
      ScalarParam p;
      p.value = std::conj(n.param->value);
      if (n.param->exact) p.exact = n.param->exact->conj();
      c.param = p;
    }
    out.add_node(c);
  }
  for (const Wire& w : d.wires()) out.add_wire(w.a, w.b);
  out.sort_wires();
  return out;
}

}  // namespace zxd
