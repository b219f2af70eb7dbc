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

#include "zxd/builders.hpp"

#include <stdexcept>

namespace zxd::build {

namespace {

Node spider(NodeKind kind, std::int32_t n, std::int32_t m, const Phase& alpha) {
  Node nd;
  nd.kind = kind;
  nd.n_in = n;
  nd.m_out = m;
  nd.phase = alpha;
  return nd;
}

Node param_node(NodeKind kind, std::int32_t n, std::int32_t m, const ScalarParam& p) {
  Node nd;
  nd.kind = kind;
  nd.n_in = n;
  nd.m_out = m;
  nd.param = p;
  return nd;
}

Node plain(NodeKind kind, std::int32_t n, std::int32_t m) {
  Node nd;
  nd.kind = kind;
  nd.n_in = n;
  nd.m_out = m;
  return nd;
}

[[noreturn]] void unavailable(const char* what, Calculus c, const char* hint) {
  throw std::invalid_argument(std::string(what) + " is not a builder of the " +
                              to_string(c) + " calculus" +
                              (hint && *hint ? std::string("; ") + hint : ""));
}

}  // namespace

Diagram generator(Calculus c, Node n) {
  Diagram d(c);
  const std::int32_t id = d.add_node(n);
  d.set_boundary(n.n_in, n.m_out);
  for (std::int32_t i = 0; i < n.n_in; ++i) d.add_wire(PortRef::bin(i), PortRef::in(id, i));
  for (std::int32_t j = 0; j < n.m_out; ++j) d.add_wire(PortRef::out(id, j), PortRef::bout(j));
  d.sort_wires();
  return d;
}

Diagram z_spider(std::int32_t n, std::int32_t m, const Phase& alpha) {
  return generator(Calculus::zx, spider(NodeKind::z_spider, n, m, alpha));
}

Diagram x_spider(std::int32_t n, std::int32_t m, const Phase& alpha) {
  return generator(Calculus::zx, spider(NodeKind::x_spider, n, m, alpha));
}

Diagram h_box(std::int32_t n, std::int32_t m, const ScalarParam& a) {
  return generator(Calculus::zh, param_node(NodeKind::h_box, n, m, a));
}

Diagram z_node(std::int32_t n, std::int32_t m, const ScalarParam& r) {
  return generator(Calculus::zw, param_node(NodeKind::z_node, n, m, r));
}

Diagram w_node(std::int32_t n, std::int32_t m) {
  return generator(Calculus::zw, plain(NodeKind::w_node, n, m));
}

Diagram identity(std::int32_t n, Calculus c) {
  Diagram d(c);
  d.set_boundary(n, n);
  for (std::int32_t i = 0; i < n; ++i) d.add_wire(PortRef::bin(i), PortRef::bout(i));
  d.sort_wires();
  return d;
}

Diagram swap_wires(Calculus c) {
  Diagram d(c);
  d.set_boundary(2, 2);
  d.add_wire(PortRef::bin(0), PortRef::bout(1));
  d.add_wire(PortRef::bin(1), PortRef::bout(0));
  d.sort_wires();
  return d;
}

Diagram cup(Calculus c) {
  Diagram d(c);
  d.set_boundary(2, 0);
  d.add_wire(PortRef::bin(0), PortRef::bin(1));
  return d;
}

Diagram cap(Calculus c) {
  Diagram d(c);
  d.set_boundary(0, 2);
  d.add_wire(PortRef::bout(0), PortRef::bout(1));
  return d;
}

Diagram ground(std::int32_t n, Calculus c) {
  Diagram d(c);
  d.set_boundary(n, 0);
  for (std::int32_t i = 0; i < n; ++i) {
    const std::int32_t id = d.add_node(plain(NodeKind::ground, 1, 0));
    d.add_wire(PortRef::bin(i), PortRef::in(id, 0));
  }
  d.sort_wires();
  return d;
}

Diagram zx_scalar_sqrt2_phase(const Phase& alpha) {
  // <1| sqrt(2) against the Z state (1, e^{i alpha}): value sqrt(2) e^{i alpha}.
  Diagram d(Calculus::zx);
  const auto zs = d.add_node(spider(NodeKind::z_spider, 0, 1, alpha));
  const auto xe = d.add_node(spider(NodeKind::x_spider, 1, 0, Phase::pi()));
  d.add_wire(PortRef::out(zs, 0), PortRef::in(xe, 0));
  d.sort_wires();
  return d;
}

Diagram zx_scalar_inv_sqrt2() {
  // (<000| + <111|) (H x H x H) (|000> + |111>) = 1/sqrt(2).
  Diagram d(Calculus::zx);
  const auto state = d.add_node(spider(NodeKind::z_spider, 0, 3, Phase::zero()));
  const auto effect = d.add_node(spider(NodeKind::z_spider, 3, 0, Phase::zero()));
  for (std::int32_t i = 0; i < 3; ++i) {
    const auto had = d.add_node(plain(NodeKind::hadamard, 1, 1));
    d.add_wire(PortRef::out(state, i), PortRef::in(had, 0));
    d.add_wire(PortRef::out(had, 0), PortRef::in(effect, i));
  }
  d.sort_wires();
  return d;
}

Diagram zx_scalar_two() { return compose(cup(Calculus::zx), cap(Calculus::zx)); }

Diagram ket0(Calculus c) {
  switch (c) {
    case Calculus::zx:
      // X(0,1,0) is sqrt(2)|0>; rescale.
      return tensor(x_spider(0, 1, Phase::zero()), zx_scalar_inv_sqrt2());
    case Calculus::zw:
      return z_node(0, 1, ScalarParam::integer(0));
    case Calculus::zh: {
      // X^(0,1) is |0>/sqrt(2) under the explicit-1/2 convention; rescale.
      Diagram xs = generator(Calculus::zh, plain(NodeKind::zh_x, 0, 1));
      return tensor(xs, h_box(0, 0, ScalarParam(ExactScalar::sqrt2())));
    }
  }
  throw std::logic_error("unreachable");
}

Diagram ket1(Calculus c) {
  switch (c) {
    case Calculus::zx:
      return tensor(x_spider(0, 1, Phase::pi()), zx_scalar_inv_sqrt2());
    case Calculus::zw:
      return w_node(0, 1);
    case Calculus::zh:
      return compose(generator(Calculus::zh, plain(NodeKind::not_node, 1, 1)), ket0(c));
  }
  throw std::logic_error("unreachable");
}

namespace {

// [[r, 1], [1, 0]]: a W split with a (1, r) effect on its first output.
Diagram zw_v(const ScalarParam& r) {
  Diagram d(Calculus::zw);
  d.set_boundary(1, 1);
  const auto w = d.add_node(plain(NodeKind::w_node, 1, 2));
  const auto eff = d.add_node(param_node(NodeKind::z_node, 1, 0, r));
  d.add_wire(PortRef::bin(0), PortRef::in(w, 0));
  d.add_wire(PortRef::out(w, 0), PortRef::in(eff, 0));
  d.add_wire(PortRef::out(w, 1), PortRef::bout(0));
  d.sort_wires();
  return d;
}

Diagram zw_diag(const ScalarParam& r) {
  return generator(Calculus::zw, param_node(NodeKind::z_node, 1, 1, r));
}

// Scalar r as a closed ZW diagram: <1| against the state (1, r).
Diagram zw_scalar(const ScalarParam& r) {
  Diagram d(Calculus::zw);
  const auto st = d.add_node(param_node(NodeKind::z_node, 0, 1, r));
  const auto eff = d.add_node(plain(NodeKind::w_node, 1, 0));
  d.add_wire(PortRef::out(st, 0), PortRef::in(eff, 0));
  d.sort_wires();
  return d;
}

}  // namespace

Diagram h(Calculus c) {
  switch (c) {
    case Calculus::zx:
      return generator(Calculus::zx, plain(NodeKind::hadamard, 1, 1));
    case Calculus::zw: {
      // sqrt(2) H = V(-1) . diag(1,2) . V(1) . diag(1,-1); rescale by 1/sqrt(2).
      Diagram m2 = compose(zw_diag(ScalarParam::integer(2)),
                           compose(zw_v(ScalarParam::integer(1)),
                                   zw_diag(ScalarParam::integer(-1))));
      Diagram sqrt2_h = compose(zw_v(ScalarParam::integer(-1)), m2);
      return tensor(sqrt2_h, zw_scalar(ScalarParam(ExactScalar::inv_sqrt2())));
    }
    case Calculus::zh:
      return tensor(h_box(1, 1, ScalarParam::integer(-1)),
                    h_box(0, 0, ScalarParam(ExactScalar::inv_sqrt2())));
  }
  throw std::logic_error("unreachable");
}

Diagram rz(const Phase& alpha, Calculus c) {
  switch (c) {
    case Calculus::zx:
      return z_spider(1, 1, alpha);
    case Calculus::zw:
      return zw_diag(ScalarParam::unit_phase(alpha));
    case Calculus::zh: {
      // diag(1, e^{i alpha}): copy spider with a phase H-box on one leg.
      Diagram d(Calculus::zh);
      d.set_boundary(1, 1);
      const auto z = d.add_node(plain(NodeKind::zh_z, 1, 2));
      const auto hb =
          d.add_node(param_node(NodeKind::h_box, 1, 0, ScalarParam::unit_phase(alpha)));
      d.add_wire(PortRef::bin(0), PortRef::in(z, 0));
      d.add_wire(PortRef::out(z, 0), PortRef::bout(0));
      d.add_wire(PortRef::out(z, 1), PortRef::in(hb, 0));
      d.sort_wires();
      return d;
    }
  }
  throw std::logic_error("unreachable");
}

Diagram s(Calculus c) { return rz(Phase::pi2(1), c); }
Diagram t(Calculus c) { return rz(Phase::pi4(1), c); }

Diagram cnot(Calculus c) {
  switch (c) {
    case Calculus::zx: {
      Diagram d(Calculus::zx);
      d.set_boundary(2, 2);
      const auto zc = d.add_node(spider(NodeKind::z_spider, 1, 2, Phase::zero()));
      const auto xt = d.add_node(spider(NodeKind::x_spider, 2, 1, Phase::zero()));
      d.add_wire(PortRef::bin(0), PortRef::in(zc, 0));
      d.add_wire(PortRef::out(zc, 0), PortRef::bout(0));
      d.add_wire(PortRef::out(zc, 1), PortRef::in(xt, 0));
      d.add_wire(PortRef::bin(1), PortRef::in(xt, 1));
      d.add_wire(PortRef::out(xt, 0), PortRef::bout(1));
      d.sort_wires();
      // The raw composite is CNot/sqrt(2).
      return tensor(d, zx_scalar_sqrt2_phase(Phase::zero()));
    }
    case Calculus::zw:
      unavailable("cnot", c, "use cz composed with swap");
    case Calculus::zh: {
      Diagram ht = tensor(identity(1, c), h(c));
      return compose(ht, compose(cz(c), ht));
    }
  }
  throw std::logic_error("unreachable");
}

Diagram cz(Calculus c) {
  switch (c) {
    case Calculus::zx: {
      Diagram d(Calculus::zx);
      d.set_boundary(2, 2);
      const auto z1 = d.add_node(spider(NodeKind::z_spider, 1, 2, Phase::zero()));
      const auto z2 = d.add_node(spider(NodeKind::z_spider, 1, 2, Phase::zero()));
      const auto had = d.add_node(plain(NodeKind::hadamard, 1, 1));
      d.add_wire(PortRef::bin(0), PortRef::in(z1, 0));
      d.add_wire(PortRef::out(z1, 0), PortRef::bout(0));
      d.add_wire(PortRef::bin(1), PortRef::in(z2, 0));
      d.add_wire(PortRef::out(z2, 0), PortRef::bout(1));
      d.add_wire(PortRef::out(z1, 1), PortRef::in(had, 0));
      d.add_wire(PortRef::out(had, 0), PortRef::out(z2, 1));
      d.sort_wires();
      return tensor(d, zx_scalar_sqrt2_phase(Phase::zero()));
    }
    case Calculus::zw: {
      // The fermionic crossing is CZ . SWAP, so CZ is it composed with a swap.
      Diagram f = generator(Calculus::zw, plain(NodeKind::fswap, 2, 2));
      return compose(f, swap_wires(c));
    }
    case Calculus::zh: {
      Diagram d(Calculus::zh);
      d.set_boundary(2, 2);
      const auto z1 = d.add_node(plain(NodeKind::zh_z, 1, 2));
      const auto z2 = d.add_node(plain(NodeKind::zh_z, 1, 2));
      const auto hb = d.add_node(param_node(NodeKind::h_box, 2, 0, ScalarParam::integer(-1)));
      d.add_wire(PortRef::bin(0), PortRef::in(z1, 0));
      d.add_wire(PortRef::out(z1, 0), PortRef::bout(0));
      d.add_wire(PortRef::bin(1), PortRef::in(z2, 0));
      d.add_wire(PortRef::out(z2, 0), PortRef::bout(1));
      d.add_wire(PortRef::out(z1, 1), PortRef::in(hb, 0));
      d.add_wire(PortRef::out(z2, 1), PortRef::in(hb, 1));
      d.sort_wires();
      return d;
    }
  }
  throw std::logic_error("unreachable");
}

Diagram global_phase(const Phase& alpha, Calculus c) {
  switch (c) {
    case Calculus::zx:
      return tensor(zx_scalar_sqrt2_phase(alpha), zx_scalar_inv_sqrt2());
    case Calculus::zw:
      return zw_scalar(ScalarParam::unit_phase(alpha));
    case Calculus::zh:
      return h_box(0, 0, ScalarParam::unit_phase(alpha));
  }
  throw std::logic_error("unreachable");
}

}  // namespace zxd::build
