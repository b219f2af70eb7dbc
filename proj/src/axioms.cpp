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

#include "zxd/axioms.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "zxd/builders.hpp"
#include "zxd/cpm.hpp"
#include "zxd/interp.hpp"

namespace zxd {

// ---------------------------------------------------------------------------
// Expressions and patterns
// ---------------------------------------------------------------------------

Phase PhaseExpr::eval(const Bindings& b) const {
  Phase acc = konst;
  for (const auto& [v, c] : terms) {
    acc = acc + b.phases.at(static_cast<std::size_t>(v)).scaled(c);
  }
  return acc;
}

std::optional<std::pair<int, int>> PhaseExpr::single_var() const {
  if (terms.size() != 1) return std::nullopt;
  const auto& [v, c] = terms.front();
  if (c != 1 && c != -1) return std::nullopt;
  return std::pair(v, c);
}

ParamExpr ParamExpr::constant(const ScalarParam& p) {
  ParamExpr e;
  e.kind = Kind::constant;
  e.konst = p;
  return e;
}

ParamExpr ParamExpr::var_ref(int v) {
  ParamExpr e;
  e.kind = Kind::var;
  e.var = v;
  return e;
}

ParamExpr ParamExpr::unit_of_phase(int phase_var) {
  ParamExpr e;
  e.kind = Kind::unit_phase;
  e.var = phase_var;
  return e;
}

ParamExpr ParamExpr::add(ParamExpr a, ParamExpr b) {
  ParamExpr e;
  e.kind = Kind::add;
  e.kids = {std::move(a), std::move(b)};
  return e;
}

ParamExpr ParamExpr::mul(ParamExpr a, ParamExpr b) {
  ParamExpr e;
  e.kind = Kind::mul;
  e.kids = {std::move(a), std::move(b)};
  return e;
}

ParamExpr ParamExpr::scaled(ParamExpr a, const ScalarParam& factor) {
  ParamExpr e;
  e.kind = Kind::scale;
  e.konst = factor;
  e.kids = {std::move(a)};
  return e;
}

namespace {

ScalarParam param_combine(const ScalarParam& x, const ScalarParam& y, bool add_op) {
  ScalarParam out;
  if (x.exact && y.exact) {
    out = ScalarParam(add_op ? *x.exact + *y.exact : *x.exact * *y.exact);
  } else {
    out = ScalarParam(add_op ? x.value + y.value : x.value * y.value);
  }
  return out;
}

}  // namespace

ScalarParam ParamExpr::eval(const Bindings& b) const {
  switch (kind) {
    case Kind::constant: return konst;
    case Kind::var: return b.params.at(static_cast<std::size_t>(var));
    case Kind::unit_phase:
      return ScalarParam::unit_phase(b.phases.at(static_cast<std::size_t>(var)));
    case Kind::add: return param_combine(kids[0].eval(b), kids[1].eval(b), true);
    case Kind::mul: return param_combine(kids[0].eval(b), kids[1].eval(b), false);
    case Kind::scale: return param_combine(kids[0].eval(b), konst, false);
  }
  throw std::logic_error("unreachable");
}

Diagram Pattern::instantiate(const Bindings& b) const {
  Diagram d(calc);
  d.set_boundary(n_in, n_out);
  for (const PatNode& pn : nodes) {
    Node n;
    n.kind = pn.kind;
    n.n_in = pn.n_in;
    n.m_out = pn.m_out;
    if (pn.phase) n.phase = pn.phase->eval(b);
    if (pn.param) n.param = pn.param->eval(b);
    d.add_node(n);
  }
  for (const Wire& w : wires) d.add_wire(w.a, w.b);
  d.sort_wires();
  return d;
}

Pattern Pattern::from_diagram(const Diagram& d) {
  Pattern p;
  p.calc = d.calculus();
  p.n_in = d.num_inputs();
  p.n_out = d.num_outputs();
  for (const Node& n : d.nodes()) {
    PatNode pn;
    pn.kind = n.kind;
    pn.n_in = n.n_in;
    pn.m_out = n.m_out;
    if (n.phase) pn.phase = PhaseExpr::constant(*n.phase);
    if (n.param) pn.param = ParamExpr::constant(*n.param);
    p.nodes.push_back(std::move(pn));
  }
  p.wires = d.wires();
  return p;
}

const RewriteRule* RuleLibrary::find(const std::string& rule_name) const {
  for (const auto& r : rules) {
    if (r.name == rule_name) return &r;
  }
  return nullptr;
}

std::pair<Diagram, Diagram> instantiate(const RewriteRule& rule,
                                        const std::vector<int>& arities,
                                        const Bindings& b) {
  auto [lhs, rhs] = rule.make(arities);
  return {lhs.instantiate(b), rhs.instantiate(b)};
}

// ---------------------------------------------------------------------------
// Pattern-building helpers
// ---------------------------------------------------------------------------

namespace {

using PE = PhaseExpr;
using XE = ParamExpr;

PatNode pzsp(std::int32_t n, std::int32_t m, PE e) {
  return {NodeKind::z_spider, n, m, std::move(e), std::nullopt};
}
PatNode pxsp(std::int32_t n, std::int32_t m, PE e) {
  return {NodeKind::x_spider, n, m, std::move(e), std::nullopt};
}
PatNode phad() { return {NodeKind::hadamard, 1, 1, std::nullopt, std::nullopt}; }
PatNode pground() { return {NodeKind::ground, 1, 0, std::nullopt, std::nullopt}; }
PatNode pznode(std::int32_t n, std::int32_t m, XE e) {
  return {NodeKind::z_node, n, m, std::nullopt, std::move(e)};
}
PatNode pwnode(std::int32_t n, std::int32_t m) {
  return {NodeKind::w_node, n, m, std::nullopt, std::nullopt};
}
PatNode pfswap() { return {NodeKind::fswap, 2, 2, std::nullopt, std::nullopt}; }
PatNode pzhz(std::int32_t n, std::int32_t m) {
  return {NodeKind::zh_z, n, m, std::nullopt, std::nullopt};
}
PatNode pzhx(std::int32_t n, std::int32_t m) {
  return {NodeKind::zh_x, n, m, std::nullopt, std::nullopt};
}
PatNode phbox(std::int32_t n, std::int32_t m, XE e) {
  return {NodeKind::h_box, n, m, std::nullopt, std::move(e)};
}
PatNode pnot() { return {NodeKind::not_node, 1, 1, std::nullopt, std::nullopt}; }

PE pc(const Phase& p) { return PE::constant(p); }

// Closed scalar gadgets.
void add_zx_sqrt2_phase(Pattern* p, PE alpha) {
  const auto zs = p->add_node(pzsp(0, 1, std::move(alpha)));
  const auto xe = p->add_node(pxsp(1, 0, pc(Phase::pi())));
  p->add_wire(PortRef::out(zs, 0), PortRef::in(xe, 0));
}

void add_zx_inv_sqrt2(Pattern* p) {
  const auto st = p->add_node(pzsp(0, 3, pc(Phase::zero())));
  const auto ef = p->add_node(pzsp(3, 0, pc(Phase::zero())));
  for (std::int32_t i = 0; i < 3; ++i) {
    const auto hd = p->add_node(phad());
    p->add_wire(PortRef::out(st, i), PortRef::in(hd, 0));
    p->add_wire(PortRef::out(hd, 0), PortRef::in(ef, i));
  }
}

void add_circle(Pattern* p, Calculus c) {
  const Node id = identity_node(c);
  PatNode pn;
  pn.kind = id.kind;
  pn.n_in = 1;
  pn.m_out = 1;
  if (id.phase) pn.phase = pc(*id.phase);
  if (id.param) pn.param = XE::constant(*id.param);
  const auto n = p->add_node(std::move(pn));
  p->add_wire(PortRef::in(n, 0), PortRef::out(n, 0));
}

void add_zw_scalar(Pattern* p, XE r) {
  const auto st = p->add_node(pznode(0, 1, std::move(r)));
  const auto ef = p->add_node(pwnode(1, 0));
  p->add_wire(PortRef::out(st, 0), PortRef::in(ef, 0));
}

Pattern empty_pattern(Calculus c) {
  Pattern p;
  p.calc = c;
  return p;
}

Pattern wire_pattern(Calculus c, std::int32_t n) {
  Pattern p;
  p.calc = c;
  p.n_in = n;
  p.n_out = n;
  for (std::int32_t i = 0; i < n; ++i) p.add_wire(PortRef::bin(i), PortRef::bout(i));
  return p;
}

Pattern single(Calculus c, PatNode n) {
  Pattern p;
  p.calc = c;
  p.n_in = n.n_in;
  p.n_out = n.m_out;
  const auto id = p.add_node(std::move(n));
  for (std::int32_t i = 0; i < p.n_in; ++i) p.add_wire(PortRef::bin(i), PortRef::in(id, i));
  for (std::int32_t j = 0; j < p.n_out; ++j) {
    p.add_wire(PortRef::out(id, j), PortRef::bout(j));
  }
  return p;
}

// Chains unary pattern nodes left to right: first element is applied first.
Pattern chain(Calculus c, std::vector<PatNode> ns) {
  Pattern p;
  p.calc = c;
  p.n_in = 1;
  p.n_out = 1;
  std::int32_t prev = -1;
  for (auto& n : ns) {
    const auto id = p.add_node(std::move(n));
    if (prev < 0) {
      p.add_wire(PortRef::bin(0), PortRef::in(id, 0));
    } else {
      p.add_wire(PortRef::out(prev, 0), PortRef::in(id, 0));
    }
    prev = id;
  }
  p.add_wire(PortRef::out(prev, 0), PortRef::bout(0));
  return p;
}

RewriteRule rule(std::string name, Calculus c, SemanticsMode mode,
                 std::vector<PhaseSlot> phases, std::vector<ParamSlot> params,
                 std::vector<AritySlot> arities,
                 std::function<std::pair<Pattern, Pattern>(const std::vector<int>&)> make,
                 bool provisional = false, std::string note = "") {
  RewriteRule r;
  r.name = std::move(name);
  r.calc = c;
  r.mode = mode;
  r.provisional = provisional;
  r.note = std::move(note);
  r.phase_slots = std::move(phases);
  r.param_slots = std::move(params);
  r.arity_slots = std::move(arities);
  r.make = std::move(make);
  return r;
}

PhaseSlot anyphase(std::string n) { return {std::move(n), PhaseSlot::Domain::any}; }
PhaseSlot pi2phase(std::string n) { return {std::move(n), PhaseSlot::Domain::pi2}; }
PhaseSlot boolphase(std::string n) { return {std::move(n), PhaseSlot::Domain::boolean_pi}; }
ParamSlot anyparam(std::string n) { return {std::move(n), ParamSlot::Domain::any}; }

// ---------------------------------------------------------------------------
// ZX rules
// ---------------------------------------------------------------------------

// Two connected spiders of the same colour fuse, adding phases.
std::pair<Pattern, Pattern> make_fusion(Calculus calc, NodeKind kind, bool with_phase,
                                        const std::vector<int>& ar) {
  const std::int32_t a = ar[0], b = ar[1], c = ar[2], d = ar[3], j = ar[4];
  auto node = [&](std::int32_t n, std::int32_t m, PE e) {
    PatNode pn;
    pn.kind = kind;
    pn.n_in = n;
    pn.m_out = m;
    if (with_phase) pn.phase = std::move(e);
    if (kind == NodeKind::z_node) {
      // ZW spiders multiply parameters instead of adding phases.
      pn.param = XE::constant(ScalarParam::integer(1));
    }
    return pn;
  };
  Pattern lhs;
  lhs.calc = calc;
  lhs.n_in = a + c;
  lhs.n_out = b + d;
  const auto n0 = lhs.add_node(node(a, b + j, PE::var(0)));
  const auto n1 = lhs.add_node(node(j + c, d, PE::var(1)));
  for (std::int32_t t = 0; t < j; ++t) {
    lhs.add_wire(PortRef::out(n0, b + t), PortRef::in(n1, t));
  }
  for (std::int32_t i = 0; i < a; ++i) lhs.add_wire(PortRef::bin(i), PortRef::in(n0, i));
  for (std::int32_t i = 0; i < c; ++i) {
    lhs.add_wire(PortRef::bin(a + i), PortRef::in(n1, j + i));
  }
  for (std::int32_t o = 0; o < b; ++o) lhs.add_wire(PortRef::out(n0, o), PortRef::bout(o));
  for (std::int32_t o = 0; o < d; ++o) {
    lhs.add_wire(PortRef::out(n1, o), PortRef::bout(b + o));
  }
  auto group = [](std::int32_t from, std::int32_t count) {
    std::vector<std::int32_t> g;
    for (std::int32_t i = 0; i < count; ++i) g.push_back(from + i);
    return g;
  };
  lhs.symmetric_boundary_groups = {group(0, a), group(a, c), group(a + c, b),
                                   group(a + c + b, d)};

  PE sum = PE::var(0);
  sum.terms.emplace_back(1, 1);
  Pattern rhs = single(calc, node(a + c, b + d, std::move(sum)));
  return {std::move(lhs), std::move(rhs)};
}

// ZW fusion: same wiring, parameters multiply.
std::pair<Pattern, Pattern> make_zw_fusion(const std::vector<int>& ar) {
  auto [lhs, rhs] = make_fusion(Calculus::zw, NodeKind::z_node, false, ar);
  lhs.nodes[0].param = XE::var_ref(0);
  lhs.nodes[1].param = XE::var_ref(1);
  rhs.nodes[0].param = XE::mul(XE::var_ref(0), XE::var_ref(1));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Pattern, Pattern> make_zh_fusion(const std::vector<int>& ar) {
  return make_fusion(Calculus::zh, NodeKind::zh_z, false, ar);
}

std::vector<RewriteRule> zx_common_rules(bool pi2) {
  auto dom = [&](std::string n) { return pi2 ? pi2phase(std::move(n)) : anyphase(std::move(n)); };
  std::vector<RewriteRule> rules;

  rules.push_back(rule(
      "s1", Calculus::zx, SemanticsMode::pure, {dom("alpha"), dom("beta")}, {},
      {{"a", 0, 2}, {"b", 0, 2}, {"c", 0, 2}, {"d", 0, 2}, {"j", 1, 2}},
      [](const std::vector<int>& ar) {
        return make_fusion(Calculus::zx, NodeKind::z_spider, true, ar);
      }));
  rules.push_back(rule(
      "s1x", Calculus::zx, SemanticsMode::pure, {dom("alpha"), dom("beta")}, {},
      {{"a", 0, 2}, {"b", 0, 2}, {"c", 0, 2}, {"d", 0, 2}, {"j", 1, 2}},
      [](const std::vector<int>& ar) {
        return make_fusion(Calculus::zx, NodeKind::x_spider, true, ar);
      }));

  rules.push_back(rule("s2", Calculus::zx, SemanticsMode::pure, {}, {}, {},
                       [](const std::vector<int>&) {
                         return std::pair(chain(Calculus::zx, {pzsp(1, 1, pc(Phase::zero()))}),
                                          wire_pattern(Calculus::zx, 1));
                       }));
  rules.push_back(rule("s2x", Calculus::zx, SemanticsMode::pure, {}, {}, {},
                       [](const std::vector<int>&) {
                         return std::pair(chain(Calculus::zx, {pxsp(1, 1, pc(Phase::zero()))}),
                                          wire_pattern(Calculus::zx, 1));
                       }));
  rules.push_back(rule("h2", Calculus::zx, SemanticsMode::pure, {}, {}, {},
                       [](const std::vector<int>&) {
                         return std::pair(chain(Calculus::zx, {phad(), phad()}),
                                          wire_pattern(Calculus::zx, 1));
                       }));

  // Copy: an X pi-multiple state copies through a Z spider; each extra copy
  // costs a sqrt(2).
  rules.push_back(rule(
      "b1", Calculus::zx, SemanticsMode::pure, {boolphase("k")}, {}, {{"m", 1, 3}},
      [](const std::vector<int>& ar) {
        const std::int32_t m = ar[0];
        Pattern lhs;
        lhs.calc = Calculus::zx;
        lhs.n_out = m;
        const auto st = lhs.add_node(pxsp(0, 1, PE::var(0)));
        const auto zc = lhs.add_node(pzsp(1, m, pc(Phase::zero())));
        lhs.add_wire(PortRef::out(st, 0), PortRef::in(zc, 0));
        for (std::int32_t o = 0; o < m; ++o) {
          lhs.add_wire(PortRef::out(zc, o), PortRef::bout(o));
        }
        for (std::int32_t g = 0; g + 1 < m; ++g) add_zx_sqrt2_phase(&lhs, pc(Phase::zero()));
        std::vector<std::int32_t> outs;
        for (std::int32_t o = 0; o < m; ++o) outs.push_back(o);
        lhs.symmetric_boundary_groups = {outs};

        Pattern rhs;
        rhs.calc = Calculus::zx;
        rhs.n_out = m;
        for (std::int32_t o = 0; o < m; ++o) {
          const auto s = rhs.add_node(pxsp(0, 1, PE::var(0)));
          rhs.add_wire(PortRef::out(s, 0), PortRef::bout(o));
        }
        return std::pair(std::move(lhs), std::move(rhs));
      }));

  // Bialgebra; the complete bipartite side carries a sqrt(2).
  rules.push_back(rule(
      "b2", Calculus::zx, SemanticsMode::pure, {}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs;
        lhs.calc = Calculus::zx;
        lhs.n_in = 2;
        lhs.n_out = 2;
        const auto z1 = lhs.add_node(pzsp(1, 2, pc(Phase::zero())));
        const auto z2 = lhs.add_node(pzsp(1, 2, pc(Phase::zero())));
        const auto x1 = lhs.add_node(pxsp(2, 1, pc(Phase::zero())));
        const auto x2 = lhs.add_node(pxsp(2, 1, pc(Phase::zero())));
        lhs.add_wire(PortRef::bin(0), PortRef::in(z1, 0));
        lhs.add_wire(PortRef::bin(1), PortRef::in(z2, 0));
        lhs.add_wire(PortRef::out(z1, 0), PortRef::in(x1, 0));
        lhs.add_wire(PortRef::out(z1, 1), PortRef::in(x2, 0));
        lhs.add_wire(PortRef::out(z2, 0), PortRef::in(x1, 1));
        lhs.add_wire(PortRef::out(z2, 1), PortRef::in(x2, 1));
        lhs.add_wire(PortRef::out(x1, 0), PortRef::bout(0));
        lhs.add_wire(PortRef::out(x2, 0), PortRef::bout(1));
        add_zx_sqrt2_phase(&lhs, pc(Phase::zero()));

        Pattern rhs;
        rhs.calc = Calculus::zx;
        rhs.n_in = 2;
        rhs.n_out = 2;
        const auto xm = rhs.add_node(pxsp(2, 1, pc(Phase::zero())));
        const auto zc = rhs.add_node(pzsp(1, 2, pc(Phase::zero())));
        rhs.add_wire(PortRef::bin(0), PortRef::in(xm, 0));
        rhs.add_wire(PortRef::bin(1), PortRef::in(xm, 1));
        rhs.add_wire(PortRef::out(xm, 0), PortRef::in(zc, 0));
        rhs.add_wire(PortRef::out(zc, 0), PortRef::bout(0));
        rhs.add_wire(PortRef::out(zc, 1), PortRef::bout(1));
        return std::pair(std::move(lhs), std::move(rhs));
      }));

  // Euler decomposition of H, scalar-exact.
  rules.push_back(rule(
      "eu", Calculus::zx, SemanticsMode::pure, {}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs = chain(Calculus::zx, {phad()});
        add_zx_sqrt2_phase(&lhs, pc(Phase::pi4(1)));
        Pattern rhs = chain(Calculus::zx, {pzsp(1, 1, pc(Phase::pi2(1))),
                                           pxsp(1, 1, pc(Phase::pi2(1))),
                                           pzsp(1, 1, pc(Phase::pi2(1)))});
        add_zx_sqrt2_phase(&rhs, pc(Phase::zero()));
        return std::pair(std::move(lhs), std::move(rhs));
      }));
  return rules;
}

std::vector<RewriteRule> zx_full_rules() {
  std::vector<RewriteRule> rules = zx_common_rules(/*pi2=*/false);

  // The pi/4 bicolor scalar pair is the empty diagram.
  rules.push_back(rule(
      "e", Calculus::zx, SemanticsMode::pure, {}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs = empty_pattern(Calculus::zx);
        const auto zs = lhs.add_node(pzsp(0, 1, pc(Phase::pi4(1))));
        const auto xe = lhs.add_node(pxsp(1, 0, pc(Phase::pi4(-1))));
        lhs.add_wire(PortRef::out(zs, 0), PortRef::in(xe, 0));
        return std::pair(std::move(lhs), empty_pattern(Calculus::zx));
      }));

  // pi-commutation, scalar-exact.
  rules.push_back(rule(
      "k2", Calculus::zx, SemanticsMode::pure, {anyphase("alpha")}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs = chain(Calculus::zx,
                            {pzsp(1, 1, PE::var(0)), pxsp(1, 1, pc(Phase::pi()))});
        add_zx_sqrt2_phase(&lhs, pc(Phase::zero()));
        Pattern rhs = chain(Calculus::zx,
                            {pxsp(1, 1, pc(Phase::pi())), pzsp(1, 1, PE::var(0, -1))});
        add_zx_sqrt2_phase(&rhs, PE::var(0));
        return std::pair(std::move(lhs), std::move(rhs));
      }));

  // Supplementarity: antipodal phase pair on a copied wire.
  rules.push_back(rule(
      "sup", Calculus::zx, SemanticsMode::pure, {anyphase("alpha")}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs;
        lhs.calc = Calculus::zx;
        lhs.n_in = 1;
        const auto zc = lhs.add_node(pzsp(1, 2, pc(Phase::zero())));
        const auto e1 = lhs.add_node(pzsp(1, 0, PE::var(0)));
        const auto e2 = lhs.add_node(pzsp(1, 0, PE::var(0).plus(Phase::pi())));
        lhs.add_wire(PortRef::bin(0), PortRef::in(zc, 0));
        lhs.add_wire(PortRef::out(zc, 0), PortRef::in(e1, 0));
        lhs.add_wire(PortRef::out(zc, 1), PortRef::in(e2, 0));

        PE twice = PE{{{0, 2}}, Phase::pi()};
        Pattern rhs = single(Calculus::zx, pzsp(1, 0, std::move(twice)));
        return std::pair(std::move(lhs), std::move(rhs));
      },
      /*provisional=*/true, "figure transcription uncertain; verified semantically"));

  // Hopf-style disconnection, scalar-exact.
  rules.push_back(rule(
      "hopf", Calculus::zx, SemanticsMode::pure, {}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs;
        lhs.calc = Calculus::zx;
        lhs.n_in = 1;
        lhs.n_out = 1;
        const auto zc = lhs.add_node(pzsp(1, 2, pc(Phase::zero())));
        const auto xm = lhs.add_node(pxsp(2, 1, pc(Phase::zero())));
        lhs.add_wire(PortRef::bin(0), PortRef::in(zc, 0));
        lhs.add_wire(PortRef::out(zc, 0), PortRef::in(xm, 0));
        lhs.add_wire(PortRef::out(zc, 1), PortRef::in(xm, 1));
        lhs.add_wire(PortRef::out(xm, 0), PortRef::bout(0));
        add_circle(&lhs, Calculus::zx);

        Pattern rhs;
        rhs.calc = Calculus::zx;
        rhs.n_in = 1;
        rhs.n_out = 1;
        const auto ze = rhs.add_node(pzsp(1, 0, pc(Phase::zero())));
        const auto xs = rhs.add_node(pxsp(0, 1, pc(Phase::zero())));
        rhs.add_wire(PortRef::bin(0), PortRef::in(ze, 0));
        rhs.add_wire(PortRef::out(xs, 0), PortRef::bout(0));
        return std::pair(std::move(lhs), std::move(rhs));
      },
      /*provisional=*/true, "figure transcription uncertain; verified semantically"));

  // Adjacent controlled-Z gates commute (scalar-free cores on both sides).
  rules.push_back(rule(
      "czc", Calculus::zx, SemanticsMode::pure, {}, {}, {},
      [](const std::vector<int>&) {
        auto build = [](bool first_then_second) {
          Pattern p;
          p.calc = Calculus::zx;
          p.n_in = 3;
          p.n_out = 3;
          // cz on wires (0,1): za, zb; cz on wires (1,2): zc, zd.
          const auto za = p.add_node(pzsp(1, 2, pc(Phase::zero())));
          const auto zb = p.add_node(pzsp(1, 2, pc(Phase::zero())));
          const auto zc = p.add_node(pzsp(1, 2, pc(Phase::zero())));
          const auto zd = p.add_node(pzsp(1, 2, pc(Phase::zero())));
          const auto h1 = p.add_node(phad());
          const auto h2 = p.add_node(phad());
          p.add_wire(PortRef::out(za, 1), PortRef::in(h1, 0));
          p.add_wire(PortRef::out(h1, 0), PortRef::out(zb, 1));
          p.add_wire(PortRef::out(zc, 1), PortRef::in(h2, 0));
          p.add_wire(PortRef::out(h2, 0), PortRef::out(zd, 1));
          p.add_wire(PortRef::bin(0), PortRef::in(za, 0));
          p.add_wire(PortRef::out(za, 0), PortRef::bout(0));
          p.add_wire(PortRef::bin(2), PortRef::in(zd, 0));
          p.add_wire(PortRef::out(zd, 0), PortRef::bout(2));
          if (first_then_second) {
            p.add_wire(PortRef::bin(1), PortRef::in(zb, 0));
            p.add_wire(PortRef::out(zb, 0), PortRef::in(zc, 0));
            p.add_wire(PortRef::out(zc, 0), PortRef::bout(1));
          } else {
            p.add_wire(PortRef::bin(1), PortRef::in(zc, 0));
            p.add_wire(PortRef::out(zc, 0), PortRef::in(zb, 0));
            p.add_wire(PortRef::out(zb, 0), PortRef::bout(1));
          }
          return p;
        };
        return std::pair(build(true), build(false));
      },
      /*provisional=*/true, "figure transcription uncertain; verified semantically"));
  return rules;
}

std::vector<RewriteRule> zx_pi2_rules() {
  std::vector<RewriteRule> rules = zx_common_rules(/*pi2=*/true);

  // (IV): a pi/2 phase loop through two Hadamards is the empty diagram.
  rules.push_back(rule(
      "iv", Calculus::zx, SemanticsMode::pure, {}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs = empty_pattern(Calculus::zx);
        const auto z1 = lhs.add_node(pzsp(1, 1, pc(Phase::pi2(1))));
        const auto h1 = lhs.add_node(phad());
        const auto z2 = lhs.add_node(pzsp(1, 1, pc(Phase::pi2(-1))));
        const auto h2 = lhs.add_node(phad());
        lhs.add_wire(PortRef::out(z1, 0), PortRef::in(h1, 0));
        lhs.add_wire(PortRef::out(h1, 0), PortRef::in(z2, 0));
        lhs.add_wire(PortRef::out(z2, 0), PortRef::in(h2, 0));
        lhs.add_wire(PortRef::out(h2, 0), PortRef::in(z1, 0));
        return std::pair(std::move(lhs), empty_pattern(Calculus::zx));
      }));

  // The zero scalar absorbs any other spider scalar.
  rules.push_back(rule(
      "zero", Calculus::zx, SemanticsMode::pure, {pi2phase("alpha")}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs = empty_pattern(Calculus::zx);
        lhs.add_node(pzsp(0, 0, pc(Phase::pi())));
        lhs.add_node(pzsp(0, 0, PE::var(0)));
        Pattern rhs = empty_pattern(Calculus::zx);
        rhs.add_node(pzsp(0, 0, pc(Phase::pi())));
        return std::pair(std::move(lhs), std::move(rhs));
      }));
  return rules;
}

// ---------------------------------------------------------------------------
// ZW rules
// ---------------------------------------------------------------------------

std::vector<RewriteRule> zw_rules() {
  std::vector<RewriteRule> rules;

  rules.push_back(rule("zs", Calculus::zw, SemanticsMode::pure, {},
                       {anyparam("r"), anyparam("s")},
                       {{"a", 0, 2}, {"b", 0, 2}, {"c", 0, 2}, {"d", 0, 2}, {"j", 1, 2}},
                       make_zw_fusion));

  rules.push_back(rule(
      "zloop", Calculus::zw, SemanticsMode::pure, {}, {anyparam("r")},
      {{"a", 0, 2}, {"b", 0, 2}},
      [](const std::vector<int>& ar) {
        const std::int32_t a = ar[0], b = ar[1];
        Pattern lhs;
        lhs.calc = Calculus::zw;
        lhs.n_in = a;
        lhs.n_out = b;
        const auto z = lhs.add_node(pznode(a, b + 2, XE::var_ref(0)));
        for (std::int32_t i = 0; i < a; ++i) lhs.add_wire(PortRef::bin(i), PortRef::in(z, i));
        for (std::int32_t o = 0; o < b; ++o) {
          lhs.add_wire(PortRef::out(z, o), PortRef::bout(o));
        }
        lhs.add_wire(PortRef::out(z, b), PortRef::out(z, b + 1));
        Pattern rhs = single(Calculus::zw, pznode(a, b, XE::var_ref(0)));
        return std::pair(std::move(lhs), std::move(rhs));
      }));

  // Addition of Z parameters through a W pair.
  rules.push_back(rule(
      "plus", Calculus::zw, SemanticsMode::pure, {}, {anyparam("r"), anyparam("s")}, {},
      [](const std::vector<int>&) {
        Pattern lhs;
        lhs.calc = Calculus::zw;
        lhs.n_in = 1;
        lhs.n_out = 1;
        const auto sp = lhs.add_node(pwnode(1, 2));
        const auto z1 = lhs.add_node(pznode(1, 1, XE::var_ref(0)));
        const auto z2 = lhs.add_node(pznode(1, 1, XE::var_ref(1)));
        const auto mg = lhs.add_node(pwnode(2, 1));
        lhs.add_wire(PortRef::bin(0), PortRef::in(sp, 0));
        lhs.add_wire(PortRef::out(sp, 0), PortRef::in(z1, 0));
        lhs.add_wire(PortRef::out(sp, 1), PortRef::in(z2, 0));
        lhs.add_wire(PortRef::out(z1, 0), PortRef::in(mg, 0));
        lhs.add_wire(PortRef::out(z2, 0), PortRef::in(mg, 1));
        lhs.add_wire(PortRef::out(mg, 0), PortRef::bout(0));

        Pattern rhs = chain(Calculus::zw,
                            {pwnode(1, 1),
                             pznode(1, 1, XE::add(XE::var_ref(0), XE::var_ref(1))),
                             pwnode(1, 1)});
        return std::pair(std::move(lhs), std::move(rhs));
      }));

  rules.push_back(rule("fswap-invol", Calculus::zw, SemanticsMode::pure, {}, {}, {},
                       [](const std::vector<int>&) {
                         Pattern lhs;
                         lhs.calc = Calculus::zw;
                         lhs.n_in = 2;
                         lhs.n_out = 2;
                         const auto f1 = lhs.add_node(pfswap());
                         const auto f2 = lhs.add_node(pfswap());
                         lhs.add_wire(PortRef::bin(0), PortRef::in(f1, 0));
                         lhs.add_wire(PortRef::bin(1), PortRef::in(f1, 1));
                         lhs.add_wire(PortRef::out(f1, 0), PortRef::in(f2, 0));
                         lhs.add_wire(PortRef::out(f1, 1), PortRef::in(f2, 1));
                         lhs.add_wire(PortRef::out(f2, 0), PortRef::bout(0));
                         lhs.add_wire(PortRef::out(f2, 1), PortRef::bout(1));
                         return std::pair(std::move(lhs), wire_pattern(Calculus::zw, 2));
                       }));

  // Yang-Baxter for the fermionic crossing.
  rules.push_back(rule(
      "fswap-yb", Calculus::zw, SemanticsMode::pure, {}, {}, {},
      [](const std::vector<int>&) {
        auto make_side = [](bool left_first) {
          Pattern p;
          p.calc = Calculus::zw;
          p.n_in = 3;
          p.n_out = 3;
          const auto f1 = p.add_node(pfswap());
          const auto f2 = p.add_node(pfswap());
          const auto f3 = p.add_node(pfswap());
          if (left_first) {
            // f1 on (0,1), f2 on (1,2), f3 on (0,1)
            p.add_wire(PortRef::bin(0), PortRef::in(f1, 0));
            p.add_wire(PortRef::bin(1), PortRef::in(f1, 1));
            p.add_wire(PortRef::bin(2), PortRef::in(f2, 1));
            p.add_wire(PortRef::out(f1, 1), PortRef::in(f2, 0));
            p.add_wire(PortRef::out(f1, 0), PortRef::in(f3, 0));
            p.add_wire(PortRef::out(f2, 0), PortRef::in(f3, 1));
            p.add_wire(PortRef::out(f3, 0), PortRef::bout(0));
            p.add_wire(PortRef::out(f3, 1), PortRef::bout(1));
            p.add_wire(PortRef::out(f2, 1), PortRef::bout(2));
          } else {
            // f1 on (1,2), f2 on (0,1), f3 on (1,2)
            p.add_wire(PortRef::bin(1), PortRef::in(f1, 0));
            p.add_wire(PortRef::bin(2), PortRef::in(f1, 1));
            p.add_wire(PortRef::bin(0), PortRef::in(f2, 0));
            p.add_wire(PortRef::out(f1, 0), PortRef::in(f2, 1));
            p.add_wire(PortRef::out(f2, 1), PortRef::in(f3, 0));
            p.add_wire(PortRef::out(f1, 1), PortRef::in(f3, 1));
            p.add_wire(PortRef::out(f2, 0), PortRef::bout(0));
            p.add_wire(PortRef::out(f3, 0), PortRef::bout(1));
            p.add_wire(PortRef::out(f3, 1), PortRef::bout(2));
          }
          return p;
        };
        return std::pair(make_side(true), make_side(false));
      },
      /*provisional=*/true, "braid-free reading of the crossing rules"));

  rules.push_back(rule("fswap-w", Calculus::zw, SemanticsMode::pure, {}, {}, {},
                       [](const std::vector<int>&) {
                         Pattern lhs;
                         lhs.calc = Calculus::zw;
                         lhs.n_in = 2;
                         lhs.n_out = 1;
                         const auto f = lhs.add_node(pfswap());
                         const auto w = lhs.add_node(pwnode(2, 1));
                         lhs.add_wire(PortRef::bin(0), PortRef::in(f, 0));
                         lhs.add_wire(PortRef::bin(1), PortRef::in(f, 1));
                         lhs.add_wire(PortRef::out(f, 0), PortRef::in(w, 0));
                         lhs.add_wire(PortRef::out(f, 1), PortRef::in(w, 1));
                         lhs.add_wire(PortRef::out(w, 0), PortRef::bout(0));
                         return std::pair(std::move(lhs),
                                          single(Calculus::zw, pwnode(2, 1)));
                       }));

  // Fermionic swap is natural on Z diagonals.
  rules.push_back(rule(
      "fswap-z", Calculus::zw, SemanticsMode::pure, {}, {anyparam("r"), anyparam("s")}, {},
      [](const std::vector<int>&) {
        auto build = [](bool z_first) {
          Pattern p;
          p.calc = Calculus::zw;
          p.n_in = 2;
          p.n_out = 2;
          const auto za = p.add_node(pznode(1, 1, XE::var_ref(z_first ? 0 : 1)));
          const auto zb = p.add_node(pznode(1, 1, XE::var_ref(z_first ? 1 : 0)));
          const auto f = p.add_node(pfswap());
          if (z_first) {
            p.add_wire(PortRef::bin(0), PortRef::in(za, 0));
            p.add_wire(PortRef::bin(1), PortRef::in(zb, 0));
            p.add_wire(PortRef::out(za, 0), PortRef::in(f, 0));
            p.add_wire(PortRef::out(zb, 0), PortRef::in(f, 1));
            p.add_wire(PortRef::out(f, 0), PortRef::bout(0));
            p.add_wire(PortRef::out(f, 1), PortRef::bout(1));
          } else {
            p.add_wire(PortRef::bin(0), PortRef::in(f, 0));
            p.add_wire(PortRef::bin(1), PortRef::in(f, 1));
            p.add_wire(PortRef::out(f, 0), PortRef::in(za, 0));
            p.add_wire(PortRef::out(f, 1), PortRef::in(zb, 0));
            p.add_wire(PortRef::out(za, 0), PortRef::bout(0));
            p.add_wire(PortRef::out(zb, 0), PortRef::bout(1));
          }
          return p;
        };
        return std::pair(build(true), build(false));
      }));

  rules.push_back(rule("wcopy", Calculus::zw, SemanticsMode::pure, {}, {}, {},
                       [](const std::vector<int>&) {
                         Pattern lhs;
                         lhs.calc = Calculus::zw;
                         lhs.n_out = 2;
                         const auto k1 = lhs.add_node(pwnode(0, 1));
                         const auto sp = lhs.add_node(pwnode(1, 2));
                         lhs.add_wire(PortRef::out(k1, 0), PortRef::in(sp, 0));
                         lhs.add_wire(PortRef::out(sp, 0), PortRef::bout(0));
                         lhs.add_wire(PortRef::out(sp, 1), PortRef::bout(1));
                         Pattern rhs;
                         rhs.calc = Calculus::zw;
                         rhs.n_out = 2;
                         const auto a = rhs.add_node(pznode(0, 1, XE::constant(ScalarParam::integer(0))));
                         const auto b = rhs.add_node(pznode(0, 1, XE::constant(ScalarParam::integer(0))));
                         rhs.add_wire(PortRef::out(a, 0), PortRef::bout(0));
                         rhs.add_wire(PortRef::out(b, 0), PortRef::bout(1));
                         return std::pair(std::move(lhs), std::move(rhs));
                       }));

  rules.push_back(rule("wloop", Calculus::zw, SemanticsMode::pure, {}, {}, {},
                       [](const std::vector<int>&) {
                         Pattern lhs;
                         lhs.calc = Calculus::zw;
                         lhs.n_in = 1;
                         const auto w = lhs.add_node(pwnode(1, 2));
                         lhs.add_wire(PortRef::bin(0), PortRef::in(w, 0));
                         lhs.add_wire(PortRef::out(w, 0), PortRef::out(w, 1));
                         return std::pair(std::move(lhs),
                                          single(Calculus::zw, pwnode(1, 0)));
                       }));
  return rules;
}

// ---------------------------------------------------------------------------
// ZH rules
// ---------------------------------------------------------------------------

std::vector<RewriteRule> zh_rules() {
  std::vector<RewriteRule> rules;

  rules.push_back(rule("zs1", Calculus::zh, SemanticsMode::pure, {}, {},
                       {{"a", 0, 2}, {"b", 0, 2}, {"c", 0, 2}, {"d", 0, 2}, {"j", 1, 2}},
                       make_zh_fusion));

  rules.push_back(rule("zs2", Calculus::zh, SemanticsMode::pure, {}, {}, {},
                       [](const std::vector<int>&) {
                         return std::pair(chain(Calculus::zh, {pzhz(1, 1)}),
                                          wire_pattern(Calculus::zh, 1));
                       }));

  // Two default H-boxes cancel up to the scalar 2.
  rules.push_back(rule(
      "hs1", Calculus::zh, SemanticsMode::pure, {}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs = chain(Calculus::zh,
                            {phbox(1, 1, XE::constant(ScalarParam::integer(-1))),
                             phbox(1, 1, XE::constant(ScalarParam::integer(-1)))});
        Pattern rhs = wire_pattern(Calculus::zh, 1);
        rhs.add_node(pzhz(0, 0));  // the scalar 2
        return std::pair(std::move(lhs), std::move(rhs));
      }));

  // Z/X bialgebra with the explicit-1/2 convention; the bipartite side
  // carries 2 sqrt(2).
  rules.push_back(rule(
      "ba1", Calculus::zh, SemanticsMode::pure, {}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs;
        lhs.calc = Calculus::zh;
        lhs.n_in = 2;
        lhs.n_out = 2;
        const auto z1 = lhs.add_node(pzhz(1, 2));
        const auto z2 = lhs.add_node(pzhz(1, 2));
        const auto x1 = lhs.add_node(pzhx(2, 1));
        const auto x2 = lhs.add_node(pzhx(2, 1));
        lhs.add_wire(PortRef::bin(0), PortRef::in(z1, 0));
        lhs.add_wire(PortRef::bin(1), PortRef::in(z2, 0));
        lhs.add_wire(PortRef::out(z1, 0), PortRef::in(x1, 0));
        lhs.add_wire(PortRef::out(z1, 1), PortRef::in(x2, 0));
        lhs.add_wire(PortRef::out(z2, 0), PortRef::in(x1, 1));
        lhs.add_wire(PortRef::out(z2, 1), PortRef::in(x2, 1));
        lhs.add_wire(PortRef::out(x1, 0), PortRef::bout(0));
        lhs.add_wire(PortRef::out(x2, 0), PortRef::bout(1));
        lhs.add_node(pzhz(0, 0));  // 2
        lhs.add_node(phbox(0, 0, XE::constant(ScalarParam(ExactScalar::sqrt2()))));

        Pattern rhs;
        rhs.calc = Calculus::zh;
        rhs.n_in = 2;
        rhs.n_out = 2;
        const auto xm = rhs.add_node(pzhx(2, 1));
        const auto zc = rhs.add_node(pzhz(1, 2));
        rhs.add_wire(PortRef::bin(0), PortRef::in(xm, 0));
        rhs.add_wire(PortRef::bin(1), PortRef::in(xm, 1));
        rhs.add_wire(PortRef::out(xm, 0), PortRef::in(zc, 0));
        rhs.add_wire(PortRef::out(zc, 0), PortRef::bout(0));
        rhs.add_wire(PortRef::out(zc, 1), PortRef::bout(1));
        return std::pair(std::move(lhs), std::move(rhs));
      },
      /*provisional=*/true, "scalar balance fixed against the 1/2 convention"));

  // NOT as an H-box sandwich of the pi phase gadget.
  rules.push_back(rule(
      "n", Calculus::zh, SemanticsMode::pure, {}, {}, {},
      [](const std::vector<int>&) {
        Pattern lhs;
        lhs.calc = Calculus::zh;
        lhs.n_in = 1;
        lhs.n_out = 1;
        const auto h1 = lhs.add_node(phbox(1, 1, XE::constant(ScalarParam::integer(-1))));
        const auto zc = lhs.add_node(pzhz(1, 2));
        const auto ph = lhs.add_node(phbox(1, 0, XE::constant(ScalarParam::integer(-1))));
        const auto h2 = lhs.add_node(phbox(1, 1, XE::constant(ScalarParam::integer(-1))));
        lhs.add_wire(PortRef::bin(0), PortRef::in(h1, 0));
        lhs.add_wire(PortRef::out(h1, 0), PortRef::in(zc, 0));
        lhs.add_wire(PortRef::out(zc, 1), PortRef::in(ph, 0));
        lhs.add_wire(PortRef::out(zc, 0), PortRef::in(h2, 0));
        lhs.add_wire(PortRef::out(h2, 0), PortRef::bout(0));

        Pattern rhs = chain(Calculus::zh, {pnot()});
        rhs.add_node(pzhz(0, 0));  // 2
        return std::pair(std::move(lhs), std::move(rhs));
      }));

  // Parallel H-boxes between copy spiders multiply their parameters.
  rules.push_back(rule(
      "m", Calculus::zh, SemanticsMode::pure, {}, {anyparam("a"), anyparam("b")}, {},
      [](const std::vector<int>&) {
        Pattern lhs;
        lhs.calc = Calculus::zh;
        lhs.n_in = 1;
        lhs.n_out = 1;
        const auto sp = lhs.add_node(pzhz(1, 2));
        const auto ha = lhs.add_node(phbox(1, 1, XE::var_ref(0)));
        const auto hb = lhs.add_node(phbox(1, 1, XE::var_ref(1)));
        const auto mg = lhs.add_node(pzhz(2, 1));
        lhs.add_wire(PortRef::bin(0), PortRef::in(sp, 0));
        lhs.add_wire(PortRef::out(sp, 0), PortRef::in(ha, 0));
        lhs.add_wire(PortRef::out(sp, 1), PortRef::in(hb, 0));
        lhs.add_wire(PortRef::out(ha, 0), PortRef::in(mg, 0));
        lhs.add_wire(PortRef::out(hb, 0), PortRef::in(mg, 1));
        lhs.add_wire(PortRef::out(mg, 0), PortRef::bout(0));
        Pattern rhs =
            single(Calculus::zh, phbox(1, 1, XE::mul(XE::var_ref(0), XE::var_ref(1))));
        return std::pair(std::move(lhs), std::move(rhs));
      }));

  rules.push_back(rule("u", Calculus::zh, SemanticsMode::pure, {}, {}, {},
                       [](const std::vector<int>&) {
                         Pattern lhs = chain(Calculus::zh,
                                             {phbox(1, 1, XE::constant(ScalarParam::integer(1)))});
                         Pattern rhs;
                         rhs.calc = Calculus::zh;
                         rhs.n_in = 1;
                         rhs.n_out = 1;
                         const auto ef = rhs.add_node(pzhz(1, 0));
                         const auto st = rhs.add_node(pzhz(0, 1));
                         rhs.add_wire(PortRef::bin(0), PortRef::in(ef, 0));
                         rhs.add_wire(PortRef::out(st, 0), PortRef::bout(0));
                         return std::pair(std::move(lhs), std::move(rhs));
                       }));

  // The X effect absorbs any H-box state into the scalar 1/sqrt(2).
  rules.push_back(rule(
      "o", Calculus::zh, SemanticsMode::pure, {}, {anyparam("a")}, {},
      [](const std::vector<int>&) {
        Pattern lhs = empty_pattern(Calculus::zh);
        const auto st = lhs.add_node(phbox(0, 1, XE::var_ref(0)));
        const auto ef = lhs.add_node(pzhx(1, 0));
        lhs.add_wire(PortRef::out(st, 0), PortRef::in(ef, 0));
        Pattern rhs = empty_pattern(Calculus::zh);
        rhs.add_node(phbox(0, 0, XE::constant(ScalarParam(ExactScalar::inv_sqrt2()))));
        return std::pair(std::move(lhs), std::move(rhs));
      },
      /*provisional=*/true, "orthogonality-style rule, verified semantically"));

  // Phase gadgets fuse multiplicatively.
  rules.push_back(rule(
      "i", Calculus::zh, SemanticsMode::pure, {}, {anyparam("a"), anyparam("b")}, {},
      [](const std::vector<int>&) {
        auto gadget = [](Pattern* p, XE param, PortRef from, PortRef to) {
          const auto zc = p->add_node(pzhz(1, 2));
          const auto hb = p->add_node(phbox(1, 0, std::move(param)));
          p->add_wire(from, PortRef::in(zc, 0));
          p->add_wire(PortRef::out(zc, 1), PortRef::in(hb, 0));
          p->add_wire(PortRef::out(zc, 0), to);
        };
        Pattern lhs;
        lhs.calc = Calculus::zh;
        lhs.n_in = 1;
        lhs.n_out = 1;
        // gadget(a) then gadget(b), joined by an internal wire.
        const auto za = lhs.add_node(pzhz(1, 2));
        const auto hba = lhs.add_node(phbox(1, 0, XE::var_ref(0)));
        lhs.add_wire(PortRef::bin(0), PortRef::in(za, 0));
        lhs.add_wire(PortRef::out(za, 1), PortRef::in(hba, 0));
        const auto zb = lhs.add_node(pzhz(1, 2));
        const auto hbb = lhs.add_node(phbox(1, 0, XE::var_ref(1)));
        lhs.add_wire(PortRef::out(za, 0), PortRef::in(zb, 0));
        lhs.add_wire(PortRef::out(zb, 1), PortRef::in(hbb, 0));
        lhs.add_wire(PortRef::out(zb, 0), PortRef::bout(0));

        Pattern rhs;
        rhs.calc = Calculus::zh;
        rhs.n_in = 1;
        rhs.n_out = 1;
        gadget(&rhs, XE::mul(XE::var_ref(0), XE::var_ref(1)), PortRef::bin(0),
               PortRef::bout(0));
        return std::pair(std::move(lhs), std::move(rhs));
      }));
  return rules;
}

// ---------------------------------------------------------------------------
// Ground rule libraries: discard . g = discard for a spanning set of
// isometries g, verified in CPM semantics.
// ---------------------------------------------------------------------------

std::pair<Pattern, Pattern> ground_of(const Diagram& lhs, const Diagram& rhs) {
  return {Pattern::from_diagram(lhs), Pattern::from_diagram(rhs)};
}

std::vector<RewriteRule> zx_ground_rules() {
  std::vector<RewriteRule> rules;
  rules.push_back(rule("phase", Calculus::zx, SemanticsMode::cpm, {anyphase("alpha")}, {},
                       {},
                       [](const std::vector<int>&) {
                         Pattern lhs = empty_pattern(Calculus::zx);
                         add_zx_sqrt2_phase(&lhs, PE::var(0));
                         add_zx_inv_sqrt2(&lhs);
                         return std::pair(std::move(lhs), empty_pattern(Calculus::zx));
                       }));
  rules.push_back(rule("ket0", Calculus::zx, SemanticsMode::cpm, {}, {}, {},
                       [](const std::vector<int>&) {
                         return ground_of(compose(build::ground(1), build::ket0()),
                                          Diagram(Calculus::zx));
                       }));
  rules.push_back(rule("h", Calculus::zx, SemanticsMode::cpm, {}, {}, {},
                       [](const std::vector<int>&) {
                         return ground_of(compose(build::ground(1), build::h()),
                                          build::ground(1));
                       }));
  rules.push_back(rule(
      "rz", Calculus::zx, SemanticsMode::cpm, {anyphase("alpha")}, {}, {{"m", 1, 3}},
      [](const std::vector<int>& ar) {
        const std::int32_t m = ar[0];
        Pattern lhs;
        lhs.calc = Calculus::zx;
        lhs.n_in = 1;
        const auto z = lhs.add_node(pzsp(1, m, PE::var(0)));
        lhs.add_wire(PortRef::bin(0), PortRef::in(z, 0));
        for (std::int32_t o = 0; o < m; ++o) {
          const auto g = lhs.add_node(pground());
          lhs.add_wire(PortRef::out(z, o), PortRef::in(g, 0));
        }
        return std::pair(std::move(lhs), Pattern::from_diagram(build::ground(1)));
      }));
  rules.push_back(rule("cnot", Calculus::zx, SemanticsMode::cpm, {}, {}, {},
                       [](const std::vector<int>&) {
                         return ground_of(compose(build::ground(2), build::cnot()),
                                          build::ground(2));
                       }));
  return rules;
}

std::vector<RewriteRule> zw_ground_rules() {
  std::vector<RewriteRule> rules;
  rules.push_back(rule("phase", Calculus::zw, SemanticsMode::cpm, {anyphase("alpha")}, {},
                       {},
                       [](const std::vector<int>&) {
                         Pattern lhs = empty_pattern(Calculus::zw);
                         add_zw_scalar(&lhs, XE::unit_of_phase(0));
                         return std::pair(std::move(lhs), empty_pattern(Calculus::zw));
                       }));
  rules.push_back(rule("ket1", Calculus::zw, SemanticsMode::cpm, {}, {}, {},
                       [](const std::vector<int>&) {
                         return ground_of(
                             compose(build::ground(1, Calculus::zw), build::ket1(Calculus::zw)),
                             Diagram(Calculus::zw));
                       }));
  rules.push_back(rule(
      "rz", Calculus::zw, SemanticsMode::cpm, {anyphase("alpha")}, {}, {{"m", 1, 3}},
      [](const std::vector<int>& ar) {
        const std::int32_t m = ar[0];
        Pattern lhs;
        lhs.calc = Calculus::zw;
        lhs.n_in = 1;
        const auto z = lhs.add_node(pznode(1, m, XE::unit_of_phase(0)));
        lhs.add_wire(PortRef::bin(0), PortRef::in(z, 0));
        for (std::int32_t o = 0; o < m; ++o) {
          const auto g = lhs.add_node(pground());
          lhs.add_wire(PortRef::out(z, o), PortRef::in(g, 0));
        }
        return std::pair(std::move(lhs),
                         Pattern::from_diagram(build::ground(1, Calculus::zw)));
      }));
  rules.push_back(rule("h", Calculus::zw, SemanticsMode::cpm, {}, {}, {},
                       [](const std::vector<int>&) {
                         return ground_of(
                             compose(build::ground(1, Calculus::zw), build::h(Calculus::zw)),
                             build::ground(1, Calculus::zw));
                       }));
  rules.push_back(rule("fswap", Calculus::zw, SemanticsMode::cpm, {}, {}, {},
                       [](const std::vector<int>&) {
                         Diagram f = build::generator(
                             Calculus::zw, Node{NodeKind::fswap, 2, 2, std::nullopt,
                                                std::nullopt});
                         return ground_of(compose(build::ground(2, Calculus::zw), f),
                                          build::ground(2, Calculus::zw));
                       }));
  return rules;
}

std::vector<RewriteRule> zh_ground_rules() {
  std::vector<RewriteRule> rules;
  rules.push_back(rule("phase", Calculus::zh, SemanticsMode::cpm, {anyphase("alpha")}, {},
                       {},
                       [](const std::vector<int>&) {
                         Pattern lhs = empty_pattern(Calculus::zh);
                         lhs.add_node(phbox(0, 0, XE::unit_of_phase(0)));
                         return std::pair(std::move(lhs), empty_pattern(Calculus::zh));
                       }));
  rules.push_back(rule("ket0", Calculus::zh, SemanticsMode::cpm, {}, {}, {},
                       [](const std::vector<int>&) {
                         return ground_of(
                             compose(build::ground(1, Calculus::zh), build::ket0(Calculus::zh)),
                             Diagram(Calculus::zh));
                       }));
  rules.push_back(rule("h", Calculus::zh, SemanticsMode::cpm, {}, {}, {},
                       [](const std::vector<int>&) {
                         return ground_of(
                             compose(build::ground(1, Calculus::zh), build::h(Calculus::zh)),
                             build::ground(1, Calculus::zh));
                       }));
  rules.push_back(rule(
      "rz", Calculus::zh, SemanticsMode::cpm, {anyphase("alpha")}, {}, {{"m", 1, 3}},
      [](const std::vector<int>& ar) {
        const std::int32_t m = ar[0];
        Pattern lhs;
        lhs.calc = Calculus::zh;
        lhs.n_in = 1;
        const auto z = lhs.add_node(pzhz(1, m + 1));
        const auto ph = lhs.add_node(phbox(1, 0, XE::unit_of_phase(0)));
        lhs.add_wire(PortRef::bin(0), PortRef::in(z, 0));
        lhs.add_wire(PortRef::out(z, m), PortRef::in(ph, 0));
        for (std::int32_t o = 0; o < m; ++o) {
          const auto g = lhs.add_node(pground());
          lhs.add_wire(PortRef::out(z, o), PortRef::in(g, 0));
        }
        return std::pair(std::move(lhs),
                         Pattern::from_diagram(build::ground(1, Calculus::zh)));
      }));
  rules.push_back(rule("cz", Calculus::zh, SemanticsMode::cpm, {}, {}, {},
                       [](const std::vector<int>&) {
                         return ground_of(
                             compose(build::ground(2, Calculus::zh), build::cz(Calculus::zh)),
                             build::ground(2, Calculus::zh));
                       }));
  return rules;
}

RuleLibrary make_library(const std::string& name) {
  RuleLibrary lib;
  lib.name = name;
  if (name == "zx-full") {
    lib.description =
        "ZX axioms over all phases; scalar-exact forms, colour-swapped "
        "variants included where they are not graph-identities";
    lib.rules = zx_full_rules();
  } else if (name == "zx-pi2") {
    lib.description = "ZX axioms restricted to pi/2 multiples (stabilizer fragment)";
    lib.rules = zx_pi2_rules();
  } else if (name == "zw") {
    lib.description =
        "ZW axioms; W nodes follow the Hamming-weight-one reading assembled "
        "from the (1,1) and (1,2) tables; plain swaps are graph-identities";
    lib.rules = zw_rules();
  } else if (name == "zh") {
    lib.description = "ZH axioms under the explicit-1/2 X spider convention";
    lib.rules = zh_rules();
  } else if (name == "zx-ground") {
    lib.description =
        "discard axioms for ZX over the spanning isometries (phase, ket0, H, "
        "RZ fan-out, CNot), CPM semantics";
    lib.rules = zx_ground_rules();
  } else if (name == "zw-ground") {
    lib.description =
        "discard axioms for ZW over (phase, ket1, RZ, H, fermionic swap), "
        "CPM semantics";
    lib.rules = zw_ground_rules();
  } else if (name == "zh-ground") {
    lib.description =
        "discard axioms for ZH over (phase, ket0, H, RZ fan-out, CZ), CPM "
        "semantics";
    lib.rules = zh_ground_rules();
  } else {
    throw std::invalid_argument("unknown rule library: " + name);
  }
  return lib;
}

}  // namespace

const RuleLibrary& library(const std::string& name) {
  static const std::map<std::string, RuleLibrary> all = [] {
    std::map<std::string, RuleLibrary> m;
    for (const auto& n : library_names()) m.emplace(n, make_library(n));
    return m;
  }();
  const auto it = all.find(name);
  if (it == all.end()) throw std::invalid_argument("unknown rule library: " + name);
  return it->second;
}

std::vector<std::string> library_names() {
  return {"zx-full", "zx-pi2", "zw", "zh", "zx-ground", "zw-ground", "zh-ground"};
}

// ---------------------------------------------------------------------------
// Soundness verification
// ---------------------------------------------------------------------------

namespace {

std::vector<Phase> phase_grid(PhaseSlot::Domain d) {
  switch (d) {
    case PhaseSlot::Domain::any: {
      std::vector<Phase> g;
      for (int k = 0; k < 8; ++k) g.push_back(Phase::pi4(k));
      return g;
    }
    case PhaseSlot::Domain::pi2:
      return {Phase::pi2(0), Phase::pi2(1), Phase::pi2(2), Phase::pi2(3)};
    case PhaseSlot::Domain::boolean_pi:
      return {Phase::zero(), Phase::pi()};
  }
  return {};
}

std::vector<ScalarParam> param_grid(ParamSlot::Domain d) {
  if (d == ParamSlot::Domain::unit) {
    std::vector<ScalarParam> g;
    for (int k = 0; k < 8; ++k) g.push_back(ScalarParam(ExactScalar::omega_pow(k)));
    return g;
  }
  return {ScalarParam::integer(0),
          ScalarParam::integer(1),
          ScalarParam::integer(-1),
          ScalarParam(ExactScalar::i()),
          ScalarParam::integer(2),
          ScalarParam(ExactScalar::one() + ExactScalar::i()),
          ScalarParam(ExactScalar::inv_sqrt2())};
}

Phase random_phase(PhaseSlot::Domain d, std::mt19937_64& rng) {
  switch (d) {
    case PhaseSlot::Domain::any: {
      std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
      return Phase::radians(u(rng));
    }
    case PhaseSlot::Domain::pi2:
      return Phase::pi2(static_cast<std::int64_t>(rng() % 4));
    case PhaseSlot::Domain::boolean_pi:
      return rng() % 2 ? Phase::pi() : Phase::zero();
  }
  return Phase::zero();
}

ScalarParam random_param(ParamSlot::Domain d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  if (d == ParamSlot::Domain::unit) {
    std::uniform_real_distribution<double> a(0.0, 2.0 * std::numbers::pi);
    return ScalarParam(std::polar(1.0, a(rng)));
  }
  return ScalarParam(Complex{u(rng), u(rng)});
}

std::vector<std::vector<int>> arity_combos(const std::vector<AritySlot>& slots,
                                           int max_legs) {
  std::vector<std::vector<int>> combos{{}};
  for (const auto& s : slots) {
    const int hi = std::max(s.min, std::min(s.max, max_legs));
    std::vector<std::vector<int>> next;
    for (const auto& base : combos) {
      for (int v = s.min; v <= hi; ++v) {
        auto c = base;
        c.push_back(v);
        next.push_back(std::move(c));
      }
    }
    combos = std::move(next);
  }
  return combos;
}

struct Comparison {
  bool ok = false;
  bool exact = false;
  bool projective = false;
  double residual = 0.0;
  std::optional<Complex> factor;
};

Comparison compare_sides(const Diagram& lhs, const Diagram& rhs, SemanticsMode mode,
                         Backend backend, double tol) {
  Comparison c;
  if (mode == SemanticsMode::cpm) {
    const SuperOp a = interpret_cpm(lhs, backend);
    const SuperOp b = interpret_cpm(rhs, backend);
    if (backend == Backend::exact) {
      c.ok = c.exact = a.equal(b);
      if (!c.ok) c.residual = (a.to_float() - b.to_float()).cwiseAbs().maxCoeff();
    } else {
      const CMat am = a.to_float();
      const CMat bm = b.to_float();
      if (am.rows() != bm.rows() || am.cols() != bm.cols()) {
        c.ok = false;
        c.residual = 1.0;
        return c;
      }
      c.residual = (am - bm).cwiseAbs().maxCoeff();
      c.ok = c.residual <= tol;
    }
    return c;
  }
  const Tensor a = interp(lhs, backend);
  const Tensor b = interp(rhs, backend);
  if (backend == Backend::exact) {
    if (mat_equal(a.exact(), b.exact())) {
      c.ok = c.exact = true;
      return c;
    }
    if (auto lam = equal_up_to_global_phase(a.exact(), b.exact())) {
      c.ok = c.projective = true;
      c.factor = lam->to_complex();
      return c;
    }
    c.ok = false;
    c.residual = (a.to_float() - b.to_float()).cwiseAbs().maxCoeff();
    return c;
  }
  const CMat am = a.floating();
  const CMat bm = b.floating();
  if (am.rows() != bm.rows() || am.cols() != bm.cols()) {
    c.ok = false;
    c.residual = 1.0;
    return c;
  }
  c.residual = (am - bm).cwiseAbs().maxCoeff();
  if (c.residual <= tol) {
    c.ok = true;
    return c;
  }
  if (auto lam = equal_up_to_global_phase(am, bm, tol)) {
    c.ok = c.projective = true;
    c.factor = *lam;
    c.residual = (am - *lam * bm).cwiseAbs().maxCoeff();
    return c;
  }
  c.ok = false;
  return c;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

RuleReport verify_rule(const RewriteRule& rule, const VerifyOptions& opts) {
  RuleReport rep;
  rep.rule = rule.name;
  rep.provisional = rule.provisional;
  rep.verdict = "sound-exact";

  const auto combos = arity_combos(rule.arity_slots, opts.max_legs);
  bool any_projective = false;
  bool any_fail = false;

  auto record = [&](const Comparison& c, const std::string& what) {
    ++rep.instantiations;
    if (c.exact) ++rep.exact_instantiations;
    rep.max_residual = std::max(rep.max_residual, c.residual);
    if (c.projective) {
      any_projective = true;
      if (!rep.scalar_factor) rep.scalar_factor = c.factor;
    }
    if (!c.ok && !any_fail) {
      any_fail = true;
      rep.note = "failed at " + what;
    } else if (!c.ok) {
      any_fail = true;
    }
  };

  // Exact pass: the full pi/4 grid (domain-restricted) on every arity combo.
  if (opts.exact_pass) {
    for (const auto& combo : combos) {
      std::vector<std::vector<Phase>> pgrids;
      for (const auto& s : rule.phase_slots) pgrids.push_back(phase_grid(s.domain));
      std::vector<std::vector<ScalarParam>> qgrids;
      for (const auto& s : rule.param_slots) qgrids.push_back(param_grid(s.domain));

      std::vector<std::size_t> idx(pgrids.size() + qgrids.size(), 0);
      for (;;) {
        Bindings b;
        for (std::size_t k = 0; k < pgrids.size(); ++k) b.phases.push_back(pgrids[k][idx[k]]);
        for (std::size_t k = 0; k < qgrids.size(); ++k) {
          b.params.push_back(qgrids[k][idx[pgrids.size() + k]]);
        }
        const auto [lhs, rhs] = instantiate(rule, combo, b);
        record(compare_sides(lhs, rhs, rule.mode, Backend::exact, opts.tol),
               rule.name + " exact instantiation");
        // Advance the mixed-radix counter.
        std::size_t k = 0;
        for (; k < idx.size(); ++k) {
          const std::size_t radix =
              k < pgrids.size() ? pgrids[k].size() : qgrids[k - pgrids.size()].size();
          if (++idx[k] < radix) break;
          idx[k] = 0;
        }
        if (k == idx.size()) break;
        if (idx.empty()) break;
      }
    }
  }

  // Float pass: seeded random draws, random arity combo per draw.
  std::mt19937_64 rng(opts.seed ^ fnv1a(rule.name));
  for (int s = 0; s < opts.samples; ++s) {
    const auto& combo = combos[rng() % combos.size()];
    Bindings b;
    for (const auto& slot : rule.phase_slots) b.phases.push_back(random_phase(slot.domain, rng));
    for (const auto& slot : rule.param_slots) b.params.push_back(random_param(slot.domain, rng));
    const auto [lhs, rhs] = instantiate(rule, combo, b);
    record(compare_sides(lhs, rhs, rule.mode, Backend::floating, opts.tol),
           rule.name + " float sample " + std::to_string(s));
  }

  if (any_fail) {
    rep.verdict = "unsound";
  } else if (any_projective) {
    rep.verdict = "sound-projective";
  } else if (rep.exact_instantiations > 0) {
    rep.verdict = "sound-exact";
  } else {
    rep.verdict = "sound";
  }
  return rep;
}

SoundnessReport verify_library(const std::string& name, const VerifyOptions& opts) {
  const RuleLibrary& lib = library(name);
  SoundnessReport rep;
  rep.library = name;
  rep.tol = opts.tol;
  rep.samples = opts.samples;
  rep.seed = opts.seed;
  rep.max_legs = opts.max_legs;
  rep.all_sound = true;
  for (const auto& r : lib.rules) {
    rep.rules.push_back(verify_rule(r, opts));
    rep.all_sound = rep.all_sound && rep.rules.back().sound();
  }
  return rep;
}

}  // namespace zxd
