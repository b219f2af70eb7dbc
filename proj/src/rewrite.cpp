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

#include "zxd/rewrite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zxd/cpm.hpp"
#include "zxd/detail/junction.hpp"
#include "zxd/interp.hpp"

namespace zxd {

namespace {

// ---------------------------------------------------------------------------
// Unification of pattern parameters against host values
// ---------------------------------------------------------------------------

bool unify_phase(const PhaseExpr& expr, const Phase& host, Bindings* b,
                 std::vector<bool>* bound, double tol) {
  if (expr.is_constant()) return expr.konst.approx_equal(host, tol);
  const auto sv = expr.single_var();
  if (!sv) return false;  // matchable patterns carry at most coeff +-1 per node
  const auto [v, coeff] = *sv;
  const Phase residue = coeff == 1 ? host - expr.konst : -(host - expr.konst);
  auto& bd = *bound;
  if (bd[static_cast<std::size_t>(v)]) {
    return b->phases[static_cast<std::size_t>(v)].approx_equal(residue, tol);
  }
  b->phases[static_cast<std::size_t>(v)] = residue;
  bd[static_cast<std::size_t>(v)] = true;
  return true;
}

bool unify_param(const ParamExpr& expr, const ScalarParam& host, Bindings* b,
                 std::vector<bool>* pbound, std::vector<bool>* phbound, double tol) {
  switch (expr.kind) {
    case ParamExpr::Kind::constant:
      return expr.konst.approx_equal(host, tol);
    case ParamExpr::Kind::var: {
      auto& bd = *pbound;
      if (bd[static_cast<std::size_t>(expr.var)]) {
        return b->params[static_cast<std::size_t>(expr.var)].approx_equal(host, tol);
      }
      b->params[static_cast<std::size_t>(expr.var)] = host;
      bd[static_cast<std::size_t>(expr.var)] = true;
      return true;
    }
    case ParamExpr::Kind::unit_phase: {
      if (std::abs(std::abs(host.value) - 1.0) > 1e-9) return false;
      Phase alpha = Phase::radians(std::arg(host.value) < 0
                                       ? std::arg(host.value) + 2 * std::numbers::pi
                                       : std::arg(host.value));
      if (host.exact) {
        // Recover an exact pi/4 phase when the parameter is a root of unity.
        for (int k = 0; k < 8; ++k) {
          if (*host.exact == ExactScalar::omega_pow(k)) {
            alpha = Phase::pi4(k);
            break;
          }
        }
      }
      auto& bd = *phbound;
      if (bd[static_cast<std::size_t>(expr.var)]) {
        return b->phases[static_cast<std::size_t>(expr.var)].approx_equal(alpha, tol);
      }
      b->phases[static_cast<std::size_t>(expr.var)] = alpha;
      bd[static_cast<std::size_t>(expr.var)] = true;
      return true;
    }
    default:
      return false;  // composite expressions are instantiation-only
  }
}

struct PortMaps {
  // host port -> wire index
  std::map<PortRef, std::int32_t> wire_at;
};

PortMaps index_ports(const Diagram& d) {
  PortMaps pm;
  for (std::size_t w = 0; w < d.wires().size(); ++w) {
    pm.wire_at[d.wires()[w].a] = static_cast<std::int32_t>(w);
    pm.wire_at[d.wires()[w].b] = static_cast<std::int32_t>(w);
  }
  return pm;
}

struct SearchState {
  const Pattern* pat = nullptr;
  const Diagram* host = nullptr;
  const PortMaps* ports = nullptr;
  double tol = 1e-12;
  int n_phase_vars = 0;
  int n_param_vars = 0;

  std::vector<std::int32_t> node_map;
  std::vector<bool> host_used;
  Bindings binding;
  std::vector<bool> phase_bound;
  std::vector<bool> param_bound;

  std::vector<Match> out;
};

PortRef map_pattern_port(const SearchState& st, const PortRef& p) {
  PortRef q = p;
  if (!p.is_boundary()) q.node = st.node_map[static_cast<std::size_t>(p.node)];
  return q;
}

// Boundary port encoding: inputs 0..n_in-1, outputs n_in..n_in+n_out-1.
std::int32_t boundary_slot(const Pattern& pat, const PortRef& p) {
  return p.kind == PortRef::Kind::boundary_in ? p.index : pat.n_in + p.index;
}

// After all nodes are assigned, checks the wiring and assembles the match.
void finish_match(SearchState& st, const std::string& rule_name, bool forward,
                  const std::vector<int>& legs) {
  const Pattern& pat = *st.pat;
  const Diagram& host = *st.host;

  std::set<Wire> host_wires(host.wires().begin(), host.wires().end());
  std::vector<Match::Attachment> attach(
      static_cast<std::size_t>(pat.n_in + pat.n_out));
  std::set<std::int32_t> claimed;  // host wires consumed as internal wires
  std::vector<std::pair<std::int32_t, std::int32_t>> through;  // (bslot a, bslot b)

  for (const Wire& pw : pat.wires) {
    const bool ab = pw.a.is_boundary();
    const bool bb = pw.b.is_boundary();
    if (!ab && !bb) {
      const Wire hw(map_pattern_port(st, pw.a), map_pattern_port(st, pw.b));
      if (hw.a == hw.b) return;  // pattern self-wire cannot map to a port pair
      if (!host_wires.count(hw)) return;
      claimed.insert(st.ports->wire_at.at(hw.a));
    } else if (ab != bb) {
      const PortRef inner = ab ? pw.b : pw.a;
      const PortRef mapped = map_pattern_port(st, inner);
      const auto it = st.ports->wire_at.find(mapped);
      if (it == st.ports->wire_at.end()) return;
      const Wire& hw = host.wires()[static_cast<std::size_t>(it->second)];
      Match::Attachment a;
      a.host_wire = it->second;
      a.outside_is_a = !(hw.a == mapped);
      attach[static_cast<std::size_t>(boundary_slot(pat, ab ? pw.a : pw.b))] = a;
    } else {
      through.emplace_back(boundary_slot(pat, pw.a), boundary_slot(pat, pw.b));
    }
  }

  // A wire claimed as internal cannot also carry an attachment.
  for (const auto& a : attach) {
    if (a.host_wire >= 0 && claimed.count(a.host_wire)) return;
  }

  // Self-wires of pattern nodes must exist in the host too (map_pattern_port
  // handles them above only when the ports differ; identical ports were
  // rejected, so a pattern wire from a node port to itself is unmatchable by
  // construction -- patterns use distinct ports for self-loops).

  // Enumerate host wires for through-wires: unclaimed, not attachments,
  // pairwise distinct, ascending.
  std::set<std::int32_t> reserved = claimed;
  for (const auto& a : attach) {
    if (a.host_wire >= 0) reserved.insert(a.host_wire);
  }
  std::vector<std::int32_t> free_wires;
  for (std::size_t w = 0; w < host.wires().size(); ++w) {
    if (!reserved.count(static_cast<std::int32_t>(w))) {
      free_wires.push_back(static_cast<std::int32_t>(w));
    }
  }

  std::vector<std::int32_t> choice(through.size(), -1);
  std::vector<bool> used(free_wires.size(), false);
  auto emit = [&]() {
    Match m;
    m.rule = rule_name;
    m.forward = forward;
    m.legs = legs;
    m.binding = st.binding;
    m.binding.phases.resize(static_cast<std::size_t>(st.n_phase_vars));
    m.binding.params.resize(static_cast<std::size_t>(st.n_param_vars));
    m.node_map = st.node_map;
    m.attachments = attach;
    for (std::size_t t = 0; t < through.size(); ++t) {
      Match::Attachment a1{choice[t], true, true};   // outside at endpoint a
      Match::Attachment a2{choice[t], false, true};  // outside at endpoint b
      m.attachments[static_cast<std::size_t>(through[t].first)] = a1;
      m.attachments[static_cast<std::size_t>(through[t].second)] = a2;
    }
    st.out.push_back(std::move(m));
  };
  std::function<void(std::size_t)> pick = [&](std::size_t t) {
    if (t == through.size()) {
      emit();
      return;
    }
    for (std::size_t f = 0; f < free_wires.size(); ++f) {
      if (used[f]) continue;
      used[f] = true;
      choice[t] = free_wires[f];
      pick(t + 1);
      used[f] = false;
    }
  };
  pick(0);
}

void search(SearchState& st, std::size_t next, const std::string& rule_name, bool forward,
            const std::vector<int>& legs) {
  const Pattern& pat = *st.pat;
  if (next == pat.nodes.size()) {
    finish_match(st, rule_name, forward, legs);
    return;
  }
  const PatNode& pn = pat.nodes[next];
  for (std::size_t j = 0; j < st.host->nodes().size(); ++j) {
    if (st.host_used[j]) continue;
    const Node& hn = st.host->nodes()[j];
    if (hn.kind != pn.kind || hn.n_in != pn.n_in || hn.m_out != pn.m_out) continue;

    // Save binding state for backtracking.
    const Bindings saved_b = st.binding;
    const auto saved_ph = st.phase_bound;
    const auto saved_pa = st.param_bound;

    bool ok = true;
    if (pn.phase) {
      ok = hn.phase && unify_phase(*pn.phase, *hn.phase, &st.binding, &st.phase_bound,
                                   st.tol);
    }
    if (ok && pn.param) {
      ok = hn.param && unify_param(*pn.param, *hn.param, &st.binding, &st.param_bound,
                                   &st.phase_bound, st.tol);
    }
    if (ok) {
      st.node_map[next] = static_cast<std::int32_t>(j);
      st.host_used[j] = true;
      search(st, next + 1, rule_name, forward, legs);
      st.host_used[j] = false;
    }
    st.binding = saved_b;
    st.phase_bound = saved_ph;
    st.param_bound = saved_pa;
  }
}

std::string match_key(const Match& m, const Pattern& pat) {
  // Canonical key: attachments are sorted inside each declared symmetric
  // boundary group so leg permutations collapse to one match.
  std::vector<std::pair<std::int32_t, bool>> att;
  att.reserve(m.attachments.size());
  for (const auto& a : m.attachments) att.emplace_back(a.host_wire, a.outside_is_a);
  for (const auto& group : pat.symmetric_boundary_groups) {
    std::vector<std::pair<std::int32_t, bool>> vals;
    for (auto slot : group) vals.push_back(att[static_cast<std::size_t>(slot)]);
    std::sort(vals.begin(), vals.end());
    for (std::size_t k = 0; k < group.size(); ++k) {
      att[static_cast<std::size_t>(group[k])] = vals[k];
    }
  }
  std::ostringstream os;
  std::vector<std::int32_t> sorted_nodes = m.node_map;
  std::sort(sorted_nodes.begin(), sorted_nodes.end());
  for (auto n : sorted_nodes) os << n << ",";
  os << "|";
  for (auto n : m.node_map) os << n << ",";
  os << "|";
  for (const auto& [w, side] : att) os << w << (side ? "a" : "b") << ",";
  return os.str();
}

}  // namespace

std::vector<Match> find_matches(const RewriteRule& rule, const std::vector<int>& legs,
                                bool forward, const Diagram& host, double tol) {
  if (legs.size() != rule.arity_slots.size()) {
    throw std::invalid_argument("find_matches: expected " +
                                std::to_string(rule.arity_slots.size()) +
                                " leg counts for rule " + rule.name);
  }
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (legs[i] < rule.arity_slots[i].min || legs[i] > rule.arity_slots[i].max) {
      throw std::invalid_argument("find_matches: leg count out of range for slot " +
                                  rule.arity_slots[i].name);
    }
  }
  auto [lhs, rhs] = rule.make(legs);
  const Pattern& pat = forward ? lhs : rhs;
  if (pat.calc != host.calculus()) return {};

  SearchState st;
  st.pat = &pat;
  st.host = &host;
  const PortMaps pm = index_ports(host);
  st.ports = &pm;
  st.tol = tol;
  st.n_phase_vars = static_cast<int>(rule.phase_slots.size());
  st.n_param_vars = static_cast<int>(rule.param_slots.size());
  st.node_map.assign(pat.nodes.size(), -1);
  st.host_used.assign(host.nodes().size(), false);
  st.binding.phases.assign(rule.phase_slots.size(), Phase::zero());
  st.binding.params.assign(rule.param_slots.size(), ScalarParam());
  st.phase_bound.assign(rule.phase_slots.size(), false);
  st.param_bound.assign(rule.param_slots.size(), false);

  search(st, 0, rule.name, forward, legs);

  // Deduplicate up to wire symmetry of variadic legs, deterministic order.
  std::map<std::string, Match> unique;
  for (auto& m : st.out) unique.emplace(match_key(m, pat), std::move(m));
  std::vector<Match> out;
  out.reserve(unique.size());
  for (auto& [k, m] : unique) out.push_back(std::move(m));
  return out;
}

Diagram apply_rewrite(const Diagram& host, const Match& m, const RewriteRule& rule) {
  auto [lhs, rhs] = rule.make(m.legs);
  const Pattern& pat = m.forward ? lhs : rhs;
  const Pattern& rep = m.forward ? rhs : lhs;

  // Stale-match guard: node kinds and wire indices must still fit.
  if (m.node_map.size() != pat.nodes.size() ||
      m.attachments.size() != static_cast<std::size_t>(pat.n_in + pat.n_out)) {
    throw std::invalid_argument("apply_rewrite: match does not fit the rule");
  }
  for (std::size_t i = 0; i < pat.nodes.size(); ++i) {
    const auto j = m.node_map[i];
    if (j < 0 || j >= static_cast<std::int32_t>(host.nodes().size())) {
      throw std::invalid_argument("apply_rewrite: stale match (node out of range)");
    }
    const Node& hn = host.nodes()[static_cast<std::size_t>(j)];
    if (hn.kind != pat.nodes[i].kind || hn.n_in != pat.nodes[i].n_in ||
        hn.m_out != pat.nodes[i].m_out) {
      throw std::invalid_argument("apply_rewrite: stale match (node changed)");
    }
  }
  for (const auto& a : m.attachments) {
    if (a.host_wire < 0 || a.host_wire >= static_cast<std::int32_t>(host.wires().size())) {
      throw std::invalid_argument("apply_rewrite: stale match (wire out of range)");
    }
  }

  const Diagram repl = rep.instantiate(m.binding);

  std::vector<bool> removed(host.nodes().size(), false);
  for (auto j : m.node_map) removed[static_cast<std::size_t>(j)] = true;

  Diagram out(host.calculus());
  out.set_boundary(host.num_inputs(), host.num_outputs());
  std::vector<std::int32_t> keep_id(host.nodes().size(), -1);
  for (std::size_t j = 0; j < host.nodes().size(); ++j) {
    if (!removed[j]) keep_id[j] = out.add_node(host.nodes()[j]);
  }
  const std::int32_t repl_base = static_cast<std::int32_t>(out.nodes().size());
  for (const Node& n : repl.nodes()) out.add_node(n);

  // Junctions: one per pattern boundary port.
  const std::int32_t n_junctions = pat.n_in + pat.n_out;
  using detail::Endpoint;
  std::vector<std::pair<Endpoint, Endpoint>> raw;

  // Which pattern boundary slots sit on which host wire.
  struct WireRole {
    std::int32_t slot_outside_a = -1;  // slot whose outside endpoint is a
    std::int32_t slot_outside_b = -1;  // slot whose outside endpoint is b
    bool through = false;
    bool involved = false;
  };
  std::vector<WireRole> roles(host.wires().size());
  for (std::size_t slot = 0; slot < m.attachments.size(); ++slot) {
    const auto& a = m.attachments[slot];
    auto& r = roles[static_cast<std::size_t>(a.host_wire)];
    r.involved = true;
    r.through = r.through || a.through;
    auto& dst = a.outside_is_a ? r.slot_outside_a : r.slot_outside_b;
    if (dst >= 0) throw std::invalid_argument("apply_rewrite: wire over-claimed");
    dst = static_cast<std::int32_t>(slot);
  }

  // Internal pattern wires: drop.  They are exactly the host wires between
  // matched ports not carrying any attachment.
  auto map_keep_port = [&](const PortRef& p) -> Endpoint {
    if (p.is_boundary()) return Endpoint::real(p);
    if (removed[static_cast<std::size_t>(p.node)]) {
      throw std::invalid_argument("apply_rewrite: unclaimed wire into the matched region");
    }
    PortRef q = p;
    q.node = keep_id[static_cast<std::size_t>(p.node)];
    return Endpoint::real(q);
  };

  for (std::size_t w = 0; w < host.wires().size(); ++w) {
    const Wire& hw = host.wires()[w];
    const WireRole& r = roles[w];
    if (!r.involved) {
      const bool a_removed = !hw.a.is_boundary() && removed[static_cast<std::size_t>(hw.a.node)];
      const bool b_removed = !hw.b.is_boundary() && removed[static_cast<std::size_t>(hw.b.node)];
      if (a_removed && b_removed) continue;  // internal to the match
      if (a_removed || b_removed) {
        throw std::invalid_argument("apply_rewrite: unclaimed wire into the matched region");
      }
      raw.emplace_back(map_keep_port(hw.a), map_keep_port(hw.b));
      continue;
    }
    // Wire carries one or two boundary slots.
    if (r.through) {
      // A through-wire is cut in the middle: each endpoint joins its slot.
      raw.emplace_back(map_keep_port(hw.a), Endpoint::junct(r.slot_outside_a));
      raw.emplace_back(map_keep_port(hw.b), Endpoint::junct(r.slot_outside_b));
    } else if (r.slot_outside_a >= 0 && r.slot_outside_b >= 0) {
      // Interface wire looping back into the region: both ends replaced.
      raw.emplace_back(Endpoint::junct(r.slot_outside_a),
                       Endpoint::junct(r.slot_outside_b));
    } else if (r.slot_outside_a >= 0) {
      raw.emplace_back(map_keep_port(hw.a), Endpoint::junct(r.slot_outside_a));
    } else {
      raw.emplace_back(map_keep_port(hw.b), Endpoint::junct(r.slot_outside_b));
    }
  }

  // Replacement wires: boundary ports become junctions, nodes shift.
  auto map_repl_port = [&](const PortRef& p) -> Endpoint {
    if (p.kind == PortRef::Kind::boundary_in) return Endpoint::junct(p.index);
    if (p.kind == PortRef::Kind::boundary_out) return Endpoint::junct(rep.n_in + p.index);
    PortRef q = p;
    q.node += repl_base;
    return Endpoint::real(q);
  };
  for (const Wire& rw : repl.wires()) {
    raw.emplace_back(map_repl_port(rw.a), map_repl_port(rw.b));
  }

  detail::resolve_junction_wires(out.calculus(), n_junctions, raw, &out);
  out.sort_wires();
  out.check_valid();
  return out;
}

// ---------------------------------------------------------------------------
// Proof scripts
// ---------------------------------------------------------------------------

ProofReport verify_proof(const ProofScript& script, const ProofOptions& opts) {
  ProofReport rep;
  Diagram cur = script.initial;
  try {
    cur.check_valid();
  } catch (const std::exception& e) {
    rep.error = std::string("initial diagram invalid: ") + e.what();
    return rep;
  }

  for (std::size_t s = 0; s < script.steps.size(); ++s) {
    const ProofStep& step = script.steps[s];
    ProofStepReport sr;
    try {
      const RuleLibrary& lib = library(step.library);
      const RewriteRule* rule = lib.find(step.rule);
      if (!rule) throw std::invalid_argument("no rule '" + step.rule + "' in " + step.library);
      const auto matches = find_matches(*rule, step.legs, step.forward, cur);
      sr.matches_found = static_cast<int>(matches.size());
      if (step.index < 0 || step.index >= sr.matches_found) {
        throw std::invalid_argument("match index " + std::to_string(step.index) +
                                    " out of range (found " +
                                    std::to_string(sr.matches_found) + ")");
      }
      Diagram next = apply_rewrite(cur, matches[static_cast<std::size_t>(step.index)], *rule);
      if (opts.semantic_check &&
          cur.num_inputs() + cur.num_outputs() <= opts.semantic_wire_limit) {
        const SuperOp before = interpret_cpm(cur, Backend::floating);
        const SuperOp after = interpret_cpm(next, Backend::floating);
        sr.semantic_checked = true;
        sr.semantic_residual =
            (before.to_float() - after.to_float()).cwiseAbs().maxCoeff();
        if (sr.semantic_residual > opts.tol) {
          throw std::runtime_error("semantic drift " +
                                   std::to_string(sr.semantic_residual));
        }
      }
      cur = std::move(next);
      sr.ok = true;
    } catch (const std::exception& e) {
      sr.ok = false;
      sr.error = e.what();
    }
    rep.steps.push_back(sr);
    if (!sr.ok) {
      rep.failed_step = static_cast<int>(s);
      return rep;
    }
  }

  rep.final_matches = cur.isomorphic(script.final);
  rep.valid = rep.final_matches;
  if (!rep.final_matches) rep.error = "final diagram does not match the claim";
  return rep;
}

}  // namespace zxd
