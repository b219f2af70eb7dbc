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

#include "zxd/json_io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace zxd {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument("diagram json: " + where + ": " + what);
}

Json phase_to_json(const Phase& p) {
  Json j;
  if (p.is_exact()) {
    j["pi_num"] = p.numerator();
    j["pi_den"] = p.denominator();
  } else {
    j["radians"] = p.to_radians();
  }
  return j;
}

Phase phase_from_json(const Json& j, const std::string& where) {
  if (j.contains("radians")) return Phase::radians(j.at("radians").get<double>());
  if (j.contains("pi_num")) {
    return Phase::pi_multiple(j.at("pi_num").get<std::int64_t>(),
                              j.value("pi_den", std::int64_t{1}));
  }
  fail(where, "phase needs pi_num/pi_den or radians");
}

Json param_to_json(const ScalarParam& p) {
  Json j;
  if (p.exact) {
    j["exact"] = p.exact->to_string();
  } else {
    j["re"] = p.value.real();
    j["im"] = p.value.imag();
  }
  return j;
}

ScalarParam param_from_json(const Json& j, const std::string& where) {
  if (j.contains("exact")) {
    const auto parsed = ExactScalar::parse(j.at("exact").get<std::string>());
    if (!parsed) fail(where, "malformed exact scalar " + j.at("exact").get<std::string>());
    return ScalarParam(*parsed);
  }
  if (j.contains("re") || j.contains("im")) {
    return ScalarParam(Complex{j.value("re", 0.0), j.value("im", 0.0)});
  }
  fail(where, "parameter needs exact or re/im");
}

Json port_to_json(const PortRef& p) {
  Json j;
  switch (p.kind) {
    case PortRef::Kind::node_in:
      j["node"] = p.node;
      j["port"] = "in";
      j["index"] = p.index;
      break;
    case PortRef::Kind::node_out:
      j["node"] = p.node;
      j["port"] = "out";
      j["index"] = p.index;
      break;
    case PortRef::Kind::boundary_in:
      j["boundary"] = "in";
      j["index"] = p.index;
      break;
    case PortRef::Kind::boundary_out:
      j["boundary"] = "out";
      j["index"] = p.index;
      break;
  }
  return j;
}

PortRef port_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "port reference must be an object");
  const std::int32_t index = j.value("index", std::int32_t{0});
  if (j.contains("boundary")) {
    const std::string side = j.at("boundary").get<std::string>();
    if (side == "in") return PortRef::bin(index);
    if (side == "out") return PortRef::bout(index);
    fail(where, "boundary side must be in or out");
  }
  if (j.contains("node")) {
    const std::int32_t node = j.at("node").get<std::int32_t>();
    const std::string side = j.value("port", "in");
    if (side == "in") return PortRef::in(node, index);
    if (side == "out") return PortRef::out(node, index);
    fail(where, "port side must be in or out");
  }
  fail(where, "port reference needs node or boundary");
}

std::string valid_kinds(Calculus c) {
  std::string out;
  for (const auto k :
       {NodeKind::z_spider, NodeKind::x_spider, NodeKind::hadamard, NodeKind::z_node,
        NodeKind::w_node, NodeKind::fswap, NodeKind::zh_z, NodeKind::zh_x, NodeKind::h_box,
        NodeKind::not_node, NodeKind::ground}) {
    if (kind_allowed_in(k, c)) {
      if (!out.empty()) out += ", ";
      out += to_string(k);
    }
  }
  return out;
}

}  // namespace

Json diagram_to_json(const Diagram& d) {
  Json j;
  j["calculus"] = to_string(d.calculus());
  Json nodes = Json::array();
  for (std::size_t id = 0; id < d.nodes().size(); ++id) {
    const Node& n = d.nodes()[id];
    Json nj;
    nj["id"] = id;
    nj["kind"] = to_string(n.kind);
    Json params = Json::object();
    if (n.phase) params["phase"] = phase_to_json(*n.phase);
    if (n.param) params["value"] = param_to_json(*n.param);
    if (!params.empty()) nj["params"] = params;
    nj["in_ports"] = n.n_in;
    nj["out_ports"] = n.m_out;
    nodes.push_back(nj);
  }
  j["nodes"] = nodes;
  Diagram sorted = d;
  sorted.sort_wires();
  Json wires = Json::array();
  for (const Wire& w : sorted.wires()) {
    wires.push_back(Json::array({port_to_json(w.a), port_to_json(w.b)}));
  }
  j["wires"] = wires;
  Json ins = Json::array();
  for (std::int32_t i = 0; i < d.num_inputs(); ++i) ins.push_back(port_to_json(PortRef::bin(i)));
  Json outs = Json::array();
  for (std::int32_t i = 0; i < d.num_outputs(); ++i) {
    outs.push_back(port_to_json(PortRef::bout(i)));
  }
  j["inputs"] = ins;
  j["outputs"] = outs;
  return j;
}

Diagram diagram_from_json(const Json& j) {
  if (!j.is_object()) fail("root", "expected an object");
  const std::string cal = j.value("calculus", "");
  const auto c = calculus_from_string(cal);
  if (!c) fail("calculus", "unknown calculus '" + cal + "' (zx, zw or zh)");
  Diagram d(*c);

  if (!j.contains("nodes") || !j.at("nodes").is_array()) fail("nodes", "missing array");
  std::size_t expect_id = 0;
  for (const auto& nj : j.at("nodes")) {
    const std::string where = "nodes[" + std::to_string(expect_id) + "]";
    if (nj.value("id", static_cast<std::int64_t>(expect_id)) !=
        static_cast<std::int64_t>(expect_id)) {
      fail(where, "ids must be dense and ascending");
    }
    const std::string kind_s = nj.value("kind", "");
    const auto kind = node_kind_from_string(kind_s);
    if (!kind) {
      fail(where, "unknown kind '" + kind_s + "'; valid kinds for " + cal + ": " +
                      valid_kinds(*c));
    }
    Node n;
    n.kind = *kind;
    n.n_in = nj.value("in_ports", std::int32_t{0});
    n.m_out = nj.value("out_ports", std::int32_t{0});
    if (nj.contains("params")) {
      const auto& pj = nj.at("params");
      if (pj.contains("phase")) n.phase = phase_from_json(pj.at("phase"), where);
      if (pj.contains("value")) n.param = param_from_json(pj.at("value"), where);
    }
    if (kind_has_phase(n.kind) && !n.phase) n.phase = Phase::zero();
    if (kind_has_param(n.kind) && !n.param) {
      // The H-box defaults to -1 when unlabelled.
      n.param = n.kind == NodeKind::h_box ? ScalarParam::integer(-1)
                                          : ScalarParam::integer(1);
    }
    d.add_node(n);
    ++expect_id;
  }

  d.set_boundary(
      j.contains("inputs") ? static_cast<std::int32_t>(j.at("inputs").size()) : 0,
      j.contains("outputs") ? static_cast<std::int32_t>(j.at("outputs").size()) : 0);

  if (!j.contains("wires") || !j.at("wires").is_array()) fail("wires", "missing array");
  std::size_t wi = 0;
  for (const auto& wj : j.at("wires")) {
    const std::string where = "wires[" + std::to_string(wi) + "]";
    if (!wj.is_array() || wj.size() != 2) {
      fail(where, "a wire must join exactly two ports");
    }
    d.add_wire(port_from_json(wj.at(0), where), port_from_json(wj.at(1), where));
    ++wi;
  }
  d.sort_wires();

  const auto violations = d.validate();
  if (!violations.empty()) {
    std::ostringstream os;
    os << "diagram json: invalid diagram:";
    for (const auto& v : violations) os << " [" << to_string(v.kind) << "] " << v.detail << ";";
    throw std::invalid_argument(os.str());
  }
  return d;
}

std::string print_diagram(const Diagram& d) { return diagram_to_json(d).dump(2) + "\n"; }

Diagram parse_diagram(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("diagram json: parse error: ") + e.what());
  }
  return diagram_from_json(j);
}

namespace {

Json cmat_to_json(const CMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(row);
  }
  return rows;
}

Json xmat_to_json(const XMat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json tensor_to_json(const Tensor& t) {
  Json j;
  j["backend"] = to_string(t.backend());
  j["out_qubits"] = t.out_qubits();
  j["in_qubits"] = t.in_qubits();
  j["convention"] = "rows are outputs, cols are inputs; leftmost wire is the msb";
  if (t.backend() == Backend::exact) {
    j["entries_exact"] = xmat_to_json(t.exact());
    j["entries"] = cmat_to_json(t.to_float());
  } else {
    j["entries"] = cmat_to_json(t.floating());
  }
  return j;
}

Json superop_to_json(const SuperOp& s) {
  Json j;
  j["backend"] = to_string(s.backend());
  j["in_qubits"] = s.in_qubits();
  j["out_qubits"] = s.out_qubits();
  j["convention"] =
      "choi[(i,k),(j,l)] = <k| S(|i><j|) |l>, row index i*2^out + k; "
      "column-stacking vec(M) vec(M)^dag for pure M";
  if (s.backend() == Backend::exact) {
    j["choi_exact"] = xmat_to_json(s.exact());
    j["choi"] = cmat_to_json(s.to_float());
  } else {
    j["choi"] = cmat_to_json(s.floating());
  }
  return j;
}

Json proof_to_json(const ProofScript& s) {
  Json j;
  j["initial"] = diagram_to_json(s.initial);
  Json steps = Json::array();
  for (const auto& st : s.steps) {
    Json sj;
    sj["rule"] = st.rule;
    sj["library"] = st.library;
    sj["dir"] = st.forward ? "lr" : "rl";
    sj["index"] = st.index;
    sj["legs"] = st.legs;
    steps.push_back(sj);
  }
  j["steps"] = steps;
  j["final"] = diagram_to_json(s.final);
  return j;
}

ProofScript proof_from_json(const Json& j) {
  ProofScript s{Diagram(Calculus::zx), {}, Diagram(Calculus::zx)};
  if (!j.contains("initial") || !j.contains("final")) {
    throw std::invalid_argument("proof json: needs initial and final diagrams");
  }
  s.initial = diagram_from_json(j.at("initial"));
  s.final = diagram_from_json(j.at("final"));
  for (const auto& sj : j.value("steps", Json::array())) {
    ProofStep st;
    st.rule = sj.value("rule", "");
    st.library = sj.value("library", "");
    const std::string dir = sj.value("dir", "lr");
    if (dir != "lr" && dir != "rl") {
      throw std::invalid_argument("proof json: dir must be lr or rl");
    }
    st.forward = dir == "lr";
    st.index = sj.value("index", 0);
    st.legs = sj.value("legs", std::vector<int>{});
    s.steps.push_back(std::move(st));
  }
  return s;
}

Json soundness_to_json(const SoundnessReport& r) {
  Json j;
  j["library"] = r.library;
  j["tol"] = r.tol;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["max_legs"] = r.max_legs;
  j["all_sound"] = r.all_sound;
  Json rules = Json::array();
  for (const auto& rr : r.rules) {
    Json rj;
    rj["rule"] = rr.rule;
    rj["verdict"] = rr.verdict;
    rj["instantiations"] = rr.instantiations;
    rj["exact_instantiations"] = rr.exact_instantiations;
    rj["max_residual"] = rr.max_residual;
    if (rr.provisional) rj["provisional"] = true;
    if (rr.scalar_factor) {
      rj["scalar_factor"] = Json::array({rr.scalar_factor->real(), rr.scalar_factor->imag()});
    }
    if (!rr.note.empty()) rj["note"] = rr.note;
    rules.push_back(rj);
  }
  j["rules"] = rules;
  return j;
}

std::string soundness_table(const SoundnessReport& r) {
  std::ostringstream os;
  os << "library " << r.library << " (tol " << r.tol << ", samples " << r.samples
     << ", seed " << r.seed << ", legs 0.." << r.max_legs << ")\n";
  os << std::left << std::setw(14) << "rule" << std::setw(18) << "verdict" << std::setw(10)
     << "insts" << std::setw(14) << "max residual"
     << "note\n";
  for (const auto& rr : r.rules) {
    std::string note = rr.provisional ? "[provisional] " : "";
    note += rr.note;
    os << std::left << std::setw(14) << rr.rule << std::setw(18) << rr.verdict
       << std::setw(10) << rr.instantiations << std::setw(14) << std::scientific
       << std::setprecision(2) << rr.max_residual << note << "\n";
    os.unsetf(std::ios::scientific);
  }
  os << (r.all_sound ? "all rules sound" : "UNSOUND RULES PRESENT") << "\n";
  return os.str();
}

Json proof_report_to_json(const ProofReport& r) {
  Json j;
  j["valid"] = r.valid;
  j["failed_step"] = r.failed_step;
  j["final_matches"] = r.final_matches;
  if (!r.error.empty()) j["error"] = r.error;
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json sj;
    sj["ok"] = s.ok;
    sj["matches_found"] = s.matches_found;
    if (s.semantic_checked) sj["semantic_residual"] = s.semantic_residual;
    if (!s.error.empty()) sj["error"] = s.error;
    steps.push_back(sj);
  }
  j["steps"] = steps;
  return j;
}

}  // namespace zxd
