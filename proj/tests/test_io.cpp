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

#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "zxd/builders.hpp"
#include "zxd/json_io.hpp"

using namespace zxd;

TEST_CASE("round-trip on all builder diagrams") {
  std::vector<Diagram> all;
  for (const Calculus c : {Calculus::zx, Calculus::zw, Calculus::zh}) {
    all.push_back(build::identity(2, c));
    all.push_back(build::swap_wires(c));
    all.push_back(build::cup(c));
    all.push_back(build::cap(c));
    all.push_back(build::ground(2, c));
    all.push_back(build::ket0(c));
    all.push_back(build::ket1(c));
    all.push_back(build::h(c));
    all.push_back(build::s(c));
    all.push_back(build::t(c));
    all.push_back(build::rz(Phase::pi4(5), c));
    all.push_back(build::cz(c));
    all.push_back(build::global_phase(Phase::pi4(1), c));
    if (c != Calculus::zw) all.push_back(build::cnot(c));
  }
  all.push_back(build::rz(Phase::radians(0.37)));
  for (const Diagram& d : all) {
    const Diagram back = parse_diagram(print_diagram(d));
    CHECK(back.structurally_equal(d));
  }
}

TEST_CASE("print is deterministic") {
  std::mt19937_64 rng(9);
  const auto c = testutil::random_circuit(rng, 3, 12, 2, true);
  CHECK(print_diagram(c.diagram) == print_diagram(c.diagram));
}

TEST_CASE("malformed wires are reported by index") {
  const std::string text = R"({
    "calculus": "zx",
    "nodes": [],
    "wires": [[{"boundary": "in", "index": 0}]],
    "inputs": [{"boundary": "in", "index": 0}],
    "outputs": []
  })";
  try {
    (void)parse_diagram(text);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("wires[0]") != std::string::npos);
  }
}

TEST_CASE("unknown kinds list the valid ones") {
  const std::string text = R"({
    "calculus": "zx",
    "nodes": [{"id": 0, "kind": "qubitizer", "in_ports": 1, "out_ports": 1}],
    "wires": [],
    "inputs": [],
    "outputs": []
  })";
  try {
    (void)parse_diagram(text);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    CHECK(msg.find("z_spider") != std::string::npos);
    CHECK(msg.find("hadamard") != std::string::npos);
  }
}

TEST_CASE("structural violations surface as errors") {
  // an x_spider with a dangling port
  const std::string text = R"({
    "calculus": "zx",
    "nodes": [{"id": 0, "kind": "x_spider", "params": {"phase": {"pi_num": 0, "pi_den": 1}},
               "in_ports": 1, "out_ports": 1}],
    "wires": [[{"boundary": "in", "index": 0}, {"node": 0, "port": "in", "index": 0}]],
    "inputs": [{"boundary": "in", "index": 0}],
    "outputs": []
  })";
  try {
    (void)parse_diagram(text);
    FAIL("expected a validation error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("DanglingPort") != std::string::npos);
  }
}

TEST_CASE("exact parameters round-trip through the text scalar form") {
  const Diagram d = build::h_box(1, 1, ScalarParam(ExactScalar::from_int_pair(1, 2)));
  const Json j = diagram_to_json(d);
  CHECK(j["nodes"][0]["params"]["value"]["exact"] == "((1,0,2,0),0)");
  const Diagram back = diagram_from_json(j);
  CHECK(back.structurally_equal(d));
}

TEST_CASE("proof scripts round-trip") {
  ProofScript s;
  s.initial = compose(build::h(), build::h());
  s.steps = {{"zx-full", "h2", true, 0, {}}, {"zx-full", "s2", false, 1, {}}};
  s.final = build::identity(1);
  const ProofScript back = proof_from_json(proof_to_json(s));
  CHECK(back.initial.structurally_equal(s.initial));
  CHECK(back.final.structurally_equal(s.final));
  REQUIRE(back.steps.size() == 2);
  CHECK(back.steps[1].rule == "s2");
  CHECK(back.steps[1].forward == false);
  CHECK(back.steps[1].index == 1);
}

TEST_CASE("tensor and superop dumps carry their conventions") {
  const Json t = tensor_to_json(interp(build::h(), Backend::exact));
  CHECK(t.contains("entries_exact"));
  CHECK(t["backend"] == "exact");
  const Json s = superop_to_json(interpret_cpm(build::ground(1), Backend::floating));
  CHECK(s.contains("choi"));
  CHECK(s["convention"].get<std::string>().find("choi") != std::string::npos);
}
