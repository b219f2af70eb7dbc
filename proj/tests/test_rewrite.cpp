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
#include "zxd/cpm.hpp"
#include "zxd/rewrite.hpp"

using namespace zxd;

namespace {

const RewriteRule& rule_of(const std::string& lib, const std::string& name) {
  const auto* r = library(lib).find(name);
  REQUIRE(r != nullptr);
  return *r;
}

}  // namespace

TEST_CASE("find_matches: h2 twice in H.H.H") {
  const Diagram hhh = compose(build::h(), compose(build::h(), build::h()));
  const auto ms = find_matches(rule_of("zx-full", "h2"), {}, true, hhh);
  CHECK(ms.size() == 2);
  // deterministic: same call, same order
  const auto ms2 = find_matches(rule_of("zx-full", "h2"), {}, true, hhh);
  REQUIRE(ms.size() == ms2.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    CHECK(ms[i].node_map == ms2[i].node_map);
  }
}

TEST_CASE("find_matches: one fusion in Z(a).Z(b), none in the empty diagram") {
  const Diagram zz = compose(build::rz(Phase::pi2(1)), build::rz(Phase::pi4(1)));
  const auto ms = find_matches(rule_of("zx-full", "s1"), {1, 0, 0, 1, 1}, true, zz);
  CHECK(ms.size() == 1);
  CHECK(find_matches(rule_of("zx-full", "s1"), {1, 0, 0, 1, 1}, true,
                     Diagram(Calculus::zx))
            .empty());
  CHECK(find_matches(rule_of("zx-full", "h2"), {}, true, Diagram(Calculus::zx)).empty());
  // the empty-lhs rule matches the empty diagram once (reverse of e)
  CHECK(find_matches(rule_of("zx-full", "e"), {}, false, Diagram(Calculus::zx)).size() == 1);
}

TEST_CASE("find_matches validates leg counts") {
  CHECK_THROWS_AS(
      find_matches(rule_of("zx-full", "s1"), {1, 0, 0, 1}, true, Diagram(Calculus::zx)),
      std::invalid_argument);
  CHECK_THROWS_AS(
      find_matches(rule_of("zx-full", "s1"), {1, 0, 0, 1, 9}, true, Diagram(Calculus::zx)),
      std::invalid_argument);
}

TEST_CASE("apply_rewrite: h2 collapse and spider fusion") {
  const Diagram hh = compose(build::h(), build::h());
  const auto& h2 = rule_of("zx-full", "h2");
  const auto ms = find_matches(h2, {}, true, hh);
  REQUIRE(ms.size() == 1);
  CHECK(apply_rewrite(hh, ms[0], h2).isomorphic(build::identity(1)));

  const Diagram zz = compose(build::rz(Phase::pi2(1)), build::rz(Phase::pi4(1)));
  const auto& s1 = rule_of("zx-full", "s1");
  const auto fm = find_matches(s1, {1, 0, 0, 1, 1}, true, zz);
  REQUIRE(fm.size() == 1);
  const Diagram fused = apply_rewrite(zz, fm[0], s1);
  CHECK(fused.isomorphic(build::rz(Phase::pi_multiple(3, 4))));
  CHECK(interp(fused, Backend::exact).equal(interp(zz, Backend::exact)));
}

TEST_CASE("apply_rewrite: ground absorption rules") {
  const auto& gh = rule_of("zx-ground", "h");
  const Diagram gH = compose(build::ground(1), build::h());
  const auto ms = find_matches(gh, {}, true, gH);
  REQUIRE(ms.size() == 1);
  CHECK(apply_rewrite(gH, ms[0], gh).isomorphic(build::ground(1)));
}

TEST_CASE("apply then reverse-apply restores the diagram up to renaming") {
  const Diagram host = compose(build::h(), compose(build::h(), build::t()));
  const auto& h2 = rule_of("zx-full", "h2");
  const auto ms = find_matches(h2, {}, true, host);
  REQUIRE_FALSE(ms.empty());
  const Diagram collapsed = apply_rewrite(host, ms[0], h2);
  // reverse: insert H.H back on the wire where it was removed
  const auto rms = find_matches(h2, {}, false, collapsed);
  REQUIRE_FALSE(rms.empty());
  bool restored = false;
  for (const auto& rm : rms) {
    restored = restored || apply_rewrite(collapsed, rm, h2).isomorphic(host);
  }
  CHECK(restored);
}

TEST_CASE("stale matches are rejected") {
  const Diagram hh = compose(build::h(), build::h());
  const auto& h2 = rule_of("zx-full", "h2");
  const auto ms = find_matches(h2, {}, true, hh);
  REQUIRE(ms.size() == 1);
  const Diagram shrunk = apply_rewrite(hh, ms[0], h2);
  CHECK_THROWS_AS(apply_rewrite(shrunk, ms[0], h2), std::invalid_argument);
}

TEST_CASE("sound-library rewrites preserve CPM semantics (fuzz)") {
  std::mt19937_64 rng(101);
  const auto& lib = library("zx-full");
  int applied = 0;
  for (int trial = 0; trial < 40 && applied < 12; ++trial) {
    const auto c = testutil::random_circuit(rng, 3, 14, 2, true);
    const auto& r = lib.rules[rng() % lib.rules.size()];
    std::vector<int> legs;
    for (const auto& slot : r.arity_slots) {
      legs.push_back(slot.min +
                     static_cast<int>(rng() % static_cast<std::uint64_t>(
                                          slot.max - slot.min + 1)));
    }
    const bool forward = rng() % 2 == 0;
    std::vector<Match> ms;
    try {
      ms = find_matches(r, legs, forward, c.diagram);
    } catch (const std::exception&) {
      continue;
    }
    if (ms.empty()) continue;
    const Diagram next = apply_rewrite(c.diagram, ms[rng() % ms.size()], r);
    const CMat before = interpret_cpm(c.diagram, Backend::floating).to_float();
    const CMat after = interpret_cpm(next, Backend::floating).to_float();
    REQUIRE(before.rows() == after.rows());
    CHECK((before - after).cwiseAbs().maxCoeff() < 1e-9);
    ++applied;
  }
  CHECK(applied >= 5);  // the fuzz must actually rewrite something
}

TEST_CASE("self-loop patterns match and rewrite") {
  // zw z-node with a self-looped output pair contracts to the bare node
  Diagram host(Calculus::zw);
  host.set_boundary(1, 1);
  Node z;
  z.kind = NodeKind::z_node;
  z.n_in = 1;
  z.m_out = 3;
  z.param = ScalarParam(ExactScalar::i());
  const auto id = host.add_node(z);
  host.add_wire(PortRef::bin(0), PortRef::in(id, 0));
  host.add_wire(PortRef::out(id, 0), PortRef::bout(0));
  host.add_wire(PortRef::out(id, 1), PortRef::out(id, 2));
  host.sort_wires();
  host.check_valid();

  const auto& zloop = rule_of("zw", "zloop");
  const auto ms = find_matches(zloop, {1, 1}, true, host);
  REQUIRE(ms.size() == 1);
  REQUIRE(ms[0].binding.params[0].exact.has_value());
  CHECK(*ms[0].binding.params[0].exact == ExactScalar::i());
  const Diagram out = apply_rewrite(host, ms[0], zloop);
  CHECK(out.nodes().size() == 1);
  CHECK(interp(out, Backend::exact).equal(interp(host, Backend::exact)));
}

TEST_CASE("verify_proof replays scripts and reports failures by step") {
  ProofScript ok;
  ok.initial = compose(build::h(), build::h());
  ok.steps = {{"zx-full", "h2", true, 0, {}}};
  ok.final = build::identity(1);
  ProofOptions opts;
  opts.semantic_check = true;
  const ProofReport rep = verify_proof(ok, opts);
  CHECK(rep.valid);
  CHECK(rep.steps[0].semantic_checked);
  CHECK(rep.steps[0].semantic_residual < 1e-9);

  ProofScript bad = ok;
  bad.steps[0].index = 5;  // out of range
  const ProofReport rep2 = verify_proof(bad);
  CHECK_FALSE(rep2.valid);
  CHECK(rep2.failed_step == 0);

  ProofScript wrong_final = ok;
  wrong_final.final = build::rz(Phase::pi());
  const ProofReport rep3 = verify_proof(wrong_final);
  CHECK_FALSE(rep3.valid);
  CHECK(rep3.failed_step == -1);
  CHECK_FALSE(rep3.final_matches);

  // deleting a non-isometry via a ground rule never matches
  ProofScript nomatch;
  nomatch.initial = compose(build::ground(1), build::z_spider(1, 1, Phase::pi4(1)));
  nomatch.steps = {{"zx-ground", "h", true, 0, {}}};
  nomatch.final = build::ground(1);
  const ProofReport rep4 = verify_proof(nomatch);
  CHECK_FALSE(rep4.valid);
  CHECK(rep4.failed_step == 0);
  CHECK(rep4.steps[0].matches_found == 0);
}
