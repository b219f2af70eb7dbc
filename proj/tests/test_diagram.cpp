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
#include "zxd/interp.hpp"

using namespace zxd;

TEST_CASE("compose fuses wires through the junction") {
  const Diagram id1 = build::identity(1);
  const Diagram c = compose(id1, id1);
  CHECK(c.structurally_equal(id1));

  // node counts add
  const Diagram hh = compose(build::h(), build::h());
  CHECK(hh.nodes().size() == 2);
  CHECK(interp(hh, Backend::exact).equal(interp(build::identity(1), Backend::exact)));
}

TEST_CASE("compose error paths") {
  CHECK_THROWS_AS(compose(build::h(), build::identity(2)), std::invalid_argument);
  CHECK_THROWS_AS(compose(build::h(Calculus::zh), build::h(Calculus::zx)),
                  std::invalid_argument);
}

TEST_CASE("closed loops materialize as a traced identity") {
  const Diagram circle = compose(build::cup(), build::cap());
  CHECK(circle.nodes().size() == 1);
  CHECK(circle.wires().size() == 1);
  const Tensor t = interp(circle, Backend::exact);
  CHECK(t.exact()(0, 0) == ExactScalar(2));
}

TEST_CASE("tensor concatenates boundaries, d1 first") {
  CHECK(tensor(build::identity(1), build::identity(1))
            .structurally_equal(build::identity(2)));
  CHECK(tensor(build::ground(1), build::ground(1)).structurally_equal(build::ground(2)));
  // interp(tensor) = kron
  const Tensor th = interp(build::h(), Backend::exact);
  const Tensor thh = interp(tensor(build::h(), build::h()), Backend::exact);
  CHECK(thh.equal(tensor_kron(th, th)));
}

TEST_CASE("dagger mirrors the diagram") {
  CHECK(dagger(build::h()).structurally_equal(build::h()));
  const Diagram zs = build::z_spider(1, 2, Phase::pi4(1));
  const Diagram zd = dagger(zs);
  CHECK(zd.nodes()[0].n_in == 2);
  CHECK(zd.nodes()[0].m_out == 1);
  CHECK(*zd.nodes()[0].phase == Phase::pi4(-1));
  CHECK_THROWS_AS(dagger(build::ground(1)), std::invalid_argument);
}

TEST_CASE("dagger is involutive on random ground-free circuits") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto c = testutil::random_circuit(rng, 3, 12, 0, /*allow_ground=*/false);
    CHECK(dagger(dagger(c.diagram)).structurally_equal(c.diagram));
    // semantics: interp(dagger) = dagger(interp)
    const Tensor t = interp(c.diagram, Backend::floating);
    const Tensor td = interp(dagger(c.diagram), Backend::floating);
    CHECK(td.equal(tensor_dagger(t), 1e-9));
  }
}

TEST_CASE("conjugate negates phases in place") {
  CHECK(conjugate(build::h()).structurally_equal(build::h()));
  const Diagram s = build::z_spider(0, 0, Phase::pi2(1));
  const Tensor t = interp(conjugate(s), Backend::exact);
  CHECK(t.exact()(0, 0) == ExactScalar::one() - ExactScalar::i());  // conj(1 + i)
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto c = testutil::random_circuit(rng, 3, 12, 2, true);
    CHECK(conjugate(conjugate(c.diagram)).structurally_equal(c.diagram));
  }
  // interp(conjugate(d)) = conj(interp(d))
  const auto c = testutil::random_circuit(rng, 3, 12, 0, false);
  CHECK(interp(conjugate(c.diagram), Backend::floating)
            .equal(tensor_conj(interp(c.diagram, Backend::floating)), 1e-12));
}

TEST_CASE("validate reports violations as data") {
  CHECK(build::identity(2).validate().empty());

  Diagram dangling(Calculus::zx);
  Node n;
  n.kind = NodeKind::z_spider;
  n.n_in = 1;
  n.m_out = 1;
  n.phase = Phase::zero();
  dangling.add_node(n);
  dangling.set_boundary(1, 1);
  dangling.add_wire(PortRef::bin(0), PortRef::in(0, 0));
  dangling.add_wire(PortRef::out(0, 0), PortRef::bout(0));
  CHECK(dangling.validate().empty());
  Diagram bad = dangling;
  bad.set_boundary(1, 2);  // bout(1) now dangles
  const auto v = bad.validate();
  REQUIRE_FALSE(v.empty());
  CHECK(to_string(v[0].kind) == "DanglingPort");

  Diagram wrong(Calculus::zx);
  Node hb;
  hb.kind = NodeKind::h_box;
  hb.n_in = 0;
  hb.m_out = 0;
  hb.param = ScalarParam::integer(-1);
  wrong.add_node(hb);
  bool calculus_mismatch = false;
  for (const auto& violation : wrong.validate()) {
    calculus_mismatch |= violation.kind == Violation::Kind::calculus_mismatch;
  }
  CHECK(calculus_mismatch);
}

TEST_CASE("isomorphic equality is invariant under node renaming") {
  Diagram a(Calculus::zx);
  Node h;
  h.kind = NodeKind::hadamard;
  h.n_in = 1;
  h.m_out = 1;
  Node z;
  z.kind = NodeKind::z_spider;
  z.n_in = 1;
  z.m_out = 1;
  z.phase = Phase::pi4(1);
  a.set_boundary(1, 1);
  a.add_node(h);
  a.add_node(z);
  a.add_wire(PortRef::bin(0), PortRef::in(0, 0));
  a.add_wire(PortRef::out(0, 0), PortRef::in(1, 0));
  a.add_wire(PortRef::out(1, 0), PortRef::bout(0));

  Diagram b(Calculus::zx);
  b.set_boundary(1, 1);
  b.add_node(z);
  b.add_node(h);
  b.add_wire(PortRef::bin(0), PortRef::in(1, 0));
  b.add_wire(PortRef::out(1, 0), PortRef::in(0, 0));
  b.add_wire(PortRef::out(0, 0), PortRef::bout(0));

  CHECK_FALSE(a.structurally_equal(b));
  CHECK(a.isomorphic(b));
  CHECK_FALSE(a.isomorphic(build::h()));
}

TEST_CASE("swap composed with swap is the identity semantically") {
  const Diagram ss = compose(build::swap_wires(), build::swap_wires());
  CHECK(interp(ss, Backend::exact).equal(interp(build::identity(2), Backend::exact)));
}

TEST_CASE("snake equations hold semantically") {
  // (1 (x) cup) . (cap (x) 1) = 1
  const Diagram lhs = compose(tensor(build::identity(1), build::cup()),
                              tensor(build::cap(), build::identity(1)));
  CHECK(interp(lhs, Backend::exact).equal(interp(build::identity(1), Backend::exact)));
  const Diagram rhs = compose(tensor(build::cup(), build::identity(1)),
                              tensor(build::identity(1), build::cap()));
  CHECK(interp(rhs, Backend::exact).equal(interp(build::identity(1), Backend::exact)));
}
