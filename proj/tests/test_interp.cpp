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

namespace {

XMat xm(std::initializer_list<std::initializer_list<ExactScalar>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = static_cast<Eigen::Index>(rows.begin()->size());
  XMat m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

const ExactScalar o = ExactScalar::zero();
const ExactScalar l = ExactScalar::one();
const ExactScalar r2 = ExactScalar::inv_sqrt2();

}  // namespace

TEST_CASE("golden: Hadamard") {
  const Tensor t = interp(build::h(), Backend::exact);
  CHECK(mat_equal(t.exact(), xm({{r2, r2}, {r2, -r2}})));
}

TEST_CASE("golden: S, T, CNot, ket0") {
  CHECK(mat_equal(interp(build::s(), Backend::exact).exact(),
                  xm({{l, o}, {o, ExactScalar::i()}})));
  CHECK(mat_equal(interp(build::t(), Backend::exact).exact(),
                  xm({{l, o}, {o, ExactScalar::omega_pow(1)}})));
  CHECK(mat_equal(interp(build::cnot(), Backend::exact).exact(),
                  xm({{l, o, o, o}, {o, l, o, o}, {o, o, o, l}, {o, o, l, o}})));
  CHECK(mat_equal(interp(build::ket0(), Backend::exact).exact(), xm({{l}, {o}})));
  CHECK(mat_equal(interp(build::ket1(), Backend::exact).exact(), xm({{o}, {l}})));
  // bra0 via the dagger
  CHECK(mat_equal(interp(dagger(build::ket0()), Backend::exact).exact(), xm({{l, o}})));
}

TEST_CASE("golden: cup, cap, swap, empty") {
  CHECK(mat_equal(interp(build::cup(), Backend::exact).exact(), xm({{l, o, o, l}})));
  CHECK(mat_equal(interp(build::cap(), Backend::exact).exact(), xm({{l}, {o}, {o}, {l}})));
  CHECK(mat_equal(interp(build::swap_wires(), Backend::exact).exact(),
                  xm({{l, o, o, o}, {o, o, l, o}, {o, l, o, o}, {o, o, o, l}})));
  CHECK(mat_equal(interp(Diagram(Calculus::zx), Backend::exact).exact(), xm({{l}})));
}

TEST_CASE("golden: spiders") {
  CHECK(mat_equal(interp(build::z_spider(1, 1, Phase::zero()), Backend::exact).exact(),
                  mat_identity<ExactScalar>(2)));
  // scalar spider: 1 + e^{i pi} = 0
  CHECK(interp(build::z_spider(0, 0, Phase::pi()), Backend::exact).exact()(0, 0) ==
        ExactScalar::zero());
  // Z spider corner form at (2,2)
  const XMat z22 = interp(build::z_spider(2, 2, Phase::pi4(1)), Backend::exact).exact();
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = 0; j < 4; ++j) {
      ExactScalar want = ExactScalar::zero();
      if (i == 0 && j == 0) want = ExactScalar::one();
      if (i == 3 && j == 3) want = ExactScalar::omega_pow(1);
      CHECK(z22(i, j) == want);
    }
  }
}

TEST_CASE("X spider equals the H-conjugated Z spider up to (2,2)") {
  for (int n = 0; n <= 2; ++n) {
    for (int m = 0; m <= 2; ++m) {
      const Phase a = Phase::pi4(3);
      const XMat x = interp(build::x_spider(n, m, a), Backend::exact).exact();
      XMat z = interp(build::z_spider(n, m, a), Backend::exact).exact();
      XMat hn = mat_identity<ExactScalar>(1);
      XMat hm = mat_identity<ExactScalar>(1);
      const XMat h = interp(build::h(), Backend::exact).exact();
      for (int k = 0; k < n; ++k) hn = mat_kron(hn, h);
      for (int k = 0; k < m; ++k) hm = mat_kron(hm, h);
      CHECK(mat_equal(x, mat_mul(hm, mat_mul(z, hn))));
    }
  }
}

TEST_CASE("golden: ZW generators") {
  // Z node corners
  const XMat zn =
      interp(build::z_node(1, 1, ScalarParam(ExactScalar::i())), Backend::exact).exact();
  CHECK(mat_equal(zn, xm({{l, o}, {o, ExactScalar::i()}})));
  // W(1,1) is NOT, W(1,2) per the table
  CHECK(mat_equal(interp(build::w_node(1, 1), Backend::exact).exact(),
                  xm({{o, l}, {l, o}})));
  CHECK(mat_equal(interp(build::w_node(1, 2), Backend::exact).exact(),
                  xm({{o, l}, {l, o}, {l, o}, {o, o}})));
  // fermionic swap: -1 at (3,3)
  const XMat f = interp(build::generator(Calculus::zw,
                                         Node{NodeKind::fswap, 2, 2, std::nullopt,
                                              std::nullopt}),
                        Backend::exact)
                     .exact();
  CHECK(mat_equal(f, xm({{l, o, o, o}, {o, o, l, o}, {o, l, o, o}, {o, o, o, -l}})));
}

TEST_CASE("golden: ZH generators") {
  const ExactScalar a = ExactScalar::from_int_pair(2, 1);
  const XMat hb = interp(build::h_box(1, 1, ScalarParam(a)), Backend::exact).exact();
  CHECK(mat_equal(hb, xm({{l, l}, {l, a}})));
  CHECK(mat_equal(interp(build::generator(Calculus::zh, Node{NodeKind::not_node, 1, 1,
                                                             std::nullopt, std::nullopt}),
                         Backend::exact)
                      .exact(),
                  xm({{o, l}, {l, o}})));
  // ZH X spider carries the explicit 1/2: X(0,1) = |0>/sqrt(2)
  const XMat x01 = interp(build::generator(Calculus::zh, Node{NodeKind::zh_x, 0, 1,
                                                              std::nullopt, std::nullopt}),
                          Backend::exact)
                       .exact();
  CHECK(mat_equal(x01, xm({{r2}, {o}})));
}

TEST_CASE("interp rejects ground and inexact parameters on the exact backend") {
  CHECK_THROWS_AS((void)interp(build::ground(1), Backend::exact), std::invalid_argument);
  const Diagram d = build::rz(Phase::radians(0.3));
  CHECK_FALSE(exactly_representable(d));
  CHECK_THROWS_AS((void)interp(d, Backend::exact), std::domain_error);
  CHECK(interp(d, Backend::floating).rows() == 2);
}

TEST_CASE("functoriality on random circuits") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 15; ++i) {
    const auto c1 = testutil::random_circuit(rng, 3, 10, 0, false);
    const auto c2 = testutil::random_circuit(rng, 3, 10, 0, false);
    const Tensor t1 = interp(c1.diagram, Backend::floating);
    const Tensor t2 = interp(c2.diagram, Backend::floating);
    CHECK(interp(tensor(c1.diagram, c2.diagram), Backend::floating)
              .equal(tensor_kron(t1, t2), 1e-9));
    if (c1.outputs == c2.inputs) {
      CHECK(interp(compose(c2.diagram, c1.diagram), Backend::floating)
                .equal(tensor_mul(t2, t1), 1e-9));
    }
  }
}

TEST_CASE("exact and float backends agree on pi/4 circuits") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 15; ++i) {
    const auto c = testutil::random_circuit(rng, 4, 20, 0, false);
    const CMat exact = to_cmat(interp(c.diagram, Backend::exact).exact());
    const CMat flt = interp(c.diagram, Backend::floating).floating();
    CHECK((exact - flt).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("contraction order independence") {
  // The same cz gadget entered in two different node orders.
  auto build_cz = [](bool reorder) {
    Diagram d(Calculus::zx);
    d.set_boundary(2, 2);
    Node zs;
    zs.kind = NodeKind::z_spider;
    zs.n_in = 1;
    zs.m_out = 2;
    zs.phase = Phase::zero();
    Node h;
    h.kind = NodeKind::hadamard;
    h.n_in = 1;
    h.m_out = 1;
    std::int32_t z1, z2, hh;
    if (reorder) {
      hh = d.add_node(h);
      z2 = d.add_node(zs);
      z1 = d.add_node(zs);
    } else {
      z1 = d.add_node(zs);
      z2 = d.add_node(zs);
      hh = d.add_node(h);
    }
    d.add_wire(PortRef::bin(0), PortRef::in(z1, 0));
    d.add_wire(PortRef::out(z1, 0), PortRef::bout(0));
    d.add_wire(PortRef::bin(1), PortRef::in(z2, 0));
    d.add_wire(PortRef::out(z2, 0), PortRef::bout(1));
    d.add_wire(PortRef::out(z1, 1), PortRef::in(hh, 0));
    d.add_wire(PortRef::out(hh, 0), PortRef::out(z2, 1));
    d.sort_wires();
    return d;
  };
  CHECK(interp(build_cz(false), Backend::exact).equal(interp(build_cz(true), Backend::exact)));
}

TEST_CASE("mat helpers") {
  const XMat h = interp(build::h(), Backend::exact).exact();
  CHECK(mat_equal(mat_mul(h, h), mat_identity<ExactScalar>(2)));
  CHECK(mat_equal(mat_kron(mat_identity<ExactScalar>(2), mat_identity<ExactScalar>(2)),
                  mat_identity<ExactScalar>(4)));
  const XMat t = interp(build::t(), Backend::exact).exact();
  CHECK(mat_equal(mat_mul(mat_dagger(t), t), mat_identity<ExactScalar>(2)));
}

TEST_CASE("equal up to global phase") {
  const CMat id = CMat::Identity(2, 2);
  const auto minus = equal_up_to_global_phase(CMat(-id), id);
  REQUIRE(minus.has_value());
  CHECK(std::abs(*minus - Complex{-1.0, 0.0}) < 1e-12);
  const CMat h = interp(build::h(), Backend::floating).floating();
  const auto one = equal_up_to_global_phase(h, h);
  REQUIRE(one.has_value());
  CHECK(std::abs(*one - Complex{1.0, 0.0}) < 1e-12);
  const CMat z = interp(build::z_spider(1, 1, Phase::pi2(1)), Backend::floating).floating();
  const CMat x = interp(build::x_spider(1, 1, Phase::pi2(1)), Backend::floating).floating();
  CHECK_FALSE(equal_up_to_global_phase(z, x).has_value());
  // exact flavour
  const XMat he = interp(build::h(), Backend::exact).exact();
  XMat whe = he;
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index j = 0; j < 2; ++j) whe(i, j) = whe(i, j) * ExactScalar::omega_pow(3);
  }
  const auto lam = equal_up_to_global_phase(whe, he);
  REQUIRE(lam.has_value());
  CHECK(*lam == ExactScalar::omega_pow(3));
}

TEST_CASE("global phase builder is exact in all calculi") {
  for (const Calculus c : {Calculus::zx, Calculus::zw, Calculus::zh}) {
    const Tensor t = interp(build::global_phase(Phase::pi4(5), c), Backend::exact);
    CHECK(t.exact()(0, 0) == ExactScalar::omega_pow(5));
  }
}

TEST_CASE("cross-calculus builders agree") {
  for (const Calculus c : {Calculus::zw, Calculus::zh}) {
    for (const auto& make : {build::h, build::ket0, build::ket1, build::s, build::t,
                             build::cz}) {
      const Tensor a = interp(make(Calculus::zx), Backend::exact);
      const Tensor b = interp(make(c), Backend::exact);
      CHECK(a.equal(b));
    }
  }
  CHECK(interp(build::cnot(Calculus::zh), Backend::exact)
            .equal(interp(build::cnot(Calculus::zx), Backend::exact)));
  CHECK_THROWS_AS(build::cnot(Calculus::zw), std::invalid_argument);
}
