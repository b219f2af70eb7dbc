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

// End-to-end acceptance suite.  Each criterion prints one pass/fail line;
// the process exits 0 only when every criterion passes.

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "test_util.hpp"
#include "zxd/axioms.hpp"
#include "zxd/builders.hpp"
#include "zxd/cpm.hpp"
#include "zxd/interp.hpp"
#include "zxd/json_io.hpp"
#include "zxd/properties.hpp"
#include "zxd/rewrite.hpp"
#include "zxd/stabilizer.hpp"

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "tests/fixtures"
#endif

using namespace zxd;

namespace {

int g_failures = 0;

struct Criterion {
  int id;
  std::string name;
  double budget_s;  // 0 = no runtime bound
};

void report(const Criterion& c, bool pass, double elapsed, const std::string& detail) {
  const bool in_budget = c.budget_s <= 0.0 || elapsed <= c.budget_s;
  const bool ok = pass && in_budget;
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %2d: %-42s %7.2fs  %s%s\n", ok ? "PASS" : "FAIL", c.id,
              c.name.c_str(), elapsed, detail.c_str(),
              !in_budget ? " (over runtime budget)" : "");
  std::fflush(stdout);
}

template <class F>
void run(const Criterion& c, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = body();
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(c, pass, dt, detail);
}

bool golden_exact(const Diagram& d, const XMat& want) {
  if (!mat_equal(interp(d, Backend::exact).exact(), want)) return false;
  const CMat flt = interp(d, Backend::floating).floating();
  return (flt - to_cmat(want)).cwiseAbs().maxCoeff() <= 1e-12;
}

XMat xmat(std::initializer_list<std::initializer_list<ExactScalar>> rows) {
  XMat m(static_cast<Eigen::Index>(rows.size()),
         static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

// ---------------------------------------------------------------------------

std::pair<bool, std::string> criterion_golden() {
  const ExactScalar o = ExactScalar::zero();
  const ExactScalar l = ExactScalar::one();
  const ExactScalar r = ExactScalar::inv_sqrt2();
  bool ok = true;
  int checked = 0;
  auto expect = [&](const Diagram& d, const XMat& want) {
    ok = ok && golden_exact(d, want);
    ++checked;
  };
  // Section 2.2 matrices.
  expect(build::h(), xmat({{r, r}, {r, -r}}));
  expect(build::s(), xmat({{l, o}, {o, ExactScalar::i()}}));
  expect(build::t(), xmat({{l, o}, {o, ExactScalar::omega_pow(1)}}));
  expect(build::cnot(), xmat({{l, o, o, o}, {o, l, o, o}, {o, o, o, l}, {o, o, l, o}}));
  expect(build::ket0(), xmat({{l}, {o}}));
  expect(dagger(build::ket0()), xmat({{l, o}}));
  // Interpretation tables.
  expect(build::cup(), xmat({{l, o, o, l}}));
  expect(build::cap(), xmat({{l}, {o}, {o}, {l}}));
  expect(build::swap_wires(), xmat({{l, o, o, o}, {o, o, l, o}, {o, l, o, o}, {o, o, o, l}}));
  for (int n = 0; n <= 2 && ok; ++n) {
    for (int m = 0; m <= 2 && ok; ++m) {
      for (int k : {0, 1, 5}) {
        const Phase a = Phase::pi4(k);
        const Eigen::Index rows = Eigen::Index{1} << m;
        const Eigen::Index cols = Eigen::Index{1} << n;
        XMat z = XMat::Constant(rows, cols, o);
        z(0, 0) = l;
        z(rows - 1, cols - 1) += ExactScalar::omega_pow(k);
        expect(build::z_spider(n, m, a), z);
        // X spider through H conjugation
        XMat hk = mat_identity<ExactScalar>(1);
        XMat hm = mat_identity<ExactScalar>(1);
        const XMat h = xmat({{r, r}, {r, -r}});
        for (int t = 0; t < n; ++t) hk = mat_kron(hk, h);
        for (int t = 0; t < m; ++t) hm = mat_kron(hm, h);
        expect(build::x_spider(n, m, a), mat_mul(hm, mat_mul(z, hk)));
      }
    }
  }
  // ZW generators.
  expect(build::z_node(1, 1, ScalarParam(ExactScalar::i())),
         xmat({{l, o}, {o, ExactScalar::i()}}));
  expect(build::w_node(1, 1), xmat({{o, l}, {l, o}}));
  expect(build::w_node(1, 2), xmat({{o, l}, {l, o}, {l, o}, {o, o}}));
  expect(build::generator(Calculus::zw, Node{NodeKind::fswap, 2, 2, std::nullopt, std::nullopt}),
         xmat({{l, o, o, o}, {o, o, l, o}, {o, l, o, o}, {o, o, o, -l}}));
  // ZH generators.
  const ExactScalar a2 = ExactScalar::from_int_pair(0, 3);
  expect(build::h_box(1, 1, ScalarParam(a2)), xmat({{l, l}, {l, a2}}));
  expect(build::generator(Calculus::zh, Node{NodeKind::not_node, 1, 1, std::nullopt, std::nullopt}),
         xmat({{o, l}, {l, o}}));
  expect(build::generator(Calculus::zh, Node{NodeKind::zh_x, 0, 1, std::nullopt, std::nullopt}),
         xmat({{r}, {o}}));
  // scalar spider 1+e^{i a}
  ok = ok && interp(build::z_spider(0, 0, Phase::pi()), Backend::exact).exact()(0, 0) ==
                 ExactScalar::zero();
  ++checked;
  return {ok, std::to_string(checked) + " generator matrices reproduced"};
}

std::pair<bool, std::string> criterion_axioms() {
  VerifyOptions opts;
  opts.samples = 25;
  opts.tol = 1e-9;
  opts.seed = 0;
  opts.max_legs = 3;
  bool ok = true;
  std::ostringstream detail;
  int rules = 0;
  for (const auto& name : library_names()) {
    const SoundnessReport rep = verify_library(name, opts);
    rules += static_cast<int>(rep.rules.size());
    if (!rep.all_sound) {
      ok = false;
      detail << name << " unsound; ";
    }
  }
  detail << rules << " rules across 7 libraries";
  return {ok, detail.str()};
}

std::pair<bool, std::string> criterion_counterexample() {
  const CliffordTCounterexample r = cliffordt_counterexample();
  const bool quotient_ok = std::abs(r.float_quotient - Complex{-0.6, 0.8}) <= 1e-12;
  return {r.ok() && quotient_ok,
          std::string("facts a,b,c ") + (r.ok() ? "hold" : "FAIL") + ", quotient (-3+4i)/5"};
}

std::pair<bool, std::string> criterion_purify() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testutil::random_circuit(rng, 4, 15, 5, true);
    const PurificationResult p = purify(c.diagram);
    if (p.pure.contains_ground()) return {false, "purified diagram still grounded"};
    // trace the ancilla outputs of the doubled purification
    const Tensor t = interp(p.pure, Backend::floating);
    const CMat traced = choi_from_pure(t.floating(), p.ancilla_count);
    const CMat direct = interpret_cpm(c.diagram, Backend::floating).to_float();
    const CMat oracle = testutil::layered_choi_oracle(c);
    worst = std::max(worst, (traced - direct).cwiseAbs().maxCoeff());
    worst = std::max(worst, (traced - oracle).cwiseAbs().maxCoeff());
  }
  std::ostringstream os;
  os << "200 diagrams, max residual " << std::scientific << worst;
  return {worst <= 1e-9, os.str()};
}

struct WitnessStats {
  int witnessed = 0;
  int refused = 0;
  int cp_violations = 0;
  double worst = 0.0;
};

WitnessStats g_witness_stats;

std::pair<bool, std::string> criterion_witness() {
  std::mt19937_64 rng(7777);
  WitnessStats st;
  // 100 positive pairs g = (1 (x) u) f
  for (int trial = 0; trial < 100; ++trial) {
    const int bq = 1 + static_cast<int>(rng() % 2);
    const int aq = 1;
    const int xq = 1 + static_cast<int>(rng() % 2);   // env of f: 2 or 4 dims
    const int zq = std::min(2, xq + static_cast<int>(rng() % 2));
    const CMat f = testutil::random_matrix(rng, Eigen::Index{1} << (bq + xq),
                                           Eigen::Index{1} << aq);
    const CMat u = testutil::random_isometry_matrix(rng, Eigen::Index{1} << zq,
                                                    Eigen::Index{1} << xq);
    const CMat g =
        mat_kron<Complex>(CMat::Identity(Eigen::Index{1} << bq, Eigen::Index{1} << bq), u) * f;
    const Tensor tf{f}, tg{CMat(g)};
    if (!cp_equal(tf, tg, xq, zq, 1e-9)) {
      ++st.cp_violations;
      continue;
    }
    const auto w = iso_witness_qubit(tf, tg, xq, zq, 1e-8);
    if (!w || !check_iso_related(tf, tg, xq, zq, *w, 1e-8)) {
      ++st.refused;
      continue;
    }
    const Eigen::Index bdim = Eigen::Index{1} << bq;
    const CMat lhs = mat_kron<Complex>(CMat::Identity(bdim, bdim), w->u) * f;
    const CMat rhs = mat_kron<Complex>(CMat::Identity(bdim, bdim), w->v) * g;
    st.worst = std::max(st.worst, (lhs - rhs).cwiseAbs().maxCoeff());
    ++st.witnessed;
  }
  // 100 negative pairs: independent maps are (almost surely) not ~CP
  int negatives_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const CMat f = testutil::random_matrix(rng, 4, 2);
    const CMat g = testutil::random_matrix(rng, 4, 2);
    if (cp_equal(Tensor(f), Tensor(CMat(g)), 1, 1, 1e-9)) continue;  // freak collision
    if (!iso_witness_qubit(Tensor(f), Tensor(CMat(g)), 1, 1, 1e-8).has_value()) {
      ++negatives_ok;
    }
  }
  g_witness_stats = st;
  std::ostringstream os;
  os << st.witnessed << "/100 witnessed (max residual " << std::scientific << st.worst
     << "), " << negatives_ok << "/100 negatives refused";
  return {st.witnessed == 100 && negatives_ok == 100 && st.worst <= 1e-8, os.str()};
}

std::pair<bool, std::string> criterion_causality() {
  std::mt19937_64 rng(31337);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = testutil::random_isometry(rng, 3, 10);
    const Diagram grounded = compose(build::ground(c.outputs), c.diagram);
    const CMat lhs = interpret_cpm(grounded, Backend::floating).to_float();
    const CMat rhs = interpret_cpm(build::ground(c.inputs), Backend::floating).to_float();
    if (lhs.rows() != rhs.rows()) return {false, "arity drift"};
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  std::ostringstream os;
  os << "100 isometric circuits, max residual " << std::scientific << worst;
  return {worst <= 1e-9, os.str()};
}

std::pair<bool, std::string> criterion_lemma3() {
  // every witnessed pair of criterion 5 was cp_equal by construction;
  // criterion_witness() counted violations.
  const auto& st = g_witness_stats;
  std::ostringstream os;
  os << st.cp_violations << " cp violations among witnessed pairs";
  return {st.witnessed == 100 && st.cp_violations == 0, os.str()};
}

std::pair<bool, std::string> criterion_stab() {
  double worst = 0.0;
  int found = 0, total = 0;
  for (int q : {1, 2}) {
    for (const XMat& s : stabilizer_states(q)) {
      ++total;
      const auto w = stab_conjugate_witness(Tensor(s));
      if (w) {
        ++found;
        worst = std::max(worst, w->residual);
      }
    }
  }
  std::ostringstream os;
  os << found << "/" << total << " states witnessed, max residual " << std::scientific
     << worst;
  return {found == total && total == 66 && worst <= 1e-10, os.str()};
}

std::pair<bool, std::string> criterion_kraus() {
  std::mt19937_64 rng(90210);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int in_q = 1 + static_cast<int>(rng() % 2);
    const int out_q = 1 + static_cast<int>(rng() % 2);
    const int anc_q = static_cast<int>(rng() % 2);
    const CMat m = testutil::random_matrix(rng, Eigen::Index{1} << (out_q + anc_q),
                                           Eigen::Index{1} << in_q);
    const SuperOp s(in_q, out_q, choi_from_pure(m, anc_q));
    const CMat a = testutil::random_matrix(rng, Eigen::Index{1} << in_q,
                                           Eigen::Index{1} << in_q);
    const DensityMatrix rho(CMat(a * a.adjoint()));
    const DensityMatrix got = apply(s, rho);

    // independent oracle: Kraus operators from the Choi eigendecomposition
    const CMat choi = s.to_float();
    Eigen::SelfAdjointEigenSolver<CMat> es(CMat((choi + choi.adjoint()) / 2.0));
    CMat want = CMat::Zero(got.rho.rows(), got.rho.cols());
    const Eigen::Index din = Eigen::Index{1} << in_q;
    const Eigen::Index dout = Eigen::Index{1} << out_q;
    for (Eigen::Index t = 0; t < es.eigenvalues().size(); ++t) {
      const double lam = es.eigenvalues()(t);
      if (lam <= 1e-12) continue;
      CMat k(dout, din);
      for (Eigen::Index i = 0; i < din; ++i) {
        for (Eigen::Index o = 0; o < dout; ++o) {
          k(o, i) = std::sqrt(lam) * es.eigenvectors()(i * dout + o, t);
        }
      }
      want += k * rho.rho * k.adjoint();
    }
    worst = std::max(worst, (got.rho - want).cwiseAbs().maxCoeff());
  }
  std::ostringstream os;
  os << "50 channel/state pairs, max residual " << std::scientific << worst;
  return {worst <= 1e-9, os.str()};
}

std::pair<bool, std::string> criterion_proofs() {
  auto load = [](const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    if (!in) throw std::invalid_argument("missing fixture " + name);
    std::ostringstream os;
    os << in.rdbuf();
    return proof_from_json(Json::parse(os.str()));
  };
  ProofOptions opts;
  opts.semantic_check = true;
  bool ok = true;
  for (const std::string name :
       {"proof_h2_cancel.json", "proof_spider_chain.json", "proof_ground_cnot.json"}) {
    const ProofReport rep = verify_proof(load(name), opts);
    ok = ok && rep.valid;
  }
  const ProofReport bad = verify_proof(load("proof_corrupted.json"), opts);
  ok = ok && !bad.valid && bad.failed_step == 1;
  return {ok, "3 scripts valid, corrupted script fails at step 1"};
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  run({1, "generator golden tests", 5.0}, criterion_golden);
  run({2, "axiom soundness, all 7 libraries", 60.0}, criterion_axioms);
  run({3, "Clifford+T counterexample", 1.0}, criterion_counterexample);
  run({4, "purification round-trip, 200 diagrams", 0.0}, criterion_purify);
  run({5, "Stinespring witnesses, 100+100 pairs", 0.0}, criterion_witness);
  run({6, "causality of isometries, 100 circuits", 0.0}, criterion_causality);
  run({7, "~iso implies ~CP on witnessed pairs", 0.0}, criterion_lemma3);
  run({8, "stabilizer conjugation witnesses, 6+60", 60.0}, criterion_stab);
  run({9, "apply vs Kraus oracle, 50 pairs", 0.0}, criterion_kraus);
  run({10, "proof checker end-to-end fixtures", 0.0}, criterion_proofs);
  if (g_failures == 0) {
    std::printf("all 10 acceptance criteria pass\n");
    return 0;
  }
  std::printf("%d criterion(s) FAILED\n", g_failures);
  return 1;
}
