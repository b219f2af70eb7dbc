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

#include "zxd/properties.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace zxd {

PurificationResult purify(const Diagram& d) {
  d.check_valid();
  PurificationResult res{Diagram(d.calculus()), 0, {}};
  Diagram& out = res.pure;

  std::vector<std::int32_t> new_id(d.nodes().size(), -1);
  std::vector<std::int32_t> anc_index(d.nodes().size(), -1);
  for (std::size_t id = 0; id < d.nodes().size(); ++id) {
    const Node& n = d.nodes()[id];
    if (n.kind == NodeKind::ground) {
      anc_index[id] = res.ancilla_count++;
      res.placement.emplace_back(static_cast<std::int32_t>(id), anc_index[id]);
    } else {
      new_id[id] = out.add_node(n);
    }
  }
  out.set_boundary(d.num_inputs(), d.num_outputs() + res.ancilla_count);

  auto map_port = [&](PortRef p) -> PortRef {
    if (p.is_boundary()) return p;
    const Node& n = d.nodes()[static_cast<std::size_t>(p.node)];
    if (n.kind == NodeKind::ground) {
      return PortRef::bout(d.num_outputs() + anc_index[static_cast<std::size_t>(p.node)]);
    }
    p.node = new_id[static_cast<std::size_t>(p.node)];
    return p;
  };
  for (const Wire& w : d.wires()) out.add_wire(map_port(w.a), map_port(w.b));
  out.sort_wires();
  return res;
}

bool is_isometry(const Diagram& d, double tol) {
  if (d.contains_ground()) {
    throw std::invalid_argument("is_isometry: diagram contains ground");
  }
  const Tensor t = interp(d);
  if (t.backend() == Backend::exact) {
    const XMat m = t.exact();
    return mat_equal(mat_mul(mat_dagger(m), m), mat_identity<ExactScalar>(m.cols()));
  }
  const CMat m = t.floating();
  return mat_equal(mat_mul(mat_dagger(m), m), mat_identity<Complex>(m.cols()), tol);
}

bool is_causal(const Diagram& d, double tol) {
  const SuperOp s = interpret_cpm(d);
  if (s.backend() == Backend::exact) {
    // output_trace computes in float; redo the trace exactly.
    const XMat& choi = s.exact();
    const Eigen::Index din = Eigen::Index{1} << s.in_qubits();
    const Eigen::Index dout = Eigen::Index{1} << s.out_qubits();
    XMat t = XMat::Constant(din, din, ExactScalar::zero());
    for (Eigen::Index i = 0; i < din; ++i) {
      for (Eigen::Index j = 0; j < din; ++j) {
        for (Eigen::Index k = 0; k < dout; ++k) {
          t(i, j) += choi(i * dout + k, j * dout + k);
        }
      }
    }
    return mat_equal(t, mat_identity<ExactScalar>(din));
  }
  return mat_equal(output_trace(s), mat_identity<Complex>(Eigen::Index{1} << s.in_qubits()),
                   tol);
}

namespace {

int ceil_log2(Eigen::Index n) {
  int k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

struct Dilation {
  std::vector<CMat> kraus;  // orthogonal Kraus operators, tr(Ks^dag Kt) = lam_t delta
  std::vector<double> lam;
};

// Canonical dilation of the channel tr_anc(F rho F^dag) from the
// eigendecomposition of its Choi matrix.
Dilation canonical_dilation(const CMat& choi, Eigen::Index dout, Eigen::Index din) {
  CMat herm = (choi + choi.adjoint().eval()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(herm);
  Dilation dil;
  const double lmax = es.eigenvalues().size() ? es.eigenvalues().cwiseAbs().maxCoeff() : 0.0;
  const double cutoff = 1e-8 * std::max(lmax, 1e-300);
  for (Eigen::Index t = es.eigenvalues().size() - 1; t >= 0; --t) {
    const double lam = es.eigenvalues()(t);
    if (lam <= cutoff) continue;
    const auto vec = es.eigenvectors().col(t);
    CMat k(dout, din);
    for (Eigen::Index i = 0; i < din; ++i) {
      for (Eigen::Index kk = 0; kk < dout; ++kk) {
        k(kk, i) = std::sqrt(lam) * vec(i * dout + kk);
      }
    }
    dil.kraus.push_back(std::move(k));
    dil.lam.push_back(lam);
  }
  return dil;
}

// Environment factor w with F = (1_B (x) w) P, recovered by projecting the
// slices of F onto the orthogonal Kraus basis.
CMat environment_factor(const CMat& f, Eigen::Index env, const Dilation& dil) {
  const Eigen::Index din = f.cols();
  const Eigen::Index dout = f.rows() / env;
  const auto r = static_cast<Eigen::Index>(dil.kraus.size());
  CMat w(env, r);
  for (Eigen::Index e = 0; e < env; ++e) {
    CMat slice(dout, din);
    for (Eigen::Index k = 0; k < dout; ++k) {
      for (Eigen::Index i = 0; i < din; ++i) slice(k, i) = f(k * env + e, i);
    }
    for (Eigen::Index t = 0; t < r; ++t) {
      w(e, t) = (dil.kraus[static_cast<std::size_t>(t)].adjoint() * slice).trace() /
                dil.lam[static_cast<std::size_t>(t)];
    }
  }
  return w;
}

// Isometry u: X -> Z with u w = q, built as q w^dag plus an orthonormal
// extension of the complement of range(w) into the complement of range(q).
CMat complete_isometry(const CMat& w, const CMat& q, Eigen::Index zdim) {
  const Eigen::Index x = w.rows();
  const Eigen::Index r = w.cols();
  if (r == 0) {
    // Zero map: any isometry will do; use the canonical embedding.
    CMat u = CMat::Zero(zdim, x);
    for (Eigen::Index c = 0; c < x; ++c) u(c, c) = 1.0;
    return u;
  }
  CMat u = q * w.adjoint();
  if (x > r) {
    // Orthonormal basis of the complement of range(w) in X.
    Eigen::HouseholderQR<CMat> qr(w);
    CMat full = qr.householderQ() * CMat::Identity(x, x);
    CMat p = full.rightCols(x - r);
    CMat qprime = CMat::Zero(zdim, x - r);
    for (Eigen::Index c = 0; c < x - r; ++c) qprime(r + c, c) = 1.0;
    u += qprime * p.adjoint();
  }
  return u;
}

std::pair<Eigen::Index, Eigen::Index> split_dims(const Tensor& t, int split) {
  if (split < 0 || split > t.out_qubits()) {
    throw std::invalid_argument("iso witness: ancilla split exceeds output arity");
  }
  const Eigen::Index env = Eigen::Index{1} << split;
  const Eigen::Index kept = Eigen::Index{1} << (t.out_qubits() - split);
  return {kept, env};
}

}  // namespace

std::optional<IsoWitness> iso_witness_qubit(const Tensor& f, const Tensor& g, int split_f,
                                            int split_g, double tol) {
  const auto [bf, x] = split_dims(f, split_f);
  const auto [bg, y] = split_dims(g, split_g);
  if (bf != bg || f.cols() != g.cols()) {
    throw std::invalid_argument("iso witness: boundary mismatch on A or B");
  }
  if (!cp_equal(f, g, split_f, split_g, tol)) return std::nullopt;

  const CMat fm = f.to_float();
  const CMat gm = g.to_float();
  const CMat choi = choi_from_pure(fm, split_f);
  const Dilation dil = canonical_dilation(choi, bf, fm.cols());
  const auto r = static_cast<Eigen::Index>(dil.kraus.size());

  const Eigen::Index zdim =
      std::max({x, y, Eigen::Index{1} << ceil_log2(std::max<Eigen::Index>(r, 1))});
  CMat q = CMat::Zero(zdim, r);
  for (Eigen::Index t = 0; t < r; ++t) q(t, t) = 1.0;

  const CMat wf = environment_factor(fm, x, dil);
  const CMat wg = environment_factor(gm, y, dil);
  IsoWitness wit{complete_isometry(wf, q, zdim), complete_isometry(wg, q, zdim)};
  if (!check_iso_related(f, g, split_f, split_g, wit, tol)) return std::nullopt;
  return wit;
}

std::optional<IsoWitness> iso_witness_qubit(const Diagram& f, const Diagram& g, int split_f,
                                            int split_g, double tol) {
  return iso_witness_qubit(interp(f, Backend::floating), interp(g, Backend::floating),
                           split_f, split_g, tol);
}

bool check_iso_related(const Tensor& f, const Tensor& g, int split_f, int split_g,
                       const IsoWitness& w, double tol) {
  const auto [bf, x] = split_dims(f, split_f);
  const auto [bg, y] = split_dims(g, split_g);
  if (bf != bg || f.cols() != g.cols()) return false;
  if (w.u.cols() != x || w.v.cols() != y || w.u.rows() != w.v.rows()) return false;
  if (!mat_equal(CMat(w.u.adjoint() * w.u), CMat(CMat::Identity(x, x)), tol)) return false;
  if (!mat_equal(CMat(w.v.adjoint() * w.v), CMat(CMat::Identity(y, y)), tol)) return false;
  const CMat lhs = mat_kron<Complex>(CMat::Identity(bf, bf), w.u) * f.to_float();
  const CMat rhs = mat_kron<Complex>(CMat::Identity(bg, bg), w.v) * g.to_float();
  return mat_equal(lhs, rhs, tol);
}

bool check_iso_related(const Diagram& f, const Diagram& g, int split_f, int split_g,
                       const IsoWitness& w, double tol) {
  return check_iso_related(interp(f, Backend::floating), interp(g, Backend::floating),
                           split_f, split_g, w, tol);
}

CliffordTCounterexample cliffordt_counterexample() {
  CliffordTCounterexample r{ExactScalar::from_int_pair(1, 2),
                            ExactScalar::from_int_pair(1, -2),
                            /*in_ring=*/false,
                            /*cp_related=*/false,
                            /*quotient_in_ring=*/true,
                            Complex{0.0, 0.0}};
  r.in_ring = r.phi.conj() == r.phi_conj &&
              std::abs(r.phi.to_complex() - Complex{1.0, 2.0}) < 1e-12;

  XMat fm(1, 1), gm(1, 1);
  fm(0, 0) = r.phi;
  gm(0, 0) = r.phi_conj;
  r.cp_related = cp_equal(Tensor(fm), Tensor(gm), 0, 0);

  r.quotient_in_ring = r.phi.divide_exact(r.phi_conj).has_value();
  r.float_quotient = r.phi.to_complex() / r.phi_conj.to_complex();
  return r;
}

}  // namespace zxd
