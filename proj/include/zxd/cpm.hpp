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

#pragma once

#include <variant>

#include "zxd/diagram.hpp"
#include "zxd/interp.hpp"
#include "zxd/tensor.hpp"

namespace zxd {

/**
 * A completely positive map stored as its Choi matrix.
 *
 * Convention: for a map with n input and m output qubits the Choi matrix
 * is 2^{n+m} x 2^{n+m} with row index (i, k) = i * 2^m + k, i an input
 * basis index and k an output basis index (bit order as in Tensor):
 *
 *     choi[(i,k),(j,l)] = <k| S(|i><j|) |l>
 *
 * For S(rho) = M rho M^dag this is vec(M) vec(M)^dag under column-stacking
 * vectorization.  CP maps built here are of the form
 * rho -> tr_anc(M rho M^dag), so the Choi matrix is PSD by construction.
 */
class SuperOp {
 public:
  SuperOp() : n_(0), m_(0), choi_(CMat(CMat::Constant(1, 1, Complex{1.0, 0.0}))) {}
  SuperOp(int in_qubits, int out_qubits, XMat choi)
      : n_(in_qubits), m_(out_qubits), choi_(std::move(choi)) {
    check_dims();
  }
  SuperOp(int in_qubits, int out_qubits, CMat choi)
      : n_(in_qubits), m_(out_qubits), choi_(std::move(choi)) {
    check_dims();
  }

  int in_qubits() const { return n_; }
  int out_qubits() const { return m_; }
  Backend backend() const {
    return std::holds_alternative<XMat>(choi_) ? Backend::exact : Backend::floating;
  }
  const XMat& exact() const { return std::get<XMat>(choi_); }
  const CMat& floating() const { return std::get<CMat>(choi_); }
  CMat to_float() const {
    return backend() == Backend::exact ? to_cmat(exact()) : floating();
  }

  bool equal(const SuperOp& o, double tol = 1e-9) const;

 private:
  void check_dims() const;
  int n_, m_;
  std::variant<XMat, CMat> choi_;
};

struct DensityMatrix {
  CMat rho;  // Hermitian PSD; the trace is recorded, not forced to 1

  explicit DensityMatrix(CMat m);
  int qubits() const;
  double trace() const { return rho.trace().real(); }
};

/// Choi matrix of rho -> tr_anc(M rho M^dag); the ancilla wires are the
/// trailing (least significant) anc_qubits output wires of M.
template <class S>
Mat<S> choi_from_pure(const Mat<S>& m, int anc_qubits);

/// The doubled map rho -> M rho M^dag of a pure tensor.
SuperOp double_pure(const Tensor& m);

/// CPM semantics of a diagram (ground allowed): purify, double, then trace
/// out the ancilla outputs.  For ground-free diagrams this is double_pure
/// of the standard interpretation.
SuperOp interpret_cpm(const Diagram& d, Backend backend);
/// Backend auto-selection: exact when representable.
SuperOp interpret_cpm(const Diagram& d);

/// Choi contraction: sigma[k,l] = sum_{ij} choi[(i,k),(j,l)] rho[i,j].
DensityMatrix apply(const SuperOp& s, const DensityMatrix& rho);

/// The ~CP relation on pure morphisms f: A -> B (x) X, g: A -> B (x) Y
/// with X and Y the trailing split_f / split_g output wires: equality of
/// tr_X double(f) and tr_Y double(g).
bool cp_equal(const Tensor& f, const Tensor& g, int split_f, int split_g,
              double tol = 1e-9);
bool cp_equal(const Diagram& f, const Diagram& g, int split_f, int split_g,
              double tol = 1e-9);

/// Trace of the output space: tr_out(choi), a 2^n x 2^n matrix.  The map
/// is causal (trace-preserving) iff this is the identity.
CMat output_trace(const SuperOp& s);

}  // namespace zxd
