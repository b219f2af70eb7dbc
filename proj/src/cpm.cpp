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

#include "zxd/cpm.hpp"

#include <stdexcept>

#include "zxd/properties.hpp"

namespace zxd {

void SuperOp::check_dims() const {
  const Eigen::Index want = Eigen::Index{1} << (n_ + m_);
  const auto [rows, cols] = std::visit(
      [](const auto& m) { return std::pair(m.rows(), m.cols()); }, choi_);
  if (rows != want || cols != want) {
    throw std::invalid_argument("SuperOp: Choi dimension does not match qubit counts");
  }
}

bool SuperOp::equal(const SuperOp& o, double tol) const {
  if (n_ != o.n_ || m_ != o.m_) return false;
  if (backend() == Backend::exact && o.backend() == Backend::exact) {
    return mat_equal(exact(), o.exact());
  }
  return mat_equal(to_float(), o.to_float(), tol);
}

DensityMatrix::DensityMatrix(CMat m) : rho(std::move(m)) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("DensityMatrix: not square");
  if ((rho - rho.adjoint().eval()).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
}

int DensityMatrix::qubits() const {
  int k = 0;
  while ((Eigen::Index{1} << k) < rho.rows()) ++k;
  return k;
}

template <class S>
Mat<S> choi_from_pure(const Mat<S>& m, int anc_qubits) {
  const Eigen::Index anc = Eigen::Index{1} << anc_qubits;
  if (m.rows() % anc != 0) throw std::invalid_argument("choi_from_pure: bad ancilla split");
  const Eigen::Index rows_kept = m.rows() / anc;
  const Eigen::Index cols = m.cols();
  const Eigen::Index dim = cols * rows_kept;
  Mat<S> choi = Mat<S>::Constant(dim, dim, ScalarOps<S>::zero());
  for (Eigen::Index i = 0; i < cols; ++i) {
    for (Eigen::Index k = 0; k < rows_kept; ++k) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index l = 0; l < rows_kept; ++l) {
          S acc = ScalarOps<S>::zero();
          for (Eigen::Index e = 0; e < anc; ++e) {
            acc += m(k * anc + e, i) * ScalarOps<S>::conj(m(l * anc + e, j));
          }
          choi(i * rows_kept + k, j * rows_kept + l) = acc;
        }
      }
    }
  }
  return choi;
}

template Mat<Complex> choi_from_pure<Complex>(const Mat<Complex>&, int);
template Mat<ExactScalar> choi_from_pure<ExactScalar>(const Mat<ExactScalar>&, int);

SuperOp double_pure(const Tensor& m) {
  if (m.backend() == Backend::exact) {
    return SuperOp(m.in_qubits(), m.out_qubits(), choi_from_pure(m.exact(), 0));
  }
  return SuperOp(m.in_qubits(), m.out_qubits(), choi_from_pure(m.floating(), 0));
}

SuperOp interpret_cpm(const Diagram& d, Backend backend) {
  const PurificationResult pur = purify(d);
  const Tensor t = interp(pur.pure, backend);
  const int m_kept = t.out_qubits() - pur.ancilla_count;
  if (backend == Backend::exact) {
    return SuperOp(t.in_qubits(), m_kept, choi_from_pure(t.exact(), pur.ancilla_count));
  }
  return SuperOp(t.in_qubits(), m_kept, choi_from_pure(t.floating(), pur.ancilla_count));
}

SuperOp interpret_cpm(const Diagram& d) {
  return interpret_cpm(d, exactly_representable(d) ? Backend::exact : Backend::floating);
}

DensityMatrix apply(const SuperOp& s, const DensityMatrix& rho) {
  const Eigen::Index din = Eigen::Index{1} << s.in_qubits();
  const Eigen::Index dout = Eigen::Index{1} << s.out_qubits();
  if (rho.rho.rows() != din) {
    throw std::invalid_argument("apply: density matrix dimension mismatch");
  }
  const CMat choi = s.to_float();
  CMat sigma = CMat::Zero(dout, dout);
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      const Complex r = rho.rho(i, j);
      if (r == Complex{0.0, 0.0}) continue;
      for (Eigen::Index k = 0; k < dout; ++k) {
        for (Eigen::Index l = 0; l < dout; ++l) {
          sigma(k, l) += choi(i * dout + k, j * dout + l) * r;
        }
      }
    }
  }
  return DensityMatrix(std::move(sigma));
}

namespace {

void check_cp_shapes(int out_f, int out_g, int in_f, int in_g, int split_f, int split_g) {
  if (split_f < 0 || split_g < 0 || split_f > out_f || split_g > out_g) {
    throw std::invalid_argument("cp_equal: ancilla split exceeds output arity");
  }
  if (in_f != in_g || out_f - split_f != out_g - split_g) {
    throw std::invalid_argument("cp_equal: boundary mismatch on A or B");
  }
}

}  // namespace

bool cp_equal(const Tensor& f, const Tensor& g, int split_f, int split_g, double tol) {
  check_cp_shapes(f.out_qubits(), g.out_qubits(), f.in_qubits(), g.in_qubits(), split_f,
                  split_g);
  if (f.backend() == Backend::exact && g.backend() == Backend::exact) {
    return mat_equal(choi_from_pure(f.exact(), split_f), choi_from_pure(g.exact(), split_g));
  }
  return mat_equal(choi_from_pure(f.to_float(), split_f),
                   choi_from_pure(g.to_float(), split_g), tol);
}

bool cp_equal(const Diagram& f, const Diagram& g, int split_f, int split_g, double tol) {
  const Backend b = exactly_representable(f) && exactly_representable(g)
                        ? Backend::exact
                        : Backend::floating;
  return cp_equal(interp(f, b), interp(g, b), split_f, split_g, tol);
}

CMat output_trace(const SuperOp& s) {
  const Eigen::Index din = Eigen::Index{1} << s.in_qubits();
  const Eigen::Index dout = Eigen::Index{1} << s.out_qubits();
  const CMat choi = s.to_float();
  CMat t = CMat::Zero(din, din);
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index k = 0; k < dout; ++k) acc += choi(i * dout + k, j * dout + k);
      t(i, j) = acc;
    }
  }
  return t;
}

}  // namespace zxd
