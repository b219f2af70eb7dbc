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

#include "zxd/tensor.hpp"

#include <cmath>

namespace zxd {

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_index(Eigen::Index n) {
  int k = 0;
  while ((Eigen::Index{1} << k) < n) ++k;
  return k;
}

}  // namespace

std::optional<Complex> equal_up_to_global_phase(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  Eigen::Index bi = 0, bj = 0;
  double bmax = 0.0;
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (std::abs(b(i, j)) > bmax) {
        bmax = std::abs(b(i, j));
        bi = i;
        bj = j;
      }
    }
  }
  Complex lambda{1.0, 0.0};
  if (bmax > tol) {
    lambda = a(bi, bj) / b(bi, bj);
    if (std::abs(std::abs(lambda) - 1.0) > tol) return std::nullopt;
    lambda /= std::abs(lambda);
  }
  if ((a - lambda * b).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  return lambda;
}

std::optional<ExactScalar> equal_up_to_global_phase(const XMat& a, const XMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  Eigen::Index bi = -1, bj = -1;
  for (Eigen::Index i = 0; i < b.rows() && bi < 0; ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (!b(i, j).is_zero()) {
        bi = i;
        bj = j;
        break;
      }
    }
  }
  ExactScalar lambda = ExactScalar::one();
  if (bi >= 0) {
    auto q = a(bi, bj).divide_exact(b(bi, bj));
    if (!q) return std::nullopt;
    lambda = *q;
    if (lambda * lambda.conj() != ExactScalar::one()) return std::nullopt;
  }
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != lambda * b(i, j)) return std::nullopt;
    }
  }
  return lambda;
}

void Tensor::check_dims() const {
  const bool ok = std::visit(
      [](const auto& m) { return is_power_of_two(m.rows()) && is_power_of_two(m.cols()); },
      m_);
  if (!ok) throw std::invalid_argument("Tensor: dimensions must be powers of two");
}

Eigen::Index Tensor::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, m_);
}

Eigen::Index Tensor::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, m_);
}

int Tensor::out_qubits() const { return log2_index(rows()); }
int Tensor::in_qubits() const { return log2_index(cols()); }

bool Tensor::equal(const Tensor& o, double tol) const {
  if (backend() == Backend::exact && o.backend() == Backend::exact) {
    return mat_equal(exact(), o.exact());
  }
  return mat_equal(to_float(), o.to_float(), tol);
}

Tensor tensor_mul(const Tensor& a, const Tensor& b) {
  if (a.backend() == Backend::exact && b.backend() == Backend::exact) {
    return Tensor(mat_mul<ExactScalar>(a.exact(), b.exact()));
  }
  return Tensor(mat_mul<Complex>(a.to_float(), b.to_float()));
}

Tensor tensor_kron(const Tensor& a, const Tensor& b) {
  if (a.backend() == Backend::exact && b.backend() == Backend::exact) {
    return Tensor(mat_kron<ExactScalar>(a.exact(), b.exact()));
  }
  return Tensor(mat_kron<Complex>(a.to_float(), b.to_float()));
}

Tensor tensor_dagger(const Tensor& a) {
  if (a.backend() == Backend::exact) return Tensor(mat_dagger<ExactScalar>(a.exact()));
  return Tensor(mat_dagger<Complex>(a.floating()));
}

Tensor tensor_conj(const Tensor& a) {
  if (a.backend() == Backend::exact) return Tensor(mat_conj<ExactScalar>(a.exact()));
  return Tensor(mat_conj<Complex>(a.floating()));
}

}  // namespace zxd
