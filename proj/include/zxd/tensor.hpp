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

#include <complex>
#include <optional>
#include <stdexcept>
#include <variant>

#include <Eigen/Core>

#include "zxd/exact_scalar.hpp"
#include "zxd/phase.hpp"

namespace zxd {

using Complex = std::complex<double>;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using CMat = Mat<Complex>;
using XMat = Mat<ExactScalar>;

enum class Backend : std::uint8_t { exact, floating };

inline std::string to_string(Backend b) {
  return b == Backend::exact ? "exact" : "float";
}

/// Scalar-backend glue used by the generic interpretation code.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Complex> {
  static constexpr Backend backend = Backend::floating;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex inv_sqrt2() { return {0.7071067811865475244008443621048490, 0.0}; }
  static Complex half() { return {0.5, 0.0}; }
  /// e^{i a}
  static Complex phase_unit(const Phase& a) { return std::polar(1.0, a.to_radians()); }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static bool is_zero(const Complex& x) { return x == Complex{0.0, 0.0}; }
  static Complex to_complex(const Complex& x) { return x; }
};

template <>
struct ScalarOps<ExactScalar> {
  static constexpr Backend backend = Backend::exact;
  static ExactScalar zero() { return ExactScalar::zero(); }
  static ExactScalar one() { return ExactScalar::one(); }
  static ExactScalar inv_sqrt2() { return ExactScalar::inv_sqrt2(); }
  static ExactScalar half() { return ExactScalar::half(); }
  static ExactScalar phase_unit(const Phase& a) {
    if (!a.exact_representable()) {
      throw std::domain_error("exact backend requires pi/4-multiple phases, got " +
                              a.to_string());
    }
    return ExactScalar::omega_pow(a.omega_power());
  }
  static ExactScalar conj(const ExactScalar& x) { return x.conj(); }
  static bool is_zero(const ExactScalar& x) { return x.is_zero(); }
  static Complex to_complex(const ExactScalar& x) { return x.to_complex(); }
};

// ---------------------------------------------------------------------------
// Free matrix functions.  Dimensions here are powers of two; inputs index
// columns and outputs index rows, leftmost wire = most significant bit.
// ---------------------------------------------------------------------------

template <class S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  Mat<S> c = Mat<S>::Constant(a.rows(), b.cols(), ScalarOps<S>::zero());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (ScalarOps<S>::is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

template <class S>
Mat<S> mat_kron(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> c = Mat<S>::Constant(a.rows() * b.rows(), a.cols() * b.cols(),
                              ScalarOps<S>::zero());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (ScalarOps<S>::is_zero(a(i, j))) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k) {
        for (Eigen::Index l = 0; l < b.cols(); ++l) {
          c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return c;
}

template <class S>
Mat<S> mat_conj(const Mat<S>& a) {
  Mat<S> c(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) c(i, j) = ScalarOps<S>::conj(a(i, j));
  }
  return c;
}

template <class S>
Mat<S> mat_dagger(const Mat<S>& a) {
  Mat<S> c(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) c(j, i) = ScalarOps<S>::conj(a(i, j));
  }
  return c;
}

template <class S>
Mat<S> mat_identity(Eigen::Index n) {
  Mat<S> c = Mat<S>::Constant(n, n, ScalarOps<S>::zero());
  for (Eigen::Index i = 0; i < n; ++i) c(i, i) = ScalarOps<S>::one();
  return c;
}

inline bool mat_equal(const XMat& a, const XMat& b, double /*tol*/ = 0.0) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

inline bool mat_equal(const CMat& a, const CMat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

inline CMat to_cmat(const XMat& a) {
  CMat c(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) c(i, j) = a(i, j).to_complex();
  }
  return c;
}

/// lambda with |lambda| = 1 and a = lambda * b, when one exists.
std::optional<Complex> equal_up_to_global_phase(const CMat& a, const CMat& b,
                                                double tol = 1e-9);

/// Exact variant; the phase, if any, is a ring element of unit modulus.
std::optional<ExactScalar> equal_up_to_global_phase(const XMat& a, const XMat& b);

// ---------------------------------------------------------------------------
// Backend-tagged dense tensor over qubit spaces: 2^out_qubits x 2^in_qubits.
// ---------------------------------------------------------------------------

class Tensor {
 public:
  Tensor() : m_(CMat(CMat::Constant(1, 1, Complex{1.0, 0.0}))) {}
  explicit Tensor(XMat m) : m_(std::move(m)) { check_dims(); }
  explicit Tensor(CMat m) : m_(std::move(m)) { check_dims(); }

  Backend backend() const {
    return std::holds_alternative<XMat>(m_) ? Backend::exact : Backend::floating;
  }
  Eigen::Index rows() const;
  Eigen::Index cols() const;
  int out_qubits() const;
  int in_qubits() const;

  const XMat& exact() const { return std::get<XMat>(m_); }
  const CMat& floating() const { return std::get<CMat>(m_); }
  /// Float view regardless of backend.
  CMat to_float() const {
    return std::holds_alternative<XMat>(m_) ? to_cmat(exact()) : floating();
  }

  bool equal(const Tensor& o, double tol = 1e-9) const;

 private:
  void check_dims() const;
  std::variant<XMat, CMat> m_;
};

Tensor tensor_mul(const Tensor& a, const Tensor& b);
Tensor tensor_kron(const Tensor& a, const Tensor& b);
Tensor tensor_dagger(const Tensor& a);
Tensor tensor_conj(const Tensor& a);

}  // namespace zxd
