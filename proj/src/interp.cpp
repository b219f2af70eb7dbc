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

#include "zxd/interp.hpp"

#include <bit>

namespace zxd {

namespace {

template <class S>
S param_value(const ScalarParam& p);

template <>
Complex param_value<Complex>(const ScalarParam& p) {
  return p.value;
}

template <>
ExactScalar param_value<ExactScalar>(const ScalarParam& p) {
  if (!p.exact) {
    throw std::domain_error("exact backend requires parameters in Z[i, 1/sqrt(2)]");
  }
  return *p.exact;
}

template <class S>
Mat<S> hadamard_matrix() {
  Mat<S> h(2, 2);
  const S v = ScalarOps<S>::inv_sqrt2();
  h(0, 0) = v;
  h(0, 1) = v;
  h(1, 0) = v;
  h(1, 1) = ScalarOps<S>::zero() - v;
  return h;
}

template <class S>
Mat<S> h_power(std::int32_t k) {
  Mat<S> m = mat_identity<S>(1);
  const Mat<S> h = hadamard_matrix<S>();
  for (std::int32_t i = 0; i < k; ++i) m = mat_kron(m, h);
  return m;
}

// Corner matrix: 1 at (0,0); `corner` at (end,end); the degenerate 0-ary
// case is the sum of the two corner entries.
template <class S>
Mat<S> corner_matrix(std::int32_t n, std::int32_t m, const S& corner) {
  const Eigen::Index rows = Eigen::Index{1} << m;
  const Eigen::Index cols = Eigen::Index{1} << n;
  Mat<S> z = Mat<S>::Constant(rows, cols, ScalarOps<S>::zero());
  z(0, 0) = ScalarOps<S>::one();
  z(rows - 1, cols - 1) += corner;
  return z;
}

}  // namespace

template <class S>
Mat<S> node_matrix(const Node& n) {
  switch (n.kind) {
    case NodeKind::z_spider:
      return corner_matrix<S>(n.n_in, n.m_out, ScalarOps<S>::phase_unit(*n.phase));
    case NodeKind::x_spider: {
      const Mat<S> z = corner_matrix<S>(n.n_in, n.m_out, ScalarOps<S>::phase_unit(*n.phase));
      return mat_mul(h_power<S>(n.m_out), mat_mul(z, h_power<S>(n.n_in)));
    }
    case NodeKind::hadamard:
      return hadamard_matrix<S>();
    case NodeKind::z_node:
      return corner_matrix<S>(n.n_in, n.m_out, param_value<S>(*n.param));
    case NodeKind::w_node: {
      const Eigen::Index rows = Eigen::Index{1} << n.m_out;
      const Eigen::Index cols = Eigen::Index{1} << n.n_in;
      Mat<S> w = Mat<S>::Constant(rows, cols, ScalarOps<S>::zero());
      for (Eigen::Index y = 0; y < rows; ++y) {
        for (Eigen::Index x = 0; x < cols; ++x) {
          if (std::popcount(static_cast<std::uint64_t>(y)) +
                  std::popcount(static_cast<std::uint64_t>(x)) ==
              1) {
            w(y, x) = ScalarOps<S>::one();
          }
        }
      }
      return w;
    }
    case NodeKind::fswap: {
      Mat<S> f = Mat<S>::Constant(4, 4, ScalarOps<S>::zero());
      f(0, 0) = ScalarOps<S>::one();
      f(1, 2) = ScalarOps<S>::one();
      f(2, 1) = ScalarOps<S>::one();
      f(3, 3) = ScalarOps<S>::zero() - ScalarOps<S>::one();
      return f;
    }
    case NodeKind::zh_z:
      return corner_matrix<S>(n.n_in, n.m_out, ScalarOps<S>::one());
    case NodeKind::zh_x: {
      // The ZH X spider carries an explicit 1/2.
      const Mat<S> z = corner_matrix<S>(n.n_in, n.m_out, ScalarOps<S>::one());
      Mat<S> x = mat_mul(h_power<S>(n.m_out), mat_mul(z, h_power<S>(n.n_in)));
      const S half = ScalarOps<S>::half();
      for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = x(i, j) * half;
      }
      return x;
    }
    case NodeKind::h_box: {
      const Eigen::Index rows = Eigen::Index{1} << n.m_out;
      const Eigen::Index cols = Eigen::Index{1} << n.n_in;
      Mat<S> h = Mat<S>::Constant(rows, cols, ScalarOps<S>::one());
      h(rows - 1, cols - 1) = param_value<S>(*n.param);
      return h;
    }
    case NodeKind::not_node: {
      Mat<S> x = Mat<S>::Constant(2, 2, ScalarOps<S>::zero());
      x(0, 1) = ScalarOps<S>::one();
      x(1, 0) = ScalarOps<S>::one();
      return x;
    }
    case NodeKind::ground:
      throw std::invalid_argument("ground has no pure interpretation");
  }
  throw std::logic_error("unreachable");
}

template Mat<Complex> node_matrix<Complex>(const Node&);
template Mat<ExactScalar> node_matrix<ExactScalar>(const Node&);
template Mat<Complex> interp_matrix<Complex>(const Diagram&);
template Mat<ExactScalar> interp_matrix<ExactScalar>(const Diagram&);

bool exactly_representable(const Diagram& d) {
  for (const Node& n : d.nodes()) {
    if (n.phase && !n.phase->exact_representable()) return false;
    if (n.param && !n.param->exact) return false;
  }
  return true;
}

Tensor interp(const Diagram& d, Backend backend) {
  if (backend == Backend::exact) return Tensor(interp_matrix<ExactScalar>(d));
  return Tensor(interp_matrix<Complex>(d));
}

Tensor interp(const Diagram& d) {
  return interp(d, exactly_representable(d) ? Backend::exact : Backend::floating);
}

}  // namespace zxd
