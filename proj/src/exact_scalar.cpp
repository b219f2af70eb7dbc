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

#include "zxd/exact_scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace zxd {

namespace {

constexpr double kSqrtHalf = 0.7071067811865475244008443621048490;

// v -> sqrt(2) * v over the basis {1, w, w^2, w^3}, sqrt(2) = w - w^3.
std::array<BigInt, 4> mul_sqrt2(const std::array<BigInt, 4>& a) {
  return {a[1] - a[3], a[0] + a[2], a[1] + a[3], a[2] - a[0]};
}

bool even(const BigInt& x) { return (x & 1) == 0; }

}  // namespace

ExactScalar ExactScalar::omega_pow(long long e) {
  long long r = ((e % 8) + 8) % 8;
  std::array<BigInt, 4> a{0, 0, 0, 0};
  a[static_cast<std::size_t>(r % 4)] = (r < 4) ? 1 : -1;
  return ExactScalar(a[0], a[1], a[2], a[3], 0);
}

void ExactScalar::canonicalize() {
  if (is_zero()) {
    k_ = 0;
    return;
  }
  // v/sqrt(2)^k reduces when v is in the image of multiplication by
  // sqrt(2), i.e. a0 = a2 and a1 = a3 (mod 2).
  while (k_ > 0 && even(a_[0] + a_[2]) && even(a_[1] + a_[3])) {
    std::array<BigInt, 4> w = {(a_[1] - a_[3]) / 2, (a_[0] + a_[2]) / 2,
                               (a_[1] + a_[3]) / 2, (a_[2] - a_[0]) / 2};
    a_ = w;
    --k_;
  }
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
  std::array<BigInt, 4> x = a_;
  std::array<BigInt, 4> y = o.a_;
  unsigned k = std::max(k_, o.k_);
  for (unsigned j = k_; j < k; ++j) x = mul_sqrt2(x);
  for (unsigned j = o.k_; j < k; ++j) y = mul_sqrt2(y);
  return ExactScalar(x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3], k);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
  // Cyclic convolution with sign from w^4 = -1.
  std::array<BigInt, 4> c{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (a_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      const BigInt term = a_[static_cast<std::size_t>(i)] * o.a_[static_cast<std::size_t>(j)];
      const int s = i + j;
      if (s < 4) {
        c[static_cast<std::size_t>(s)] += term;
      } else {
        c[static_cast<std::size_t>(s - 4)] -= term;
      }
    }
  }
  return ExactScalar(c[0], c[1], c[2], c[3], k_ + o.k_);
}

std::optional<ExactScalar> ExactScalar::divide_exact(const ExactScalar& den) const {
  if (den.is_zero()) throw std::invalid_argument("ExactScalar: division by zero");
  if (is_zero()) return ExactScalar::zero();

  // Work with integer vectors; track the net sqrt(2) exponent separately.
  const ExactScalar dc = den.conj();
  const ExactScalar dd = ExactScalar(den.a_[0], den.a_[1], den.a_[2], den.a_[3], 0) *
                         ExactScalar(dc.a_[0], dc.a_[1], dc.a_[2], dc.a_[3], 0);
  // den * conj(den) is real: c0 + c1*sqrt(2) with integer c0, c1.
  const BigInt c0 = dd.a_[0];
  const BigInt c1 = dd.a_[1];
  const BigInt d = c0 * c0 - 2 * c1 * c1;  // nonzero since den != 0

  // this/den = this * conj(den) * (c0 - c1*sqrt(2)) / (d * sqrt(2)^(k_ - den.k_))
  ExactScalar p = ExactScalar(a_[0], a_[1], a_[2], a_[3], 0) *
                  ExactScalar(dc.a_[0], dc.a_[1], dc.a_[2], dc.a_[3], 0) *
                  ExactScalar(c0, -c1, 0, c1, 0);
  long long m = static_cast<long long>(k_) - static_cast<long long>(den.k_);
  std::array<BigInt, 4> num = p.a_;
  while (m < 0) {
    num = mul_sqrt2(num);
    ++m;
  }

  BigInt dabs = d < 0 ? -d : d;
  if (d < 0) {
    for (auto& x : num) x = -x;
  }
  // Strip the power-of-two part of the denominator into sqrt(2) exponent.
  unsigned twos = 0;
  while (even(dabs) && dabs != 0) {
    dabs >>= 1;
    ++twos;
  }
  // The remaining odd factor must divide every coefficient.
  for (const auto& x : num) {
    if (x % dabs != 0) return std::nullopt;
  }
  for (auto& x : num) x /= dabs;

  ExactScalar q(num[0], num[1], num[2], num[3],
                static_cast<unsigned>(m) + 2 * twos);
  // Consistency guard; the construction above makes this unconditional.
  if (q * den != *this) return std::nullopt;
  return q;
}

std::complex<double> ExactScalar::to_complex() const {
  const double a0 = a_[0].convert_to<double>();
  const double a1 = a_[1].convert_to<double>();
  const double a2 = a_[2].convert_to<double>();
  const double a3 = a_[3].convert_to<double>();
  double re = a0 + (a1 - a3) * kSqrtHalf;
  double im = a2 + (a1 + a3) * kSqrtHalf;
  const double scale = std::pow(kSqrtHalf, static_cast<double>(k_));
  return {re * scale, im * scale};
}

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  os << "((" << a_[0] << "," << a_[1] << "," << a_[2] << "," << a_[3] << ")," << k_ << ")";
  return os.str();
}

std::optional<ExactScalar> ExactScalar::parse(std::string_view text) {
  // Accepts the to_string() form with optional spaces.
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 11 || s.front() != '(' || s.back() != ')') return std::nullopt;
  if (s[1] != '(') return std::nullopt;
  const auto close = s.find(')', 2);
  if (close == std::string::npos) return std::nullopt;
  std::string coeffs = s.substr(2, close - 2);
  std::string rest = s.substr(close + 1);
  if (rest.size() < 3 || rest.front() != ',' || rest.back() != ')') return std::nullopt;
  std::string kpart = rest.substr(1, rest.size() - 2);

  std::array<BigInt, 4> a;
  std::size_t pos = 0;
  for (int j = 0; j < 4; ++j) {
    const auto comma = coeffs.find(',', pos);
    std::string tok = (j == 3) ? coeffs.substr(pos)
                               : coeffs.substr(pos, comma - pos);
    if (tok.empty() || (j < 3 && comma == std::string::npos)) return std::nullopt;
    try {
      a[static_cast<std::size_t>(j)] = BigInt(tok);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    pos = comma + 1;
  }
  unsigned k = 0;
  try {
    const long long kv = std::stoll(kpart);
    if (kv < 0) return std::nullopt;
    k = static_cast<unsigned>(kv);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return ExactScalar(a[0], a[1], a[2], a[3], k);
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
  return os << x.to_string();
}

}  // namespace zxd
