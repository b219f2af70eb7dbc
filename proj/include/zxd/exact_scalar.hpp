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

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

namespace zxd {

using BigInt = boost::multiprecision::cpp_int;

/**
 * An element of the ring Z[i, 1/sqrt(2)], stored as integer coefficients
 * over the basis {1, w, w^2, w^3} with w = e^{i pi/4}, divided by
 * sqrt(2)^k:
 *
 *     value = (a0 + a1*w + a2*w^2 + a3*w^3) / sqrt(2)^k
 *
 * The only reduction relation is w^4 = -1.  Values are kept in a canonical
 * form where k is minimal (k = 0, or the coefficient vector is not
 * divisible by sqrt(2) = w - w^3), so equality is plain field equality.
 * Coefficients are arbitrary-precision; repeated tensor contraction would
 * overflow any fixed width.
 */
class ExactScalar {
 public:
  ExactScalar() : a_{0, 0, 0, 0}, k_(0) {}
  ExactScalar(long long n) : a_{n, 0, 0, 0}, k_(0) {}  // NOLINT(runtime/explicit)
  ExactScalar(BigInt a0, BigInt a1, BigInt a2, BigInt a3, unsigned k = 0)
      : a_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)}, k_(k) {
    canonicalize();
  }

  static ExactScalar zero() { return ExactScalar(); }
  static ExactScalar one() { return ExactScalar(1); }
  static ExactScalar i() { return ExactScalar(0, 0, 1, 0); }
  static ExactScalar sqrt2() { return ExactScalar(0, 1, 0, -1); }
  static ExactScalar inv_sqrt2() { return ExactScalar(1, 0, 0, 0, 1); }
  static ExactScalar half() { return ExactScalar(1, 0, 0, 0, 2); }

  /// w^e for any integer e (w^8 = 1).
  static ExactScalar omega_pow(long long e);

  static ExactScalar from_int_pair(long long re, long long im) {
    return ExactScalar(re, 0, im, 0);
  }

  const BigInt& coeff(int j) const { return a_[static_cast<std::size_t>(j)]; }
  unsigned sqrt2_exponent() const { return k_; }

  bool is_zero() const { return a_[0] == 0 && a_[1] == 0 && a_[2] == 0 && a_[3] == 0; }
  bool is_real() const { return a_[2] == 0 && a_[1] == -a_[3]; }

  ExactScalar conj() const { return ExactScalar(a_[0], -a_[3], -a_[2], -a_[1], k_); }
  /// Squared modulus |z|^2, a real ring element.
  ExactScalar abs2() const { return *this * conj(); }

  ExactScalar operator-() const { return ExactScalar(-a_[0], -a_[1], -a_[2], -a_[3], k_); }
  ExactScalar operator+(const ExactScalar& o) const;
  ExactScalar operator-(const ExactScalar& o) const { return *this + (-o); }
  ExactScalar operator*(const ExactScalar& o) const;
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  bool operator==(const ExactScalar& o) const { return a_ == o.a_ && k_ == o.k_; }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }

  /**
   * Exact division: returns q with q * den == *this when the complex
   * quotient lies in the ring, std::nullopt otherwise.  The quotient is
   * computed in Q(i, sqrt(2)); it is a ring element iff, after clearing
   * sqrt(2) powers, every rational coefficient has a power-of-two
   * denominator.  Throws std::invalid_argument when den == 0.
   */
  std::optional<ExactScalar> divide_exact(const ExactScalar& den) const;

  std::complex<double> to_complex() const;

  /// Text form ((a0,a1,a2,a3),k), used in JSON tensor dumps.
  std::string to_string() const;
  static std::optional<ExactScalar> parse(std::string_view text);

 private:
  void canonicalize();

  std::array<BigInt, 4> a_;
  unsigned k_;
};

inline ExactScalar conj(const ExactScalar& x) { return x.conj(); }

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

// Free-function spellings for the ring operations.
inline ExactScalar ring_add(const ExactScalar& x, const ExactScalar& y) { return x + y; }
inline ExactScalar ring_mul(const ExactScalar& x, const ExactScalar& y) { return x * y; }
inline ExactScalar ring_neg(const ExactScalar& x) { return -x; }
inline ExactScalar ring_conj(const ExactScalar& x) { return x.conj(); }
inline std::optional<ExactScalar> ring_divide_exact(const ExactScalar& num,
                                                    const ExactScalar& den) {
  return num.divide_exact(den);
}
inline std::complex<double> to_complex(const ExactScalar& x) { return x.to_complex(); }

}  // namespace zxd

namespace Eigen {

template <>
struct NumTraits<zxd::ExactScalar> : GenericNumTraits<zxd::ExactScalar> {
  typedef zxd::ExactScalar Real;
  typedef zxd::ExactScalar NonInteger;
  typedef zxd::ExactScalar Literal;
  typedef zxd::ExactScalar Nested;
  enum {
    IsComplex = 0,  // conjugation is handled explicitly, never through Eigen
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120,
  };
  static inline Real epsilon() { return zxd::ExactScalar::zero(); }
  static inline Real dummy_precision() { return zxd::ExactScalar::zero(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
