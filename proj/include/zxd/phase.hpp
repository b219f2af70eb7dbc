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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace zxd {

/**
 * A spider phase: either an exact rational multiple of pi (reduced,
 * normalized into [0, 2pi)) or a floating radian value.  Phases with
 * denominator dividing 4 are exact-representable: e^{i a} lies in
 * Z[i, 1/sqrt(2)].
 */
class Phase {
 public:
  Phase() : exact_(true), num_(0), den_(1), rad_(0.0) {}

  static Phase pi_multiple(std::int64_t num, std::int64_t den);
  static Phase radians(double value);
  static Phase zero() { return Phase(); }
  static Phase pi() { return pi_multiple(1, 1); }
  /// k * pi/4 for the grid phases of the Clifford+T fragment.
  static Phase pi4(std::int64_t k) { return pi_multiple(k, 4); }
  static Phase pi2(std::int64_t k) { return pi_multiple(k, 2); }

  bool is_exact() const { return exact_; }
  /// True when e^{i a} is an element of Z[i, 1/sqrt(2)].
  bool exact_representable() const { return exact_ && (4 % den_ == 0); }
  /// Requires exact_representable(): the p with e^{i a} = w^p, w = e^{i pi/4}.
  int omega_power() const;

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double to_radians() const;

  Phase operator+(const Phase& o) const;
  Phase operator-() const;
  Phase operator-(const Phase& o) const { return *this + (-o); }
  Phase scaled(std::int64_t factor) const;

  bool operator==(const Phase& o) const { return approx_equal(o, 1e-12); }
  bool operator!=(const Phase& o) const { return !(*this == o); }
  /// Circular comparison; exact phases compare by field equality.
  bool approx_equal(const Phase& o, double tol) const;

  std::string to_string() const;

 private:
  bool exact_;
  std::int64_t num_, den_;  // a = pi * num / den, den >= 1, 0 <= num < 2 den
  double rad_;              // used when !exact_, normalized into [0, 2pi)
};

std::ostream& operator<<(std::ostream& os, const Phase& p);

}  // namespace zxd
