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

#include "zxd/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace zxd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_radians(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  // fmod can land exactly on 2pi after the correction
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double circular_distance(double a, double b) {
  double d = std::fabs(wrap_radians(a) - wrap_radians(b));
  return std::min(d, kTwoPi - d);
}

}  // namespace

Phase Phase::pi_multiple(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Phase: zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num %= 2 * den;
  if (num < 0) num += 2 * den;
  Phase p;
  p.exact_ = true;
  p.num_ = num;
  p.den_ = den;
  p.rad_ = 0.0;
  return p;
}

Phase Phase::radians(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("Phase: non-finite radians");
  Phase p;
  p.exact_ = false;
  p.num_ = 0;
  p.den_ = 1;
  p.rad_ = wrap_radians(value);
  return p;
}

int Phase::omega_power() const {
  if (!exact_representable()) throw std::logic_error("Phase: not a pi/4 multiple");
  return static_cast<int>((num_ * (4 / den_)) % 8);
}

double Phase::to_radians() const {
  if (!exact_) return rad_;
  return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

Phase Phase::operator+(const Phase& o) const {
  if (exact_ && o.exact_) {
    // num/den + num'/den' over the common denominator; pi_multiple reduces.
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t den = den_ / g * o.den_;
    return pi_multiple(num_ * (den / den_) + o.num_ * (den / o.den_), den);
  }
  return radians(to_radians() + o.to_radians());
}

Phase Phase::operator-() const {
  if (exact_) return pi_multiple(-num_, den_);
  return radians(-rad_);
}

Phase Phase::scaled(std::int64_t factor) const {
  if (exact_) return pi_multiple(num_ * factor, den_);
  return radians(rad_ * static_cast<double>(factor));
}

bool Phase::approx_equal(const Phase& o, double tol) const {
  if (exact_ && o.exact_) return num_ == o.num_ && den_ == o.den_;
  return circular_distance(to_radians(), o.to_radians()) <= tol;
}

std::string Phase::to_string() const {
  std::ostringstream os;
  if (exact_) {
    if (num_ == 0) {
      os << "0";
    } else if (den_ == 1) {
      os << num_ << "pi";
    } else {
      os << num_ << "pi/" << den_;
    }
  } else {
    os << rad_ << "rad";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << p.to_string(); }

}  // namespace zxd
