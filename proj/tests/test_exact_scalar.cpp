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

#include <doctest.h>

#include <random>

#include "zxd/exact_scalar.hpp"
#include "zxd/phase.hpp"

using namespace zxd;

namespace {

ExactScalar random_scalar(std::mt19937_64& rng) {
  auto coeff = [&] { return static_cast<long long>(rng() % 11) - 5; };
  return ExactScalar(coeff(), coeff(), coeff(), coeff(),
                     static_cast<unsigned>(rng() % 4));
}

double cdist(std::complex<double> a, std::complex<double> b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("omega defining relation") {
  CHECK(ExactScalar::omega_pow(1) * ExactScalar::omega_pow(3) == ExactScalar(-1));
  CHECK(ExactScalar::omega_pow(2) == ExactScalar::i());
  CHECK(ExactScalar::omega_pow(8) == ExactScalar::one());
  CHECK(ExactScalar::sqrt2() * ExactScalar::inv_sqrt2() == ExactScalar::one());
}

TEST_CASE("canonical form reduces sqrt2 denominators") {
  // (1 + i)/sqrt(2) = w
  const ExactScalar v(1, 0, 1, 0, 1);
  CHECK(v == ExactScalar::omega_pow(1));
  CHECK(v.sqrt2_exponent() == 0);
  // 2/sqrt(2)^2 = 1
  CHECK(ExactScalar(2, 0, 0, 0, 2) == ExactScalar::one());
  // zero always has k = 0
  CHECK(ExactScalar(0, 0, 0, 0, 3) == ExactScalar::zero());
}

TEST_CASE("conjugation") {
  CHECK(ExactScalar::omega_pow(1).conj() == -ExactScalar::omega_pow(3));
  CHECK(ExactScalar::i().conj() == -ExactScalar::i());
  const ExactScalar x(3, 1, -2, 4, 1);
  CHECK(x.conj().conj() == x);
  CHECK(cdist(x.conj().to_complex(), std::conj(x.to_complex())) < 1e-12);
}

TEST_CASE("divide_exact: the Clifford+T counterexample quotient") {
  const ExactScalar phi = ExactScalar::from_int_pair(1, 2);
  const ExactScalar phi_conj = ExactScalar::from_int_pair(1, -2);
  CHECK_FALSE(phi.divide_exact(phi_conj).has_value());
  // the would-be quotient is (-3+4i)/5
  CHECK(cdist(phi.to_complex() / phi_conj.to_complex(), {-0.6, 0.8}) < 1e-15);
  // whereas (1+i)/(1-i) = i is a ring element
  const auto q = ExactScalar::from_int_pair(1, 1).divide_exact(ExactScalar::from_int_pair(1, -1));
  REQUIRE(q.has_value());
  CHECK(*q == ExactScalar::i());
}

TEST_CASE("divide_exact: basic quotients") {
  const auto a = ExactScalar::omega_pow(3).divide_exact(ExactScalar::omega_pow(1));
  REQUIRE(a.has_value());
  CHECK(*a == ExactScalar::i());
  const auto b = ExactScalar::one().divide_exact(ExactScalar::sqrt2());
  REQUIRE(b.has_value());
  CHECK(*b == ExactScalar::inv_sqrt2());
  CHECK(b->sqrt2_exponent() == 1);
  CHECK_THROWS_AS((void)ExactScalar::one().divide_exact(ExactScalar::zero()),
                  std::invalid_argument);
}

TEST_CASE("to_complex embedding") {
  CHECK(cdist(ExactScalar::omega_pow(1).to_complex(),
              {std::sqrt(0.5), std::sqrt(0.5)}) < 1e-15);
  CHECK(cdist((ExactScalar(1) + ExactScalar::i() * ExactScalar(2)).to_complex(), {1.0, 2.0}) <
        1e-15);
  // 1 + e^{i pi/4} against float arithmetic
  const ExactScalar s = ExactScalar::one() + ExactScalar::omega_pow(1);
  CHECK(cdist(s.to_complex(), 1.0 + std::polar(1.0, std::numbers::pi / 4)) < 1e-12);
}

TEST_CASE("text form round-trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const ExactScalar x = random_scalar(rng);
    const auto parsed = ExactScalar::parse(x.to_string());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == x);
  }
  CHECK_FALSE(ExactScalar::parse("nonsense").has_value());
  CHECK_FALSE(ExactScalar::parse("((1,2,3),0)").has_value());
}

TEST_CASE("ring axioms against the complex embedding") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const ExactScalar a = random_scalar(rng);
    const ExactScalar b = random_scalar(rng);
    const ExactScalar c = random_scalar(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(cdist((a * b).to_complex(), a.to_complex() * b.to_complex()) < 1e-10);
    CHECK(cdist((a + b).to_complex(), a.to_complex() + b.to_complex()) < 1e-10);
    if (!b.is_zero()) {
      const auto q = (a * b).divide_exact(b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
  }
}

TEST_CASE("gate entries live in the ring") {
  // H, S, T, CNot, ket0, bra0 and the scalars 2 and i.
  CHECK(Phase::pi4(1).exact_representable());
  CHECK(ExactScalar::inv_sqrt2() * ExactScalar::sqrt2() == ExactScalar::one());
  CHECK(ExactScalar::omega_pow(Phase::pi4(1).omega_power()) == ExactScalar::omega_pow(1));
  CHECK(ExactScalar(2) == ExactScalar::sqrt2() * ExactScalar::sqrt2());
  CHECK(ExactScalar::i() * ExactScalar::i() == ExactScalar(-1));
}

TEST_CASE("phase arithmetic") {
  CHECK((Phase::pi4(1) + Phase::pi2(1)) == Phase::pi_multiple(3, 4));
  CHECK((-Phase::pi4(1)) == Phase::pi_multiple(7, 4));
  CHECK(Phase::pi_multiple(9, 4) == Phase::pi4(1));  // normalized into [0, 2pi)
  CHECK(Phase::pi4(3).omega_power() == 3);
  CHECK_FALSE(Phase::pi_multiple(1, 3).exact_representable());
  CHECK(Phase::radians(0.5).approx_equal(Phase::radians(0.5 + 2 * std::numbers::pi), 1e-12));
  CHECK((Phase::pi4(1) + Phase::radians(0.25)).is_exact() == false);
  CHECK(Phase::pi2(1).scaled(2) == Phase::pi());
}
