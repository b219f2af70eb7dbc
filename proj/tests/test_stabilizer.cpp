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

#include "zxd/stabilizer.hpp"

using namespace zxd;

TEST_CASE("Clifford groups have the projective orders 24 and 11520") {
  CHECK(clifford_group(1).unitaries.size() == 24);
  CHECK(clifford_group(2).unitaries.size() == 11520);
  CHECK_THROWS_AS(clifford_group(3), std::invalid_argument);
}

TEST_CASE("stabilizer state tables: 6 and 60 states") {
  CHECK(stabilizer_states(1).size() == 6);
  CHECK(stabilizer_states(2).size() == 60);
}

TEST_CASE("group elements are exactly unitary") {
  const auto& g = clifford_group(1);
  for (const XMat& u : g.unitaries) {
    CHECK(mat_equal(mat_mul(mat_dagger(u), u), mat_identity<ExactScalar>(2)));
  }
}

TEST_CASE("|0> admits a conjugation witness") {
  XMat zero = XMat::Constant(2, 1, ExactScalar::zero());
  zero(0, 0) = ExactScalar::one();
  const auto w = stab_conjugate_witness(Tensor(zero));
  REQUIRE(w.has_value());
  CHECK(w->residual == 0.0);
}

TEST_CASE("the i-phase state needs a non-trivial Clifford word") {
  // (|0> + i|1>)/sqrt(2): conjugation flips the phase, identity cannot fix it
  CMat psi(2, 1);
  psi(0, 0) = std::sqrt(0.5);
  psi(1, 0) = Complex{0.0, std::sqrt(0.5)};
  const auto idx = stabilizer_state_index(Tensor(psi));
  REQUIRE(idx.has_value());
  const auto w = stab_conjugate_witness(Tensor(psi));
  REQUIRE(w.has_value());
  CHECK_FALSE(w->word.empty());
  CHECK(w->residual <= 1e-10);
}

TEST_CASE("every bundled one-qubit state has a witness") {
  for (const XMat& s : stabilizer_states(1)) {
    const auto w = stab_conjugate_witness(Tensor(s));
    REQUIRE(w.has_value());
    CHECK(w->residual <= 1e-10);
  }
}

TEST_CASE("two-qubit spot checks") {
  const auto& states = stabilizer_states(2);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto w = stab_conjugate_witness(Tensor(states[i]));
    REQUIRE(w.has_value());
    CHECK(w->residual <= 1e-10);
  }
}

TEST_CASE("states outside the table are rejected") {
  CMat t(2, 1);
  t(0, 0) = 1.0;
  t(1, 0) = std::polar(1.0, 0.3);  // not a stabilizer state
  CHECK_THROWS_AS(stab_conjugate_witness(Tensor(t)), std::invalid_argument);
}
