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

#include "zxd/stabilizer.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zxd {

namespace {

XMat scale(const XMat& m, const ExactScalar& s) {
  XMat out = m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * s;
  }
  return out;
}

std::string serialize(const XMat& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << m(i, j).to_string() << ";";
  }
  return os.str();
}

// Lexicographically smallest serialization over the eight global phases
// w^j; Clifford words only ever differ by such phases.
std::pair<std::string, XMat> canonical_projective(const XMat& m) {
  std::string best;
  XMat best_m = m;
  for (int j = 0; j < 8; ++j) {
    XMat cand = scale(m, ExactScalar::omega_pow(j));
    std::string key = serialize(cand);
    if (best.empty() || key < best) {
      best = std::move(key);
      best_m = std::move(cand);
    }
  }
  return {best, best_m};
}

XMat hadamard_x() {
  XMat h(2, 2);
  const ExactScalar r = ExactScalar::inv_sqrt2();
  h(0, 0) = r;
  h(0, 1) = r;
  h(1, 0) = r;
  h(1, 1) = -r;
  return h;
}

XMat s_gate_x() {
  XMat s = XMat::Constant(2, 2, ExactScalar::zero());
  s(0, 0) = ExactScalar::one();
  s(1, 1) = ExactScalar::i();
  return s;
}

XMat cnot_x(int control, int target) {
  XMat c = XMat::Constant(4, 4, ExactScalar::zero());
  for (int x = 0; x < 4; ++x) {
    const int cbit = (x >> (1 - control)) & 1;
    int y = x;
    if (cbit) y ^= 1 << (1 - target);
    c(y, x) = ExactScalar::one();
  }
  return c;
}

struct GenSet {
  std::vector<XMat> mats;
  std::vector<std::string> names;
};

GenSet generators(int qubits) {
  GenSet g;
  if (qubits == 1) {
    g.mats = {hadamard_x(), s_gate_x()};
    g.names = {"H", "S"};
  } else {
    const XMat id2 = mat_identity<ExactScalar>(2);
    g.mats = {mat_kron(hadamard_x(), id2), mat_kron(id2, hadamard_x()),
              mat_kron(s_gate_x(), id2),  mat_kron(id2, s_gate_x()),
              cnot_x(0, 1),               cnot_x(1, 0)};
    g.names = {"H0", "H1", "S0", "S1", "CX01", "CX10"};
  }
  return g;
}

CliffordGroup enumerate_clifford(int qubits) {
  if (qubits != 1 && qubits != 2) {
    throw std::invalid_argument("clifford_group: only 1 and 2 qubits are bundled");
  }
  // Word-length bounds: 12 generators on one qubit, 20 on two; breadth
  // first closure finishes well inside them.
  const int max_len = qubits == 1 ? 12 : 20;
  const GenSet gens = generators(qubits);

  CliffordGroup group;
  group.qubits = qubits;
  std::map<std::string, std::size_t> seen;

  const XMat id = mat_identity<ExactScalar>(Eigen::Index{1} << qubits);
  auto [key0, canon0] = canonical_projective(id);
  seen.emplace(key0, 0);
  group.unitaries.push_back(canon0);
  group.words.push_back("");

  std::size_t frontier_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t frontier_end = group.unitaries.size();
    if (frontier_begin == frontier_end) break;
    for (std::size_t u = frontier_begin; u < frontier_end; ++u) {
      for (std::size_t gi = 0; gi < gens.mats.size(); ++gi) {
        XMat next = mat_mul(gens.mats[gi], group.unitaries[u]);
        auto [key, canon] = canonical_projective(next);
        if (seen.emplace(key, group.unitaries.size()).second) {
          group.unitaries.push_back(std::move(canon));
          const std::string& base = group.words[u];
          group.words.push_back(base.empty() ? gens.names[gi]
                                             : gens.names[gi] + " " + base);
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return group;
}

std::vector<XMat> enumerate_states(int qubits) {
  const CliffordGroup& group = clifford_group(qubits);
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  XMat zero = XMat::Constant(dim, 1, ExactScalar::zero());
  zero(0, 0) = ExactScalar::one();

  std::map<std::string, XMat> table;
  for (const XMat& u : group.unitaries) {
    auto [key, canon] = canonical_projective(mat_mul(u, zero));
    table.emplace(std::move(key), std::move(canon));
  }
  std::vector<XMat> states;
  states.reserve(table.size());
  for (auto& [key, st] : table) states.push_back(std::move(st));
  return states;
}

}  // namespace

const CliffordGroup& clifford_group(int qubits) {
  if (qubits == 1) {
    static const CliffordGroup c1 = enumerate_clifford(1);
    return c1;
  }
  if (qubits == 2) {
    static const CliffordGroup c2 = enumerate_clifford(2);
    return c2;
  }
  throw std::invalid_argument("clifford_group: only 1 and 2 qubits are bundled");
}

const std::vector<XMat>& stabilizer_states(int qubits) {
  if (qubits == 1) {
    static const std::vector<XMat> s1 = enumerate_states(1);
    return s1;
  }
  if (qubits == 2) {
    static const std::vector<XMat> s2 = enumerate_states(2);
    return s2;
  }
  throw std::invalid_argument("stabilizer_states: only 1 and 2 qubits are bundled");
}

std::optional<int> stabilizer_state_index(const Tensor& phi) {
  if (phi.cols() != 1 || (phi.rows() != 2 && phi.rows() != 4)) return std::nullopt;
  const int qubits = phi.rows() == 2 ? 1 : 2;
  const auto& states = stabilizer_states(qubits);

  if (phi.backend() == Backend::exact) {
    const auto key = canonical_projective(phi.exact()).first;
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (serialize(states[i]) == key) return static_cast<int>(i);
    }
    return std::nullopt;
  }
  // Float lookup: projective overlap against the unit table states.
  CMat v = phi.floating();
  const double norm = v.norm();
  if (norm < 1e-12) return std::nullopt;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const CMat s = to_cmat(states[i]);
    if (std::abs((s.adjoint() * v)(0, 0)) / norm > 1.0 - 1e-8) {
      return static_cast<int>(i);
    }
  }
  return std::nullopt;
}

std::optional<StabWitness> stab_conjugate_witness(const Tensor& phi) {
  const auto idx = stabilizer_state_index(phi);
  if (!idx) {
    throw std::invalid_argument(
        "stab_conjugate_witness: state is not in the bundled stabilizer tables");
  }
  const int qubits = phi.rows() == 2 ? 1 : 2;
  const XMat& state = stabilizer_states(qubits)[static_cast<std::size_t>(*idx)];
  const XMat target = mat_conj(state);
  const CliffordGroup& group = clifford_group(qubits);

  for (std::size_t u = 0; u < group.unitaries.size(); ++u) {
    const XMat moved = mat_mul(group.unitaries[u], state);
    for (int j = 0; j < 8; ++j) {
      if (mat_equal(moved, scale(target, ExactScalar::omega_pow(j)))) {
        const CMat res =
            to_cmat(moved) - to_cmat(scale(target, ExactScalar::omega_pow(j)));
        return StabWitness{group.unitaries[u], group.words[u], j,
                           res.cwiseAbs().maxCoeff()};
      }
    }
  }
  return std::nullopt;
}

}  // namespace zxd
