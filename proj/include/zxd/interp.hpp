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

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "zxd/diagram.hpp"
#include "zxd/tensor.hpp"

namespace zxd {

/// True when every phase is a pi/4 multiple and every node parameter lies
/// in Z[i, 1/sqrt(2)], so the exact backend applies.
bool exactly_representable(const Diagram& d);

/// The standard interpretation: a 2^m x 2^n matrix over the chosen
/// backend.  Rejects diagrams with ground (use the CPM semantics) and, on
/// the exact backend, diagrams with inexact parameters.
Tensor interp(const Diagram& d, Backend backend);
/// Picks the exact backend when representable, float otherwise.
Tensor interp(const Diagram& d);

/// Generator tensor of a single node, per the interpretation tables.
template <class S>
Mat<S> node_matrix(const Node& n);

namespace detail {

// Dense rank-k tensor over wires of dimension 2.  legs[0] is the most
// significant bit of the flat index.
template <class S>
struct Chunk {
  std::vector<S> data;
  std::vector<std::int64_t> legs;

  std::size_t rank() const { return legs.size(); }
};

template <class S>
Chunk<S> chunk_from_matrix(const Mat<S>& m, std::vector<std::int64_t> legs) {
  Chunk<S> c;
  c.legs = std::move(legs);
  const std::size_t total = std::size_t{1} << c.legs.size();
  if (static_cast<std::size_t>(m.rows() * m.cols()) != total) {
    throw std::logic_error("chunk_from_matrix: leg count does not match matrix size");
  }
  c.data.resize(total);
  const auto cols = static_cast<std::size_t>(m.cols());
  for (std::size_t idx = 0; idx < total; ++idx) {
    c.data[idx] = m(static_cast<Eigen::Index>(idx / cols),
                    static_cast<Eigen::Index>(idx % cols));
  }
  return c;
}

// perm[k] = current position of the leg that ends up k-th.
template <class S>
Chunk<S> permute_chunk(const Chunk<S>& c, const std::vector<int>& perm) {
  const int r = static_cast<int>(c.rank());
  Chunk<S> out;
  out.legs.resize(c.rank());
  std::vector<int> new_pos(c.rank());  // old slot -> new slot
  for (int k = 0; k < r; ++k) {
    out.legs[static_cast<std::size_t>(k)] = c.legs[static_cast<std::size_t>(perm[k])];
    new_pos[static_cast<std::size_t>(perm[k])] = k;
  }
  out.data.assign(c.data.size(), ScalarOps<S>::zero());
  const std::size_t total = c.data.size();
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t nidx = 0;
    for (int p = 0; p < r; ++p) {
      const std::size_t bit = (idx >> (r - 1 - p)) & 1u;
      nidx |= bit << (r - 1 - new_pos[static_cast<std::size_t>(p)]);
    }
    out.data[nidx] = c.data[idx];
  }
  return out;
}

// Contracts a duplicated leg within one chunk (a self-loop wire).
template <class S>
Chunk<S> self_trace(const Chunk<S>& c, std::size_t p, std::size_t q) {
  const int r = static_cast<int>(c.rank());
  Chunk<S> out;
  for (std::size_t t = 0; t < c.rank(); ++t) {
    if (t != p && t != q) out.legs.push_back(c.legs[t]);
  }
  const int ro = static_cast<int>(out.legs.size());
  out.data.assign(std::size_t{1} << ro, ScalarOps<S>::zero());
  for (std::size_t oidx = 0; oidx < out.data.size(); ++oidx) {
    for (std::size_t b = 0; b < 2; ++b) {
      std::size_t full = 0;
      int src = 0;
      for (int t = 0; t < r; ++t) {
        std::size_t bit;
        if (t == static_cast<int>(p) || t == static_cast<int>(q)) {
          bit = b;
        } else {
          bit = (oidx >> (ro - 1 - src)) & 1u;
          ++src;
        }
        full |= bit << (r - 1 - t);
      }
      out.data[oidx] += c.data[full];
    }
  }
  return out;
}

template <class S>
void trace_all_duplicates(Chunk<S>* c) {
  for (;;) {
    bool found = false;
    for (std::size_t p = 0; p < c->rank() && !found; ++p) {
      for (std::size_t q = p + 1; q < c->rank() && !found; ++q) {
        if (c->legs[p] == c->legs[q]) {
          *c = self_trace(*c, p, q);
          found = true;
        }
      }
    }
    if (!found) return;
  }
}

template <class S>
Chunk<S> contract(const Chunk<S>& a, const Chunk<S>& b) {
  std::vector<std::int64_t> shared;
  for (auto l : a.legs) {
    if (std::find(b.legs.begin(), b.legs.end(), l) != b.legs.end()) shared.push_back(l);
  }
  std::sort(shared.begin(), shared.end());

  auto split_perm = [&](const Chunk<S>& c, bool shared_last) {
    std::vector<int> perm;
    std::vector<int> shared_slots;
    for (auto l : shared) {
      const auto it = std::find(c.legs.begin(), c.legs.end(), l);
      shared_slots.push_back(static_cast<int>(it - c.legs.begin()));
    }
    std::vector<bool> is_shared(c.rank(), false);
    for (int s : shared_slots) is_shared[static_cast<std::size_t>(s)] = true;
    std::vector<int> free_slots;
    for (std::size_t t = 0; t < c.rank(); ++t) {
      if (!is_shared[t]) free_slots.push_back(static_cast<int>(t));
    }
    if (shared_last) {
      perm = free_slots;
      perm.insert(perm.end(), shared_slots.begin(), shared_slots.end());
    } else {
      perm = shared_slots;
      perm.insert(perm.end(), free_slots.begin(), free_slots.end());
    }
    return perm;
  };

  const Chunk<S> ap = permute_chunk(a, split_perm(a, /*shared_last=*/true));
  const Chunk<S> bp = permute_chunk(b, split_perm(b, /*shared_last=*/false));
  const std::size_t s = shared.size();
  const std::size_t af = ap.rank() - s;
  const std::size_t bf = bp.rank() - s;
  const std::size_t rows = std::size_t{1} << af;
  const std::size_t mid = std::size_t{1} << s;
  const std::size_t cols = std::size_t{1} << bf;

  Chunk<S> out;
  out.legs.assign(ap.legs.begin(), ap.legs.begin() + static_cast<std::ptrdiff_t>(af));
  out.legs.insert(out.legs.end(), bp.legs.begin() + static_cast<std::ptrdiff_t>(s),
                  bp.legs.end());
  out.data.assign(rows * cols, ScalarOps<S>::zero());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < mid; ++k) {
      const S& av = ap.data[i * mid + k];
      if (ScalarOps<S>::is_zero(av)) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        out.data[i * cols + j] += av * bp.data[k * cols + j];
      }
    }
  }
  return out;
}

// Tensor product of chunks with disjoint legs.
template <class S>
Chunk<S> merge_disjoint(const Chunk<S>& a, const Chunk<S>& b) {
  Chunk<S> out;
  out.legs = a.legs;
  out.legs.insert(out.legs.end(), b.legs.begin(), b.legs.end());
  out.data.assign(a.data.size() * b.data.size(), ScalarOps<S>::zero());
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    if (ScalarOps<S>::is_zero(a.data[i])) continue;
    for (std::size_t j = 0; j < b.data.size(); ++j) {
      out.data[i * b.data.size() + j] = a.data[i] * b.data[j];
    }
  }
  return out;
}

}  // namespace detail

template <class S>
Mat<S> interp_matrix(const Diagram& d) {
  using detail::Chunk;
  d.check_valid();
  if (d.contains_ground()) {
    throw std::invalid_argument(
        "interp: diagram contains ground; use the CPM interpretation");
  }

  const std::int64_t n_out = d.num_outputs();
  const std::int64_t n_in = d.num_inputs();
  const std::int64_t internal_base = n_out + n_in;
  auto boundary_leg = [&](const PortRef& p) -> std::int64_t {
    return p.kind == PortRef::Kind::boundary_out ? p.index : n_out + p.index;
  };

  // Assign a leg id to each wire and build the port -> leg map.
  std::map<PortRef, std::int64_t> port_leg;
  std::vector<Chunk<S>> chunks;
  for (std::size_t w = 0; w < d.wires().size(); ++w) {
    const Wire& wire = d.wires()[w];
    const bool ab = wire.a.is_boundary();
    const bool bb = wire.b.is_boundary();
    if (ab && bb) {
      chunks.push_back(detail::chunk_from_matrix<S>(
          mat_identity<S>(2), {boundary_leg(wire.a), boundary_leg(wire.b)}));
      continue;
    }
    std::int64_t leg;
    if (ab) {
      leg = boundary_leg(wire.a);
    } else if (bb) {
      leg = boundary_leg(wire.b);
    } else {
      leg = internal_base + static_cast<std::int64_t>(w);
    }
    if (!ab) port_leg[wire.a] = leg;
    if (!bb) port_leg[wire.b] = leg;
  }

  for (std::size_t id = 0; id < d.nodes().size(); ++id) {
    const Node& n = d.nodes()[id];
    std::vector<std::int64_t> legs;
    legs.reserve(static_cast<std::size_t>(n.n_in + n.m_out));
    for (std::int32_t j = 0; j < n.m_out; ++j) {
      legs.push_back(port_leg.at(PortRef::out(static_cast<std::int32_t>(id), j)));
    }
    for (std::int32_t i = 0; i < n.n_in; ++i) {
      legs.push_back(port_leg.at(PortRef::in(static_cast<std::int32_t>(id), i)));
    }
    Chunk<S> c = detail::chunk_from_matrix<S>(node_matrix<S>(n), std::move(legs));
    detail::trace_all_duplicates(&c);
    chunks.push_back(std::move(c));
  }

  if (chunks.empty()) {
    chunks.push_back(Chunk<S>{{ScalarOps<S>::one()}, {}});
  }

  // Greedy pairwise elimination: always contract the pair yielding the
  // smallest intermediate tensor.
  for (;;) {
    std::size_t best_a = 0, best_b = 0;
    std::size_t best_rank = static_cast<std::size_t>(-1);
    for (std::size_t x = 0; x < chunks.size(); ++x) {
      for (std::size_t y = x + 1; y < chunks.size(); ++y) {
        std::size_t shared = 0;
        for (auto l : chunks[x].legs) {
          if (std::find(chunks[y].legs.begin(), chunks[y].legs.end(), l) !=
              chunks[y].legs.end()) {
            ++shared;
          }
        }
        if (shared == 0) continue;
        const std::size_t rank = chunks[x].rank() + chunks[y].rank() - 2 * shared;
        if (rank < best_rank) {
          best_rank = rank;
          best_a = x;
          best_b = y;
        }
      }
    }
    if (best_rank == static_cast<std::size_t>(-1)) break;
    Chunk<S> merged = detail::contract(chunks[best_a], chunks[best_b]);
    chunks.erase(chunks.begin() + static_cast<std::ptrdiff_t>(best_b));
    chunks.erase(chunks.begin() + static_cast<std::ptrdiff_t>(best_a));
    chunks.push_back(std::move(merged));
  }

  Chunk<S> result = std::move(chunks.front());
  for (std::size_t x = 1; x < chunks.size(); ++x) {
    result = detail::merge_disjoint(result, chunks[x]);
  }

  if (result.rank() != static_cast<std::size_t>(n_out + n_in)) {
    throw std::logic_error("interp: open legs do not match the boundary");
  }
  // Order legs as [outputs, inputs], both ascending.
  std::vector<int> perm;
  for (std::int64_t target = 0; target < n_out + n_in; ++target) {
    const auto it = std::find(result.legs.begin(), result.legs.end(), target);
    if (it == result.legs.end()) {
      throw std::logic_error("interp: missing boundary leg");
    }
    perm.push_back(static_cast<int>(it - result.legs.begin()));
  }
  result = detail::permute_chunk(result, perm);

  const std::size_t rows = std::size_t{1} << n_out;
  const std::size_t cols = std::size_t{1} << n_in;
  Mat<S> m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          result.data[r * cols + c];
    }
  }
  return m;
}

}  // namespace zxd
