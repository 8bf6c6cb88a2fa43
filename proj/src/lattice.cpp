// Copyright 2026 The toricsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toricsim/lattice.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace toricsim {

PlaquetteKind plaquette_kind_for(AnyonKind a) {
  return a == AnyonKind::E ? PlaquetteKind::S : PlaquetteKind::P;
}

ToricLattice::ToricLattice(int width, int height)
    : width_(width), height_(height) {
  if (width < 2 || height < 2) {
    throw std::invalid_argument("lattice needs at least 2x2 vertices");
  }
  if (width * height > PauliString::kMaxQubits) {
    throw std::invalid_argument("lattice exceeds the 64-qubit cap");
  }
  // Cells of the extended checkerboard: (cx, cy) with 0 <= cx <= width,
  // 0 <= cy <= height; corners listed counter-clockwise.
  for (int cy = 0; cy <= height; ++cy) {
    for (int cx = 0; cx <= width; ++cx) {
      PlaquetteKind kind =
          ((cx + cy) % 2 == 0) ? PlaquetteKind::S : PlaquetteKind::P;
      const std::pair<int, int> corners[4] = {
          {cx - 1, cy - 1}, {cx, cy - 1}, {cx, cy}, {cx - 1, cy}};
      std::vector<int> qs;
      for (auto [x, y] : corners) {
        if (x >= 0 && x < width && y >= 0 && y < height) {
          qs.push_back(qubit_index(x, y));
        }
      }
      if (qs.empty()) continue;
      bool truncated = qs.size() < 4;
      if (kind == PlaquetteKind::S && truncated) continue;
      plaquettes_.push_back(Plaquette{kind, std::move(qs), cx, cy, truncated});
    }
  }
  plaquettes_of_qubit_.resize(static_cast<std::size_t>(qubit_count()));
  for (int id = 0; id < plaquette_count(); ++id) {
    for (int q : plaquettes_[id].qubits) {
      plaquettes_of_qubit_[q].push_back(id);
    }
  }
}

ToricLattice ToricLattice::grid(int width, int height) {
  return ToricLattice(width, height);
}

ToricLattice ToricLattice::minimal() { return ToricLattice(2, 2); }

const Plaquette& ToricLattice::plaquette(int id) const {
  if (id < 0 || id >= plaquette_count()) {
    throw std::invalid_argument("unknown plaquette id: " + std::to_string(id));
  }
  return plaquettes_[id];
}

std::vector<int> ToricLattice::plaquette_ids(PlaquetteKind kind) const {
  std::vector<int> ids;
  for (int id = 0; id < plaquette_count(); ++id) {
    if (plaquettes_[id].kind == kind) ids.push_back(id);
  }
  return ids;
}

PauliString ToricLattice::plaquette_operator(int id) const {
  const Plaquette& p = plaquette(id);
  char letter = (p.kind == PlaquetteKind::S) ? 'X' : 'Z';
  PauliString op = PauliString::identity(qubit_count());
  for (int q : p.qubits) {
    op = op * PauliString::single(qubit_count(), letter, q);
  }
  return op;
}

std::vector<bool> ToricLattice::anyon_occupancy(
    const PauliString& applied) const {
  if (applied.n_qubits() != qubit_count()) {
    throw std::invalid_argument("Pauli size does not match lattice");
  }
  std::vector<bool> occ(plaquettes_.size());
  for (int id = 0; id < plaquette_count(); ++id) {
    occ[id] = commutes(applied, plaquette_operator(id)) < 0;
  }
  return occ;
}

std::vector<int> ToricLattice::occupied_plaquettes(
    const PauliString& applied) const {
  std::vector<int> ids;
  auto occ = anyon_occupancy(applied);
  for (int id = 0; id < plaquette_count(); ++id) {
    if (occ[id]) ids.push_back(id);
  }
  return ids;
}

bool ToricLattice::on_boundary(int q) const {
  auto [x, y] = qubit_pos(q);
  return x == 0 || y == 0 || x == width_ - 1 || y == height_ - 1;
}

StringPath ToricLattice::string_between(AnyonKind kind, int from,
                                        int to) const {
  PlaquetteKind want = plaquette_kind_for(kind);
  for (int id : {from, to}) {
    if (plaquette(id).kind != want) {
      throw std::invalid_argument(
          "plaquette " + std::to_string(id) + " does not host " +
          (kind == AnyonKind::E ? std::string("E") : std::string("M")) +
          " anyons");
    }
  }
  char letter = (kind == AnyonKind::E) ? 'Z' : 'X';
  StringPath path{kind, {}, PauliString::identity(qubit_count())};
  if (from == to) return path;

  // Graph on same-kind plaquettes; each qubit whose two same-kind cells
  // are both retained is an edge between them.
  std::map<int, std::vector<std::pair<int, int>>> adj;  // id -> (qubit, id)
  for (int q = 0; q < qubit_count(); ++q) {
    std::vector<int> here;
    for (int id : plaquettes_of_qubit_[q]) {
      if (plaquettes_[id].kind == want) here.push_back(id);
    }
    if (here.size() == 2) {
      adj[here[0]].push_back({q, here[1]});
      adj[here[1]].push_back({q, here[0]});
    }
  }
  for (auto& [id, edges] : adj) std::sort(edges.begin(), edges.end());

  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> dist(plaquettes_.size(), kUnreached);
  std::deque<int> frontier{to};
  dist[to] = 0;
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    for (auto [q, next] : adj[cur]) {
      if (dist[next] == kUnreached) {
        dist[next] = dist[cur] + 1;
        frontier.push_back(next);
      }
    }
  }
  if (dist[from] == kUnreached) {
    throw std::invalid_argument("no string path between plaquettes " +
                                std::to_string(from) + " and " +
                                std::to_string(to));
  }
  // Walk from `from` picking the smallest qubit that still shortens the
  // distance: lexicographically smallest among the shortest paths.
  int cur = from;
  while (cur != to) {
    for (auto [q, next] : adj[cur]) {
      if (dist[next] == dist[cur] - 1) {
        path.qubits.push_back(q);
        path.op = path.op * PauliString::single(qubit_count(), letter, q);
        cur = next;
        break;
      }
    }
  }
  return path;
}

PauliString ToricLattice::loop_around(int s_id) const {
  int ids[1] = {s_id};
  return loop_around(std::span<const int>(ids));
}

PauliString ToricLattice::loop_around(std::span<const int> s_region) const {
  PauliString loop = PauliString::identity(qubit_count());
  for (int id : s_region) {
    if (plaquette(id).kind != PlaquetteKind::S) {
      throw std::invalid_argument("loop region must consist of S plaquettes");
    }
    loop = loop * plaquette_operator(id);
  }
  return loop;
}

MinimalInstance MinimalInstance::make() {
  MinimalInstance mi;
  // Qubits 0..3 sit at (0,0),(1,0),(0,1),(1,1); counter-clockwise around
  // the central S plaquette the labels 1,2,3,4 are qubits 0,1,3,2.
  mi.qubit_of_label = {0, 1, 3, 2};
  const ToricLattice& lat = mi.lattice;
  mi.s_plaquette = -1;
  for (int id = 0; id < lat.plaquette_count(); ++id) {
    if (lat.plaquette(id).kind == PlaquetteKind::S) mi.s_plaquette = id;
  }
  auto link_with = [&](int label_a, int label_b) {
    int qa = mi.qubit(label_a), qb = mi.qubit(label_b);
    for (int id = 0; id < lat.plaquette_count(); ++id) {
      const Plaquette& p = lat.plaquette(id);
      if (p.kind != PlaquetteKind::P) continue;
      if ((p.qubits[0] == qa && p.qubits[1] == qb) ||
          (p.qubits[0] == qb && p.qubits[1] == qa)) {
        return id;
      }
    }
    throw std::logic_error("minimal instance link not found");
  };
  mi.links = {link_with(1, 2), link_with(2, 3), link_with(3, 4),
              link_with(4, 1)};
  return mi;
}

}  // namespace toricsim
