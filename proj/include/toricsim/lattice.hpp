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

#ifndef TORICSIM_LATTICE_HPP
#define TORICSIM_LATTICE_HPP

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "toricsim/pauli.hpp"

namespace toricsim {

/// S plaquettes carry X-type operators, P plaquettes Z-type operators.
enum class PlaquetteKind { S, P };

/// E anyons live on S plaquettes (created by Z rotations), M anyons on
/// P plaquettes (created by X rotations).
enum class AnyonKind { E, M };

PlaquetteKind plaquette_kind_for(AnyonKind a);

struct Plaquette {
  PlaquetteKind kind;
  /// Member qubits in counter-clockwise corner order (truncated
  /// plaquettes keep the surviving corners in that order).
  std::vector<int> qubits;
  /// Cell coordinates on the extended checkerboard, for diagnostics.
  int cell_x = 0;
  int cell_y = 0;
  bool truncated = false;
};

struct StringPath {
  AnyonKind kind;
  std::vector<int> qubits;  // rotated qubits, in path order
  PauliString op;           // product of single-qubit Z (E) or X (M)
};

/// Planar open-boundary vertex lattice of the toric code: one qubit per
/// vertex of a width x height grid, plaquettes on the checkerboard cells.
///
/// Boundary treatment: every Z-type (P) cell that clips the grid is kept
/// as a truncated operator, down to two-qubit links and single-qubit Z at
/// two corners; X-type (S) cells are kept only when all four corners are
/// present. This is the unique assignment for which all plaquette
/// operators commute, the joint +1 eigenstate is unique, and the 2x2 grid
/// reduces to one XXXX plaquette plus the four ZZ links of the minimal
/// instance. The dropped S half-cells act as the boundary sink where
/// Z-strings may terminate.
///
/// Lattices are immutable after construction.
class ToricLattice {
 public:
  static ToricLattice grid(int width, int height);
  /// The 4-qubit minimal instance; identical to grid(2, 2).
  static ToricLattice minimal();

  int width() const { return width_; }
  int height() const { return height_; }
  int qubit_count() const { return width_ * height_; }
  bool is_minimal() const { return width_ == 2 && height_ == 2; }

  int qubit_index(int x, int y) const { return y * width_ + x; }
  std::pair<int, int> qubit_pos(int q) const {
    return {q % width_, q / width_};
  }

  int plaquette_count() const { return static_cast<int>(plaquettes_.size()); }
  const Plaquette& plaquette(int id) const;
  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
  std::vector<int> plaquette_ids(PlaquetteKind kind) const;

  /// XXXX on S plaquettes, ZZZZ on P plaquettes, truncated at the
  /// boundary. Phase is always +1.
  PauliString plaquette_operator(int id) const;

  /// Occupancy of each plaquette after applying `applied` to the vacuum:
  /// occupied iff `applied` anticommutes with the plaquette operator.
  std::vector<bool> anyon_occupancy(const PauliString& applied) const;
  /// Sorted ids of the occupied plaquettes.
  std::vector<int> occupied_plaquettes(const PauliString& applied) const;

  /// Shortest anyon string whose operator creates occupancy exactly at
  /// {from, to}. Ties are broken toward the lexicographically smallest
  /// qubit sequence. from == to yields the empty path (identity).
  StringPath string_between(AnyonKind kind, int from, int to) const;

  /// The plaquette operator C_s itself: the minimal X loop around s_id.
  PauliString loop_around(int s_id) const;
  /// Product of C_s over a region of S plaquettes: the X loop along the
  /// region boundary (interior legs cancel). Empty region -> identity.
  PauliString loop_around(std::span<const int> s_region) const;

  /// True if the qubit sits on the grid boundary (some S cell of this
  /// vertex was dropped, so Z-strings may terminate here).
  bool on_boundary(int q) const;

 private:
  ToricLattice(int width, int height);

  int width_ = 0;
  int height_ = 0;
  std::vector<Plaquette> plaquettes_;
  // For each qubit, the ids of the retained plaquettes containing it.
  std::vector<std::vector<int>> plaquettes_of_qubit_;
};

/// The minimal instance's qubits traditionally carry labels 1..4 counter-
/// clockwise around the S plaquette; this maps them onto grid qubit ids.
struct MinimalInstance {
  ToricLattice lattice = ToricLattice::minimal();
  int s_plaquette;                     // id of the XXXX plaquette
  std::array<int, 4> links;            // ids of the ZZ links, in label
                                       // order (1,2),(2,3),(3,4),(4,1)
  std::array<int, 4> qubit_of_label;   // label 1..4 -> qubit id (index 0
                                       // of the array is label 1)

  static MinimalInstance make();
  int qubit(int label) const { return qubit_of_label.at(label - 1); }
};

}  // namespace toricsim

#endif  // TORICSIM_LATTICE_HPP
