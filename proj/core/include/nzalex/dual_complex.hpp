#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nzalex/group_algebra.hpp"
#include "nzalex/triangulation.hpp"

namespace nzalex {

// Shape letters live in the same alphabet as dual generators, on negative ids.
constexpr int shape_letter_id(int tet, ShapeKind kind) { return -1 - (3 * tet + static_cast<int>(kind)); }
constexpr bool is_shape_letter(int id) { return id < 0; }
constexpr int shape_letter_tet(int id) { return (-1 - id) / 3; }
constexpr ShapeKind shape_letter_kind(int id) { return static_cast<ShapeKind>((-1 - id) % 3); }

// Dual edge through a glued face pair, directed from `source` into `target`.
struct DualGenerator {
  int source_tet = 0;
  int source_face = 0;
  int target_tet = 0;
  int target_face = 0;
};

struct DualComplex {
  int num_tets = 0;
  std::vector<DualGenerator> generators;
  std::vector<std::array<int, 4>> face_generator;  // [tet][face] -> generator
  std::vector<int> tree;                           // spanning tree, increasing
  std::vector<bool> in_tree;

  // The dual edge through (tet, face) points into tet.
  bool inward(int tet, int face) const;
  std::vector<int> surviving() const;
};

// Face f of tet j is inward iff f is odd on a positive tet (even on a negative one).
// Tree: breadth-first from tet 0, lowest generator first.
DualComplex build_dual(const Triangulation& tri);

struct EdgeWord {
  int edge_class = 0;
  FreeWord r;  // face crossings
  FreeWord R;  // shape letter before every crossing
};

std::vector<EdgeWord> edge_words(const Triangulation& tri, const DualComplex& dual,
                                 const std::vector<EdgeClass>& edges);

struct CurveComponent {
  FreeWord word;
  std::int64_t alpha = 0;
};

struct CurveSystem {
  ShapeKind kind = ShapeKind::Z;
  std::vector<CurveComponent> components;
};

// The two face pairs of `tet` joined by strands of the given smoothing.
std::array<std::array<int, 2>, 2> smoothing_face_pairs(const Triangulation& tri, int tet, ShapeKind kind);

// Closed curves obtained by resolving the dual 1-skeleton inside every tetrahedron.
// Throws InvariantViolation unless each generator appears exactly once.
CurveSystem smoothing_curves(const Triangulation& tri, const DualComplex& dual, ShapeKind kind);
void assign_alpha(CurveSystem& curves, const AlphaMap& alpha);

struct ZAdjacentPair {
  int edge = 0;  // index of (01) or (23)
  int inward_face = 0;
  int outward_face = 0;
};

std::vector<std::array<ZAdjacentPair, 2>> z_adjacent_pairs(const Triangulation& tri, const DualComplex& dual);

// Display names: g1..g2N for dual edges, z1, z1', z1'' for shape letters.
std::string generator_name(int id);

}  // namespace nzalex
