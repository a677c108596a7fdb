#pragma once

#include <optional>
#include <vector>

#include "nzalex/dual_complex.hpp"
#include "nzalex/group_algebra.hpp"
#include "nzalex/triangulation.hpp"

namespace nzalex {

// Everything derived from an ordered triangulation that the invariant pipelines share.
struct Context {
  Triangulation tri;
  std::vector<EdgeClass> edges;
  ShapeAssignment shapes;
  DualComplex dual;
  std::vector<EdgeWord> words;
  Presentation presentation;  // surviving generators and relators p(r_i)

  // Throws NotOrdered for unordered input.
  static Context build(const Triangulation& ordered);

  int size() const { return tri.size(); }
  bool survives(int id) const { return !is_shape_letter(id) && !dual.in_tree[static_cast<std::size_t>(id)]; }
  // The map p: drop shape letters and tree generators.
  FreeWord project(const FreeWord& w) const;
  GroupRingElem project(const GroupRingElem& x) const;
};

// Abelianization of the context's presentation, or a validated user map.
AlphaMap compute_alpha(const Context& ctx, std::optional<int> meridian = std::nullopt);
// Values given for dual generators; tree generators must be 0. Throws InvalidAlpha.
AlphaMap checked_alpha(const Context& ctx, const std::map<int, std::int64_t>& values);

}  // namespace nzalex
