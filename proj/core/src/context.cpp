#include "nzalex/context.hpp"

#include "nzalex/error.hpp"

namespace nzalex {

Context Context::build(const Triangulation& ordered) {
  if (!is_ordered(ordered)) throw Error(ErrorKind::NotOrdered, "triangulation is not ordered");
  Context ctx{ordered, edge_classes(ordered), shape_assignment(ordered), build_dual(ordered), {}, {}};
  ctx.words = edge_words(ctx.tri, ctx.dual, ctx.edges);
  ctx.presentation.generators = ctx.dual.surviving();
  for (const EdgeWord& w : ctx.words) ctx.presentation.relators.push_back(ctx.project(w.r));
  return ctx;
}

FreeWord Context::project(const FreeWord& w) const {
  return eliminate(w, [this](int id) { return survives(id); });
}

GroupRingElem Context::project(const GroupRingElem& x) const {
  return eliminate(x, [this](int id) { return survives(id); });
}

AlphaMap compute_alpha(const Context& ctx, std::optional<int> meridian) {
  if (meridian && (*meridian < 0 || *meridian >= static_cast<int>(ctx.dual.generators.size())))
    throw Error(ErrorKind::InvalidAlpha, "meridian is not a dual generator");
  if (meridian && !ctx.survives(*meridian))
    throw Error(ErrorKind::InvalidAlpha, generator_name(*meridian) + " is a spanning-tree generator");
  return abelianization(ctx.presentation, meridian);
}

AlphaMap checked_alpha(const Context& ctx, const std::map<int, std::int64_t>& values) {
  std::map<int, std::int64_t> kept;
  for (const auto& [g, v] : values) {
    if (g < 0 || g >= static_cast<int>(ctx.dual.generators.size()))
      throw Error(ErrorKind::InvalidAlpha, "unknown generator index " + std::to_string(g + 1));
    if (!ctx.survives(g)) {
      if (v != 0) throw Error(ErrorKind::InvalidAlpha, generator_name(g) + " is collapsed by the tree");
      continue;
    }
    kept[g] = v;
  }
  AlphaMap alpha(std::move(kept));
  for (std::size_t i = 0; i < ctx.presentation.relators.size(); ++i)
    if (!alpha.kills(ctx.presentation.relators[i]))
      throw Error(ErrorKind::InvalidAlpha, "alpha does not vanish on relator " + std::to_string(i + 1));
  bool nonzero = false;
  for (const auto& [g, v] : alpha.values()) nonzero = nonzero || v != 0;
  if (!nonzero) throw Error(ErrorKind::InvalidAlpha, "alpha is identically zero");
  return alpha;
}

}  // namespace nzalex
