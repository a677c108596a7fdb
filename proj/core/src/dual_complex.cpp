#include "nzalex/dual_complex.hpp"

#include <deque>
#include <map>

#include "nzalex/error.hpp"

namespace nzalex {

namespace {
bool inward_rule(const Triangulation& tri, int tet, int face) {
  return ((face % 2) == 1) != (tri.orientation(tet) < 0);
}
}  // namespace

bool DualComplex::inward(int tet, int face) const {
  return generators[face_generator[tet][face]].target_tet == tet &&
         generators[face_generator[tet][face]].target_face == face;
}

std::vector<int> DualComplex::surviving() const {
  std::vector<int> out;
  for (int g = 0; g < static_cast<int>(generators.size()); ++g)
    if (!in_tree[g]) out.push_back(g);
  return out;
}

DualComplex build_dual(const Triangulation& tri) {
  if (!is_ordered(tri)) throw Error(ErrorKind::NotOrdered, "dual complex needs an ordered triangulation");
  DualComplex d;
  d.num_tets = tri.size();
  d.face_generator.assign(static_cast<std::size_t>(tri.size()), {-1, -1, -1, -1});
  for (int j = 0; j < tri.size(); ++j) {
    for (int f = 0; f < 4; ++f) {
      if (d.face_generator[j][f] >= 0) continue;
      const Gluing& gl = tri.gluing(j, f);
      const int back = gl.perm[f];
      const bool in_here = inward_rule(tri, j, f);
      if (in_here == inward_rule(tri, gl.tet, back))
        throw Error(ErrorKind::InvariantViolation, "dual edge orientation is inconsistent across a face");
      const int id = static_cast<int>(d.generators.size());
      d.face_generator[j][f] = id;
      d.face_generator[gl.tet][back] = id;
      d.generators.push_back(in_here ? DualGenerator{gl.tet, back, j, f} : DualGenerator{j, f, gl.tet, back});
    }
  }
  d.in_tree.assign(d.generators.size(), false);
  std::vector<bool> visited(static_cast<std::size_t>(tri.size()), false);
  std::deque<int> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int g = 0; g < static_cast<int>(d.generators.size()); ++g) {
      const DualGenerator& e = d.generators[g];
      if (e.source_tet != u && e.target_tet != u) continue;
      const int v = e.source_tet == u ? e.target_tet : e.source_tet;
      if (visited[v]) continue;
      visited[v] = true;
      d.in_tree[g] = true;
      queue.push_back(v);
    }
  }
  for (int g = 0; g < static_cast<int>(d.generators.size()); ++g)
    if (d.in_tree[g]) d.tree.push_back(g);
  return d;
}

std::vector<EdgeWord> edge_words(const Triangulation& tri, const DualComplex& dual,
                                 const std::vector<EdgeClass>& edges) {
  const ShapeAssignment shapes = shape_assignment(tri);
  std::vector<EdgeWord> out;
  out.reserve(edges.size());
  for (const EdgeClass& cls : edges) {
    std::vector<Letter> r;
    std::vector<Letter> big;
    for (const EdgeMember& m : cls.members) {
      const int g = dual.face_generator[m.tet][m.exit_face];
      const int exp = dual.inward(m.tet, m.exit_face) ? -1 : 1;
      big.push_back(Letter{shape_letter_id(m.tet, shapes.letter(m.tet, m.edge())), 1});
      big.push_back(Letter{g, exp});
      r.push_back(Letter{g, exp});
    }
    EdgeWord w{cls.index, FreeWord(r), FreeWord(big)};
    if (w.r.size() != r.size() || w.R.size() != 2 * r.size())
      throw Error(ErrorKind::InvariantViolation, "edge word is not freely reduced");
    out.push_back(std::move(w));
  }
  return out;
}

std::array<std::array<int, 2>, 2> smoothing_face_pairs(const Triangulation& tri, int tet, ShapeKind kind) {
  // A strand joins the two faces adjacent to one edge of the chosen pair.
  const bool positive = tri.orientation(tet) > 0;
  switch (kind) {
    case ShapeKind::Z:
      return {{{2, 3}, {0, 1}}};
    case ShapeKind::Zp:
      return positive ? std::array<std::array<int, 2>, 2>{{{1, 2}, {0, 3}}}
                      : std::array<std::array<int, 2>, 2>{{{1, 3}, {0, 2}}};
    case ShapeKind::Zpp:
      return positive ? std::array<std::array<int, 2>, 2>{{{1, 3}, {0, 2}}}
                      : std::array<std::array<int, 2>, 2>{{{1, 2}, {0, 3}}};
  }
  throw Error(ErrorKind::InvariantViolation, "unknown shape kind");
}

CurveSystem smoothing_curves(const Triangulation& tri, const DualComplex& dual, ShapeKind kind) {
  if (!is_ordered(tri)) throw Error(ErrorKind::NotOrdered, "smoothing needs an ordered triangulation");
  const int n = tri.size();
  std::vector<std::array<int, 4>> partner(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    for (const auto& pair : smoothing_face_pairs(tri, j, kind)) {
      partner[j][pair[0]] = pair[1];
      partner[j][pair[1]] = pair[0];
    }
  const int gens = static_cast<int>(dual.generators.size());
  std::vector<int> uses(static_cast<std::size_t>(gens), 0);
  CurveSystem out;
  out.kind = kind;
  for (int start = 0; start < gens; ++start) {
    if (uses[start]) continue;
    std::vector<Letter> letters;
    int g = start;
    int exp = 1;
    while (true) {
      if (++uses[g] > 1)
        throw Error(ErrorKind::InvariantViolation, "smoothing curve meets a face twice");
      letters.push_back(Letter{g, exp});
      const DualGenerator& e = dual.generators[g];
      const int tet = exp > 0 ? e.target_tet : e.source_tet;
      const int face = exp > 0 ? e.target_face : e.source_face;
      const int out_face = partner[tet][face];
      const int next = dual.face_generator[tet][out_face];
      const int next_exp = dual.inward(tet, out_face) ? -1 : 1;
      if (next == start && next_exp == 1) break;
      g = next;
      exp = next_exp;
    }
    out.components.push_back(CurveComponent{FreeWord(letters), 0});
  }
  return out;
}

void assign_alpha(CurveSystem& curves, const AlphaMap& alpha) {
  for (auto& c : curves.components) c.alpha = alpha(c.word);
}

std::vector<std::array<ZAdjacentPair, 2>> z_adjacent_pairs(const Triangulation& tri, const DualComplex& dual) {
  std::vector<std::array<ZAdjacentPair, 2>> out;
  out.reserve(static_cast<std::size_t>(tri.size()));
  for (int j = 0; j < tri.size(); ++j) {
    std::array<ZAdjacentPair, 2> pairs;
    // Faces 2,3 meet along (01); faces 0,1 meet along (23).
    const std::array<std::array<int, 2>, 2> faces{{{2, 3}, {0, 1}}};
    const std::array<int, 2> edge{edge_index(0, 1), edge_index(2, 3)};
    for (int k = 0; k < 2; ++k) {
      const auto [x, y] = faces[k];
      const bool x_in = dual.inward(j, x);
      if (x_in == dual.inward(j, y))
        throw Error(ErrorKind::InvariantViolation, "Z-adjacent faces have the same orientation");
      pairs[k] = ZAdjacentPair{edge[k], x_in ? x : y, x_in ? y : x};
    }
    out.push_back(pairs);
  }
  return out;
}

std::string generator_name(int id) {
  if (!is_shape_letter(id)) return "g" + std::to_string(id + 1);
  std::string name = "z" + std::to_string(shape_letter_tet(id) + 1);
  switch (shape_letter_kind(id)) {
    case ShapeKind::Z: break;
    case ShapeKind::Zp: name += "'"; break;
    case ShapeKind::Zpp: name += "''"; break;
  }
  return name;
}

}  // namespace nzalex
