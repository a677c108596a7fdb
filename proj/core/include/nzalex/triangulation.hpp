#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nzalex/matrix.hpp"

namespace nzalex {

// Permutation of {0,1,2,3}; p[v] is the image of v.
class Perm4 {
 public:
  constexpr Perm4() : img_{0, 1, 2, 3} {}
  // Throws BadGluing if the images do not form a permutation.
  explicit Perm4(std::array<int, 4> images);

  static std::optional<Perm4> parse(std::string_view text);
  // All 24 permutations in lexicographic order of their image strings.
  static const std::array<Perm4, 24>& all();

  int operator[](int v) const { return img_[static_cast<std::size_t>(v)]; }
  Perm4 inverse() const;
  // (a * b)[v] = a[b[v]]
  friend Perm4 operator*(const Perm4& a, const Perm4& b);
  int sign() const;
  bool is_identity() const { return *this == Perm4{}; }
  // Increasing on the three vertices other than `face`.
  bool monotone_off(int face) const;
  std::string str() const;

  friend auto operator<=>(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, 4> img_;
};

struct Gluing {
  int tet = 0;
  Perm4 perm;
};

using GluingTable = std::vector<std::array<Gluing, 4>>;

// Validated ideal triangulation with one torus cusp. Face k of tet j is glued to face
// perm[k] of tet `tet`, with the vertex map given by perm.
class Triangulation {
 public:
  // Runs every structural check; `tet0_orientation` is +1 or -1.
  static Triangulation from_gluings(GluingTable gluings, int tet0_orientation = 1);

  int size() const noexcept { return static_cast<int>(gluings_.size()); }
  const Gluing& gluing(int tet, int face) const { return gluings_[tet][face]; }
  const GluingTable& gluings() const noexcept { return gluings_; }
  // +1 or -1 relative to the vertex order of the tetrahedron.
  int orientation(int tet) const { return orientation_[tet]; }

  // New labels: vertex v of tet j becomes relabel[j][v].
  Triangulation relabeled(const std::vector<Perm4>& relabel) const;

  friend bool operator==(const Triangulation& a, const Triangulation& b);

 private:
  GluingTable gluings_;
  std::vector<int> orientation_;
};

// Plain-text table or its JSON twin (detected by a leading '{').
Triangulation parse_triangulation(std::string_view text);
std::string to_text(const Triangulation& tri);
std::string to_json_text(const Triangulation& tri);

inline constexpr std::array<std::pair<int, int>, 6> kTetEdges{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int edge_index(int a, int b);
std::string edge_name(int edge);

struct EdgeMember {
  int tet = 0;
  int tail = 0;       // winding runs tail -> head
  int head = 0;
  int exit_face = 0;  // face crossed when leaving this tetrahedron
  int edge() const { return edge_index(tail, head); }
};

struct EdgeClass {
  int index = 0;
  std::vector<EdgeMember> members;
  int valence() const { return static_cast<int>(members.size()); }
};

std::vector<EdgeClass> edge_classes(const Triangulation& tri);

bool is_ordered(const Triangulation& tri);

// Lexicographically first ordering relabeling; throws NotOrderable.
Triangulation find_ordering(const Triangulation& tri);
// The relabeling tuple found by the search, or nullopt.
std::optional<std::vector<Perm4>> ordering_relabeling(const Triangulation& tri);

enum class ShapeKind : int { Z = 0, Zp = 1, Zpp = 2 };
std::string_view to_string(ShapeKind kind);
std::optional<ShapeKind> parse_shape_kind(std::string_view text);

struct ShapeAssignment {
  std::vector<std::array<ShapeKind, 6>> letters;
  ShapeKind letter(int tet, int edge) const { return letters[tet][edge]; }
};

// (01),(23) -> z. On positively oriented tets (03),(12) -> z' and (02),(13) -> z'';
// negatively oriented tets swap z' and z''. Throws NotOrdered.
ShapeAssignment shape_assignment(const Triangulation& tri);

struct GluingMatrices {
  Matrix<std::int64_t> g, gp, gpp, a, b;
};

GluingMatrices classical_gluing_matrices(const Triangulation& tri);

}  // namespace nzalex
