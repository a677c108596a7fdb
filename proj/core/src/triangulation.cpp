#include "nzalex/triangulation.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "nzalex/error.hpp"

namespace nzalex {

Perm4::Perm4(std::array<int, 4> images) {
  std::array<bool, 4> seen{};
  for (int i = 0; i < 4; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::BadGluing, "not a permutation of 0123");
    seen[static_cast<std::size_t>(v)] = true;
    img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
  }
}

std::optional<Perm4> Perm4::parse(std::string_view text) {
  if (text.size() != 4) return std::nullopt;
  std::array<int, 4> img{};
  std::array<bool, 4> seen{};
  for (std::size_t i = 0; i < 4; ++i) {
    const int v = text[i] - '0';
    if (v < 0 || v > 3 || seen[static_cast<std::size_t>(v)]) return std::nullopt;
    seen[static_cast<std::size_t>(v)] = true;
    img[i] = v;
  }
  return Perm4(img);
}

const std::array<Perm4, 24>& Perm4::all() {
  static const std::array<Perm4, 24> perms = [] {
    std::array<Perm4, 24> out;
    std::array<int, 4> img{0, 1, 2, 3};
    std::size_t i = 0;
    do {
      out[i++] = Perm4(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }();
  return perms;
}

Perm4 Perm4::inverse() const {
  std::array<int, 4> inv{};
  for (int v = 0; v < 4; ++v) inv[static_cast<std::size_t>((*this)[v])] = v;
  return Perm4(inv);
}

Perm4 operator*(const Perm4& a, const Perm4& b) {
  return Perm4({a[b[0]], a[b[1]], a[b[2]], a[b[3]]});
}

int Perm4::sign() const {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if ((*this)[i] > (*this)[j]) s = -s;
  return s;
}

bool Perm4::monotone_off(int face) const {
  int last = -1;
  for (int v = 0; v < 4; ++v) {
    if (v == face) continue;
    if ((*this)[v] < last) return false;
    last = (*this)[v];
  }
  return true;
}

std::string Perm4::str() const {
  std::string s(4, '0');
  for (int v = 0; v < 4; ++v) s[static_cast<std::size_t>(v)] = static_cast<char>('0' + (*this)[v]);
  return s;
}

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e)
    if (kTetEdges[static_cast<std::size_t>(e)] == std::pair{a, b}) return e;
  throw Error(ErrorKind::InvariantViolation, "not an edge of a tetrahedron");
}

std::string edge_name(int edge) {
  const auto [a, b] = kTetEdges[static_cast<std::size_t>(edge)];
  return "(" + std::to_string(a) + std::to_string(b) + ")";
}

namespace {

int other_vertex(int a, int b, int c) { return 6 - a - b - c; }

// Face through which the right-handed winding around tail->head leaves the tetrahedron.
int exit_face(int tail, int head, int orientation) {
  int c = -1;
  int d = -1;
  for (int v = 0; v < 4; ++v) {
    if (v == tail || v == head) continue;
    (c < 0 ? c : d) = v;
  }
  if (Perm4({tail, head, c, d}).sign() < 0) std::swap(c, d);
  return orientation > 0 ? c : d;
}

std::vector<EdgeClass> wind_edges(const GluingTable& g, const std::vector<int>& orientation) {
  const int n = static_cast<int>(g.size());
  std::vector<std::array<bool, 6>> seen(static_cast<std::size_t>(n), std::array<bool, 6>{});
  std::vector<EdgeClass> classes;
  for (int j = 0; j < n; ++j) {
    for (int e = 0; e < 6; ++e) {
      if (seen[j][e]) continue;
      const auto [a, b] = kTetEdges[static_cast<std::size_t>(e)];
      EdgeMember start{j, a, b, exit_face(a, b, orientation[j])};
      EdgeClass cls;
      cls.index = static_cast<int>(classes.size());
      EdgeMember cur = start;
      while (true) {
        if (seen[cur.tet][cur.edge()])
          throw Error(ErrorKind::BadGluing, "edge winding revisits a tetrahedron edge");
        seen[cur.tet][cur.edge()] = true;
        cls.members.push_back(cur);
        const Gluing& gl = g[cur.tet][cur.exit_face];
        const int tail = gl.perm[cur.tail];
        const int head = gl.perm[cur.head];
        const int entry = gl.perm[cur.exit_face];
        EdgeMember next{gl.tet, tail, head, other_vertex(tail, head, entry)};
        if (next.exit_face != exit_face(tail, head, orientation[gl.tet]))
          throw Error(ErrorKind::NotOrientable, "edge winding disagrees with the orientation");
        if (next.tet == start.tet && next.tail == start.tail && next.head == start.head) break;
        cur = next;
      }
      classes.push_back(std::move(cls));
    }
  }
  return classes;
}

std::vector<int> orient(const GluingTable& g, int tet0_orientation) {
  const int n = static_cast<int>(g.size());
  std::vector<int> sign(static_cast<std::size_t>(n), 0);
  sign[0] = tet0_orientation;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int j = stack.back();
    stack.pop_back();
    for (int f = 0; f < 4; ++f) {
      const Gluing& gl = g[j][f];
      const int want = gl.perm.sign() < 0 ? sign[j] : -sign[j];
      if (sign[gl.tet] == 0) {
        sign[gl.tet] = want;
        stack.push_back(gl.tet);
      } else if (sign[gl.tet] != want) {
        throw Error(ErrorKind::NotOrientable, "face gluings admit no consistent orientation");
      }
    }
  }
  for (int s : sign)
    if (s == 0) throw Error(ErrorKind::MalformedInput, "triangulation is not connected");
  return sign;
}

void check_vertex_links(const GluingTable& g, const std::vector<EdgeClass>& edges) {
  const int n = static_cast<int>(g.size());
  std::vector<int> parent(static_cast<std::size_t>(4 * n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int j = 0; j < n; ++j)
    for (int f = 0; f < 4; ++f)
      for (int v = 0; v < 4; ++v) {
        if (v == f) continue;
        const Gluing& gl = g[j][f];
        parent[find(4 * j + v)] = find(4 * gl.tet + gl.perm[v]);
      }
  std::map<int, long> corners;
  std::map<int, long> ends;
  for (int x = 0; x < 4 * n; ++x) ++corners[find(x)];
  for (const EdgeClass& e : edges) {
    const EdgeMember& m = e.members.front();
    ++ends[find(4 * m.tet + m.tail)];
    ++ends[find(4 * m.tet + m.head)];
  }
  for (const auto& [root, triangles] : corners) {
    // V - E + F with E = 3F/2.
    const long twice_chi = 2 * ends[root] - triangles;
    if (twice_chi != 0)
      throw Error(ErrorKind::NotTorusBoundary,
                  "vertex link has Euler characteristic " + std::to_string(twice_chi / 2.0));
  }
}

}  // namespace

Triangulation Triangulation::from_gluings(GluingTable gluings, int tet0_orientation) {
  const int n = static_cast<int>(gluings.size());
  if (n == 0) throw Error(ErrorKind::MalformedInput, "triangulation has no tetrahedra");
  if (tet0_orientation != 1 && tet0_orientation != -1)
    throw Error(ErrorKind::MalformedInput, "orientation must be 1 or -1");
  for (int j = 0; j < n; ++j) {
    for (int f = 0; f < 4; ++f) {
      const Gluing& gl = gluings[j][f];
      const std::string where = "tet " + std::to_string(j) + " face " + std::to_string(f);
      if (gl.tet < 0 || gl.tet >= n) throw Error(ErrorKind::BadGluing, where + ": neighbour out of range");
      const int back_face = gl.perm[f];
      if (gl.tet == j && back_face == f) throw Error(ErrorKind::BadGluing, where + ": face glued to itself");
      const Gluing& back = gluings[gl.tet][back_face];
      if (back.tet != j || back.perm != gl.perm.inverse())
        throw Error(ErrorKind::BadGluing, where + ": gluing is not an involution");
    }
  }
  Triangulation tri;
  tri.gluings_ = std::move(gluings);
  tri.orientation_ = orient(tri.gluings_, tet0_orientation);
  const auto edges = wind_edges(tri.gluings_, tri.orientation_);
  if (static_cast<int>(edges.size()) != n)
    throw Error(ErrorKind::NotTorusBoundary, std::to_string(edges.size()) + " edge classes for " +
                                                 std::to_string(n) + " tetrahedra");
  check_vertex_links(tri.gluings_, edges);
  return tri;
}

Triangulation Triangulation::relabeled(const std::vector<Perm4>& relabel) const {
  if (static_cast<int>(relabel.size()) != size())
    throw Error(ErrorKind::MalformedInput, "relabeling has the wrong length");
  GluingTable out(gluings_.size());
  for (int j = 0; j < size(); ++j)
    for (int f = 0; f < 4; ++f) {
      const Gluing& gl = gluings_[j][f];
      out[j][relabel[j][f]] = Gluing{gl.tet, relabel[gl.tet] * gl.perm * relabel[j].inverse()};
    }
  return from_gluings(std::move(out), orientation_[0] * relabel[0].sign());
}

bool operator==(const Triangulation& a, const Triangulation& b) {
  if (a.size() != b.size() || a.orientation_ != b.orientation_) return false;
  for (int j = 0; j < a.size(); ++j)
    for (int f = 0; f < 4; ++f)
      if (a.gluings_[j][f].tet != b.gluings_[j][f].tet || a.gluings_[j][f].perm != b.gluings_[j][f].perm)
        return false;
  return true;
}

namespace {

Triangulation parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("JSON: ") + e.what());
  }
  try {
    const int n = doc.at("tets").get<int>();
    const auto& rows = doc.at("gluings");
    if (n <= 0 || !rows.is_array() || static_cast<int>(rows.size()) != n)
      throw Error(ErrorKind::MalformedInput, "gluings must list one row per tetrahedron");
    GluingTable table(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const auto& row = rows[static_cast<std::size_t>(j)];
      if (!row.is_array() || row.size() != 4)
        throw Error(ErrorKind::MalformedInput, "each tetrahedron needs four face entries");
      for (int f = 0; f < 4; ++f) {
        const auto& entry = row[static_cast<std::size_t>(f)];
        if (!entry.is_array() || entry.size() != 2)
          throw Error(ErrorKind::MalformedInput, "face entry must be [neighbour, \"perm\"]");
        auto perm = Perm4::parse(entry[1].get<std::string>());
        if (!perm) throw Error(ErrorKind::BadGluing, "invalid permutation " + entry[1].dump());
        table[j][f] = Gluing{entry[0].get<int>(), *perm};
      }
    }
    return Triangulation::from_gluings(std::move(table), doc.value("orientation", 1));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("JSON: ") + e.what());
  }
}

Triangulation parse_plain(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  int orientation = 1;
  GluingTable table;
  std::vector<bool> given;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorKind::MalformedInput, "line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tok(line);
    std::string head;
    if (!(tok >> head)) continue;
    if (head == "tets") {
      if (n >= 0) fail("duplicate tets line");
      if (!(tok >> n) || n <= 0) fail("expected a positive tetrahedron count");
      table.resize(static_cast<std::size_t>(n));
      given.assign(static_cast<std::size_t>(n), false);
    } else if (head == "orientation") {
      if (!(tok >> orientation) || (orientation != 1 && orientation != -1)) fail("orientation must be 1 or -1");
    } else if (head == "tet") {
      if (n < 0) fail("tet line before tets line");
      std::string label;
      if (!(tok >> label) || label.empty() || label.back() != ':') fail("expected 'tet <j>:'");
      label.pop_back();
      int j = -1;
      try {
        std::size_t used = 0;
        j = std::stoi(label, &used);
        if (used != label.size()) j = -1;
      } catch (const std::exception&) {
        j = -1;
      }
      if (j < 0 || j >= n) fail("tetrahedron index out of range");
      if (given[j]) fail("tetrahedron listed twice");
      std::string word;
      if (!(tok >> word) || word != "nbrs") fail("expected 'nbrs'");
      std::array<int, 4> nbrs{};
      for (int& x : nbrs)
        if (!(tok >> x)) fail("expected four neighbour indices");
      if (!(tok >> word) || word != "glue") fail("expected 'glue'");
      for (int f = 0; f < 4; ++f) {
        std::string p;
        if (!(tok >> p)) fail("expected four permutations");
        auto perm = Perm4::parse(p);
        if (!perm) throw Error(ErrorKind::BadGluing, "line " + std::to_string(line_no) + ": invalid permutation " + p);
        table[j][f] = Gluing{nbrs[static_cast<std::size_t>(f)], *perm};
      }
      if (tok >> word) fail("trailing tokens");
      given[j] = true;
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (n < 0) throw Error(ErrorKind::MalformedInput, "missing 'tets' line");
  for (int j = 0; j < n; ++j)
    if (!given[j]) throw Error(ErrorKind::MalformedInput, "tetrahedron " + std::to_string(j) + " missing");
  return Triangulation::from_gluings(std::move(table), orientation);
}

}  // namespace

Triangulation parse_triangulation(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw Error(ErrorKind::MalformedInput, "empty input");
  return text[first] == '{' ? parse_json(text) : parse_plain(text);
}

std::string to_text(const Triangulation& tri) {
  std::ostringstream out;
  out << "tets " << tri.size() << '\n';
  if (tri.orientation(0) < 0) out << "orientation -1\n";
  for (int j = 0; j < tri.size(); ++j) {
    out << "tet " << j << ": nbrs";
    for (int f = 0; f < 4; ++f) out << ' ' << tri.gluing(j, f).tet;
    out << " glue";
    for (int f = 0; f < 4; ++f) out << ' ' << tri.gluing(j, f).perm.str();
    out << '\n';
  }
  return out.str();
}

std::string to_json_text(const Triangulation& tri) {
  nlohmann::ordered_json doc;
  doc["tets"] = tri.size();
  if (tri.orientation(0) < 0) doc["orientation"] = -1;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int j = 0; j < tri.size(); ++j) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int f = 0; f < 4; ++f) row.push_back({tri.gluing(j, f).tet, tri.gluing(j, f).perm.str()});
    rows.push_back(row);
  }
  doc["gluings"] = rows;
  return doc.dump();
}

std::vector<EdgeClass> edge_classes(const Triangulation& tri) {
  std::vector<int> orientation(static_cast<std::size_t>(tri.size()));
  for (int j = 0; j < tri.size(); ++j) orientation[j] = tri.orientation(j);
  return wind_edges(tri.gluings(), orientation);
}

bool is_ordered(const Triangulation& tri) {
  for (int j = 0; j < tri.size(); ++j)
    for (int f = 0; f < 4; ++f)
      if (!tri.gluing(j, f).perm.monotone_off(f)) return false;
  return true;
}

std::optional<std::vector<Perm4>> ordering_relabeling(const Triangulation& tri) {
  const int n = tri.size();
  const auto& perms = Perm4::all();
  // Gluing (j, f) is compatible with labels (s, u) of tets j and its neighbour.
  auto compatible = [&](int j, int f, const Perm4& s, const Perm4& u) {
    const Gluing& gl = tri.gluing(j, f);
    return (u * gl.perm * s.inverse()).monotone_off(s[f]);
  };
  using Domain = std::array<bool, 24>;
  std::vector<Domain> domains(static_cast<std::size_t>(n));
  for (auto& d : domains) d.fill(true);
  std::vector<int> choice(static_cast<std::size_t>(n), -1);

  std::function<bool(int)> search = [&](int j) -> bool {
    if (j == n) return true;
    for (int k = 0; k < 24; ++k) {
      if (!domains[j][k]) continue;
      const Perm4& s = perms[static_cast<std::size_t>(k)];
      bool ok = true;
      for (int f = 0; f < 4 && ok; ++f) {
        const int q = tri.gluing(j, f).tet;
        if (q == j) {
          ok = compatible(j, f, s, s);
        } else if (choice[q] >= 0) {
          ok = compatible(j, f, s, perms[static_cast<std::size_t>(choice[q])]);
        }
      }
      if (!ok) continue;
      // Forward checking on unassigned neighbours.
      std::vector<Domain> saved = domains;
      choice[j] = k;
      for (int f = 0; f < 4 && ok; ++f) {
        const int q = tri.gluing(j, f).tet;
        if (q == j || choice[q] >= 0) continue;
        bool any = false;
        for (int m = 0; m < 24; ++m) {
          if (!domains[q][m]) continue;
          if (!compatible(j, f, s, perms[static_cast<std::size_t>(m)])) domains[q][m] = false;
          any = any || domains[q][m];
        }
        ok = any;
      }
      if (ok && search(j + 1)) return true;
      domains = std::move(saved);
      choice[j] = -1;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  std::vector<Perm4> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k : choice) out.push_back(perms[static_cast<std::size_t>(k)]);
  return out;
}

Triangulation find_ordering(const Triangulation& tri) {
  auto relabel = ordering_relabeling(tri);
  if (!relabel) throw Error(ErrorKind::NotOrderable, "no vertex ordering is compatible with every gluing");
  return tri.relabeled(*relabel);
}

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::Z: return "Z";
    case ShapeKind::Zp: return "Zp";
    case ShapeKind::Zpp: return "Zpp";
  }
  return "?";
}

std::optional<ShapeKind> parse_shape_kind(std::string_view text) {
  if (text == "Z" || text == "z") return ShapeKind::Z;
  if (text == "Zp" || text == "zp" || text == "Z'") return ShapeKind::Zp;
  if (text == "Zpp" || text == "zpp" || text == "Z''") return ShapeKind::Zpp;
  return std::nullopt;
}

ShapeAssignment shape_assignment(const Triangulation& tri) {
  if (!is_ordered(tri)) throw Error(ErrorKind::NotOrdered, "shape assignment needs an ordered triangulation");
  ShapeAssignment out;
  out.letters.resize(static_cast<std::size_t>(tri.size()));
  for (int j = 0; j < tri.size(); ++j) {
    const bool positive = tri.orientation(j) > 0;
    const ShapeKind p = positive ? ShapeKind::Zp : ShapeKind::Zpp;
    const ShapeKind pp = positive ? ShapeKind::Zpp : ShapeKind::Zp;
    // Edge order (01),(02),(03),(12),(13),(23).
    out.letters[j] = {ShapeKind::Z, pp, p, p, pp, ShapeKind::Z};
  }
  return out;
}

GluingMatrices classical_gluing_matrices(const Triangulation& tri) {
  const ShapeAssignment shapes = shape_assignment(tri);
  const auto n = static_cast<std::size_t>(tri.size());
  GluingMatrices out{Matrix<std::int64_t>(n, n), Matrix<std::int64_t>(n, n), Matrix<std::int64_t>(n, n), {}, {}};
  for (const EdgeClass& cls : edge_classes(tri)) {
    for (const EdgeMember& m : cls.members) {
      auto& target = shapes.letter(m.tet, m.edge()) == ShapeKind::Z    ? out.g
                     : shapes.letter(m.tet, m.edge()) == ShapeKind::Zp ? out.gp
                                                                       : out.gpp;
      ++target(static_cast<std::size_t>(cls.index), static_cast<std::size_t>(m.tet));
    }
  }
  out.a = out.g - out.gp;
  out.b = out.gpp - out.gp;
  return out;
}

}  // namespace nzalex
