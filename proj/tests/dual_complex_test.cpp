#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

#include "test_support.hpp"

namespace nzalex {
namespace {

using testing::fixture_ctx;

using Letters = std::vector<Letter>;

Letters L(std::initializer_list<std::pair<int, int>> xs) {
  Letters out;
  for (auto [g, e] : xs) out.push_back(Letter{g, e});
  return out;
}

Letters inverse(const Letters& w) {
  Letters out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Letter{it->gen, -it->exp});
  return out;
}

// Equality up to cyclic rotation and inversion.
bool cyclic_equal(const Letters& a, const Letters& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (const Letters& c : {b, inverse(b)})
    for (std::size_t s = 0; s < c.size(); ++s) {
      Letters rotated(c.begin() + static_cast<std::ptrdiff_t>(s), c.end());
      rotated.insert(rotated.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(s));
      if (rotated == a) return true;
    }
  return false;
}

// True if some relabeling of generators 1..4 (with per-generator inversion) sends every
// word of `theirs` to a word of `ours` (as multisets, up to rotation and inversion).
bool match_up_to_relabeling(const std::vector<std::vector<Letters>>& ours,
                            const std::vector<std::vector<Letters>>& theirs) {
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    for (int flips = 0; flips < 16; ++flips) {
      auto map_word = [&](const Letters& w) {
        Letters out;
        for (const Letter& l : w) {
          const int k = l.gen - 1;
          out.push_back(Letter{perm[static_cast<std::size_t>(k)], (flips >> k) & 1 ? -l.exp : l.exp});
        }
        return out;
      };
      bool ok = true;
      for (std::size_t s = 0; s < ours.size() && ok; ++s) {
        std::vector<bool> used(ours[s].size(), false);
        for (const Letters& w : theirs[s]) {
          const Letters m = map_word(w);
          bool found = false;
          for (std::size_t i = 0; i < ours[s].size() && !found; ++i)
            if (!used[i] && cyclic_equal(ours[s][i], m)) found = used[i] = true;
          ok = ok && found;
        }
      }
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Number of cyclic occurrences of `pattern` across the words.
int occurrences(const std::vector<FreeWord>& words, const Letters& pattern) {
  int count = 0;
  for (const FreeWord& w : words) {
    const auto& x = w.letters();
    for (std::size_t s = 0; s < x.size(); ++s) {
      bool ok = true;
      for (std::size_t k = 0; k < pattern.size() && ok; ++k) ok = x[(s + k) % x.size()] == pattern[k];
      count += ok;
    }
  }
  return count;
}

TEST(Dual, Fig8Generators) {
  const Context ctx = fixture_ctx("fig8.tri");
  ASSERT_EQ(ctx.dual.generators.size(), 4u);
  int into0 = 0;
  for (const auto& g : ctx.dual.generators) into0 += g.target_tet == 0;
  EXPECT_EQ(into0, 2);
  EXPECT_EQ(ctx.dual.tree, std::vector<int>{0});
}

TEST(Dual, GeneratorCountAndTreeSize) {
  for (const char* name : {"fig8.tri", "k8_2.tri"}) {
    const Context ctx = fixture_ctx(name);
    EXPECT_EQ(static_cast<int>(ctx.dual.generators.size()), 2 * ctx.size());
    EXPECT_EQ(static_cast<int>(ctx.dual.tree.size()), ctx.size() - 1);
    for (int j = 0; j < ctx.size(); ++j)
      for (int f = 0; f < 4; ++f) {
        const auto& gl = ctx.tri.gluing(j, f);
        EXPECT_NE(ctx.dual.inward(j, f), ctx.dual.inward(gl.tet, gl.perm[f]));
      }
  }
}

TEST(Dual, Fig8WordsAndCurvesMatchPublishedUpToRelabeling) {
  const Context ctx = fixture_ctx("fig8.tri");
  auto ours = [](const FreeWord& w) {
    Letters out = w.letters();
    return out;
  };
  std::vector<std::vector<Letters>> mine(4);
  for (const auto& w : ctx.words) mine[0].push_back(ours(w.r));
  for (const auto& [slot, kind] : {std::pair{1, ShapeKind::Z}, {2, ShapeKind::Zp}, {3, ShapeKind::Zpp}})
    for (const auto& c : smoothing_curves(ctx.tri, ctx.dual, kind).components) mine[slot].push_back(ours(c.word));
  const std::vector<std::vector<Letters>> published{
      {L({{3, 1}, {4, 1}, {2, 1}, {3, -1}, {4, -1}, {1, 1}}), L({{2, 1}, {4, 1}, {1, -1}, {2, -1}, {3, 1}, {1, 1}})},
      {L({{1, 1}, {3, 1}}), L({{4, 1}, {2, 1}})},
      {L({{1, 1}, {2, 1}, {3, -1}, {4, -1}})},
      {L({{2, -1}, {3, 1}, {4, 1}, {1, -1}})},
  };
  EXPECT_TRUE(match_up_to_relabeling(mine, published));
}

TEST(Dual, WordLengthsAndLetterCounts) {
  for (const char* name : {"fig8.tri", "k8_2.tri"}) {
    const Context ctx = fixture_ctx(name);
    const GluingMatrices cl = classical_gluing_matrices(ctx.tri);
    std::size_t total = 0;
    for (const auto& w : ctx.words) {
      const int i = w.edge_class;
      EXPECT_EQ(static_cast<int>(w.r.size()), ctx.edges[static_cast<std::size_t>(i)].valence());
      EXPECT_EQ(w.R.size(), 2 * w.r.size());
      total += w.r.size();
      for (int j = 0; j < ctx.size(); ++j) {
        const auto count = [&](ShapeKind k) {
          return std::count_if(w.R.letters().begin(), w.R.letters().end(),
                               [&](const Letter& l) { return l.gen == shape_letter_id(j, k); });
        };
        EXPECT_EQ(count(ShapeKind::Z), cl.g(i, j));
        EXPECT_EQ(count(ShapeKind::Zp), cl.gp(i, j));
        EXPECT_EQ(count(ShapeKind::Zpp), cl.gpp(i, j));
      }
    }
    EXPECT_EQ(static_cast<int>(total), 6 * ctx.size());
  }
}

TEST(Dual, CurvesUseEveryGeneratorOnce) {
  for (const char* name : {"fig8.tri", "k8_2.tri"}) {
    const Context ctx = fixture_ctx(name);
    for (ShapeKind kind : {ShapeKind::Z, ShapeKind::Zp, ShapeKind::Zpp}) {
      std::multiset<int> seen;
      for (const auto& c : smoothing_curves(ctx.tri, ctx.dual, kind).components)
        for (const Letter& l : c.word.letters()) seen.insert(l.gen);
      EXPECT_EQ(seen.size(), ctx.dual.generators.size());
      EXPECT_EQ(std::set<int>(seen.begin(), seen.end()).size(), ctx.dual.generators.size());
      for (int j = 0; j < ctx.size(); ++j) {
        const auto pairs = smoothing_face_pairs(ctx.tri, j, kind);
        std::set<int> faces{pairs[0][0], pairs[0][1], pairs[1][0], pairs[1][1]};
        EXPECT_EQ(faces.size(), 4u);
      }
    }
  }
}

TEST(Dual, ZAdjacentPairsPartitionFacesAndMixOrientation) {
  for (const char* name : {"fig8.tri", "k8_2.tri"}) {
    const Context ctx = fixture_ctx(name);
    const auto pairs = z_adjacent_pairs(ctx.tri, ctx.dual);
    for (int j = 0; j < ctx.size(); ++j) {
      std::set<int> faces;
      for (const auto& p : pairs[static_cast<std::size_t>(j)]) {
        faces.insert(p.inward_face);
        faces.insert(p.outward_face);
        EXPECT_TRUE(ctx.dual.inward(j, p.inward_face));
        EXPECT_FALSE(ctx.dual.inward(j, p.outward_face));
      }
      EXPECT_EQ(faces.size(), 4u);
      const auto z = smoothing_face_pairs(ctx.tri, j, ShapeKind::Z);
      for (const auto& p : pairs[static_cast<std::size_t>(j)]) {
        const std::set<int> pf{p.inward_face, p.outward_face};
        const std::set<int> s0{z[0][0], z[0][1]}, s1{z[1][0], z[1][1]};
        EXPECT_TRUE(pf == s0 || pf == s1);
      }
    }
  }
}

// Local letter patterns around the (01)-adjacent faces: g1 z g0, z'' g0, g0^-1 z', g1 z',
// z'' g1^-1, each exactly once, where g0 crosses the outward face and g1 the inward one.
TEST(Dual, LocalPatternsAroundZAdjacentFaces) {
  for (const char* name : {"fig8.tri", "k8_2.tri"}) {
    const Context ctx = fixture_ctx(name);
    std::vector<FreeWord> words;
    for (const auto& w : ctx.words) words.push_back(w.R);
    const auto pairs = z_adjacent_pairs(ctx.tri, ctx.dual);
    for (int j = 0; j < ctx.size(); ++j) {
      const auto& p = pairs[static_cast<std::size_t>(j)][0];
      ASSERT_EQ(p.edge, edge_index(0, 1));
      const auto& faces = ctx.dual.face_generator[static_cast<std::size_t>(j)];
      const int g0 = faces[static_cast<std::size_t>(p.outward_face)];
      const int g1 = faces[static_cast<std::size_t>(p.inward_face)];
      const int z = shape_letter_id(j, ShapeKind::Z);
      const int zp = shape_letter_id(j, ShapeKind::Zp);
      const int zpp = shape_letter_id(j, ShapeKind::Zpp);
      auto check = [&](const Letters& pattern) {
        EXPECT_EQ(occurrences(words, pattern), 1) << name << " tet " << j;
      };
      check(Letters{{g1, 1}, {z, 1}, {g0, 1}});
      check(Letters{{zpp, 1}, {g0, 1}});
      check(Letters{{g0, -1}, {zp, 1}});
      check(Letters{{g1, 1}, {zp, 1}});
      check(Letters{{zpp, 1}, {g1, -1}});
    }
  }
}

TEST(Dual, GeneratorNames) {
  EXPECT_EQ(generator_name(0), "g1");
  EXPECT_EQ(generator_name(shape_letter_id(0, ShapeKind::Z)), "z1");
  EXPECT_EQ(generator_name(shape_letter_id(1, ShapeKind::Zpp)), "z2''");
}

}  // namespace
}  // namespace nzalex
