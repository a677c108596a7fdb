#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nzalex/laurent.hpp"
#include "nzalex/matrix.hpp"

namespace nzalex {

// Generator ids: dual edges are 0..2N-1; shape letters are negative (see shape_letter_id).
struct Letter {
  int gen = 0;
  int exp = 1;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<Letter> letters);
  explicit FreeWord(const std::vector<Letter>& letters);

  static FreeWord letter(int gen, int exp = 1) { return FreeWord{Letter{gen, exp}}; }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;
  std::int64_t exponent_sum(int gen) const;

  FreeWord& operator*=(const FreeWord& o);
  friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  void push(Letter l);
  std::vector<Letter> letters_;
};

// Element of Z[F] (or R[F]) as a finite map from reduced words to nonzero coefficients.
template <class Coeff>
class GroupRing {
 public:
  using Terms = std::map<FreeWord, Coeff>;

  GroupRing() = default;
  static GroupRing scalar(const Coeff& c) { return word(FreeWord{}, c); }
  static GroupRing word(const FreeWord& w, const Coeff& c = Coeff(1)) {
    GroupRing out;
    out.add_term(w, c);
    return out;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const FreeWord& w, const Coeff& c) {
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second == Coeff(0)) terms_.erase(it);
  }

  Coeff coeff(const FreeWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  // Linear extension of w -> w^{-1}.
  GroupRing involution() const {
    GroupRing out;
    for (const auto& [w, c] : terms_) out.add_term(w.inverse(), c);
    return out;
  }

  template <class F>
  GroupRing map_words(F&& f) const {
    GroupRing out;
    for (const auto& [w, c] : terms_) out.add_term(f(w), c);
    return out;
  }

  GroupRing operator-() const {
    GroupRing out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
  }
  GroupRing& operator+=(const GroupRing& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  GroupRing& operator-=(const GroupRing& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  GroupRing& operator*=(const GroupRing& o) { return *this = *this * o; }
  friend GroupRing operator+(GroupRing a, const GroupRing& b) { return a += b; }
  friend GroupRing operator-(GroupRing a, const GroupRing& b) { return a -= b; }
  friend GroupRing operator*(const GroupRing& a, const GroupRing& b) {
    GroupRing out;
    for (const auto& [u, x] : a.terms_)
      for (const auto& [v, y] : b.terms_) out.add_term(u * v, x * y);
    return out;
  }
  friend bool operator==(const GroupRing& a, const GroupRing& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using GroupRingElem = GroupRing<mpz_class>;
using RealGroupRingElem = GroupRing<double>;
using GroupRingMatrix = Matrix<GroupRingElem>;
using RealGroupRingMatrix = Matrix<RealGroupRingElem>;

// Left Fox derivative d w / d gen.
GroupRingElem fox_derivative(const FreeWord& w, int gen);

// Deletes every letter whose generator fails `keep`, then reduces.
FreeWord eliminate(const FreeWord& w, const std::function<bool(int)>& keep);
GroupRingElem eliminate(const GroupRingElem& x, const std::function<bool(int)>& keep);

// Sum of coefficients (the map gamma -> 1).
mpz_class augment(const GroupRingElem& x);
Matrix<mpz_class> augment(const GroupRingMatrix& m);

// Transpose composed with the involution.
GroupRingMatrix adjoint(const GroupRingMatrix& m);

struct Presentation {
  std::vector<int> generators;
  std::vector<FreeWord> relators;
};

// Homomorphism to Z given by integer values on generators; unknown generators map to 0.
class AlphaMap {
 public:
  AlphaMap() = default;
  explicit AlphaMap(std::map<int, std::int64_t> values) : values_(std::move(values)) {}

  std::int64_t operator()(int gen) const {
    auto it = values_.find(gen);
    return it == values_.end() ? 0 : it->second;
  }
  std::int64_t operator()(const FreeWord& w) const;
  const std::map<int, std::int64_t>& values() const noexcept { return values_; }
  bool kills(const FreeWord& relator) const { return (*this)(relator) == 0; }

 private:
  std::map<int, std::int64_t> values_;
};

// Generator of the rank-one integer kernel of the abelianized relator matrix.
// Sign: alpha(meridian) = +1 when given, else the first nonzero value is positive.
AlphaMap abelianization(const Presentation& presentation, std::optional<int> meridian = std::nullopt);

// Integer kernel basis of an integer matrix (columns of the returned vectors).
std::vector<std::vector<mpz_class>> integer_kernel(const Matrix<mpz_class>& m);

// x -> sum c * t^{alpha(w)}.
ZPoly specialize(const GroupRingElem& x, const AlphaMap& alpha);
ZMatrix specialize(const GroupRingMatrix& m, const AlphaMap& alpha);

// Fox Jacobian: entry (i, j) = d relators[i] / d generators[j].
GroupRingMatrix fox_jacobian(const std::vector<FreeWord>& relators, const std::vector<int>& generators);

using GeneratorNamer = std::function<std::string(int)>;
std::string to_string(const FreeWord& w, const GeneratorNamer& name);
std::string to_string(const GroupRingElem& x, const GeneratorNamer& name);

}  // namespace nzalex
