#include "nzalex/group_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nzalex {

FreeWord::FreeWord(std::initializer_list<Letter> letters) {
  for (const Letter& l : letters) push(l);
}

FreeWord::FreeWord(const std::vector<Letter>& letters) {
  for (const Letter& l : letters) push(l);
}

void FreeWord::push(Letter l) {
  if (l.exp == 0) return;
  if (l.exp != 1 && l.exp != -1) {
    const int step = l.exp > 0 ? 1 : -1;
    for (int i = 0; i != l.exp; i += step) push(Letter{l.gen, step});
    return;
  }
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(Letter{it->gen, -it->exp});
  return out;
}

std::int64_t FreeWord::exponent_sum(int gen) const {
  std::int64_t s = 0;
  for (const Letter& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

FreeWord& FreeWord::operator*=(const FreeWord& o) {
  if (&o == this) {
    const FreeWord copy = o;
    return *this *= copy;
  }
  for (const Letter& l : o.letters_) push(l);
  return *this;
}

GroupRingElem fox_derivative(const FreeWord& w, int gen) {
  GroupRingElem out;
  FreeWord prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen && l.exp == 1) out.add_term(prefix, 1);
    prefix *= FreeWord::letter(l.gen, l.exp);
    if (l.gen == gen && l.exp == -1) out.add_term(prefix, -1);
  }
  return out;
}

FreeWord eliminate(const FreeWord& w, const std::function<bool(int)>& keep) {
  std::vector<Letter> kept;
  kept.reserve(w.size());
  for (const Letter& l : w.letters())
    if (keep(l.gen)) kept.push_back(l);
  return FreeWord(kept);
}

GroupRingElem eliminate(const GroupRingElem& x, const std::function<bool(int)>& keep) {
  return x.map_words([&](const FreeWord& w) { return eliminate(w, keep); });
}

mpz_class augment(const GroupRingElem& x) {
  mpz_class s = 0;
  for (const auto& [w, c] : x.terms()) s += c;
  return s;
}

Matrix<mpz_class> augment(const GroupRingMatrix& m) {
  return m.map([](const GroupRingElem& x) { return augment(x); });
}

GroupRingMatrix adjoint(const GroupRingMatrix& m) {
  return m.transpose().map([](const GroupRingElem& x) { return x.involution(); });
}

std::int64_t AlphaMap::operator()(const FreeWord& w) const {
  std::int64_t s = 0;
  for (const Letter& l : w.letters()) s += (*this)(l.gen) * l.exp;
  return s;
}

std::vector<std::vector<mpz_class>> integer_kernel(const Matrix<mpz_class>& input) {
  Matrix<mpz_class> a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Matrix<mpz_class> u = Matrix<mpz_class>::identity(cols, 1);
  auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t r = 0; r < rows; ++r) a(r, dst) -= q * a(r, src);
    for (std::size_t r = 0; r < cols; ++r) u(r, dst) -= q * u(r, src);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, x), a(r, y));
    for (std::size_t r = 0; r < cols; ++r) std::swap(u(r, x), u(r, y));
  };
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < rows && pivot < cols; ++i) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = pivot; j < cols; ++j)
        if (sgn(a(i, j)) != 0 && (best == cols || abs(a(i, j)) < abs(a(i, best)))) best = j;
      if (best == cols) break;
      col_swap(pivot, best);
      bool done = true;
      for (std::size_t j = pivot + 1; j < cols; ++j) {
        if (sgn(a(i, j)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), a(i, pivot).get_mpz_t());
        col_axpy(j, pivot, q);
        if (sgn(a(i, j)) != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<std::vector<mpz_class>> basis;
  for (std::size_t j = pivot; j < cols; ++j) {
    std::vector<mpz_class> v(cols);
    for (std::size_t r = 0; r < cols; ++r) v[r] = u(r, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

AlphaMap abelianization(const Presentation& presentation, std::optional<int> meridian) {
  const auto& gens = presentation.generators;
  Matrix<mpz_class> m(presentation.relators.size(), gens.size());
  for (std::size_t i = 0; i < presentation.relators.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      m(i, j) = static_cast<long>(presentation.relators[i].exponent_sum(gens[j]));
  const auto kernel = integer_kernel(m);
  if (kernel.empty()) throw Error(ErrorKind::NoKernel, "abelianized relator matrix has trivial kernel");
  if (kernel.size() > 1)
    throw Error(ErrorKind::RankDeficient,
                "first Betti number is " + std::to_string(kernel.size()) + "; supply alpha explicitly");
  std::vector<mpz_class> v = kernel.front();
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (auto& x : v) x /= g;
  int sign = 0;
  if (meridian) {
    auto it = std::find(gens.begin(), gens.end(), *meridian);
    if (it == gens.end())
      throw Error(ErrorKind::InvalidAlpha, "meridian is not a surviving generator");
    const auto& value = v[static_cast<std::size_t>(it - gens.begin())];
    if (sgn(value) == 0) throw Error(ErrorKind::InvalidAlpha, "alpha vanishes on the meridian");
    sign = sgn(value);
  } else {
    for (const auto& x : v)
      if (sgn(x) != 0) {
        sign = sgn(x);
        break;
      }
  }
  std::map<int, std::int64_t> values;
  for (std::size_t j = 0; j < gens.size(); ++j) values[gens[j]] = sign * v[j].get_si();
  return AlphaMap(std::move(values));
}

ZPoly specialize(const GroupRingElem& x, const AlphaMap& alpha) {
  ZPoly out;
  for (const auto& [w, c] : x.terms()) out += ZPoly::monomial(c, static_cast<int>(alpha(w)));
  return out;
}

ZMatrix specialize(const GroupRingMatrix& m, const AlphaMap& alpha) {
  return m.map([&](const GroupRingElem& x) { return specialize(x, alpha); });
}

GroupRingMatrix fox_jacobian(const std::vector<FreeWord>& relators, const std::vector<int>& generators) {
  GroupRingMatrix out(relators.size(), generators.size());
  for (std::size_t i = 0; i < relators.size(); ++i)
    for (std::size_t j = 0; j < generators.size(); ++j)
      out(i, j) = fox_derivative(relators[i], generators[j]);
  return out;
}

std::string to_string(const FreeWord& w, const GeneratorNamer& name) {
  if (w.is_identity()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w.letters()[i];
    if (i) out << ' ';
    out << name(l.gen);
    if (l.exp != 1) out << "^-1";
  }
  return out.str();
}

std::string to_string(const GroupRingElem& x, const GeneratorNamer& name) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    const bool negative = sgn(c) < 0;
    const mpz_class a = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (w.is_identity()) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << ' ';
      out << to_string(w, name);
    }
  }
  return out.str();
}

}  // namespace nzalex
