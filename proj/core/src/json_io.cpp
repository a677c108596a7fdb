#include "nzalex/json_io.hpp"

#include "nzalex/error.hpp"

namespace nzalex {

namespace {
Json integer(const mpz_class& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}
}  // namespace

Json to_json(const ZPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer(c));
  return Json{{"lo", p.lo()}, {"coeffs", coeffs}};
}

Json to_json(const CPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(Json::array({c.real(), c.imag()}));
  return Json{{"lo", p.lo()}, {"coeffs", coeffs}};
}

ZPoly zpoly_from_json(const Json& j) {
  try {
    std::vector<mpz_class> c;
    for (const auto& x : j.at("coeffs")) c.emplace_back(x.is_string() ? mpz_class(x.get<std::string>()) : mpz_class(x.get<long>()));
    return ZPoly(j.at("lo").get<int>(), std::move(c));
  } catch (const std::exception& e) {
    throw Error(ErrorKind::MalformedInput, std::string("polynomial JSON: ") + e.what());
  }
}

namespace {
template <class T, class F>
Json matrix_json(const Matrix<T>& m, F&& f) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(f(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}
}  // namespace

Json to_json(const ZMatrix& m) {
  return matrix_json(m, [](const ZPoly& p) { return Json{{"poly", to_string(p)}, {"value", to_json(p)}}; });
}

Json to_json(const Matrix<mpz_class>& m) { return matrix_json(m, integer); }

Json to_json(const Matrix<std::int64_t>& m) {
  return matrix_json(m, [](std::int64_t x) { return Json(x); });
}

Json to_json(const GroupRingMatrix& m) {
  return matrix_json(m, [](const GroupRingElem& x) { return Json(to_string(x, generator_name)); });
}

Json to_json(const CurveSystem& curves) {
  Json comps = Json::array();
  for (const auto& c : curves.components)
    comps.push_back(Json{{"word", to_string(c.word, generator_name)}, {"alpha", c.alpha}});
  return Json{{"kind", std::string(to_string(curves.kind))}, {"components", comps}};
}

}  // namespace nzalex
