#pragma once

#include <nlohmann/json.hpp>

#include "nzalex/dual_complex.hpp"
#include "nzalex/group_algebra.hpp"
#include "nzalex/laurent.hpp"

namespace nzalex {

using Json = nlohmann::ordered_json;

// {"lo": k, "coeffs": [...]}; integers that overflow 64 bits are written as strings.
Json to_json(const ZPoly& p);
// Coefficients as [re, im] pairs.
Json to_json(const CPoly& p);
ZPoly zpoly_from_json(const Json& j);

Json to_json(const ZMatrix& m);
Json to_json(const Matrix<mpz_class>& m);
Json to_json(const Matrix<std::int64_t>& m);
// Entries rendered as strings in generator names.
Json to_json(const GroupRingMatrix& m);

Json to_json(const CurveSystem& curves);

}  // namespace nzalex
