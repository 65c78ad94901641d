#pragma once

#include <json.hpp>

#include "schurk/arith.hpp"
#include "schurk/partitions.hpp"

namespace schurk {

using json = nlohmann::ordered_json;

json to_json(const BigRat& r);
json to_json(const QRat& r);
json to_json(const Real& r);
json to_json(const Scalar& s);
json to_json(const Partition& p);
json to_json(const RatPoly& p);       // ascending coefficients
json to_json(const Poly<QRat>& p);    // ascending coefficients
json to_json(const Matrix<BigRat>& m);

BigRat rat_from_json(const json& j);
QRat qrat_from_json(const json& j);

}  // namespace schurk
