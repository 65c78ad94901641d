#include "schurk/io.hpp"

namespace schurk {

json to_json(const BigRat& r) { return rat_str(r); }

json to_json(const QRat& r) {
  json j;
  j["var"] = "u";
  j["offset"] = r.offset();
  j["num"] = to_json(r.num());
  j["den"] = to_json(r.den());
  j["text"] = r.str();
  return j;
}

json to_json(const Real& r) {
  json j;
  j["value"] = real_str(r);
  j["precision"] = r.precision();
  return j;
}

json to_json(const Scalar& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

json to_json(const Partition& p) {
  json j = json::array();
  for (int i = 0; i < p.length(); ++i) j.push_back(p[i]);
  return j;
}

json to_json(const RatPoly& p) {
  json j = json::array();
  for (const auto& c : p.coeffs()) j.push_back(rat_str(c));
  return j;
}

json to_json(const Poly<QRat>& p) {
  json j = json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_json(c));
  return j;
}

json to_json(const Matrix<BigRat>& m) {
  json j = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rat_str(v));
    j.push_back(std::move(r));
  }
  return j;
}

BigRat rat_from_json(const json& j) {
  if (!j.is_string()) throw MathError("expected a rational string");
  return parse_rat(j.get<std::string>());
}

QRat qrat_from_json(const json& j) {
  auto poly = [](const json& a) {
    std::vector<BigRat> c;
    for (const auto& v : a) c.push_back(rat_from_json(v));
    return RatPoly(std::move(c));
  };
  if (j.value("var", "") != "u") throw MathError("expected a QRat object in u");
  return QRat(j.at("offset").get<long>(), poly(j.at("num")), poly(j.at("den")));
}

}  // namespace schurk
