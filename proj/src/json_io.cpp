#include "eph/json_io.hpp"

namespace eph::io {

namespace {

Rational rational_field(const nlohmann::json& j, const char* key) {
  return parse_rational(j.at(key).get<std::string>());
}

Sigma sigma_field(const nlohmann::json& j) { return sigma_from_int(j.at("sigma").get<int>()); }

}  // namespace

nlohmann::json to_json(const HyperNum& z) {
  return {{"re", to_string(z.re())}, {"im", to_string(z.im())}, {"sigma", value(z.sigma())}};
}

HyperNum hypernum_from_json(const nlohmann::json& j) {
  return {rational_field(j, "re"), rational_field(j, "im"), sigma_field(j)};
}

nlohmann::json to_json(const MoebiusMap& g) {
  return {{"a", to_json(g.a())}, {"b", to_json(g.b())}, {"c", to_json(g.c())}, {"d", to_json(g.d())}};
}

MoebiusMap moebius_from_json(const nlohmann::json& j) {
  return MoebiusMap(Matrix2{hypernum_from_json(j.at("a")), hypernum_from_json(j.at("b")),
                            hypernum_from_json(j.at("c")), hypernum_from_json(j.at("d"))});
}

nlohmann::json to_json(const Cycle& c) {
  return {{"k", to_string(c.k())}, {"l", to_string(c.l())}, {"n", to_string(c.n())}, {"m", to_string(c.m())}};
}

Cycle cycle_from_json(const nlohmann::json& j) {
  return {rational_field(j, "k"), rational_field(j, "l"), rational_field(j, "n"), rational_field(j, "m")};
}

nlohmann::json to_json(const CPoint& p) {
  nlohmann::json j = to_json(p.quadruple());
  j["sigma"] = value(p.sigma());
  return j;
}

CPoint cpoint_from_json(const nlohmann::json& j) { return {cycle_from_json(j), sigma_field(j)}; }

}  // namespace eph::io
