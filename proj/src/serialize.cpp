#include "modvir/serialize.hpp"

#include <stdexcept>

namespace modvir {

Json scalar_to_json(const Scalar& s) {
  if (s.kind() != Scalar::Kind::Polynomial) return s.to_string();
  Json arr = Json::array();
  for (const auto& c : s.coefficients()) arr.push_back(c.to_string());
  return arr;
}

Scalar scalar_from_json(const Json& j, const Ring& ring) {
  if (j.is_string()) return ring.parse(j.get<std::string>());
  if (j.is_number_integer()) return ring.from_int(j.get<long long>());
  if (j.is_array()) {
    if (!ring.is_polynomial()) throw std::invalid_argument("polynomial scalar in a non-polynomial ring");
    std::vector<Scalar> coeffs;
    for (const auto& c : j) coeffs.push_back(scalar_from_json(c, ring.base()));
    return Scalar::polynomial(ring.characteristic(), std::move(coeffs));
  }
  throw std::invalid_argument("scalar must be a string, integer, or coefficient array");
}

Json verma_to_json(const VermaVector& v) {
  Json arr = Json::array();
  for (const auto& [p, c] : v.terms()) {
    Json parts = Json::array();
    for (int x : p.parts()) parts.push_back(x);
    arr.push_back(Json{{"partition", parts}, {"coeff", scalar_to_json(c)}});
  }
  return arr;
}

VermaVector verma_from_json(const Json& j, const Ring& ring) {
  if (!j.is_array()) throw std::invalid_argument("Verma vector JSON must be an array");
  VermaVector v(ring);
  for (const auto& term : j) {
    auto parts = term.at("partition").get<std::vector<int>>();
    v.add_term(Partition(std::move(parts)), scalar_from_json(term.at("coeff"), ring));
  }
  return v;
}

Json fock_to_json(const FockVector& v) {
  Json arr = Json::array();
  for (const auto& [m, c] : v.terms()) {
    arr.push_back(Json{{"sector", to_string(m.sector())},
                       {"modes", m.doubled_modes()},
                       {"coeff", scalar_to_json(c)}});
  }
  return arr;
}

FockVector fock_from_json(const Json& j, Sector sector, const Ring& ring) {
  if (!j.is_array()) throw std::invalid_argument("Fock vector JSON must be an array");
  FockVector v(sector, ring);
  for (const auto& term : j) {
    if (term.contains("sector") && parse_sector(term.at("sector").get<std::string>()) != sector) {
      throw std::invalid_argument("Fock monomial sector does not match");
    }
    std::vector<int> twice_n;
    for (int m : term.at("modes").get<std::vector<int>>()) twice_n.push_back(-m);
    v.add_term(FockMonomial(sector, std::move(twice_n)), scalar_from_json(term.at("coeff"), ring));
  }
  return v;
}

Json character_table_to_json(const CharacterTable& table, const ModuleParams& params) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back(Json{{"degree", r.degree},
                        {"verma", r.verma},
                        {"radical", r.radical},
                        {"irreducible", r.irreducible}});
  }
  return Json{{"c", scalar_to_json(params.c())},
              {"h", scalar_to_json(params.h())},
              {"char", params.ring().characteristic()},
              {"rows", rows}};
}

Sector parse_sector(const std::string& text) {
  if (text == "NS" || text == "ns") return Sector::NS;
  if (text == "R" || text == "r" || text == "Ramond" || text == "ramond") return Sector::Ramond;
  throw std::invalid_argument("sector must be NS or R, got '" + text + "'");
}

Parity parse_parity(const std::string& text) {
  if (text == "even" || text == "0") return Parity::Even;
  if (text == "odd" || text == "1") return Parity::Odd;
  throw std::invalid_argument("parity must be even or odd, got '" + text + "'");
}

}  // namespace modvir
