#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "modvir/fock.hpp"
#include "modvir/singular.hpp"

namespace modvir {

using Json = nlohmann::ordered_json;

/// Base scalars become strings ("3/4", "5 mod 7"); polynomials become arrays
/// of coefficient strings, constant term first.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const Ring& ring);

/// [{"partition":[...], "coeff":...}, ...] in PBW order.
Json verma_to_json(const VermaVector& v);
VermaVector verma_from_json(const Json& j, const Ring& ring);

/// [{"sector":"NS"|"R", "modes":[doubled ints], "coeff":...}, ...].
Json fock_to_json(const FockVector& v);
FockVector fock_from_json(const Json& j, Sector sector, const Ring& ring);

Json character_table_to_json(const CharacterTable& table, const ModuleParams& params);

Sector parse_sector(const std::string& text);
Parity parse_parity(const std::string& text);

}  // namespace modvir
