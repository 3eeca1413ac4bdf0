#pragma once

#include <json.hpp>

#include "schubk/diagrams.hpp"
#include "schubk/restriction.hpp"
#include "schubk/ring.hpp"
#include "schubk/tableaux.hpp"

namespace schubk {

// {"monomials":[{"exp":[...],"coef":"..."}]}, sorted by exponent vector.
nlohmann::json class_to_json(const LaurentPoly& p);
LaurentPoly class_from_json(const nlohmann::json& j, int rank);

// {"ambient":[...],"boxes":[[i,j],...]}
nlohmann::json diagram_to_json(const BoxSet& c);
BoxSet diagram_from_json(const nlohmann::json& j, Geometry geometry);

// {"shape":[...],"cells":[{"box":[i,j],"set":[...]}]}
nlohmann::json tableau_to_json(const SetValuedTableau& t);
SetValuedTableau tableau_from_json(const nlohmann::json& j, Geometry geometry);

// {"d_w":...,"m":[...]}
nlohmann::json hilbert_to_json(const HilbertData& h);
HilbertData hilbert_from_json(const nlohmann::json& j);

}  // namespace schubk
