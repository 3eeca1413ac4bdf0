#include "schubk/json_io.hpp"

#include <algorithm>

namespace schubk {

using nlohmann::json;

json class_to_json(const LaurentPoly& p) {
  json monomials = json::array();
  for (const auto& [e, c] : p.terms()) monomials.push_back({{"exp", e}, {"coef", c.get_str()}});
  return {{"monomials", monomials}};
}

LaurentPoly class_from_json(const json& j, int rank) {
  LaurentPoly p(rank);
  for (const json& m : j.at("monomials")) {
    auto exp = m.at("exp").get<std::vector<int>>();
    BigInt c;
    if (c.set_str(m.at("coef").get<std::string>(), 10) != 0) throw InputError("malformed coefficient");
    p.add_term(exp, c);
  }
  return p;
}

json diagram_to_json(const BoxSet& c) {
  json boxes = json::array();
  for (const Box& b : c.boxes()) boxes.push_back({b.row, b.col});
  return {{"ambient", c.ambient().rows}, {"boxes", boxes}};
}

BoxSet diagram_from_json(const json& j, Geometry geometry) {
  Shape ambient{geometry, j.at("ambient").get<std::vector<int>>()};
  std::vector<Box> boxes;
  for (const json& b : j.at("boxes")) boxes.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
  return BoxSet(ambient, std::move(boxes));
}

json tableau_to_json(const SetValuedTableau& t) {
  json cells = json::array();
  for (std::size_t k = 0; k < t.boxes().size(); ++k) {
    const Box& b = t.boxes()[k];
    cells.push_back({{"box", {b.row, b.col}}, {"set", t.entries()[k]}});
  }
  return {{"shape", t.shape().rows}, {"cells", cells}};
}

SetValuedTableau tableau_from_json(const json& j, Geometry geometry) {
  Shape shape{geometry, j.at("shape").get<std::vector<int>>()};
  std::vector<std::pair<Box, std::vector<int>>> cells;
  for (const json& cell : j.at("cells")) {
    const json& b = cell.at("box");
    cells.push_back({{b.at(0).get<int>(), b.at(1).get<int>()}, cell.at("set").get<std::vector<int>>()});
  }
  std::sort(cells.begin(), cells.end());
  std::vector<std::vector<int>> entries;
  for (auto& [box, set] : cells) entries.push_back(std::move(set));
  SetValuedTableau t(shape, std::move(entries));
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (!(cells[k].first == t.boxes()[k])) throw InputError("tableau cells do not match its shape");
  }
  return t;
}

json hilbert_to_json(const HilbertData& h) { return {{"d_w", h.d_w}, {"m", h.m}}; }

HilbertData hilbert_from_json(const json& j) {
  return {j.at("d_w").get<int>(), j.at("m").get<std::vector<long>>()};
}

}  // namespace schubk
