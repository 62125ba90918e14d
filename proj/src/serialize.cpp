#include "hallprim/serialize.hpp"

#include <stdexcept>

namespace hallprim {

using nlohmann::json;

namespace {

template <class Key, class Tag>
json combination_json(const Combination<Key, Tag>& x, const char* type, const char* basis) {
  json terms = json::array();
  for (const auto& [k, c] : x) terms.push_back({{"index", k.to_string()}, {"coeff", c.to_string()}});
  return {{"type", type}, {"basis", basis}, {"var", std::string(1, static_cast<char>(Tag::var))}, {"terms", terms}};
}

void expect(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("malformed JSON: " + what);
}

template <class Elem>
Elem combination_from_json(const json& j, const char* type, const char* basis) {
  expect(j.is_object(), "expected an object");
  expect(j.value("type", "") == type, std::string("type must be ") + type);
  expect(j.value("basis", "") == basis, std::string("basis must be ") + basis);
  expect(j.value("var", "") == std::string(1, static_cast<char>(Elem::var)), "wrong coefficient variable");
  expect(j.contains("terms") && j["terms"].is_array(), "missing terms array");
  Elem x;
  for (const auto& t : j["terms"]) {
    expect(t.contains("index") && t["index"].is_string(), "term without index");
    expect(t.contains("coeff") && t["coeff"].is_string(), "term without coeff");
    x.add(Partition::parse(t["index"].get<std::string>()), parse_ratfunc(t["coeff"].get<std::string>(), Elem::var));
  }
  return x;
}

}  // namespace

json to_json(const SymFunc& x) { return combination_json(x, "SymFunc", "p"); }
json to_json(const CExpr& x) { return combination_json(x, "CExpr", "c"); }
json to_json(const HallElem& x) { return combination_json(x, "HallElem", "I"); }

json to_json(const HallTensor& x) {
  json terms = json::array();
  for (const auto& [k, c] : x) {
    terms.push_back({{"left", k.first.to_string()}, {"right", k.second.to_string()}, {"coeff", c.to_string()}});
  }
  return {{"type", "HallTensor"}, {"basis", "I(x)I"}, {"var", "q"}, {"terms", terms}};
}

json to_json(const NumHallElem& x) {
  json terms = json::array();
  for (const auto& [k, c] : x.terms()) {
    terms.push_back({{"class", k.summands_string()}, {"coeff", to_string(c)}, {"v_exp", x.v_parity()}});
  }
  return {{"type", "NumHallElem"}, {"m", x.vertices()}, {"q", x.q()}, {"terms", terms}};
}

SymFunc symfunc_from_json(const json& j) { return combination_from_json<SymFunc>(j, "SymFunc", "p"); }
CExpr cexpr_from_json(const json& j) { return combination_from_json<CExpr>(j, "CExpr", "c"); }
HallElem hall_elem_from_json(const json& j) { return combination_from_json<HallElem>(j, "HallElem", "I"); }

NumHallElem num_hall_elem_from_json(const json& j) {
  expect(j.is_object(), "expected an object");
  expect(j.value("type", "") == "NumHallElem", "type must be NumHallElem");
  expect(j.contains("m") && j["m"].is_number_integer(), "missing integer m");
  expect(j.contains("q") && j["q"].is_number_integer(), "missing integer q");
  expect(j.contains("terms") && j["terms"].is_array(), "missing terms array");
  const int m = j["m"].get<int>();
  NumHallElem x(m, j["q"].get<int>());
  for (const auto& t : j["terms"]) {
    expect(t.contains("class") && t["class"].is_string(), "term without class");
    expect(t.contains("coeff") && t["coeff"].is_string(), "term without coeff");
    long v = t.value("v_exp", 0L);
    x.add(CyclicIsoClass::parse(t["class"].get<std::string>(), m), parse_rational(t["coeff"].get<std::string>()), v);
  }
  return x;
}

std::string to_latex(const NumHallElem& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    BigRational a = c;
    if (!first) out += a < 0 ? " - " : " + ";
    else if (a < 0) out += "-";
    if (a < 0) a = -a;
    if (a != 1) {
      out += a.get_den() == 1 ? a.get_num().get_str() : "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
    }
    std::string cls;
    if (k.is_zero()) {
      cls = "0";
    } else {
      for (size_t i = 0; i < k.summands().size(); ++i) {
        if (i) cls += "\\oplus ";
        cls += "I_{[" + std::to_string(k.summands()[i].top) + ";" + std::to_string(k.summands()[i].length) + "]}";
      }
    }
    out += "[" + cls + "]";
    first = false;
  }
  if (x.v_parity() == 1) out = "v\\left(" + out + "\\right)";
  return out;
}

}  // namespace hallprim
