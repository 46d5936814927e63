#include "qcomm/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

namespace qcomm {
namespace {

constexpr const char* kTensorSep = " (x) ";

std::string index_pair(std::uint32_t i, std::uint32_t j) {
  return std::to_string(i) + "," + std::to_string(j);
}

std::string joined_label(const Algebra& a, std::uint64_t key, std::uint8_t arity) {
  auto slots = unpack_key(key, a.dim, arity);
  std::string out;
  for (int s = 0; s < (int)arity; ++s) {
    if (s) out += kTensorSep;
    out += a.label(slots[s]);
  }
  return out;
}

/// Label lookup decoupled from Algebra so elements can be decoded while
/// the algebra itself is still being rebuilt from the same document.
struct LabelTable {
  std::uint32_t dim = 0;
  std::unordered_map<std::string, std::uint32_t> index;

  static LabelTable of(const Algebra& a) {
    LabelTable t;
    t.dim = a.dim;
    t.index = a.label_index;
    return t;
  }
  static LabelTable of_basis(const Json& basis) {
    LabelTable t;
    t.dim = (std::uint32_t)basis.size();
    for (std::uint32_t i = 0; i < t.dim; ++i)
      t.index.emplace(basis[i].get<std::string>(), i);
    return t;
  }
};

std::uint64_t key_of_label(const LabelTable& t, const std::string& lab, std::uint8_t arity) {
  std::uint64_t key = 0;
  int slots = 0;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = lab.find(kTensorSep, pos);
    std::string part =
        lab.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    auto idx = t.index.find(part);
    if (idx == t.index.end()) throw ConstructionError("unknown basis label: " + part);
    key = key * t.dim + idx->second;
    ++slots;
    if (next == std::string::npos) break;
    pos = next + 5;
  }
  if (slots != (int)arity)
    throw ConstructionError("tensor label has " + std::to_string(slots) +
                            " slots where " + std::to_string((int)arity) +
                            " were expected: " + lab);
  return key;
}

std::uint8_t label_arity(const std::string& lab) {
  std::uint8_t n = 1;
  for (std::size_t pos = lab.find(kTensorSep); pos != std::string::npos;
       pos = lab.find(kTensorSep, pos + 5))
    ++n;
  return n;
}

Element decode_element(const Json& j, const LabelTable& t, const CycloField& f,
                       std::uint8_t arity) {
  if (!j.is_array()) throw ConstructionError("element is not a term array");
  if (!j.empty()) arity = label_arity(j.front().at("label").get<std::string>());
  Element e = Element::zero(t.dim, arity);
  for (const auto& term : j)
    e.add_term(key_of_label(t, term.at("label").get<std::string>(), arity),
               scalar_from_json(term.at("scalar"), f));
  return e;
}

}  // namespace

Json scalar_to_json(const Scalar& s, const CycloField& f) {
  Scalar::LcdForm lcd = s.bind(f).lcd_form();
  Json j;
  j["den"] = lcd.den;
  Json coeffs = Json::array();
  for (std::int64_t n : lcd.nums) coeffs.push_back(n);
  j["coeffs"] = coeffs;
  return j;
}

Scalar scalar_from_json(const Json& j, const CycloField& f) {
  std::int64_t den = j.at("den").get<std::int64_t>();
  std::vector<Rational> coeffs;
  for (const auto& n : j.at("coeffs"))
    coeffs.emplace_back(n.get<std::int64_t>(), den);
  return Scalar(f, std::move(coeffs));
}

Json element_to_json(const Element& e, const Algebra& a, const CycloField& f) {
  Json terms = Json::array();
  for (const auto& [key, c] : e.terms) {
    Json t;
    t["label"] = joined_label(a, key, e.arity);
    t["scalar"] = scalar_to_json(c, f);
    terms.push_back(t);
  }
  return terms;
}

Element element_from_json(const Json& j, const Algebra& a, const CycloField& f,
                          std::uint8_t arity) {
  return decode_element(j, LabelTable::of(a), f, arity);
}

Json algebra_to_json(const Algebra& a, const CycloField& f) {
  Json j;
  Json factors = Json::array();
  for (std::size_t i = 0; i < a.factor_names.size(); ++i) {
    Json g;
    g["name"] = a.factor_names[i];
    g["order"] = a.factor_orders[i];
    factors.push_back(g);
  }
  j["factors"] = factors;
  Json basis = Json::array();
  for (std::uint32_t i = 0; i < a.dim; ++i) basis.push_back(a.label(i));
  j["basis"] = basis;
  j["unit"] = a.label(a.unit);
  Json mul = Json::object();
  for (std::uint32_t i = 0; i < a.dim; ++i)
    for (std::uint32_t k = 0; k < a.dim; ++k)
      mul[index_pair(i, k)] = element_to_json(a.basis_product(i, k), a, f);
  j["mul"] = mul;
  return j;
}

Algebra algebra_from_json(const Json& j, const CycloField& f) {
  std::vector<std::string> names;
  std::vector<int> orders;
  for (const auto& g : j.at("factors")) {
    names.push_back(g.at("name").get<std::string>());
    orders.push_back(g.at("order").get<int>());
  }
  LabelTable table = LabelTable::of_basis(j.at("basis"));
  const Json& mul = j.at("mul");
  Algebra a = make_algebra(names, orders, [&](std::uint32_t i, std::uint32_t k) {
    return decode_element(mul.at(index_pair(i, k)), table, f, 1);
  });
  if (a.dim != table.dim)
    throw ConstructionError("basis has " + std::to_string(table.dim) +
                            " labels where the factor grid has " + std::to_string(a.dim));
  for (std::uint32_t i = 0; i < a.dim; ++i) {
    std::string stored = j.at("basis")[i].get<std::string>();
    if (a.label(i) != stored)
      throw ConstructionError("basis label mismatch at index " + std::to_string(i) +
                              ": " + stored);
  }
  if (j.at("unit").get<std::string>() != a.label(a.unit))
    throw ConstructionError("unit label mismatch: " + j.at("unit").get<std::string>());
  return a;
}

Json hopf_to_json(const HopfData& h, const CycloField& f, const Element* r) {
  Json j = algebra_to_json(h.alg, f);
  Json co = Json::object();
  for (std::uint32_t i = 0; i < h.alg.dim; ++i)
    co[std::to_string(i)] = element_to_json(h.coproduct.table[i], h.alg, f);
  j["coproduct"] = co;
  Json cu = Json::array();
  for (std::uint32_t i = 0; i < h.alg.dim; ++i)
    cu.push_back(scalar_to_json(h.counit[i], f));
  j["counit"] = cu;
  Json an = Json::object();
  for (std::uint32_t i = 0; i < h.alg.dim; ++i)
    an[std::to_string(i)] = element_to_json(h.antipode.table[i], h.alg, f);
  j["antipode"] = an;
  if (r) j["R"] = element_to_json(*r, h.alg, f);
  return j;
}

HopfData hopf_from_json(const Json& j, const CycloField& f) {
  HopfData h;
  h.alg = algebra_from_json(j, f);
  LabelTable table = LabelTable::of(h.alg);
  h.coproduct = LinearMap::make(h.alg.dim, 1, 2);
  const Json& co = j.at("coproduct");
  for (std::uint32_t i = 0; i < h.alg.dim; ++i)
    h.coproduct.table[i] = decode_element(co.at(std::to_string(i)), table, f, 2);
  for (const auto& s : j.at("counit")) h.counit.push_back(scalar_from_json(s, f));
  if (h.counit.size() != h.alg.dim)
    throw ConstructionError("counit table has " + std::to_string(h.counit.size()) +
                            " entries for dimension " + std::to_string(h.alg.dim));
  h.antipode = LinearMap::make(h.alg.dim, 1, 1);
  const Json& an = j.at("antipode");
  for (std::uint32_t i = 0; i < h.alg.dim; ++i)
    h.antipode.table[i] = decode_element(an.at(std::to_string(i)), table, f, 1);
  for (const CheckReport& r : check_hopf_axioms(h))
    if (!r.pass) throw ConstructionError("imported tables fail " + r.check);
  return h;
}

std::optional<Element> r_matrix_from_json(const Json& j, const Algebra& h,
                                          const CycloField& f) {
  if (!j.contains("R")) return std::nullopt;
  return element_from_json(j.at("R"), h, f, 2);
}

Json module_to_json(const ModuleAlgebra& m, const CycloField& f) {
  Json j;
  j["algebra"] = algebra_to_json(m.alg, f);
  Json action = Json::object();
  for (std::uint32_t h = 0; h < m.hopf->alg.dim; ++h)
    for (std::uint32_t a = 0; a < m.alg.dim; ++a)
      action[index_pair(h, a)] = element_to_json(m.act_basis(h, a), m.alg, f);
  j["action"] = action;
  return j;
}

Json qlie_to_json(const QLieData& d, const CycloField& f) {
  Json j;
  j["N"] = d.order;
  Json basis = Json::array();
  for (const std::string& lab : d.labels) basis.push_back(lab);
  j["basis"] = basis;
  Json sigma = Json::object();
  for (const auto& [idx, v] : d.sigma) {
    std::string key = std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                      std::to_string(idx[2]) + "," + std::to_string(idx[3]);
    sigma[key] = scalar_to_json(v, f);
  }
  j["sigma"] = sigma;
  Json c = Json::object();
  for (const auto& [idx, v] : d.c) {
    std::string key = std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                      std::to_string(idx[2]);
    c[key] = scalar_to_json(v, f);
  }
  j["C"] = c;
  j["closed"] = d.closed;
  return j;
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["check"] = r.check;
  j["status"] = r.status();
  if (!r.note.empty()) j["note"] = r.note;
  if (r.counterexample) {
    Json ce;
    Json inputs = Json::array();
    for (const std::string& s : r.counterexample->inputs) inputs.push_back(s);
    ce["inputs"] = inputs;
    ce["lhs"] = r.counterexample->lhs;
    ce["rhs"] = r.counterexample->rhs;
    j["counterexample"] = ce;
  }
  return j;
}

Json reports_to_json(const std::vector<CheckReport>& rs) {
  Json arr = Json::array();
  for (const CheckReport& r : rs) arr.push_back(report_to_json(r));
  return arr;
}

std::string json_bytes(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << json_bytes(j);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

}  // namespace qcomm
