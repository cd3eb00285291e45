#include "famop/json_io.hpp"

#include <fstream>

#include "famop/errors.hpp"

namespace famop {

namespace {

constexpr std::size_t kMaxWitnesses = 20;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("malformed ") + what);
  }
}

std::vector<Label> labels_of(const Json& j) { return get<std::vector<Label>>(j, "label list"); }

Json edge_to_json(const EdgeType& e) {
  switch (e.kind) {
    case EdgeType::Kind::Sentinel: return nullptr;
    case EdgeType::Kind::Single: return e.first;
    case EdgeType::Kind::Pair: return Json::array({e.first, e.second});
  }
  return nullptr;
}

EdgeType edge_from_json(const Json& j) {
  if (j.is_null()) return EdgeType::sentinel();
  if (j.is_number_integer()) return EdgeType::single(j.get<int>());
  if (j.is_array() && j.size() == 2) return EdgeType::pair(get<int>(j[0], "edge type"), get<int>(j[1], "edge type"));
  throw ValidationError("malformed edge type");
}

}  // namespace

Json table_to_json(const Table& t) { return t.rows(); }

Table table_from_json(const Json& j, int size) {
  auto rows = get<std::vector<std::vector<int>>>(j, "table");
  if (static_cast<int>(rows.size()) != size) throw ValidationError("table has the wrong number of rows");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != size) throw ValidationError("table row has the wrong length");
    for (int v : r)
      if (v < 0 || v >= size) throw ValidationError("table entry out of range");
  }
  return Table(rows);
}

Json omega_to_json(const OmegaStructure& o) {
  Json j;
  j["size"] = o.size;
  j["left"] = table_to_json(o.left_arrow);
  j["right"] = table_to_json(o.right_arrow);
  if (o.has_triangles()) {
    j["ltri"] = table_to_json(*o.left_tri);
    j["rtri"] = table_to_json(*o.right_tri);
  }
  return j;
}

OmegaStructure omega_from_json(const Json& j) {
  int size = get<int>(field(j, "size"), "size");
  if (size < 1) throw ValidationError("size must be positive");
  auto left = table_from_json(field(j, "left"), size);
  auto right = table_from_json(field(j, "right"), size);
  if (j.contains("ltri") != j.contains("rtri")) throw ValidationError("ltri and rtri must be given together");
  if (j.contains("ltri"))
    return OmegaStructure(left, right, table_from_json(j.at("ltri"), size), table_from_json(j.at("rtri"), size));
  return OmegaStructure(left, right);
}

Json magma_to_json(const Magma& m) {
  Json j;
  j["size"] = m.size;
  j["table"] = table_to_json(m.table);
  return j;
}

Magma magma_from_json(const Json& j) {
  int size = get<int>(field(j, "size"), "size");
  if (size < 1) throw ValidationError("size must be positive");
  return Magma(table_from_json(field(j, "table"), size));
}

Json tree_to_json(const TypedTree& t) {
  if (t.is_leaf()) return nullptr;
  auto p = t.split();
  Json j;
  j["dec"] = p.dec.name();
  j["lt"] = edge_to_json(p.left_type);
  j["rt"] = edge_to_json(p.right_type);
  j["left"] = tree_to_json(p.left);
  j["right"] = tree_to_json(p.right);
  return j;
}

TypedTree tree_from_json(const Json& j) {
  if (j.is_null()) return TypedTree::leaf();
  auto dec = get<std::string>(field(j, "dec"), "decoration");
  if (!is_identifier(dec)) throw ValidationError("decoration '" + dec + "' is not an identifier");
  auto left = tree_from_json(field(j, "left"));
  auto right = tree_from_json(field(j, "right"));
  auto lt = edge_from_json(field(j, "lt"));
  auto rt = edge_from_json(field(j, "rt"));
  if (left.is_leaf() != lt.is_sentinel() || right.is_leaf() != rt.is_sentinel())
    throw ValidationError("edge types must be null exactly at leaf children");
  return graft(left, Symbol::intern(dec), lt, rt, right);
}

Json family_to_json(const FamilyBilinear& f) {
  Json j;
  j["dim"] = f.dim;
  j["params"] = f.params;
  Json ops = Json::object();
  for (const auto& [name, tensors] : f.ops) {
    Json per = Json::object();
    for (int a = 0; a < f.params; ++a)
      for (int b = 0; b < f.params; ++b) {
        Json cube = Json::array();
        for (int i = 0; i < f.dim; ++i) {
          Json plane = Json::array();
          for (int jj = 0; jj < f.dim; ++jj) {
            Json row = Json::array();
            for (int k = 0; k < f.dim; ++k) row.push_back(to_string(f.at(name, a, b, i, jj, k)));
            plane.push_back(row);
          }
          cube.push_back(plane);
        }
        per["(" + std::to_string(a) + "," + std::to_string(b) + ")"] = cube;
      }
    ops[name] = per;
  }
  j["ops"] = ops;
  return j;
}

FamilyBilinear family_from_json(const Json& j) {
  int dim = get<int>(field(j, "dim"), "dim");
  int params = j.contains("params") ? get<int>(j.at("params"), "params") : 1;
  if (dim < 1 || params < 1) throw ValidationError("dim and params must be positive");
  const auto& ops = field(j, "ops");
  if (!ops.is_object()) throw ValidationError("ops must be an object");
  std::vector<std::string> names;
  for (const auto& [name, _] : ops.items()) names.push_back(name);
  FamilyBilinear f(dim, params, names);
  for (const auto& [name, per] : ops.items()) {
    if (!per.is_object()) throw ValidationError("operation '" + name + "' must map parameter pairs to tensors");
    for (int a = 0; a < params; ++a)
      for (int b = 0; b < params; ++b) {
        auto key = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (!per.contains(key)) continue;
        const auto& cube = per.at(key);
        if (!cube.is_array() || static_cast<int>(cube.size()) != dim) throw ValidationError("tensor " + key + " has the wrong shape");
        for (int i = 0; i < dim; ++i) {
          if (!cube[i].is_array() || static_cast<int>(cube[i].size()) != dim) throw ValidationError("tensor " + key + " has the wrong shape");
          for (int jj = 0; jj < dim; ++jj) {
            const auto& row = cube[i][jj];
            if (!row.is_array() || static_cast<int>(row.size()) != dim) throw ValidationError("tensor " + key + " has the wrong shape");
            for (int k = 0; k < dim; ++k) {
              const auto& c = row[k];
              f.at(name, a, b, i, jj, k) = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(get<long long>(c, "coefficient"));
            }
          }
        }
      }
  }
  f.validate();
  return f;
}

Json element_to_json(const OperadElement& x) {
  return std::visit(
      [](const auto& a) -> Json {
        using T = std::decay_t<decltype(a)>;
        Json j;
        if constexpr (std::is_same_v<T, NonDiagonalPair>) {
          j["A"] = a.carrier;
          if (a.is_unit())
            j["v"] = "unit";
          else
            j["v"] = Json::array({a.value->first, a.value->second});
        } else if constexpr (std::is_same_v<T, Corolla>) {
          j["root"] = a.root;
          j["branches"] = a.branches;
        } else if constexpr (std::is_same_v<T, PermPoint>) {
          j["A"] = a.carrier;
          j["v"] = a.value;
        } else if constexpr (std::is_same_v<T, LinearOrder>) {
          j["order"] = a.order;
        } else if constexpr (std::is_same_v<T, TwistedMonomial>) {
          j["head"] = a.head;
          j["tail"] = a.tail;
          Json e = Json::object();
          for (const auto& [k, v] : a.exponent) e[k] = v.str();
          j["exponent"] = e;
        } else {
          Json e = Json::array();
          for (const auto& v : a.entries) e.push_back(v.str());
          j["multiset"] = e;
        }
        return j;
      },
      x);
}

OperadElement element_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("operad element must be an object");
  if (j.contains("root")) {
    auto branches = get<std::vector<std::vector<Label>>>(field(j, "branches"), "branches");
    return Corolla::make(get<Label>(j.at("root"), "root"), branches);
  }
  if (j.contains("order")) return LinearOrder::make(labels_of(j.at("order")));
  if (j.contains("head")) {
    std::map<std::string, BigNat> e;
    if (j.contains("exponent"))
      for (const auto& [k, v] : j.at("exponent").items()) e[k] = BigNat(v.is_string() ? v.get<std::string>() : v.dump());
    return TwistedMonomial(get<std::string>(j.at("head"), "head"), get<std::string>(field(j, "tail"), "tail"), e);
  }
  if (j.contains("multiset")) {
    std::vector<BigNat> e;
    for (const auto& v : j.at("multiset")) e.emplace_back(v.is_string() ? v.get<std::string>() : v.dump());
    return NatMultiset(e);
  }
  auto carrier = labels_of(field(j, "A"));
  const auto& v = field(j, "v");
  if (v.is_array()) {
    auto p = get<std::vector<Label>>(v, "pair");
    if (p.size() != 2) throw ValidationError("pair value must have two entries");
    return NonDiagonalPair::make(carrier, p[0], p[1]);
  }
  auto s = get<std::string>(v, "value");
  if (s == "unit") {
    if (carrier.size() != 1) throw ValidationError("the unit lives on a singleton carrier");
    return NonDiagonalPair::unit(carrier.front());
  }
  return PermPoint::make(carrier, s);
}

Json presentation_to_json(const Presentation& p) {
  Json j;
  j["generators"] = p.generators;
  j["mode"] = p.mode == TermMode::Planar ? "planar" : "labeled";
  Json rel = Json::array();
  for (const auto& cls : p.relations) {
    Json c = Json::array();
    for (const auto& t : cls) c.push_back(serialize(t, p.generators));
    rel.push_back(c);
  }
  j["relations"] = rel;
  return j;
}

Presentation presentation_from_json(const Json& j) {
  Presentation p;
  p.generators = get<std::vector<std::string>>(field(j, "generators"), "generators");
  auto mode = j.contains("mode") ? get<std::string>(j.at("mode"), "mode") : std::string("planar");
  if (mode == "planar")
    p.mode = TermMode::Planar;
  else if (mode == "labeled")
    p.mode = TermMode::Labeled;
  else
    throw ValidationError("mode must be planar or labeled");
  for (const auto& cls : field(j, "relations")) {
    std::vector<OperadTerm> terms;
    for (const auto& t : cls) terms.push_back(parse_term(get<std::string>(t, "term"), p.generators));
    p.relations.push_back(std::move(terms));
  }
  p.validate();
  return p;
}

Json report_to_json(const LawReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["passed"] = r.passed();
  j["instances"] = r.instances;
  for (const auto& [k, v] : r.stats) j[k] = v;
  j["violations"] = r.witnesses.size();
  Json w = Json::array();
  for (std::size_t i = 0; i < r.witnesses.size() && i < kMaxWitnesses; ++i)
    w.push_back({{"law", r.witnesses[i].law}, {"args", r.witnesses[i].args}});
  j["witnesses"] = w;
  return j;
}

Json poly_to_json(int n, const IntPoly& p, std::optional<long long> w) {
  Json j;
  j["n"] = n;
  j["poly"] = p.to_string();
  if (w) j["value_at"] = {{"w", *w}, {"v", p(BigInt(*w)).str()}};
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in '" + path + "'", e.byte);
  }
}

}  // namespace famop
