#include "mobius/io.hpp"

#include <fstream>

#include "mobius/errors.hpp"

namespace mobius::io {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

namespace {

const Json& member(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(what + " is missing \"" + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Poset poset_from_json(const Json& j) {
  const Json& elements = member(j, "elements", "poset");
  if (!elements.is_array()) throw ParseError("poset \"elements\" must be an array");
  std::vector<std::string> names;
  for (const auto& e : elements) names.push_back(as_string(e, "poset element"));
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("relations")) {
    const Json& rel = j.at("relations");
    if (!rel.is_array()) throw ParseError("poset \"relations\" must be an array");
    for (const auto& r : rel) {
      if (!r.is_array() || r.size() != 2) throw ParseError("each relation must be a pair [x, y]");
      pairs.emplace_back(as_string(r[0], "relation endpoint"), as_string(r[1], "relation endpoint"));
    }
  }
  return Poset::from_relations(std::move(names), pairs);
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = p.names();
  Json rel = Json::array();
  for (const auto& [a, b] : p.covers()) rel.push_back({p.name(a), p.name(b)});
  j["relations"] = rel;
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    try {
      Scalar v(s, 10);
      if (v.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
      v.canonicalize();
      return v;
    } catch (const std::invalid_argument&) {
      throw ParseError("'" + s + "' is not an integer or p/q rational");
    }
  }
  throw ParseError("matrix entries must be integers or \"p/q\" strings");
}

Json scalar_to_json(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return s.get_str();
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

FieldSpec field_from_json(const Json& j) {
  std::string kind = as_string(member(j, "kind", "field"), "field kind");
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime") {
    const Json& p = member(j, "p", "prime field");
    if (!p.is_number_unsigned()) throw ParseError("prime field modulus must be a positive integer");
    try {
      return FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

Json field_to_json(const FieldSpec& f) {
  if (f.is_prime()) return Json{{"kind", "prime"}, {"p", f.modulus()}};
  return Json{{"kind", "rationals"}};
}

GrFunction gr_function_from_json(const Json& j, const PosetPtr& p) {
  const Json& values = member(j, "values", "function");
  if (!values.is_object()) throw ParseError("function \"values\" must be an object");
  GrFunction f(p);
  std::vector<bool> seen(p->size(), false);
  for (const auto& [name, v] : values.items()) {
    if (!p->contains(name)) throw ParseError("function names unknown element '" + name + "'");
    Element e = p->index_of(name);
    if (v.is_number_integer())
      f.set(e, Integer(v.get<long>()));
    else if (v.is_string())
      try {
        f.set(e, Integer(v.get<std::string>(), 10));
      } catch (const std::invalid_argument&) {
        throw ParseError("value at '" + name + "' is not an integer");
      }
    else
      throw ParseError("value at '" + name + "' is not an integer");
    seen[e] = true;
  }
  for (Element e = 0; e < p->size(); ++e)
    if (!seen[e]) throw ParseError("function has no value at '" + p->name(e) + "'");
  return f;
}

Json gr_function_to_json(const GrFunction& f) {
  Json values = Json::object();
  for (Element e = 0; e < f.poset().size(); ++e) values[f.poset().name(e)] = integer_to_json(f(e));
  return Json{{"values", values}};
}

PosetModule module_from_json(const Json& j, const PosetPtr& known) {
  if (!j.is_object()) throw ParseError("module must be a JSON object");
  FieldSpec field = j.contains("field") ? field_from_json(j.at("field")) : FieldSpec::rationals();
  const Json& dims_json = member(j, "dims", "module");
  if (!dims_json.is_object()) throw ParseError("module \"dims\" must be an object");
  Json maps_json = j.contains("maps") ? j.at("maps") : Json::object();
  if (!maps_json.is_object()) throw ParseError("module \"maps\" must be an object");

  auto split_cover = [](const std::string& key) {
    auto at = key.find('<');
    if (at == std::string::npos) throw ParseError("map key '" + key + "' is not of the form x<y");
    return std::make_pair(key.substr(0, at), key.substr(at + 1));
  };

  PosetPtr p = known;
  if (!p && j.contains("poset")) p = share(poset_from_json(j.at("poset")));
  if (!p) {
    std::vector<std::string> names;
    for (const auto& [name, _] : dims_json.items()) names.push_back(name);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [key, _] : maps_json.items()) pairs.push_back(split_cover(key));
    try {
      p = share(Poset::from_relations(names, pairs));
    } catch (const UnknownElement& e) {
      throw ParseError(e.what());
    }
  } else if (known && j.contains("poset") && !(poset_from_json(j.at("poset")) == *known)) {
    throw PosetMismatch("module's embedded poset differs from the expected one");
  }

  std::vector<std::size_t> dims(p->size(), 0);
  std::vector<bool> seen(p->size(), false);
  for (const auto& [name, v] : dims_json.items()) {
    if (!p->contains(name)) throw ParseError("dims names unknown element '" + name + "'");
    if (!v.is_number_unsigned()) throw ParseError("dimension at '" + name + "' must be a non-negative integer");
    Element e = p->index_of(name);
    dims[e] = v.get<std::size_t>();
    seen[e] = true;
  }
  for (Element e = 0; e < p->size(); ++e)
    if (!seen[e]) throw ParseError("dims has no entry for '" + p->name(e) + "'");

  std::map<Cover, Matrix> maps;
  for (const auto& [key, value] : maps_json.items()) {
    auto [x, y] = split_cover(key);
    if (!p->contains(x) || !p->contains(y)) throw ParseError("map '" + key + "' names an unknown element");
    Element a = p->index_of(x), b = p->index_of(y);
    if (!p->is_cover(a, b)) throw ParseError("map '" + key + "' is not on a covering relation");
    const std::size_t rows = dims[b], cols = dims[a];
    auto wrong = [&] {
      return ParseError("map '" + key + "' must be " + std::to_string(rows) + "x" + std::to_string(cols));
    };
    if (!value.is_array()) throw wrong();
    Matrix m(field, rows, cols);
    if (rows * cols == 0) {
      // [] or rows of [] both denote a map to/from the zero space.
      if (!value.empty() && value.size() != rows) throw wrong();
      for (const auto& r : value)
        if (!r.is_array() || !r.empty()) throw wrong();
    } else {
      if (value.size() != rows) throw wrong();
      for (std::size_t r = 0; r < rows; ++r) {
        if (!value[r].is_array() || value[r].size() != cols) throw wrong();
        for (std::size_t c = 0; c < cols; ++c) {
          try {
            m.set(r, c, scalar_from_json(value[r][c]));
          } catch (const std::domain_error& e) {
            throw ParseError("map '" + key + "': " + e.what());
          }
        }
      }
    }
    maps.emplace(Cover{a, b}, std::move(m));
  }
  return PosetModule::create(p, field, std::move(dims), std::move(maps));
}

Json module_to_json(const PosetModule& m, bool embed_poset) {
  const Poset& p = m.poset();
  Json j;
  if (embed_poset) j["poset"] = poset_to_json(p);
  j["field"] = field_to_json(m.field());
  Json dims = Json::object();
  for (Element e = 0; e < p.size(); ++e) dims[p.name(e)] = m.dim(e);
  j["dims"] = dims;
  Json maps = Json::object();
  for (const auto& [cover, mat] : m.cover_maps()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < mat.cols(); ++c) row.push_back(scalar_to_json(mat(r, c)));
      rows.push_back(row);
    }
    maps[p.name(cover.first) + "<" + p.name(cover.second)] = rows;
  }
  j["maps"] = maps;
  return j;
}

MonotoneMap map_from_json(const Json& j, const PosetPtr& source, const PosetPtr& target) {
  const Json& values = member(j, "values", "map");
  if (!values.is_object()) throw ParseError("map \"values\" must be an object");
  std::vector<Element> v(source->size());
  std::vector<bool> seen(source->size(), false);
  for (const auto& [name, image] : values.items()) {
    if (!source->contains(name)) throw ParseError("map names unknown source element '" + name + "'");
    std::string y = as_string(image, "map value");
    if (!target->contains(y)) throw ParseError("map sends '" + name + "' to unknown element '" + y + "'");
    v[source->index_of(name)] = target->index_of(y);
    seen[source->index_of(name)] = true;
  }
  for (Element e = 0; e < source->size(); ++e)
    if (!seen[e]) throw ParseError("map has no value at '" + source->name(e) + "'");
  return MonotoneMap(source, target, std::move(v));
}

Json map_to_json(const MonotoneMap& f) {
  Json values = Json::object();
  for (Element a = 0; a < f.source().size(); ++a) values[f.source().name(a)] = f.target().name(f(a));
  return Json{{"values", values}};
}

}  // namespace mobius::io
