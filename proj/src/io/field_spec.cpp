#include "torunits/field_spec.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>
#include <toml.hpp>

namespace torunits {

namespace {

using nlohmann::json;

// Both formats are lowered to json; locations are kept per JSON pointer.
struct Document {
  json root;
  std::string source;
  std::map<std::string, std::string> locations;

  std::string where(const std::string& pointer) const {
    auto it = locations.find(pointer);
    if (it != locations.end()) return it->second;
    return source + ":" + (pointer.empty() ? "/" : pointer);
  }
  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    throw ValidationError(where(pointer) + ": " + message);
  }
};

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

json lower_toml(const toml::node& node, const std::string& pointer, Document& doc) {
  const auto& src = node.source();
  if (src.begin.line > 0)
    doc.locations[pointer] = doc.source + ":" + std::to_string(src.begin.line) + ":" + std::to_string(src.begin.column);
  if (auto t = node.as_table()) {
    json obj = json::object();
    for (const auto& [k, v] : *t) {
      std::string key(k.str());
      obj[key] = lower_toml(v, pointer + "/" + escape_token(key), doc);
    }
    return obj;
  }
  if (auto a = node.as_array()) {
    json arr = json::array();
    for (std::size_t i = 0; i < a->size(); ++i) arr.push_back(lower_toml(*a->get(i), pointer + "/" + std::to_string(i), doc));
    return arr;
  }
  if (auto v = node.as_integer()) return v->get();
  if (auto v = node.as_string()) return v->get();
  if (auto v = node.as_boolean()) return v->get();
  if (auto v = node.as_floating_point()) return v->get();
  doc.fail(pointer, "unsupported TOML value type");
}

Rational rational_at(const Document& doc, const json& v, const std::string& pointer) {
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ValidationError& e) {
      doc.fail(pointer, e.what());
    }
  }
  doc.fail(pointer, "expected an integer or a rational string \"p/q\"");
}

Integer integer_at(const Document& doc, const json& v, const std::string& pointer) {
  Rational r = rational_at(doc, v, pointer);
  if (r.get_den() != 1) doc.fail(pointer, "expected an integer, got " + to_string(r));
  return r.get_num();
}

const json& array_at(const Document& doc, const json& v, const std::string& pointer) {
  if (!v.is_array()) doc.fail(pointer, "expected an array");
  return v;
}

std::vector<Rational> rational_vector(const Document& doc, const json& v, const std::string& pointer) {
  std::vector<Rational> out;
  const auto& a = array_at(doc, v, pointer);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_at(doc, a[i], pointer + "/" + std::to_string(i)));
  return out;
}

std::vector<std::vector<Rational>> rational_rows(const Document& doc, const json& v, const std::string& pointer,
                                                 std::size_t width) {
  std::vector<std::vector<Rational>> out;
  const auto& a = array_at(doc, v, pointer);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string p = pointer + "/" + std::to_string(i);
    auto row = rational_vector(doc, a[i], p);
    if (row.size() != width)
      doc.fail(p, "expected " + std::to_string(width) + " coordinates, got " + std::to_string(row.size()));
    out.push_back(std::move(row));
  }
  return out;
}

FieldSpecFile interpret(const Document& doc) {
  const json& root = doc.root;
  if (!root.is_object()) doc.fail("", "field spec must be a table/object");
  static const std::vector<std::string> known{"name", "poly", "integral_basis", "units", "ideals"};
  for (const auto& [k, v] : root.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) doc.fail("/" + escape_token(k), "unknown key '" + k + "'");

  FieldSpecFile spec;
  spec.source = doc.source;
  if (root.contains("name")) {
    if (!root["name"].is_string()) doc.fail("/name", "expected a string");
    spec.name = root["name"].get<std::string>();
  }
  if (!root.contains("poly")) doc.fail("", "missing required key 'poly'");
  spec.poly = RationalPolynomial(rational_vector(doc, root["poly"], "/poly"));
  const int d = spec.poly.degree();
  if (d < 1) doc.fail("/poly", "polynomial must have degree at least 1");
  const auto width = static_cast<std::size_t>(d);

  if (root.contains("integral_basis")) {
    auto rows = rational_rows(doc, root["integral_basis"], "/integral_basis", width);
    if (rows.size() != width) doc.fail("/integral_basis", "expected " + std::to_string(d) + " basis elements");
    spec.integral_basis = std::move(rows);
  }
  if (root.contains("units")) spec.units = rational_rows(doc, root["units"], "/units", width);
  if (root.contains("ideals")) {
    const json& ideals = root["ideals"];
    if (!ideals.is_object()) doc.fail("/ideals", "expected a table of labelled ideals");
    for (const auto& [label, body] : ideals.items()) {
      std::string p = "/ideals/" + escape_token(label);
      if (!body.is_object()) doc.fail(p, "expected a table with 'basis' or 'generators'");
      IdealSpec is;
      is.label = label;
      for (const auto& [k, v] : body.items())
        if (k != "basis" && k != "generators") doc.fail(p + "/" + escape_token(k), "unknown key '" + k + "'");
      if (body.contains("basis") == body.contains("generators"))
        doc.fail(p, "give exactly one of 'basis' or 'generators'");
      if (body.contains("basis")) {
        std::vector<std::vector<Integer>> basis;
        const auto& a = array_at(doc, body["basis"], p + "/basis");
        for (std::size_t i = 0; i < a.size(); ++i) {
          std::string q = p + "/basis/" + std::to_string(i);
          const auto& row = array_at(doc, a[i], q);
          if (row.size() != width) doc.fail(q, "expected " + std::to_string(d) + " coordinates");
          std::vector<Integer> v;
          for (std::size_t j = 0; j < row.size(); ++j) v.push_back(integer_at(doc, row[j], q + "/" + std::to_string(j)));
          basis.push_back(std::move(v));
        }
        is.basis = std::move(basis);
      } else {
        is.generators = rational_rows(doc, body["generators"], p + "/generators", width);
      }
      spec.ideals.push_back(std::move(is));
    }
  }
  return spec;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return ValidationError("malformed rational '" + text + "'"); };
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) throw bad();
  Integer den = parse_int(den_text);
  if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

FieldSpecFile parse_field_spec_text(const std::string& text, const std::string& format, const std::string& source) {
  Document doc;
  doc.source = source;
  if (format == "toml") {
    try {
      toml::table t = toml::parse(text, source);
      doc.root = lower_toml(t, "", doc);
    } catch (const toml::parse_error& e) {
      const auto& b = e.source().begin;
      throw ValidationError(source + ":" + std::to_string(b.line) + ":" + std::to_string(b.column) + ": " +
                            std::string(e.description()));
    }
  } else if (format == "json") {
    try {
      doc.root = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ValidationError(source + ": " + e.what());
    }
  } else {
    throw ValidationError(source + ": unknown field spec format '" + format + "' (use .toml or .json)");
  }
  return interpret(doc);
}

FieldSpecFile parse_field_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open field file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto dot = path.rfind('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  return parse_field_spec_text(buf.str(), ext, path);
}

const IntegralIdeal& Workspace::ideal(const std::string& label) const {
  for (const auto& i : ideals)
    if (i.label == label) return i;
  std::string known;
  for (const auto& i : ideals) known += (known.empty() ? "" : ", ") + i.label;
  throw ValidationError("unknown ideal '" + label + "' (known: " + known + ")");
}

Workspace build_workspace(const FieldSpecFile& spec) {
  Workspace ws;
  ws.source = spec.source;
  ws.name = spec.name;
  std::optional<RationalMatrix> basis;
  if (spec.integral_basis) {
    const std::size_t d = spec.integral_basis->size();
    RationalMatrix b(d, d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) b(i, j) = (*spec.integral_basis)[j][i];
    basis = b;
  }
  try {
    ws.field = NumberField::create(spec.poly, basis);
  } catch (const ValidationError& e) {
    throw ValidationError(spec.source + ": " + e.what());
  }
  const NumberField& k = *ws.field;
  const int n = unit_rank(k);

  std::vector<FieldElement> candidates;
  std::string provenance = "user-supplied";
  if (spec.units) {
    for (const auto& c : *spec.units) candidates.push_back(k.from_coords(c));
  } else if (n == 1 && k.degree() == 2) {
    candidates.push_back(fundamental_unit_real_quadratic(k));
    provenance = "continued fraction (real quadratic)";
    ws.units_computed = true;
  } else if (n > 0) {
    throw ValidationError(spec.source + ": field has unit rank " + std::to_string(n) +
                          "; supply 'units' (only real quadratic units are computed)");
  }
  if (static_cast<int>(candidates.size()) != n)
    throw ValidationError(spec.source + ": expected " + std::to_string(n) + " units (the unit rank), got " +
                          std::to_string(candidates.size()));
  try {
    ws.units = verify_units(ws.field, candidates, provenance);
  } catch (const ValidationError& e) {
    throw ValidationError(spec.source + ": " + e.what());
  }
  if (ws.units_computed && k.order_status() != OrderStatus::power_basis_unverified) ws.units.fundamental = true;

  if (spec.ideals.empty()) ws.ideals.push_back(unit_ideal(k));
  for (const auto& is : spec.ideals) {
    try {
      if (is.basis) {
        std::vector<std::vector<Integer>> cols = *is.basis;
        ws.ideals.push_back(make_ideal_from_basis(k, IntegerMatrix::from_columns(cols, k.degree()), is.label));
      } else {
        std::vector<FieldElement> gens;
        for (const auto& g : is.generators) gens.push_back(k.from_coords(g));
        ws.ideals.push_back(make_ideal_from_generators(k, gens, is.label));
      }
    } catch (const ValidationError& e) {
      throw ValidationError(spec.source + ": ideal '" + is.label + "': " + e.what());
    }
  }
  return ws;
}

Workspace load_workspace(const std::string& path) { return build_workspace(parse_field_spec(path)); }

}  // namespace torunits
