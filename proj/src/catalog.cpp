#include "k3fib/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace k3fib {

namespace {

using nlohmann::json;

[[noreturn]] void bad(int ordinal, const std::string& path, const std::string& what) {
  throw std::invalid_argument("catalog entry " + std::to_string(ordinal) + ", field " + path +
                              ": " + what);
}

Poly parse_poly(const json& j, int ordinal, const std::string& path) {
  if (!j.is_array()) bad(ordinal, path, "expected coefficient array");
  std::vector<Rat> c;
  for (const auto& v : j) {
    if (!v.is_string()) bad(ordinal, path, "coefficients must be \"p/q\" strings");
    try {
      c.push_back(parse_rat(v.get<std::string>()));
    } catch (const std::exception&) {
      bad(ordinal, path, "malformed rational " + v.get<std::string>());
    }
  }
  return Poly::from_rats(std::move(c));
}

RatFunc parse_ratfunc(const json& j, int ordinal, const std::string& path) {
  if (!j.is_array() || j.size() != 2) bad(ordinal, path, "expected [num, den] pair");
  Poly n = parse_poly(j[0], ordinal, path + "[0]");
  Poly d = parse_poly(j[1], ordinal, path + "[1]");
  if (d.is_zero()) bad(ordinal, path, "zero denominator");
  return RatFunc(n, d);
}

CatalogEntry parse_entry(const json& j, int index) {
  CatalogEntry e;
  int ordinal = j.value("id", index + 1);
  e.id = ordinal;
  if (!j.contains("letter")) bad(ordinal, "letter", "missing");
  e.letter = j["letter"];
  e.parameter = j.value("parameter", e.letter);
  e.equation = j.value("equation", "");
  if (!j.contains("a")) bad(ordinal, "a", "missing coefficient block");
  const json& a = j["a"];
  auto get_a = [&](const char* name) {
    return a.contains(name) ? parse_poly(a[name], ordinal, std::string("a.") + name) : Poly();
  };
  e.model.a1 = get_a("a1");
  e.model.a2 = get_a("a2");
  e.model.a3 = get_a("a3");
  e.model.a4 = get_a("a4");
  e.model.a6 = get_a("a6");
  if (j.contains("raw_a")) {
    RawModel r;
    const json& ra = j["raw_a"];
    auto get_r = [&](const char* name) {
      return ra.contains(name) ? parse_ratfunc(ra[name], ordinal, std::string("raw_a.") + name)
                               : RatFunc();
    };
    r.a1 = get_r("a1");
    r.a2 = get_r("a2");
    r.a3 = get_r("a3");
    r.a4 = get_r("a4");
    r.a6 = get_r("a6");
    e.raw = r;
  }
  if (j.contains("u")) e.u_scale = parse_poly(j["u"], ordinal, "u");
  if (!j.contains("fibers")) bad(ordinal, "fibers", "missing");
  for (size_t i = 0; i < j["fibers"].size(); ++i) {
    const json& f = j["fibers"][i];
    ExpectedFiber ef;
    ef.type_label = f.value("type", "");
    if (ef.type_label.empty()) bad(ordinal, "fibers[" + std::to_string(i) + "].type", "missing");
    const json& pl = f["place"];
    if (pl.is_string() && pl == "inf") {
      ef.place.at_infinity = true;
    } else {
      ef.place.p = parse_poly(pl, ordinal, "fibers[" + std::to_string(i) + "].place");
      if (ef.place.p.deg() < 1)
        bad(ordinal, "fibers[" + std::to_string(i) + "].place", "not a finite place");
      ef.place.p = ef.place.p.monic();
    }
    e.expected_fibers.push_back(std::move(ef));
  }
  for (const auto& r : j.value("reducible", json::array())) {
    std::string s = r.get<std::string>();
    if (s.size() < 2) bad(ordinal, "reducible", "bad Dynkin label " + s);
    e.expected_reducible.push_back(DynkinType{s[0], std::stoi(s.substr(1))});
  }
  std::sort(e.expected_reducible.begin(), e.expected_reducible.end());
  e.expected_rank = j.value("rank", 0);
  for (const auto& t : j.value("torsion", json::array()))
    e.expected_torsion.push_back(Int((long)t));
  for (size_t i = 0; i < j.value("points", json::array()).size(); ++i) {
    const json& p = j["points"][i];
    CatalogPoint cp;
    std::string path = "points[" + std::to_string(i) + "]";
    cp.point = SectionPoint::at(parse_ratfunc(p["x"], ordinal, path + ".x"),
                                parse_ratfunc(p["y"], ordinal, path + ".y"));
    if (p.contains("order")) cp.expected_order = p["order"].get<int>();
    if (p.contains("height")) cp.expected_height = parse_rat(p["height"].get<std::string>());
    cp.generator = p.value("generator", false);
    e.points.push_back(std::move(cp));
  }
  if (j.contains("regulator")) e.expected_regulator = parse_rat(j["regulator"].get<std::string>());
  if (j.contains("paper_regulator"))
    e.paper_regulator = parse_rat(j["paper_regulator"].get<std::string>());
  if (j.contains("maps")) {
    ParamMaps m;
    m.raw_coords = j["maps"].value("coords", "normalized") == std::string("raw");
    m.X = j["maps"].value("X", "");
    m.Y = j["maps"].value("Y", "");
    m.Z = j["maps"].value("Z", "");
    e.maps = m;
  }
  e.notes = j.value("notes", "");
  return e;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  json doc = json::parse(text);
  if (doc.value("schema", "") != "k3fib-catalog/1")
    throw std::invalid_argument("catalog schema must be k3fib-catalog/1");
  std::vector<CatalogEntry> entries;
  int idx = 0;
  for (const auto& j : doc.at("entries")) entries.push_back(parse_entry(j, idx++));
  return entries;
}

std::vector<CatalogEntry> load_catalog() { return parse_catalog(builtin_catalog_json()); }

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& key) {
  for (const auto& e : entries)
    if (e.letter == key || std::to_string(e.id) == key) return &e;
  return nullptr;
}

// ---------------------------------------------------------------------------
// tiny exact expression evaluator for the parametrization maps

namespace {

struct ExprParser {
  const std::string& s;
  size_t i = 0;
  Rat x, y, p;

  void skip() {
    while (i < s.size() && s[i] == ' ') ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  Rat expr() {
    Rat v = term();
    while (true) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  Rat term() {
    Rat v = factor();
    while (true) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) {
        Rat d = factor();
        if (d == 0) throw std::domain_error("map evaluation hit a zero denominator");
        v = v / d;
      } else
        return v;
    }
  }
  Rat factor() {
    Rat b = base();
    if (eat('^')) {
      skip();
      size_t start = i;
      while (i < s.size() && isdigit((unsigned char)s[i])) ++i;
      if (start == i) throw std::invalid_argument("exponent expected in map expression");
      int e = std::stoi(s.substr(start, i - start));
      Rat r(1);
      for (int k = 0; k < e; ++k) r *= b;
      return r;
    }
    return b;
  }
  Rat base() {
    skip();
    if (eat('(')) {
      Rat v = expr();
      if (!eat(')')) throw std::invalid_argument("unbalanced parenthesis in map expression");
      return v;
    }
    if (eat('-')) return -factor();
    if (i < s.size() && (s[i] == 'x' || s[i] == 'y' || s[i] == 'p')) {
      char c = s[i++];
      return c == 'x' ? x : c == 'y' ? y : p;
    }
    size_t start = i;
    while (i < s.size() && isdigit((unsigned char)s[i])) ++i;
    if (start == i)
      throw std::invalid_argument("bad token in map expression at " + std::to_string(start));
    return Rat(Int(s.substr(start, i - start)));
  }
};

}  // namespace

Rat eval_map_expr(const std::string& expr, const Rat& x, const Rat& y, const Rat& p) {
  ExprParser ep{expr, 0, x, y, p};
  Rat v = ep.expr();
  ep.skip();
  if (ep.i != expr.size()) throw std::invalid_argument("trailing junk in map expression");
  v.canonicalize();
  return v;
}

}  // namespace k3fib
