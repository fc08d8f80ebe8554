#include "pmfgalois/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pmfgalois/error.hpp"

namespace pmfgalois {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string(what) + " lacks field '" + key + "'");
  return *it;
}

unsigned as_unsigned(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  }
  const auto v = j.get<unsigned long long>();
  if (v > 1'000'000) throw ParseError(std::string(what) + " is out of range");
  return static_cast<unsigned>(v);
}

Json digits_json(Code x, unsigned arity, unsigned base) {
  Json a = Json::array();
  for (Digit d : decode(x, arity, base)) a.push_back(d);
  return a;
}

Code digits_code(const Json& j, unsigned arity, unsigned base, const char* what) {
  if (!j.is_array() || j.size() != arity) {
    throw ParseError(std::string(what) + " must be an array of " + std::to_string(arity) + " digits");
  }
  std::vector<Digit> d;
  for (const auto& e : j) {
    const unsigned v = as_unsigned(e, what);
    if (v >= base) throw ParseError(std::string(what) + " has a digit outside the base set");
    d.push_back(v);
  }
  return encode(d, base);
}

Elem element_index(const FinitePomonoid& m, const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be an element name");
  auto e = m.find(j.get<std::string>());
  if (!e) throw ParseError(std::string(what) + " names unknown element '" + j.get<std::string>() + "'");
  return *e;
}

std::vector<std::string> names_of(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ParseError(std::string(what) + " must be a nonempty array of names");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(std::string(what) + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t k = i + 1; k < out.size(); ++k) {
      if (out[i] == out[k]) throw ParseError(std::string(what) + " repeats the name '" + out[i] + "'");
    }
  }
  return out;
}

std::size_t name_index(const std::vector<std::string>& names, const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be an element name");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == j.get<std::string>()) return i;
  }
  throw ParseError(std::string(what) + " names unknown element '" + j.get<std::string>() + "'");
}

std::vector<Elem> table_of(const std::vector<std::string>& names, const Json& j, const char* what) {
  const std::size_t n = names.size();
  if (!j.is_array() || j.size() != n) throw ParseError(std::string(what) + " must have one row per element");
  std::vector<Elem> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != n) {
      throw ParseError(std::string(what) + " rows must have one entry per element");
    }
    for (const auto& e : row) out.push_back(static_cast<Elem>(name_index(names, e, what)));
  }
  return out;
}

Json table_json(const FinitePomonoid& m, const std::vector<Elem>& table) {
  Json rows = Json::array();
  const std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(m.name(table[a * n + b]));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

Json pmf_to_json(const Pmf& f) {
  Json j;
  j["base"] = f.base();
  j["n"] = f.n();
  j["m"] = f.m();
  Json pairs = Json::array();
  for (const auto& [x, y] : f.pairs()) {
    pairs.push_back(Json::array({digits_json(x, f.n(), f.base()), digits_json(y, f.m(), f.base())}));
  }
  j["pairs"] = std::move(pairs);
  return j;
}

Pmf pmf_from_json(const Json& j) {
  const unsigned base = as_unsigned(field(j, "base", "pmf"), "base");
  const unsigned n = as_unsigned(field(j, "n", "pmf"), "n");
  const unsigned m = as_unsigned(field(j, "m", "pmf"), "m");
  BaseSet check(base);
  if (n + m > kMaxTotalArity) throw ShapeError("pmf shape exceeds the arity cap");
  const auto& pairs = field(j, "pairs", "pmf");
  if (!pairs.is_array()) throw ParseError("pmf pairs must be an array");
  Pmf f(base, n, m);
  for (const auto& p : pairs) {
    if (!p.is_array() || p.size() != 2) throw ParseError("each pmf pair must be [input, output]");
    f.insert(digits_code(p[0], n, base, "pmf input"), digits_code(p[1], m, base, "pmf output"));
  }
  return f;
}

Json pomonoid_to_json(const FinitePomonoid& m) {
  Json j;
  j["elements"] = m.names();
  j["unit"] = m.name(m.unit());
  j["mul"] = table_json(m, m.table());
  Json leq = Json::array();
  for (const auto& [a, b] : m.order().pairs()) leq.push_back(Json::array({m.name(a), m.name(b)}));
  j["leq"] = std::move(leq);
  return j;
}

PomonoidPtr pomonoid_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("pomonoid must be a JSON object");
  if (j.contains("cyclic")) return cyclic_group(as_unsigned(j["cyclic"], "cyclic"));
  if (j.contains("nat")) {
    const std::string order = j.contains("order") ? j["order"].get<std::string>() : "eq";
    return nat_truncated(as_unsigned(j["nat"], "nat"), parse_order_kind(order));
  }
  auto names = names_of(field(j, "elements", "pomonoid"), "elements");
  const auto unit = static_cast<Elem>(name_index(names, field(j, "unit", "pomonoid"), "unit"));
  auto mul = table_of(names, field(j, "mul", "pomonoid"), "mul");
  BoolMatrix leq(names.size());
  const auto& rel = field(j, "leq", "pomonoid");
  if (!rel.is_array()) throw ParseError("leq must be an array of pairs");
  for (const auto& p : rel) {
    if (!p.is_array() || p.size() != 2) throw ParseError("leq entries must be pairs");
    leq.set(name_index(names, p[0], "leq"), name_index(names, p[1], "leq"));
  }
  auto m = std::make_shared<const FinitePomonoid>(std::move(names), unit, std::move(mul), std::move(leq));
  require_valid(*m);
  return m;
}

Json semiring_to_json(const FiniteSemiring& s) {
  Json j = pomonoid_to_json(s.mult());
  j["zero"] = s.mult().name(s.zero());
  j["add"] = table_json(s.mult(), s.add_table());
  return j;
}

SemiringPtr semiring_from_json(const Json& j) {
  auto m = pomonoid_from_json(j);
  const Elem zero = element_index(*m, field(j, "zero", "semiring"), "zero");
  auto add = table_of(m->names(), field(j, "add", "semiring"), "add");
  auto s = std::make_shared<const FiniteSemiring>(m, zero, std::move(add));
  require_valid(*s);
  return s;
}

Json weight_to_json(const Weight& w) {
  Json j;
  j["base"] = w.base();
  j["k"] = w.k();
  j["pomonoid"] = w.semiring() ? semiring_to_json(*w.semiring()) : pomonoid_to_json(w.target());
  Json values = Json::array();
  for (Elem v : w.values()) values.push_back(w.target().name(v));
  j["values"] = std::move(values);
  return j;
}

Weight weight_from_json(const Json& j, const std::filesystem::path& dir) {
  const unsigned base = as_unsigned(field(j, "base", "weight"), "base");
  const unsigned k = as_unsigned(field(j, "k", "weight"), "k");
  BaseSet check(base);
  if (k > kMaxTotalArity) throw ShapeError("weight arity exceeds the cap");
  Json target = field(j, "pomonoid", "weight");
  if (target.is_string()) target = read_json_file(dir / target.get<std::string>());
  const auto& vals = field(j, "values", "weight");
  if (!vals.is_array() || vals.size() != ipow(base, k)) {
    throw ParseError("weight needs " + std::to_string(ipow(base, k)) + " values");
  }
  SemiringPtr semiring;
  PomonoidPtr m;
  if (target.is_object() && target.contains("add")) {
    semiring = semiring_from_json(target);
    m = semiring->mult_ptr();
  } else {
    m = pomonoid_from_json(target);
  }
  std::vector<Elem> values;
  for (const auto& v : vals) values.push_back(element_index(*m, v, "weight value"));
  if (semiring) return Weight(base, k, semiring, std::move(values));
  return Weight(base, k, m, std::move(values));
}

Json nilsemigroup_to_json(const Nilsemigroup& o) {
  Json j;
  j["elements"] = o.names;
  j["zero"] = o.names[o.zero];
  Json rows = Json::array();
  for (std::size_t a = 0; a < o.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < o.size(); ++b) row.push_back(o.names[o.product(a, b)]);
    rows.push_back(std::move(row));
  }
  j["mul"] = std::move(rows);
  return j;
}

Nilsemigroup nilsemigroup_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("nilsemigroup must be a JSON object");
  if (j.contains("truncated")) return truncated_sum_nilsemigroup(as_unsigned(j["truncated"], "truncated"));
  Nilsemigroup o;
  o.names = names_of(field(j, "elements", "nilsemigroup"), "elements");
  for (const auto& n : o.names) {
    if (n == "e") throw ParseError("the name 'e' is reserved for the adjoined unit");
  }
  o.zero = static_cast<Elem>(name_index(o.names, field(j, "zero", "nilsemigroup"), "zero"));
  o.mul = table_of(o.names, field(j, "mul", "nilsemigroup"), "mul");
  if (auto v = validate(o)) throw ValidationError("nilsemigroup " + v->axiom + ": " + v->message);
  return o;
}

Json factor_set_to_json(const Nilsemigroup& o, const FactorSet& s) {
  const std::size_t n = o.size();
  auto name = [&](Elem a) { return a == n ? std::string("e") : o.names[a]; };
  Json j;
  j["group"] = pomonoid_to_json(*s.group);
  Json sigma = Json::array();
  for (Elem a = 0; a <= n; ++a) {
    for (Elem b = 0; b <= n; ++b) {
      const Elem ab = a == n ? b : (b == n ? a : o.product(a, b));
      if (ab == o.zero) continue;
      sigma.push_back(Json::array({name(a), name(b), s.group->name(s.at(n, a, b))}));
    }
  }
  j["sigma"] = std::move(sigma);
  return j;
}

FactorSet factor_set_from_json(const Json& j, const Nilsemigroup& o) {
  auto g = pomonoid_from_json(field(j, "group", "factor set"));
  FactorSet s = FactorSet::trivial(o, g);
  std::vector<std::string> names = o.names;
  names.emplace_back("e");
  if (j.contains("sigma")) {
    const auto& sig = j["sigma"];
    if (!sig.is_array()) throw ParseError("sigma must be an array of [alpha, beta, g] triples");
    for (const auto& t : sig) {
      if (!t.is_array() || t.size() != 3) throw ParseError("sigma entries must be [alpha, beta, g]");
      const auto a = name_index(names, t[0], "sigma");
      const auto b = name_index(names, t[1], "sigma");
      s.sigma[a * names.size() + b] = element_index(*g, t[2], "sigma value");
    }
  }
  return s;
}

Json witness_to_json(const PreservationWitness& w, const Pmf& f, const Weight& wt) {
  const unsigned b = f.base();
  Json j;
  j["k"] = w.k;
  Json rows = Json::array();
  for (unsigned r = 0; r < w.k; ++r) {
    Json row;
    row["j"] = r;
    row["a"] = tuple_string(w.rows_in[r], f.n(), b);
    row["b"] = tuple_string(w.rows_out[r], f.m(), b);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  Json in = Json::array();
  for (unsigned i = 0; i < w.cols_in.size(); ++i) {
    in.push_back({{"i", i}, {"a_i", tuple_string(w.cols_in[i], w.k, b)},
                  {"w", wt.target().name(wt(w.cols_in[i]))}});
  }
  Json out = Json::array();
  for (unsigned i = 0; i < w.cols_out.size(); ++i) {
    out.push_back({{"i", i}, {"b_i", tuple_string(w.cols_out[i], w.k, b)},
                   {"w", wt.target().name(wt(w.cols_out[i]))}});
  }
  j["input_columns"] = std::move(in);
  j["output_columns"] = std::move(out);
  j["lhs"] = wt.target().name(w.lhs);
  j["rhs"] = wt.target().name(w.rhs);
  return j;
}

Json report_to_json(const RestrictionReport& r) {
  auto opt = [](const std::optional<bool>& v) -> Json { return v ? Json(*v) : Json(nullptr); };
  Json j;
  j["closed"] = r.closed;
  j["complete"] = r.complete;
  j["n_le_m"] = r.n_le_m;
  j["n_ge_m"] = r.n_ge_m;
  j["n_eq_m"] = r.n_eq_m;
  j["univalued_only"] = r.univalued_only;
  j["injective_only"] = r.injective_only;
  j["inverse_closed"] = r.inverse_closed;
  j["contains_swap"] = opt(r.contains_swap);
  j["contains_diagonals"] = opt(r.contains_diagonals);
  j["contains_constants"] = opt(r.contains_constants);
  j["contains_projections"] = opt(r.contains_projections);
  Json shapes = Json::array();
  for (const Shape s : r.shape_preorder) shapes.push_back(Json::array({s.n, s.m}));
  j["shape_preorder"] = std::move(shapes);
  return j;
}

Json si_to_json(const SiResult& r, const FinitePomonoid& m) {
  Json j;
  j["subdirectly_irreducible"] = r.irreducible;
  if (r.monolith_pair) {
    j["monolith_pair"] = Json::array({m.name(r.monolith_pair->first), m.name(r.monolith_pair->second)});
  }
  if (!r.irreducible && !r.separating.empty()) {
    Json parts = Json::array();
    for (std::size_t i = 0; i < r.separating.size(); ++i) {
      Json part;
      if (i < r.separating_pairs.size()) {
        part["generator"] =
            Json::array({m.name(r.separating_pairs[i].first), m.name(r.separating_pairs[i].second)});
      }
      const Quotient q = quotient(m, r.separating[i]);
      part["quotient_size"] = q.monoid->size();
      Json classes = Json::array();
      for (Elem c = 0; c < q.monoid->size(); ++c) {
        Json cls = Json::array();
        for (Elem x = 0; x < m.size(); ++x) {
          if (q.map[x] == c) cls.push_back(m.name(x));
        }
        classes.push_back(std::move(cls));
      }
      part["classes"] = std::move(classes);
      parts.push_back(std::move(part));
    }
    j["separating_extensions"] = std::move(parts);
  }
  return j;
}

Json matching_to_json(const MatchingResult& r) {
  Json j;
  j["exists"] = r.exists;
  if (r.extension) j["extension"] = pmf_to_json(*r.extension);
  if (r.injection) j["matching"] = pmf_to_json(*r.injection);
  if (r.within) j["within"] = pmf_to_json(*r.within);
  if (!r.violations.empty()) {
    Json vs = Json::array();
    for (const auto& v : r.violations) {
      const unsigned b = v.within.base();
      Json x = Json::array();
      for (Code c : v.inputs) x.push_back(tuple_string(c, v.within.n(), b));
      Json y = Json::array();
      for (Code c : v.neighbours) y.push_back(tuple_string(c, v.within.m(), b));
      vs.push_back({{"within", pmf_to_json(v.within)}, {"hall_set", x}, {"neighbours", y}});
    }
    j["hall_violations"] = std::move(vs);
  }
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

}  // namespace pmfgalois
