#include "pmfgalois/cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "pmfgalois/catalog.hpp"
#include "pmfgalois/constructions.hpp"
#include "pmfgalois/error.hpp"
#include "pmfgalois/galois.hpp"
#include "pmfgalois/totality.hpp"

namespace pmfgalois::cli {

namespace {

struct RunConfig {
  unsigned base = 2;
  std::string caps_text = "2,2,4";
  Caps caps;
  unsigned threshold = 0;
  std::string format = "json";
  std::uint64_t budget = kDefaultBudget;
};

// A negative verdict: the payload is printed and the exit code is 1.
struct Outcome {
  Json payload;
  bool positive = true;
};

Caps parse_caps(const std::string& text) {
  Caps c;
  unsigned v[3] = {0, 0, 0};
  std::stringstream ss(text);
  std::string part;
  int i = 0;
  while (std::getline(ss, part, ',')) {
    if (i >= 3 || part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 3) {
      throw ParseError("caps must be three positive integers n,m,k");
    }
    v[i++] = static_cast<unsigned>(std::stoul(part));
  }
  if (i != 3 || v[0] == 0 || v[1] == 0 || v[2] == 0) throw ParseError("caps must be three positive integers n,m,k");
  if (v[0] + v[1] > kMaxTotalArity) throw ShapeError("caps exceed the total arity limit");
  c.n_max = v[0];
  c.m_max = v[1];
  c.k_max = v[2];
  return c;
}

bool is_catalog_pmf(const std::string& s) {
  const auto names = catalog_pmf_names();
  return std::find(names.begin(), names.end(), s) != names.end();
}

bool is_catalog_weight(const std::string& s) {
  const auto names = catalog_weight_names();
  if (std::find(names.begin(), names.end(), s) != names.end()) return true;
  return s.size() > 3 && s.rfind("mod", 0) == 0 && s.find_first_not_of("0123456789", 3) == std::string::npos;
}

Pmf pmf_entry(const Json& j, unsigned base) {
  if (j.is_string()) return catalog_pmf(j.get<std::string>(), base);
  return pmf_from_json(j);
}

Pmf load_pmf(const std::string& token, const RunConfig& cfg) {
  if (is_catalog_pmf(token)) return catalog_pmf(token, cfg.base);
  return pmf_from_json(read_json_file(token));
}

std::vector<Pmf> load_pmfs(const std::vector<std::string>& tokens, const RunConfig& cfg) {
  std::vector<Pmf> out;
  for (const auto& t : tokens) {
    if (is_catalog_pmf(t)) {
      out.push_back(catalog_pmf(t, cfg.base));
      continue;
    }
    Json j = read_json_file(t);
    if (j.is_object() && j.contains("generators")) j = j["generators"];
    if (j.is_array()) {
      for (const auto& e : j) out.push_back(pmf_entry(e, cfg.base));
    } else {
      out.push_back(pmf_from_json(j));
    }
  }
  for (const auto& f : out) {
    if (f.base() != cfg.base) throw ShapeError("input pmf is over a base set of a different size than --base");
  }
  return out;
}

Weight load_weight(const std::string& token, const RunConfig& cfg) {
  if (is_catalog_weight(token)) return catalog_weight(token, cfg.base, cfg.threshold);
  const std::filesystem::path p(token);
  Weight w = weight_from_json(read_json_file(p), p.parent_path()).with_label(p.filename().string());
  if (w.base() != cfg.base) throw ShapeError("input weight is over a base set of a different size than --base");
  return w;
}

PomonoidPtr load_pomonoid(const std::string& token) {
  if (token.rfind("cyclic:", 0) == 0) return cyclic_group(static_cast<unsigned>(std::stoul(token.substr(7))));
  Json j = read_json_file(token);
  if (j.is_object() && j.contains("add")) return semiring_from_json(j)->mult_ptr();
  return pomonoid_from_json(j);
}

Json inline_or_file(const std::string& token) {
  if (!token.empty() && token.front() == '{') return parse_json(token, "argument");
  return read_json_file(token);
}

Json compact(const Pmf& f) {
  Json a = Json::array();
  for (const auto& [x, y] : f.pairs()) {
    a.push_back(Json::array({tuple_string(x, f.n(), f.base()), tuple_string(y, f.m(), f.base())}));
  }
  return a;
}

Code parse_tuple(const std::string& s, unsigned arity, unsigned base) {
  if (arity == 0 && (s.empty() || s == "()")) return 0;
  if (s.size() != arity) throw ParseError("tuple '" + s + "' must have " + std::to_string(arity) + " digits");
  std::vector<Digit> d;
  for (char ch : s) {
    if (ch < '0' || static_cast<unsigned>(ch - '0') >= base) throw ParseError("tuple '" + s + "' has a bad digit");
    d.push_back(static_cast<Digit>(ch - '0'));
  }
  return encode(d, base);
}

Json clone_json(const BoundedClone& c, bool list_members, const RunConfig& cfg) {
  Json shapes = Json::array();
  for (const Shape s : c.shapes()) {
    Json e;
    e["shape"] = Json::array({s.n, s.m});
    e["indexed"] = c.indexed(s);
    if (c.indexed(s)) {
      e["count"] = c.count(s, cfg.budget);
      if (list_members) {
        Json ms = Json::array();
        for (const auto& f : c.members(s, cfg.budget)) ms.push_back(compact(f));
        e["members"] = std::move(ms);
      }
    }
    Json mx = Json::array();
    for (const auto& f : c.maximal(s)) mx.push_back(compact(f));
    e["maximal"] = std::move(mx);
    shapes.push_back(std::move(e));
  }
  Json j;
  j["complete"] = c.complete();
  j["shapes"] = std::move(shapes);
  return j;
}

Json permutation_json(const PermutationClone& p, bool list_members) {
  Json arities = Json::array();
  for (unsigned n = 0; n <= p.n_max(); ++n) {
    Json e;
    e["n"] = n;
    e["count"] = p.count(n);
    if (list_members) {
      Json ms = Json::array();
      for (const auto& f : p.members(n)) ms.push_back(compact(f));
      e["members"] = std::move(ms);
    }
    arities.push_back(std::move(e));
  }
  Json steps = Json::array();
  for (const auto& s : p.ancilla_steps()) {
    steps.push_back({{"source", compact(s.source)},
                     {"ancillas", s.ancillas},
                     {"slice", tuple_string(s.slice, s.ancillas, p.base())},
                     {"derived", compact(s.derived)}});
  }
  Json j;
  j["mode"] = "permutation";
  j["ancilla"] = p.ancilla_closed();
  j["complete"] = p.complete();
  j["arities"] = std::move(arities);
  j["ancilla_steps"] = std::move(steps);
  j["groups_verified"] = verify_groups(p);
  j["ancilla_verified"] = verify_ancilla_steps(p);
  return j;
}

std::string detect_kind(const Json& j) {
  if (!j.is_object()) return "unknown";
  if (j.contains("pairs")) return "pmf";
  if (j.contains("values")) return "weight";
  if (j.contains("omega")) return "grillet";
  if (j.contains("add")) return "semiring";
  if (j.contains("unit") || j.contains("cyclic") || j.contains("nat")) return "pomonoid";
  if (j.contains("zero") || j.contains("truncated")) return "nilsemigroup";
  return "unknown";
}

Nilsemigroup omega_of(const Json& spec) {
  if (!spec.is_object() || !spec.contains("omega")) throw ParseError("grillet spec lacks field 'omega'");
  return nilsemigroup_from_json(spec["omega"]);
}

void flatten(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    if (j.empty()) os << path << ": {}\n";
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalars) {
      os << path << ":";
      for (const auto& e : j) os << " " << (e.is_string() ? e.get<std::string>() : e.dump());
      os << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  flatten(j, "", os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string threshold_text;
  CLI::App app{"Partial multi-valued function clones and their weight invariants", "pmfgalois"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--base", cfg.base, "size of the base set B (2..4)");
  app.add_option("--caps", cfg.caps_text, "arity caps n,m,k");
  app.add_option("--nat-threshold", threshold_text, "saturation threshold T of N_T");
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> inputs;
  std::function<Outcome()> action;

  auto* validate_cmd = app.add_subcommand("validate", "parse and validate an input file");
  bool as_permutation = false;
  validate_cmd->add_option("file", inputs)->required()->expected(1);
  validate_cmd->add_flag("--permutation", as_permutation, "also require a permutation");
  validate_cmd->callback([&] {
    action = [&]() -> Outcome {
      const Json j = read_json_file(inputs.at(0));
      const std::string kind = detect_kind(j);
      Json r;
      r["kind"] = kind;
      try {
        if (kind == "pmf") {
          const Pmf f = pmf_from_json(j);
          const auto p = predicates(f);
          r["shape"] = Json::array({f.n(), f.m()});
          r["size"] = f.size();
          r["total"] = p.total;
          r["univalued"] = p.univalued;
          r["injective"] = p.injective;
          r["surjective"] = p.surjective;
          r["permutation"] = p.permutation;
          if (as_permutation && !p.permutation) {
            r["valid"] = false;
            r["violation"] = "not a permutation";
            return {r, false};
          }
        } else if (kind == "weight") {
          const std::filesystem::path path(inputs.at(0));
          const Weight w = weight_from_json(j, path.parent_path());
          r["k"] = w.k();
          r["target_size"] = w.target().size();
          r["semiring"] = static_cast<bool>(w.semiring());
        } else if (kind == "semiring") {
          auto s = semiring_from_json(j);
          const auto p = semiring_predicates(*s);
          r["size"] = s->size();
          r["positive"] = p.positive;
          r["continuous"] = p.continuous;
        } else if (kind == "pomonoid") {
          auto m = pomonoid_from_json(j);
          r["size"] = m->size();
          r["commutative"] = is_commutative(*m);
          r["trivially_ordered"] = is_trivially_ordered(*m);
        } else if (kind == "nilsemigroup") {
          r["size"] = nilsemigroup_from_json(j).size();
        } else if (kind == "grillet") {
          const auto o = omega_of(j);
          const auto s = factor_set_from_json(j, o);
          if (auto v = validate(o, s)) throw ValidationError(v->axiom + ": " + v->message);
        } else {
          throw ParseError(inputs.at(0) + ": cannot tell what kind of object this is");
        }
      } catch (const ValidationError& e) {
        r["valid"] = false;
        r["violation"] = e.what();
        return {r, false};
      }
      r["valid"] = true;
      return {r, true};
    };
  });

  auto* preserve_cmd = app.add_subcommand("preserve", "check f preserves w");
  preserve_cmd->add_option("inputs", inputs, "pmf and weight")->required()->expected(2);
  preserve_cmd->callback([&] {
    action = [&]() -> Outcome {
      const Pmf f = load_pmf(inputs.at(0), cfg);
      const Weight w = load_weight(inputs.at(1), cfg);
      const auto res = preserves(f, w, cfg.budget);
      Json r;
      r["pmf"] = inputs.at(0);
      r["weight"] = inputs.at(1);
      r["preserved"] = res.preserved;
      r["matrices"] = res.matrices;
      r["saturated"] = res.saturated;
      if (res.witness) r["witness"] = witness_to_json(*res.witness, f, w);
      return {r, res.preserved};
    };
  });

  auto* pol_cmd = app.add_subcommand("pol", "polymorphisms of a set of weights within caps");
  std::string family = "all";
  std::string shape_text;
  bool list_members = false;
  pol_cmd->add_option("weights", inputs)->required();
  pol_cmd->add_option("--family", family)->check(CLI::IsMember({"all", "functions", "permutations"}));
  pol_cmd->add_option("--shape", shape_text, "n,m");
  pol_cmd->add_flag("--members", list_members, "list every member");
  pol_cmd->callback([&] {
    action = [&]() -> Outcome {
      std::vector<Weight> ws;
      for (const auto& t : inputs) ws.push_back(load_weight(t, cfg));
      Json r;
      if (family == "all") {
        r = clone_json(pol_bounded(ws, cfg.base, cfg.caps, cfg.budget), list_members, cfg);
        return {r, true};
      }
      const PmfFamily fam = family == "functions" ? PmfFamily::functions : PmfFamily::permutations;
      std::vector<Shape> shapes;
      if (!shape_text.empty()) {
        const Caps c = parse_caps(shape_text + ",1");
        shapes.push_back({c.n_max, c.m_max});
      } else {
        for (unsigned n = 0; n <= cfg.caps.n_max; ++n) {
          for (unsigned m = 0; m <= cfg.caps.m_max; ++m) {
            if (fam == PmfFamily::functions || n == m) shapes.push_back({n, m});
          }
        }
      }
      Json out = Json::array();
      for (const Shape s : shapes) {
        const auto fs = pol_family(ws, cfg.base, s, fam, cfg.budget);
        Json e;
        e["shape"] = Json::array({s.n, s.m});
        e["count"] = fs.size();
        if (list_members) {
          Json ms = Json::array();
          for (const auto& f : fs) ms.push_back(compact(f));
          e["members"] = std::move(ms);
        }
        out.push_back(std::move(e));
      }
      r["family"] = family;
      r["shapes"] = std::move(out);
      return {r, true};
    };
  });

  auto* closure_cmd = app.add_subcommand("closure", "clone generated by pmfs within caps");
  bool permutation_mode = false;
  bool ancilla = false;
  bool subfunctions = false;
  bool counts_only = false;
  closure_cmd->add_option("generators", inputs);
  closure_cmd->add_flag("--permutation", permutation_mode, "permutation clone closure");
  closure_cmd->add_flag("--ancilla", ancilla, "close under the total ancilla rule (permutation mode)");
  closure_cmd->add_flag("--subfunctions", subfunctions, "in permutation mode, also close the members under subfunctions");
  closure_cmd->add_flag("--counts-only", counts_only, "omit member listings");
  closure_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto gens = load_pmfs(inputs, cfg);
      if (permutation_mode) {
        PermutationClosureOptions opts;
        opts.ancilla = ancilla;
        const auto p = permutation_clone_closure(gens, cfg.base, cfg.caps.n_max, opts);
        Json r = permutation_json(p, !counts_only);
        if (subfunctions) {
          std::vector<Pmf> all;
          for (unsigned n = 0; n <= std::min(cfg.caps.n_max, cfg.caps.m_max); ++n) {
            for (auto& f : p.members(n)) all.push_back(std::move(f));
          }
          const auto c = clone_closure(all, cfg.base, cfg.caps, cfg.budget);
          Json sub = clone_json(c, !counts_only, cfg);
          sub["report"] = report_to_json(restriction_report(c));
          r["pmf_closure"] = std::move(sub);
        }
        return {r, true};
      }
      if (ancilla) throw PreconditionError("--ancilla needs --permutation");
      const auto c = clone_closure(gens, cfg.base, cfg.caps, cfg.budget);
      Json r = clone_json(c, !counts_only, cfg);
      r["report"] = report_to_json(restriction_report(c));
      return {r, true};
    };
  });

  auto* member_cmd = app.add_subcommand("member", "membership of a pmf in a generated clone");
  member_cmd->add_option("inputs", inputs, "pmf, then generators")->required();
  member_cmd->callback([&] {
    action = [&]() -> Outcome {
      const Pmf f = load_pmf(inputs.at(0), cfg);
      const auto gens = load_pmfs({inputs.begin() + 1, inputs.end()}, cfg);
      const auto c = clone_closure(gens, cfg.base, cfg.caps, cfg.budget);
      Json r;
      const bool m = c.member(f);
      r["member"] = m;
      r["via_invariants"] = member_via_invariants(c, f);
      r["complete"] = c.complete();
      return {r, m};
    };
  });

  auto* canon_cmd = app.add_subcommand("canonical-cmp", "word-pair comparison in the canonical weight");
  canon_cmd->add_option("inputs", inputs, "word pair, then generators")->required();
  canon_cmd->callback([&] {
    action = [&]() -> Outcome {
      const Json wj = inline_or_file(inputs.at(0));
      WordPair wp;
      if (!wj.is_object() || !wj.contains("k") || !wj.contains("left") || !wj.contains("right")) {
        throw ParseError("word pair needs fields k, left, right");
      }
      wp.k = wj["k"].get<unsigned>();
      for (const auto& s : wj["left"]) wp.left.push_back(parse_tuple(s.get<std::string>(), wp.k, cfg.base));
      for (const auto& s : wj["right"]) wp.right.push_back(parse_tuple(s.get<std::string>(), wp.k, cfg.base));
      const auto gens = load_pmfs({inputs.begin() + 1, inputs.end()}, cfg);
      const auto c = clone_closure(gens, cfg.base, cfg.caps, cfg.budget);
      const auto res = canonical_leq(c, wp);
      Json r;
      r["holds"] = res.holds;
      r["rows_pmf"] = compact(rows_pmf(wp, cfg.base));
      if (res.witness) r["witness"] = compact(*res.witness);
      return {r, res.holds};
    };
  });

  auto* extend_cmd = app.add_subcommand("extend", "one-point or total extension inside a clone");
  std::string input_tuple;
  bool check_extendable = false;
  extend_cmd->add_option("inputs", inputs, "pmf, then generators")->required();
  extend_cmd->add_option("--input", input_tuple, "extend at this input tuple only");
  extend_cmd->add_flag("--check-extendable", check_extendable, "test one-point extendability of the whole clone");
  extend_cmd->callback([&] {
    action = [&]() -> Outcome {
      const Pmf f = load_pmf(inputs.at(0), cfg);
      const auto gens = load_pmfs({inputs.begin() + 1, inputs.end()}, cfg);
      const auto c = clone_closure(gens, cfg.base, cfg.caps, cfg.budget);
      Json r;
      bool ok = false;
      if (!input_tuple.empty()) {
        const auto b = extend_one_point(c, f, parse_tuple(input_tuple, f.n(), cfg.base));
        ok = b.has_value();
        r["output"] = b ? Json(tuple_string(*b, f.m(), cfg.base)) : Json(nullptr);
      } else {
        const auto g = total_extension(c, f);
        ok = g.has_value();
        r["extension"] = g ? compact(*g) : Json(nullptr);
      }
      if (check_extendable) {
        const auto ce = one_point_counterexample(c);
        r["one_point_extendable"] = !ce;
        if (ce) {
          r["counterexample"] = {{"pmf", compact(ce->first)},
                                 {"input", tuple_string(ce->second, ce->first.n(), cfg.base)}};
        }
      }
      r["found"] = ok;
      return {r, ok};
    };
  });

  auto* match_cmd = app.add_subcommand("match-extend", "injective or bijective extension by matching");
  bool bijective = false;
  match_cmd->add_option("inputs", inputs, "pmf, then generators")->required();
  match_cmd->add_flag("--bijective", bijective, "require a bijection");
  match_cmd->callback([&] {
    action = [&]() -> Outcome {
      const Pmf f = load_pmf(inputs.at(0), cfg);
      const auto gens = load_pmfs({inputs.begin() + 1, inputs.end()}, cfg);
      const auto c = clone_closure(gens, cfg.base, cfg.caps, cfg.budget);
      const auto res = bijective ? bijective_extension(c, f) : injective_extension(c, f);
      return {matching_to_json(res), res.exists};
    };
  });

  auto* anc_cmd = app.add_subcommand("ancilla-close", "permutation clone closed under the total ancilla rule");
  std::string weight_check;
  int partial_value = -1;
  anc_cmd->add_option("generators", inputs);
  anc_cmd->add_option("--weight", weight_check, "check every member preserves this weight");
  anc_cmd->add_option("--partial", partial_value, "apply the partial ancilla rule with this value to each generator");
  anc_cmd->add_flag("--counts-only", counts_only, "omit member listings");
  anc_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto gens = load_pmfs(inputs, cfg);
      if (partial_value >= 0) {
        Json r = Json::array();
        for (const auto& f : gens) r.push_back(compact(ancilla_partial(f, static_cast<Digit>(partial_value))));
        return {Json{{"partial", std::move(r)}}, true};
      }
      PermutationClosureOptions opts;
      opts.ancilla = true;
      const auto p = permutation_clone_closure(gens, cfg.base, cfg.caps.n_max, opts);
      Json r = permutation_json(p, !counts_only);
      bool ok = r["groups_verified"].get<bool>() && r["ancilla_verified"].get<bool>();
      if (!weight_check.empty()) {
        const Weight w = load_weight(weight_check, cfg);
        Json bad = nullptr;
        for (unsigned n = 0; n <= p.n_max() && bad.is_null(); ++n) {
          for (const auto& f : p.members(n)) {
            if (!preserves(f, w, cfg.budget).preserved) {
              bad = compact(f);
              break;
            }
          }
        }
        r["preserves_weight"] = bad.is_null();
        if (!bad.is_null()) r["non_preserving_member"] = bad;
        ok = ok && bad.is_null();
      }
      return {r, ok};
    };
  });

  auto* grillet_cmd = app.add_subcommand("grillet", "build [Omega, G, sigma] and test irreducibility");
  bool show_table = false;
  grillet_cmd->add_option("spec", inputs)->required()->expected(1);
  grillet_cmd->add_flag("--show", show_table, "include the monoid table");
  grillet_cmd->callback([&] {
    action = [&]() -> Outcome {
      const Json spec = inline_or_file(inputs.at(0));
      const auto o = omega_of(spec);
      const auto s = factor_set_from_json(spec, o);
      GrilletReport rep;
      const auto m = grillet_monoid(o, s, &rep);
      const auto sc = grillet_spotcheck(o, s);
      Json r;
      r["size"] = rep.size;
      r["omega_trivial"] = rep.omega_trivial;
      r["mu"] = rep.mu ? Json(o.names[*rep.mu]) : Json(nullptr);
      r["weakly_irreducible"] = verdict_name(weak_irreducibility(o, s));
      r["subdirectly_irreducible"] = is_subdirectly_irreducible(*m, Quasivariety::trivially_ordered);
      r["spotcheck"] = verdict_name(sc.verdict);
      if (!sc.reason.empty()) r["reason"] = sc.reason;
      if (show_table) r["monoid"] = pomonoid_to_json(*m);
      return {r, sc.verdict == Verdict::holds};
    };
  });

  auto* si_cmd = app.add_subcommand("si", "subdirect irreducibility of a finite pomonoid");
  std::string relative = "absolute";
  si_cmd->add_option("pomonoid", inputs)->required()->expected(1);
  si_cmd->add_option("--relative", relative, "absolute or trivial")->check(CLI::IsMember({"absolute", "trivial"}));
  si_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto m = load_pomonoid(inputs.at(0));
      const auto res = subdirect_irreducibility(
          *m, relative == "trivial" ? Quasivariety::trivially_ordered : Quasivariety::absolute);
      return {si_to_json(res, *m), res.irreducible};
    };
  });

  auto* downset_cmd = app.add_subcommand("downset", "down-set completion of a pomonoid");
  downset_cmd->add_option("pomonoid", inputs)->required()->expected(1);
  downset_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto m = load_pomonoid(inputs.at(0));
      const auto dc = downset_completion(*m);
      const auto p = semiring_predicates(*dc.semiring);
      Json r;
      r["size"] = dc.semiring->size();
      r["continuous"] = p.continuous;
      r["lor_semiring"] = p.lor_semiring;
      r["positive"] = p.positive;
      Json emb = Json::object();
      for (Elem x = 0; x < m->size(); ++x) emb[m->name(x)] = dc.semiring->mult().name(dc.embedding[x]);
      r["embedding"] = std::move(emb);
      r["semiring"] = semiring_to_json(*dc.semiring);
      return {r, true};
    };
  });

  auto* nsum_cmd = app.add_subcommand("nsum-leq", "order of formal sums in N[M]");
  nsum_cmd->add_option("inputs", inputs, "pomonoid, x, y")->required()->expected(3);
  nsum_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto m = load_pomonoid(inputs.at(0));
      auto sum_of = [&](const std::string& tok) {
        const Json j = inline_or_file(tok);
        if (!j.is_object()) throw ParseError("formal sum must map element names to multiplicities");
        FormalSum s{std::vector<unsigned>(m->size(), 0)};
        for (auto it = j.begin(); it != j.end(); ++it) {
          auto e = m->find(it.key());
          if (!e) throw ParseError("formal sum names unknown element '" + it.key() + "'");
          s.mult[*e] = it.value().get<unsigned>();
        }
        return s;
      };
      const FormalSum x = sum_of(inputs.at(1));
      const FormalSum y = sum_of(inputs.at(2));
      Json r;
      const bool le = formal_sum_leq(m, x, y);
      r["leq"] = le;
      r["geq"] = formal_sum_leq(m, y, x);
      return {r, le};
    };
  });

  auto* catalog_cmd = app.add_subcommand("catalog", "emit a builtin weight or gate");
  bool list = false;
  catalog_cmd->add_option("name", inputs)->expected(0, 1);
  catalog_cmd->add_flag("--list", list, "list the names");
  catalog_cmd->callback([&] {
    action = [&]() -> Outcome {
      if (list || inputs.empty()) {
        Json r;
        r["weights"] = catalog_weight_names();
        r["pmfs"] = catalog_pmf_names();
        return {r, true};
      }
      const std::string& name = inputs.at(0);
      if (is_catalog_pmf(name)) return {pmf_to_json(catalog_pmf(name, cfg.base)), true};
      return {weight_to_json(catalog_weight(name, cfg.base, cfg.threshold)), true};
    };
  });

  auto* report_cmd = app.add_subcommand("report", "restriction report of a generated clone");
  report_cmd->add_option("generators", inputs);
  report_cmd->callback([&] {
    action = [&]() -> Outcome {
      const auto gens = load_pmfs(inputs, cfg);
      const auto c = clone_closure(gens, cfg.base, cfg.caps, cfg.budget);
      Json r = report_to_json(restriction_report(c));
      const auto frag = unary_fragment_check(c);
      Json fj;
      fj["status"] = frag.status == FragmentStatus::holds   ? "holds"
                     : frag.status == FragmentStatus::fails ? "fails"
                                                            : "inapplicable";
      if (frag.counterexample) fj["counterexample"] = compact(*frag.counterexample);
      if (!frag.reason.empty()) fj["reason"] = frag.reason;
      r["unary_fragment"] = std::move(fj);
      return {r, true};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    cfg.caps = parse_caps(cfg.caps_text);
    BaseSet check(cfg.base);
    cfg.budget = budget_from_env(kDefaultBudget);
    const unsigned arity = std::max(cfg.caps.n_max, cfg.caps.m_max);
    const unsigned needed = arity * cfg.caps.k_max;
    if (threshold_text.empty()) {
      cfg.threshold = default_nat_threshold(cfg.caps);
    } else {
      if (threshold_text.find_first_not_of("0123456789") != std::string::npos || threshold_text.size() > 6) {
        throw ParseError("--nat-threshold must be a positive integer");
      }
      cfg.threshold = static_cast<unsigned>(std::stoul(threshold_text));
      if (cfg.threshold <= needed) {
        throw ParseError("--nat-threshold must exceed " + std::to_string(needed) + " for these caps");
      }
    }
    if (!action) throw ParseError("no subcommand given");
    const Outcome o = action();
    if (cfg.format == "text") {
      out << render_text(o.payload);
    } else {
      out << o.payload.dump(2) << "\n";
    }
    return o.positive ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pmfgalois::cli
