#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "oracles.hpp"
#include "pmfgalois/catalog.hpp"
#include "pmfgalois/error.hpp"
#include "pmfgalois/json_io.hpp"

using namespace pmfgalois;

TEST(JsonPmf, RoundTrip) {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const unsigned base = 2 + rng() % 2;
    const auto f = oracle::random_pmf(rng, base, rng() % 3, rng() % 3, 0.4);
    EXPECT_EQ(pmf_from_json(pmf_to_json(f)), f);
  }
  EXPECT_EQ(pmf_from_json(pmf_to_json(toffoli_gate())), toffoli_gate());
}

TEST(JsonPmf, Format) {
  const auto j = pmf_to_json(not_gate());
  EXPECT_EQ(j.dump(), R"({"base":2,"n":1,"m":1,"pairs":[[[0],[1]],[[1],[0]]]})");
}

TEST(JsonPmf, Rejects) {
  EXPECT_THROW(pmf_from_json(parse_json(R"({"base":2,"n":1,"pairs":[]})")), ParseError);
  EXPECT_THROW(pmf_from_json(parse_json(R"({"base":2,"n":1,"m":1,"pairs":[[[2],[0]]]})")), ParseError);
  EXPECT_THROW(pmf_from_json(parse_json(R"({"base":2,"n":1,"m":1,"pairs":[[[0,1],[0]]]})")), ParseError);
  EXPECT_THROW(pmf_from_json(parse_json(R"({"base":2,"n":1,"m":1,"pairs":[[[0]]]})")), ParseError);
  EXPECT_THROW(pmf_from_json(parse_json(R"({"base":2,"n":-1,"m":1,"pairs":[]})")), ParseError);
  EXPECT_THROW(pmf_from_json(parse_json(R"({"base":2,"n":20,"m":20,"pairs":[]})")), ShapeError);
  EXPECT_THROW(pmf_from_json(parse_json(R"([1,2])")), ParseError);
}

TEST(JsonParse, ReportsOffset) {
  try {
    parse_json("{\"base\": 2,,}", "f.json");
    FAIL() << "no exception";
  } catch (const ParseError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("f.json"), std::string::npos);
    EXPECT_NE(what.find("byte"), std::string::npos);
  }
  EXPECT_THROW(read_json_file("/nonexistent/dir/x.json"), ParseError);
}

TEST(JsonPomonoid, RoundTrip) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& m : oracle::pomonoids(n)) {
      const auto back = pomonoid_from_json(pomonoid_to_json(*m));
      EXPECT_EQ(back->names(), m->names());
      EXPECT_EQ(back->unit(), m->unit());
      EXPECT_EQ(back->table(), m->table());
      EXPECT_EQ(back->order(), m->order());
    }
  }
}

TEST(JsonPomonoid, Shorthands) {
  EXPECT_EQ(pomonoid_from_json(parse_json(R"({"cyclic":5})"))->size(), 5U);
  const auto n = pomonoid_from_json(parse_json(R"({"nat":3,"order":"le"})"));
  EXPECT_EQ(n->table(), nat_truncated(3, OrderKind::le)->table());
  EXPECT_EQ(n->order(), nat_truncated(3, OrderKind::le)->order());
  EXPECT_THROW(pomonoid_from_json(parse_json(R"({"nat":3,"order":"sideways"})")), ParseError);
}

TEST(JsonPomonoid, Rejects) {
  EXPECT_THROW(pomonoid_from_json(parse_json(R"({"elements":["1","1"],"unit":"1","mul":[["1"]],"leq":[]})")),
               ParseError);
  EXPECT_THROW(pomonoid_from_json(parse_json(R"({"elements":["1"],"unit":"x","mul":[["1"]],"leq":[]})")),
               ParseError);
  EXPECT_THROW(pomonoid_from_json(parse_json(R"({"elements":["1","a"],"unit":"1","mul":[["1","a"]],"leq":[]})")),
               ParseError);
  EXPECT_THROW(
      pomonoid_from_json(parse_json(R"({"elements":["1","a"],"unit":"1","mul":[["1","a"],["a","a"]],"leq":[["1","b"]]})")),
      ParseError);
  // a.1 = 1 breaks the unit law.
  EXPECT_THROW(
      pomonoid_from_json(parse_json(R"({"elements":["1","a"],"unit":"1","mul":[["1","a"],["1","a"]],"leq":[]})")),
      ValidationError);
}

TEST(JsonSemiring, RoundTrip) {
  for (const auto& s : {boolean_semiring(OrderKind::le), nat_semiring(4, OrderKind::ge), nat_semiring(3, OrderKind::eq)}) {
    const auto back = semiring_from_json(semiring_to_json(*s));
    EXPECT_EQ(back->size(), s->size());
    EXPECT_EQ(back->zero(), s->zero());
    EXPECT_EQ(back->add_table(), s->add_table());
    EXPECT_EQ(back->mult().table(), s->mult().table());
    EXPECT_EQ(back->mult().order(), s->mult().order());
  }
}

TEST(JsonWeight, RoundTripCatalog) {
  for (const auto& w : builtin_weights(2, 9)) {
    const auto back = weight_from_json(weight_to_json(w));
    EXPECT_EQ(back.k(), w.k());
    EXPECT_EQ(back.values(), w.values());
    EXPECT_EQ(back.target().table(), w.target().table());
    EXPECT_EQ(back.target().order(), w.target().order());
    EXPECT_EQ(static_cast<bool>(back.semiring()), static_cast<bool>(w.semiring()));
  }
}

TEST(JsonWeight, PomonoidByPath) {
  const auto dir = std::filesystem::temp_directory_path() / "pmfgalois_json_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "z3.json") << R"({"cyclic":3})";
  }
  const auto w = weight_from_json(parse_json(R"({"base":2,"k":1,"pomonoid":"z3.json","values":["0","2"]})"), dir);
  EXPECT_EQ(w.values(), (std::vector<Elem>{0, 2}));
  EXPECT_THROW(weight_from_json(parse_json(R"({"base":2,"k":1,"pomonoid":"z3.json","values":["0"]})"), dir),
               ParseError);
  EXPECT_THROW(weight_from_json(parse_json(R"({"base":2,"k":1,"pomonoid":"z3.json","values":["0","7"]})"), dir),
               ParseError);
  EXPECT_THROW(weight_from_json(parse_json(R"({"base":2,"k":1,"pomonoid":"missing.json","values":["0","1"]})"), dir),
               ParseError);
  std::filesystem::remove_all(dir);
}

TEST(JsonGrillet, RoundTrip) {
  const auto o = truncated_sum_nilsemigroup(4);
  const auto back = nilsemigroup_from_json(nilsemigroup_to_json(o));
  EXPECT_EQ(back.names, o.names);
  EXPECT_EQ(back.zero, o.zero);
  EXPECT_EQ(back.mul, o.mul);
  auto sigma = FactorSet::trivial(o, cyclic_group(3));
  sigma.sigma[0] = 1;
  const auto s = factor_set_from_json(factor_set_to_json(o, sigma), o);
  for (Elem a = 0; a <= o.size(); ++a) {
    for (Elem b = 0; b <= o.size(); ++b) {
      const Elem ab = a == o.size() ? b : b == o.size() ? a : o.product(a, b);
      if (ab != o.zero) EXPECT_EQ(s.at(o.size(), a, b), sigma.at(o.size(), a, b));
    }
  }
}

TEST(JsonGrillet, Rejects) {
  EXPECT_THROW(nilsemigroup_from_json(parse_json(R"({"elements":["e","0"],"zero":"0","mul":[["0","0"],["0","0"]]})")),
               ParseError);
  // x.x = x is never nilpotent.
  EXPECT_THROW(nilsemigroup_from_json(parse_json(R"({"elements":["x","0"],"zero":"0","mul":[["x","0"],["0","0"]]})")),
               ValidationError);
  const auto o = truncated_sum_nilsemigroup(3);
  EXPECT_THROW(factor_set_from_json(parse_json(R"({"group":{"cyclic":2},"sigma":[["1","9","1"]]})"), o), ParseError);
  EXPECT_THROW(factor_set_from_json(parse_json(R"({"group":{"cyclic":2},"sigma":[["1","1"]]})"), o), ParseError);
}

TEST(JsonReports, Fields) {
  const std::vector<Pmf> g{cnot_gate()};
  const auto c = clone_closure(g, 2, Caps{2, 2, 4});
  const auto r = report_to_json(restriction_report(c));
  EXPECT_TRUE(r["n_eq_m"].get<bool>());
  EXPECT_TRUE(r["univalued_only"].get<bool>());
  const auto si = si_to_json(subdirect_irreducibility(*cyclic_group(4)), *cyclic_group(4));
  EXPECT_TRUE(si["subdirectly_irreducible"].get<bool>());
  EXPECT_EQ(si["monolith_pair"], Json::array({"0", "2"}));
  const auto res = preserves(not_gate(), conservative(2, 9));
  ASSERT_TRUE(res.witness);
  const auto wj = witness_to_json(*res.witness, not_gate(), conservative(2, 9));
  EXPECT_NE(wj["lhs"], wj["rhs"]);
}
