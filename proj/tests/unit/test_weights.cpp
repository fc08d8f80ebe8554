#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmfgalois/catalog.hpp"
#include "pmfgalois/error.hpp"
#include "pmfgalois/galois.hpp"
#include "pmfgalois/weight.hpp"

using namespace pmfgalois;

namespace {

Weight random_weight(std::mt19937& rng, const PomonoidPtr& m, unsigned k) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(m->size() - 1));
  std::vector<Elem> values(ipow(2, k));
  for (auto& v : values) v = pick(rng);
  return Weight(2, k, m, values);
}

}  // namespace

TEST(Catalog, AffineValues) {
  const auto w = affine(2);
  EXPECT_EQ(w.k(), 4U);
  EXPECT_EQ(w.values().size(), 16U);
  EXPECT_EQ(w(0b0000), 1U);
  EXPECT_EQ(w(0b1000), 0U);
  EXPECT_EQ(w(0b1100), 1U);
}

TEST(Catalog, ConservativeAndDelta) {
  const auto c = conservative(2, 9);
  EXPECT_EQ(c(0), 0U);
  EXPECT_EQ(c(1), 1U);
  EXPECT_TRUE(is_trivially_ordered(c.target()));
  const auto d = kronecker_delta(2, OrderKind::le);
  EXPECT_EQ(d.values(), (std::vector<Elem>{1, 0, 0, 1}));
}

TEST(Catalog, NamesResolve) {
  for (const auto& name : catalog_weight_names()) EXPECT_NO_THROW(catalog_weight(name, 2, 9)) << name;
  for (const auto& name : catalog_pmf_names()) EXPECT_NO_THROW(catalog_pmf(name, 2)) << name;
  EXPECT_THROW(catalog_weight("nonsense", 2, 9), ParseError);
  EXPECT_THROW(catalog_pmf("nonsense", 2), ParseError);
}

TEST(Substitute, Examples) {
  const auto d = kronecker_delta(2, OrderKind::le);
  const std::vector<unsigned> id{0, 1};
  EXPECT_EQ(substitute(d, id, 2).values(), d.values());
  const std::vector<unsigned> dup{0, 0};
  EXPECT_EQ(substitute(d, dup, 1).values(), (std::vector<Elem>{1, 1}));
  const auto a = affine(2);
  const std::vector<unsigned> perm{2, 0, 3, 1};
  EXPECT_EQ(substitute(a, perm, 4).values(), a.values());
  const std::vector<unsigned> bad{0, 2};
  EXPECT_THROW(substitute(d, bad, 2), RangeError);
}

TEST(MapHom, Examples) {
  const auto w = mod_weight(2, 4);
  EXPECT_EQ(map_hom(w, identity_hom(w.target_ptr())).values(), w.values());
  const auto collapsed = map_hom(w, collapse_hom(w.target_ptr()));
  EXPECT_EQ(collapsed.target().size(), 1U);
  const MonoidHom reduce{cyclic_group(4), cyclic_group(2), {0, 1, 0, 1}};
  const auto m2 = map_hom(w, reduce);
  EXPECT_EQ(m2.values(), mod_weight(2, 2).values());
  EXPECT_THROW(map_hom(mod_weight(2, 3), reduce), ShapeError);
}

TEST(ProductWeight, Examples) {
  const std::vector<Weight> one{mod_weight(2, 3)};
  const auto p = product_weight(one, 2, 1);
  EXPECT_TRUE(oracle::isomorphic(p.target(), one[0].target()));
  const auto empty = product_weight({}, 2, 1);
  EXPECT_EQ(empty.target().size(), 1U);
  const std::vector<Weight> two{mod_weight(2, 2), mod_weight(2, 3)};
  const auto r = restrict_range(product_weight(two, 2, 1));
  EXPECT_TRUE(oracle::isomorphic(r.target(), *cyclic_group(6)));
  const std::vector<Weight> mixed{mod_weight(2, 2), kronecker_delta(2, OrderKind::le)};
  EXPECT_THROW(product_weight(mixed, 2, 1), ShapeError);
}

TEST(RestrictRange, Examples) {
  const auto d = restrict_range(kronecker_delta(2, OrderKind::le));
  EXPECT_EQ(d.target().size(), 2U);
  const auto c = restrict_range(Weight(2, 0, cyclic_group(2), std::vector<Elem>{0}));
  EXPECT_EQ(c.target().size(), 1U);
  // delta into the chain 0 < 1 < 2 with 1 as unit and 0 never used.
  BoolMatrix le(3);
  for (unsigned a = 0; a < 3; ++a) {
    for (unsigned b = a; b < 3; ++b) le.set(a, b);
  }
  auto chain = std::make_shared<const FinitePomonoid>(std::vector<std::string>{"0", "x", "1"}, 2,
                                                      std::vector<Elem>{0, 0, 0, 0, 1, 1, 0, 1, 2}, le);
  ASSERT_FALSE(validate(*chain));
  const auto w = restrict_range(Weight(2, 2, chain, std::vector<Elem>{2, 1, 1, 2}));
  EXPECT_EQ(w.target().size(), 2U);
  EXPECT_EQ(restrict_range(w).values(), w.values());
}

TEST(WeightPlus, Examples) {
  const auto d = weight_plus(kronecker_delta(2, OrderKind::le));
  EXPECT_EQ(d.k(), 1U);
  EXPECT_EQ(d.values(), (std::vector<Elem>{1, 1}));
  const auto c = weight_plus(cst1_semiring(2, 1, 9, OrderKind::le));
  EXPECT_EQ(c.k(), 0U);
  EXPECT_EQ(c.values(), (std::vector<Elem>{2}));
  const auto a = weight_plus(affine(2));
  EXPECT_EQ(a.values(), std::vector<Elem>(8, 1));
  EXPECT_THROW(weight_plus(mod_weight(2, 2)), PreconditionError);
  EXPECT_THROW(weight_plus(cst1_semiring(2, 0, 9, OrderKind::le)), PreconditionError);
}

TEST(WeightPlus, TwoStepsEqualsNested) {
  std::mt19937 rng(1);
  const auto s = nat_semiring(6, OrderKind::le);
  std::uniform_int_distribution<Elem> pick(0, 6);
  for (int t = 0; t < 50; ++t) {
    std::vector<Elem> values(8);
    for (auto& v : values) v = pick(rng);
    const Weight w(2, 3, s, values);
    EXPECT_EQ(weight_plus(w, 2).values(), weight_plus(weight_plus(w)).values());
  }
}

TEST(Coclone, OperationsRespectPreservation) {
  std::mt19937 rng(17);
  const auto monoids = oracle::pomonoids(3);
  for (int t = 0; t < 300; ++t) {
    const auto& m = monoids[rng() % monoids.size()];
    const unsigned k = 1 + rng() % 2;
    const auto w = random_weight(rng, m, k);
    const auto v = random_weight(rng, m, k);
    const auto f = oracle::random_pmf(rng, 2, 1 + rng() % 2, 1 + rng() % 2, 0.3);
    const bool fw = oracle::preserves(f, w);
    EXPECT_EQ(preserves(f, w).preserved, fw);
    EXPECT_EQ(preserves(f, restrict_range(w)).preserved, fw);
    if (!fw) continue;
    const std::vector<unsigned> rho{0, 0};
    const std::vector<unsigned> rho1{0};
    EXPECT_TRUE(oracle::preserves(f, k == 2 ? substitute(w, rho, 1) : substitute(w, rho1, 2)));
    EXPECT_TRUE(oracle::preserves(f, map_hom(w, collapse_hom(w.target_ptr()))));
    EXPECT_TRUE(oracle::preserves(f, diagonal_weight(w)));
    if (oracle::preserves(f, v)) {
      const std::vector<Weight> both{w, v};
      EXPECT_TRUE(oracle::preserves(f, product_weight(both, 2, k)));
    }
  }
}
