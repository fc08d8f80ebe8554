#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pmfgalois/catalog.hpp"
#include "pmfgalois/error.hpp"
#include "pmfgalois/totality.hpp"

using namespace pmfgalois;

namespace {

constexpr Caps kCaps{2, 2, 4};

Pmf make(unsigned n, unsigned m, std::vector<std::pair<Code, Code>> pairs) {
  return Pmf::from_pairs(2, n, m, pairs);
}

Pmf cnot_reversed() {
  return Pmf::from_function(2, 2, 2, [](Code x) { return (x & 1U) != 0 ? x ^ 2U : x; });
}

}  // namespace

TEST(OnePoint, Examples) {
  const auto all = pol_bounded({}, 2, kCaps);
  EXPECT_EQ(extend_one_point(all, empty_pmf(2, 1, 1), 0), Code{0});
  const std::vector<Pmf> g{not_gate()};
  const auto c = clone_closure(g, 2, kCaps);
  EXPECT_EQ(extend_one_point(c, make(1, 1, {{0, 1}}), 1), Code{0});
  const auto cmin = clone_closure({}, 2, kCaps);
  EXPECT_EQ(extend_one_point(cmin, make(1, 1, {{0, 0}}), 1), Code{1});
  EXPECT_THROW(extend_one_point(cmin, make(1, 1, {{0, 1}}), 1), PreconditionError);
}

TEST(OnePoint, ConstantClonesAreNotExtendable) {
  const std::vector<Pmf> g{make(1, 1, {{0, 0}})};
  const auto c = clone_closure(g, 2, kCaps);
  EXPECT_TRUE(one_point_extendable(c));
  const std::vector<Pmf> h{make(1, 0, {{0, 0}})};
  const auto d = clone_closure(h, 2, kCaps);
  const auto bad = one_point_counterexample(d);
  ASSERT_TRUE(bad);
  EXPECT_FALSE(extend_one_point(d, bad->first, bad->second));
}

TEST(TotalExtension, Examples) {
  const std::vector<Pmf> g{cnot_gate()};
  const auto c = clone_closure(g, 2, kCaps);
  const auto t = total_extension(c, make(2, 2, {{0, 0}}));
  ASSERT_TRUE(t);
  EXPECT_TRUE(is_total(*t));
  EXPECT_TRUE(c.member(*t));
  EXPECT_TRUE(t->contains(0, 0));
  EXPECT_EQ(total_extension(c, cnot_gate()), cnot_gate());
  const auto cmin = clone_closure({}, 2, kCaps);
  EXPECT_THROW(total_extension(cmin, make(1, 1, {{0, 1}})), PreconditionError);
}

TEST(Matching, SubmatchingInsideF) {
  const auto all = pol_bounded({}, 2, kCaps);
  const auto r = injective_extension(all, make(1, 1, {{0, 0}, {0, 1}, {1, 1}}));
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(*r.injection, identity(2, 1));
  EXPECT_EQ(*r.extension, make(1, 1, {{0, 0}, {0, 1}, {1, 1}}));
}

TEST(Matching, HallCertificate) {
  const std::vector<Pmf> g{make(1, 1, {{0, 0}, {1, 0}})};
  const auto c = clone_closure(g, 2, Caps{1, 1, 4});
  const auto r = injective_extension(c, make(1, 1, {{0, 0}, {1, 0}}));
  EXPECT_FALSE(r.exists);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_EQ(r.violations[0].inputs, (std::vector<Code>{0, 1}));
  EXPECT_EQ(r.violations[0].neighbours, (std::vector<Code>{0}));
}

TEST(Matching, BijectionCompletesNot) {
  const std::vector<Pmf> g{not_gate()};
  const auto c = clone_closure(g, 2, Caps{1, 1, 4});
  const auto r = bijective_extension(c, make(1, 1, {{0, 1}}));
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(*r.injection, not_gate());
}

TEST(Matching, ShapeGuards) {
  const auto all = pol_bounded({}, 2, kCaps);
  EXPECT_FALSE(injective_extension(all, empty_pmf(2, 2, 1)).exists);
  EXPECT_FALSE(bijective_extension(all, empty_pmf(2, 1, 2)).exists);
  EXPECT_TRUE(injective_extension(all, empty_pmf(2, 1, 2)).exists);
}

TEST(Matching, AgreesWithExhaustiveSearchOnOneTwo) {
  const std::vector<Weight> ws{kronecker_delta(2, OrderKind::ge)};
  const auto c = pol_bounded(ws, 2, kCaps);
  std::vector<Pmf> injections;
  for (Code a = 0; a < 4; ++a) {
    for (Code b = 0; b < 4; ++b) {
      if (a != b) injections.push_back(make(1, 2, {{0, a}, {1, b}}));
    }
  }
  for (const auto& f : c.members(Shape{1, 2})) {
    bool brute = false;
    for (const auto& g : injections) brute = brute || c.member(pmf_union(f, g));
    const auto r = injective_extension(c, f);
    EXPECT_EQ(r.exists, brute);
    if (r.exists) {
      EXPECT_TRUE(is_total(*r.injection) && is_univalued(*r.injection) && is_injective(*r.injection));
      EXPECT_TRUE(c.member(*r.extension));
    }
  }
}

TEST(Ancilla, PartialExamples) {
  EXPECT_EQ(ancilla_partial(cnot_gate(), 0), make(1, 1, {{0, 0}}));
  EXPECT_EQ(ancilla_partial(identity(2, 2), 1), identity(2, 1));
  EXPECT_EQ(ancilla_partial(swap_gate(2), 0), make(1, 1, {{0, 0}}));
  EXPECT_THROW(ancilla_partial(empty_pmf(2, 0, 1), 0), ShapeError);
}

TEST(Ancilla, TotalRule) {
  // Toffoli with wire order (c1, t, c2); fixing c2 = 1 leaves CNOT.
  const auto reordered = Pmf::from_function(2, 3, 3, [](Code x) {
    const Code c1 = (x >> 2) & 1U;
    const Code c2 = x & 1U;
    return (c1 & c2) != 0 ? x ^ 2U : x;
  });
  EXPECT_EQ(ancilla_total(reordered, 1, 1), cnot_gate());
  EXPECT_EQ(ancilla_total(reordered, 1, 0), identity(2, 2));
  EXPECT_EQ(ancilla_total(cnot_reversed(), 1, 1), not_gate());
  EXPECT_FALSE(ancilla_total(cnot_gate(), 1, 0));
}

TEST(PermutationClone, Gl22) {
  const std::vector<Pmf> g{cnot_gate(), cnot_reversed(), swap_gate(2)};
  const auto c = permutation_clone_closure(g, 2, 2);
  EXPECT_EQ(c.count(2), 6U);
  const auto gl = oracle::gl22();
  EXPECT_EQ(std::set<std::vector<Code>>(c.images(2).begin(), c.images(2).end()), gl);
  EXPECT_TRUE(verify_groups(c));
}

TEST(PermutationClone, VerifyGroupsRejectsNonGroups) {
  using Images = std::vector<std::vector<Code>>;
  const Images g0{{0}};
  const Images g1{{0, 1}};
  // id, cnot, swap without their products.
  const Images bad{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
  EXPECT_FALSE(verify_groups(PermutationClone(2, 2, {g0, g1, bad}, {}, {}, false, true)));
  const auto six = oracle::gl22();
  Images gl(six.begin(), six.end());
  EXPECT_TRUE(verify_groups(PermutationClone(2, 2, {g0, g1, gl}, {}, {}, false, true)));
  gl.pop_back();
  EXPECT_FALSE(verify_groups(PermutationClone(2, 2, {g0, g1, gl}, {}, {}, false, true)));
}

TEST(PermutationClone, EmptyGenerators) {
  const auto c = permutation_clone_closure({}, 2, 3);
  EXPECT_EQ(c.count(1), 1U);
  EXPECT_EQ(c.count(2), 2U);
  EXPECT_EQ(c.count(3), 6U);
}

TEST(PermutationClone, FredkinWithAncillasStaysConservative) {
  const std::vector<Pmf> g{fredkin_gate()};
  PermutationClosureOptions opts;
  opts.ancilla = true;
  const auto c = permutation_clone_closure(g, 2, 3, opts);
  EXPECT_TRUE(c.ancilla_closed());
  EXPECT_EQ(c.count(1), 1U);
  EXPECT_FALSE(c.contains(not_gate()));
  const auto w = conservative(2, 9);
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& f : c.members(n)) EXPECT_TRUE(oracle::preserves(f, w));
  }
  EXPECT_TRUE(verify_ancilla_steps(c));
}

TEST(PermutationClone, GeneratorOrderDoesNotMatter) {
  std::vector<Pmf> g{toffoli_gate(), not_gate(), fredkin_gate(), cnot_gate()};
  PermutationClosureOptions opts;
  opts.ancilla = true;
  const auto ref = permutation_clone_closure(g, 2, 3, opts);
  std::mt19937 rng(13);
  for (int t = 0; t < 4; ++t) {
    std::shuffle(g.begin(), g.end(), rng);
    const auto c = permutation_clone_closure(g, 2, 3, opts);
    for (unsigned n = 0; n <= 3; ++n) EXPECT_EQ(c.images(n), ref.images(n));
  }
}

TEST(PermutationClone, ConjugationInvariant) {
  const std::vector<Pmf> g{toffoli_gate()};
  const auto c = permutation_clone_closure(g, 2, 3);
  EXPECT_TRUE(verify_groups(c));
  std::vector<unsigned> rho{0, 1, 2};
  do {
    const auto p = variable_permutation(2, rho);
    for (const auto& f : c.members(3)) EXPECT_TRUE(c.contains(compose(inverse(p), compose(f, p))));
  } while (std::next_permutation(rho.begin(), rho.end()));
}

TEST(PermutationClone, RejectsNonPermutations) {
  const std::vector<Pmf> g{and_gate()};
  EXPECT_THROW(permutation_clone_closure(g, 2, 2), PreconditionError);
}

TEST(PermutationClone, AncillaPartialRespectsCancellativeWeights) {
  const std::vector<Pmf> g{toffoli_gate(), cnot_gate()};
  const auto c = permutation_clone_closure(g, 2, 3);
  const std::vector<Weight> ws{mod_weight(2, 2), mod_weight(2, 3), mod_weight(2, 4), kronecker_delta(2, OrderKind::eq)};
  std::size_t preserved = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& f : c.members(n)) {
      for (const auto& w : ws) {
        if (!oracle::preserves(f, w)) continue;
        ++preserved;
        for (Digit a = 0; a < 2; ++a) EXPECT_TRUE(oracle::preserves(ancilla_partial(f, a), w));
      }
    }
  }
  EXPECT_GT(preserved, 0U);
}

TEST(MasterWeight, Examples) {
  EXPECT_TRUE(master_weight_check(mod_weight(2, 3)));
  EXPECT_FALSE(master_weight_check(conservative(2, 9)));
  EXPECT_TRUE(master_weight_check(kronecker_delta(2, OrderKind::eq)));
  EXPECT_THROW(master_weight_check(kronecker_delta(2, OrderKind::le)), PreconditionError);
}
