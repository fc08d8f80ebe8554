#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pmfgalois/constructions.hpp"
#include "pmfgalois/error.hpp"
#include "pmfgalois/semiring.hpp"

using namespace pmfgalois;

namespace {

PomonoidPtr chain2() {
  BoolMatrix le = BoolMatrix::identity(2);
  le.set(1, 0);
  return std::make_shared<const FinitePomonoid>(std::vector<std::string>{"1", "a"}, 0,
                                                std::vector<Elem>{0, 1, 1, 1}, le);
}

// {1, a} with a.a = a, trivially ordered.
PomonoidPtr idempotent2() {
  return std::make_shared<const FinitePomonoid>(std::vector<std::string>{"1", "a"}, 0,
                                                std::vector<Elem>{0, 1, 1, 1}, BoolMatrix::identity(2));
}

FormalSum sum_of(std::vector<unsigned> mult) { return FormalSum{std::move(mult)}; }

// {a, b, c, 0}: every product of two nonzero elements is c, anything times c is 0.
Nilsemigroup twin_nilsemigroup() {
  Nilsemigroup o;
  o.names = {"a", "b", "c", "0"};
  o.zero = 3;
  o.mul.assign(16, 3);
  for (Elem x = 0; x < 2; ++x) {
    for (Elem y = 0; y < 2; ++y) o.mul[x * 4 + y] = 2;
  }
  return o;
}

}  // namespace

TEST(Downset, Examples) {
  const auto t = downset_completion(*trivial_pomonoid());
  EXPECT_EQ(t.semiring->size(), 2U);
  const auto c = downset_completion(*chain2());
  EXPECT_EQ(c.semiring->size(), 3U);
  EXPECT_EQ(c.sets, (std::vector<std::uint64_t>{0b00, 0b10, 0b11}));
  EXPECT_EQ(c.embedding, (std::vector<Elem>{2, 1}));
  EXPECT_EQ(downset_completion(*cyclic_group(2)).semiring->size(), 4U);
}

TEST(Downset, ContinuousJoinSemiringWithEmbedding) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (const auto& m : oracle::pomonoids(n)) {
      const auto d = downset_completion(*m);
      EXPECT_FALSE(validate(*d.semiring));
      const auto p = semiring_predicates(*d.semiring);
      EXPECT_TRUE(p.lor_semiring && p.continuous && p.positive);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          EXPECT_EQ(d.semiring->mul(d.embedding[x], d.embedding[y]), d.embedding[m->mul(x, y)]);
          EXPECT_EQ(d.semiring->leq(d.embedding[x], d.embedding[y]), m->leq(x, y));
        }
      }
    }
  }
}

TEST(Downset, CapIsEnforced) {
  EXPECT_THROW(downset_completion(*cyclic_group(12), 1024), BudgetError);
  EXPECT_THROW(downset_completion(*cyclic_group(17)), BudgetError);
}

TEST(FormalSums, Examples) {
  const auto t = trivial_pomonoid();
  EXPECT_TRUE(formal_sum_leq(t, sum_of({2}), sum_of({3})));
  EXPECT_FALSE(formal_sum_leq(t, sum_of({3}), sum_of({2})));
  const auto c = chain2();
  EXPECT_TRUE(formal_sum_leq(c, sum_of({0, 1}), sum_of({1, 0})));
  EXPECT_FALSE(formal_sum_leq(c, sum_of({1, 0}), sum_of({0, 1})));
  const auto i = idempotent2();
  EXPECT_FALSE(formal_sum_leq(i, sum_of({0, 1}), sum_of({1, 0})));
  EXPECT_FALSE(formal_sum_leq(i, sum_of({1, 0}), sum_of({0, 1})));
}

TEST(FormalSums, Arithmetic) {
  const FormalSumAlgebra alg(chain2(), 8);
  EXPECT_EQ(alg.mul(alg.one(), alg.singleton(1)), alg.singleton(1));
  EXPECT_EQ(alg.mul(alg.zero(), alg.singleton(1)), alg.zero());
  const auto x = alg.add(alg.one(), alg.singleton(1));
  EXPECT_EQ(alg.mul(x, x), sum_of({1, 3}));
  EXPECT_TRUE(alg.leq(alg.zero(), alg.one()));
  EXPECT_FALSE(alg.saturated(x));
  const FormalSumAlgebra small(chain2(), 2);
  EXPECT_TRUE(small.saturated(small.mul(x, x)));
}

TEST(FormalSums, EmbeddingReflectsOrderUpToSix) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& m : oracle::pomonoids(n)) {
      const FormalSumAlgebra alg(m, 8);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) EXPECT_EQ(alg.leq(alg.singleton(x), alg.singleton(y)), m->leq(x, y));
      }
    }
  }
  for (unsigned n = 5; n <= 6; ++n) {
    const auto z = cyclic_group(n);
    const FormalSumAlgebra alg(z, 8);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) EXPECT_EQ(alg.leq(alg.singleton(x), alg.singleton(y)), x == y);
    }
  }
}

TEST(Grothendieck, Examples) {
  const auto z2 = cyclic_group(2);
  const std::vector<Elem> one{1};
  const auto e = grothendieck(*z2, one);
  EXPECT_TRUE(oracle::isomorphic(*e.monoid, *z2));
  const auto same = grothendieck(*z2, {});
  EXPECT_TRUE(oracle::isomorphic(*same.monoid, *z2));
  const std::vector<Elem> a{1};
  EXPECT_THROW(grothendieck(*idempotent2(), a), PreconditionError);
}

TEST(Grothendieck, InvertsCancellativeElements) {
  // Only the pairs (0, g) cancel, and they are already units.
  const auto m = direct_product({nat_truncated(3, OrderKind::eq), cyclic_group(3)});
  std::vector<Elem> u;
  for (Elem x = 0; x < m->size(); ++x) {
    if (element_predicates(*m, x).cancellative) u.push_back(x);
  }
  ASSERT_EQ(u.size(), 3U);
  const auto e = grothendieck(*m, u);
  EXPECT_EQ(e.monoid->size(), m->size());
  for (Elem x : u) EXPECT_TRUE(element_predicates(*e.monoid, e.embedding[x]).invertible);
  for (Elem x = 0; x < m->size(); ++x) {
    for (Elem y = 0; y < m->size(); ++y) {
      EXPECT_EQ(e.embedding[m->mul(x, y)], e.monoid->mul(e.embedding[x], e.embedding[y]));
      if (x != y) EXPECT_NE(e.embedding[x], e.embedding[y]);
    }
  }
}

TEST(Grothendieck, RejectsNonCommutativeOrOrdered) {
  EXPECT_THROW(grothendieck(*chain2(), {}), PreconditionError);
  FinitePomonoid left_zero({"1", "a", "b"}, 0, {0, 1, 2, 1, 1, 1, 2, 2, 2}, BoolMatrix::identity(3));
  ASSERT_FALSE(validate(left_zero));
  EXPECT_THROW(grothendieck(left_zero, {}), PreconditionError);
}

TEST(Grillet, TrivialOmega) {
  const auto omega = trivial_nilsemigroup();
  const auto sigma = FactorSet::trivial(omega, cyclic_group(2));
  GrilletReport rep;
  const auto m = grillet_monoid(omega, sigma, &rep);
  EXPECT_EQ(m->size(), 3U);
  EXPECT_TRUE(rep.omega_trivial);
  EXPECT_TRUE(is_commutative(*m));
  EXPECT_EQ(weak_irreducibility(omega, sigma), Verdict::holds);
}

TEST(Grillet, TruncatedSums) {
  const auto d2 = truncated_sum_nilsemigroup(2);
  EXPECT_FALSE(validate(d2));
  EXPECT_EQ(unique_minimal(d2), Elem{0});
  GrilletReport rep;
  const auto m = grillet_monoid(d2, FactorSet::trivial(d2, trivial_pomonoid()), &rep);
  EXPECT_EQ(m->size(), 3U);
  EXPECT_EQ(rep.mu, Elem{0});
  const auto d3 = truncated_sum_nilsemigroup(3);
  EXPECT_EQ(unique_minimal(d3), Elem{1});
  EXPECT_EQ(grillet_monoid(d3, FactorSet::trivial(d3, cyclic_group(2)))->size(), 7U);
}

TEST(Grillet, CocycleViolation) {
  // Omega = {1, 2, 3, 4, 0} under truncated addition; sigma(1,1) = g alone fails at (1,1,2).
  const auto d5 = truncated_sum_nilsemigroup(5);
  auto sigma = FactorSet::trivial(d5, cyclic_group(2));
  EXPECT_FALSE(validate(d5, sigma));
  sigma.sigma[0] = 1;
  const auto v = validate(d5, sigma);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->axiom, "cocycle");
  EXPECT_THROW(grillet_monoid(d5, sigma), ValidationError);
  auto lopsided = FactorSet::trivial(d5, cyclic_group(2));
  lopsided.sigma[0 * 6 + 1] = 1;
  EXPECT_TRUE(validate(d5, lopsided));
}

TEST(Grillet, WeakIrreducibilityCounterexample) {
  const auto o = twin_nilsemigroup();
  ASSERT_FALSE(validate(o));
  EXPECT_EQ(unique_minimal(o), Elem{2});
  const auto sigma = FactorSet::trivial(o, trivial_pomonoid());
  EXPECT_EQ(weak_irreducibility(o, sigma), Verdict::fails);
  const auto m = grillet_monoid(o, sigma);
  EXPECT_FALSE(oracle::subdirectly_irreducible(*m, true));
  const auto s = grillet_spotcheck(o, sigma);
  EXPECT_EQ(s.verdict, Verdict::inapplicable);
}

TEST(Grillet, SpotcheckExamples) {
  const auto omega = trivial_nilsemigroup();
  const auto c4 = grillet_spotcheck(omega, FactorSet::trivial(omega, cyclic_group(4)));
  EXPECT_EQ(c4.verdict, Verdict::holds);
  EXPECT_TRUE(c4.irreducible);
  const auto d2 = truncated_sum_nilsemigroup(2);
  EXPECT_EQ(grillet_spotcheck(d2, FactorSet::trivial(d2, trivial_pomonoid())).verdict, Verdict::holds);
  EXPECT_EQ(grillet_spotcheck(omega, FactorSet::trivial(omega, cyclic_group(6))).verdict, Verdict::inapplicable);
}

TEST(Grillet, CoboundaryGivesIsomorphicMonoid) {
  const auto d3 = truncated_sum_nilsemigroup(3);
  const auto g = cyclic_group(2);
  const auto base = grillet_monoid(d3, FactorSet::trivial(d3, g));
  // u(alpha) over Omega^1 indices 0, 1, 2 (zero), 3 (unit); u(unit) = 0 keeps normalization.
  const std::vector<Elem> u{1, 0, 0, 0};
  auto sigma = FactorSet::trivial(d3, g);
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) {
      const Elem ab = a == 3 ? b : b == 3 ? a : d3.product(a, b);
      if (ab == d3.zero) continue;
      sigma.sigma[a * 4 + b] = g->mul(g->mul(u[a], u[b]), u[ab]);
    }
  }
  ASSERT_FALSE(validate(d3, sigma));
  EXPECT_TRUE(oracle::isomorphic(*grillet_monoid(d3, sigma), *base));
}
