#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "pmfgalois/pmf.hpp"
#include "pmfgalois/pomonoid.hpp"
#include "pmfgalois/weight.hpp"

// Brute-force reference implementations. Nothing here calls the preservation,
// closure or irreducibility code of the library.
namespace oracle {

using pmfgalois::Code;
using pmfgalois::Elem;
using pmfgalois::Pmf;

// Preservation straight from the definition: every k-tuple of graph pairs.
bool preserves(const Pmf& f, const pmfgalois::Weight& w);

// Monoids of order n up to isomorphism, trivially ordered, unit at index 0.
std::vector<pmfgalois::PomonoidPtr> monoids(unsigned n);
// Pomonoids of order n up to isomorphism.
std::vector<pmfgalois::PomonoidPtr> pomonoids(unsigned n);

// Every preorder on n points, as row-major relation matrices.
std::vector<pmfgalois::BoolMatrix> preorders(unsigned n);
// Irreducibility by listing all invariant preorders containing the order.
bool subdirectly_irreducible(const pmfgalois::FinitePomonoid& m, bool symmetric_only = false);

// All permutations of B^n as image vectors, |B| = 2.
std::vector<std::vector<Code>> all_permutations(unsigned n);
// Invertible 2x2 matrices over GF(2) acting on B^2.
std::set<std::vector<Code>> gl22();
// Maps B^n -> B of the form a.x + c over GF(2).
std::set<std::vector<Code>> affine_maps(unsigned n);
unsigned long long factorial(unsigned n);
unsigned long long binomial(unsigned n, unsigned k);

// Naive closure of a generator set under identity, composition, product and
// subfunctions, keeping only pmfs of shape (n, m) with n, m <= cap. Caps of 1 only.
std::set<Pmf> naive_closure(const std::vector<Pmf>& gens, unsigned cap);

// All pmfs of a shape with at most max_pairs pairs.
std::vector<Pmf> small_pmfs(unsigned base, unsigned n, unsigned m, unsigned max_pairs);

// Each cell kept with probability density.
Pmf random_pmf(std::mt19937& rng, unsigned base, unsigned n, unsigned m, double density);

// Isomorphism between two finite monoids, by trying every bijection.
bool isomorphic(const pmfgalois::FinitePomonoid& a, const pmfgalois::FinitePomonoid& b);

}  // namespace oracle
