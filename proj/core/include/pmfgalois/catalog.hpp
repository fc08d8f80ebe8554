#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmfgalois/pmf.hpp"
#include "pmfgalois/pomonoid.hpp"
#include "pmfgalois/weight.hpp"

namespace pmfgalois {

// cst_1: B^k -> <N_T, 0, +> with the chosen order.
Weight cst1_nat(unsigned base, unsigned k, unsigned threshold, OrderKind order);
// cst_1: B^k -> <N_T, 1, *, 0, +> with the chosen order.
Weight cst1_semiring(unsigned base, unsigned k, unsigned threshold, OrderKind order);
// Kronecker delta B^2 -> <2, 1, and>, carried by the Boolean semiring.
Weight kronecker_delta(unsigned base, OrderKind order);
// Number of ones, into N_T trivially ordered.
Weight conservative(unsigned base, unsigned threshold);
// x mod c into Z/c.
Weight mod_weight(unsigned base, unsigned c);
// x0 + x1 + x2 + x3 + 1 over GF(2), into the Boolean semiring ordered by <=. Needs |B| = 2.
Weight affine(unsigned base);
// Constant 0 into <2, 1, and>; k is 0 or 1.
Weight cst0(unsigned base, unsigned k, OrderKind order);
// cst_1: B^0 -> N_T / preorder, the class of 1.
Weight shape_weight(unsigned threshold, const BoolMatrix& preorder, unsigned base = 2);
// cst_1 into the trivial pomonoid.
Weight trivial_weight(unsigned base, unsigned k);

Pmf not_gate();
Pmf cnot_gate();
Pmf toffoli_gate();
Pmf fredkin_gate();
Pmf xor_gate();
Pmf and_gate();

// Every named weight of the catalog for the base, labelled.
std::vector<Weight> builtin_weights(unsigned base, unsigned threshold);

std::vector<std::string> catalog_weight_names();
std::vector<std::string> catalog_pmf_names();
// Throws ParseError for unknown names.
Weight catalog_weight(std::string_view name, unsigned base, unsigned threshold);
Pmf catalog_pmf(std::string_view name, unsigned base);

}  // namespace pmfgalois
