#include "pmfgalois/catalog.hpp"

#include <utility>

#include "pmfgalois/error.hpp"
#include "pmfgalois/semiring.hpp"

namespace pmfgalois {

namespace {

std::string suffix(OrderKind o) { return std::string("-") + order_kind_name(o); }

void require_binary(unsigned base, const char* what) {
  if (base != 2) throw RangeError(std::string(what) + " is defined only for |B| = 2");
}

Pmf gate(unsigned arity, Code (*fn)(Code)) {
  return Pmf::from_function(2, arity, arity, fn);
}

const OrderKind kOrders[] = {OrderKind::le, OrderKind::ge, OrderKind::eq};

}  // namespace

Weight cst1_nat(unsigned base, unsigned k, unsigned threshold, OrderKind order) {
  BaseSet check(base);
  return Weight(base, k, nat_truncated(threshold, order), std::vector<Elem>(ipow(base, k), 1))
      .with_label("cst1" + suffix(order));
}

Weight cst1_semiring(unsigned base, unsigned k, unsigned threshold, OrderKind order) {
  BaseSet check(base);
  return Weight(base, k, nat_semiring(threshold, order), std::vector<Elem>(ipow(base, k), 1))
      .with_label("cst1s" + suffix(order));
}

Weight kronecker_delta(unsigned base, OrderKind order) {
  BaseSet check(base);
  std::vector<Elem> values(ipow(base, 2));
  for (Code x = 0; x < values.size(); ++x) values[x] = x / base == x % base ? 1 : 0;
  return Weight(base, 2, boolean_semiring(order), std::move(values)).with_label("delta" + suffix(order));
}

Weight conservative(unsigned base, unsigned threshold) {
  BaseSet check(base);
  if (threshold < base - 1) throw RangeError("threshold below the largest weight value");
  std::vector<Elem> values(base);
  for (Elem x = 0; x < base; ++x) values[x] = x;
  return Weight(base, 1, nat_truncated(threshold, OrderKind::eq), std::move(values)).with_label("conservative");
}

Weight mod_weight(unsigned base, unsigned c) {
  BaseSet check(base);
  if (c < 2) throw RangeError("modulus must be at least 2");
  std::vector<Elem> values(base);
  for (Elem x = 0; x < base; ++x) values[x] = x % c;
  return Weight(base, 1, cyclic_group(c), std::move(values)).with_label("mod" + std::to_string(c));
}

Weight affine(unsigned base) {
  require_binary(base, "the affine weight");
  std::vector<Elem> values(16);
  for (Code x = 0; x < 16; ++x) {
    const auto d = decode(x, 4, 2);
    values[x] = (d[0] + d[1] + d[2] + d[3] + 1) % 2;
  }
  return Weight(2, 4, boolean_semiring(OrderKind::le), std::move(values)).with_label("affine");
}

Weight cst0(unsigned base, unsigned k, OrderKind order) {
  BaseSet check(base);
  if (k > 1) throw RangeError("cst0 is nullary or unary");
  return Weight(base, k, boolean_semiring(order), std::vector<Elem>(ipow(base, k), 0))
      .with_label((k == 0 ? "cst0" : "cst0u") + suffix(order));
}

Weight shape_weight(unsigned threshold, const BoolMatrix& preorder, unsigned base) {
  auto nat = nat_truncated(threshold, OrderKind::eq);
  if (preorder.size() != nat->size() || !is_invariant_preorder(*nat, preorder)) {
    throw ValidationError("not an invariant preorder on N_T");
  }
  const Quotient q = quotient(*nat, preorder);
  return Weight(base, 0, q.monoid, std::vector<Elem>{q.map[1]}).with_label("shape");
}

Weight trivial_weight(unsigned base, unsigned k) {
  BaseSet check(base);
  return Weight(base, k, trivial_pomonoid(), std::vector<Elem>(ipow(base, k), 0)).with_label("trivial");
}

Pmf not_gate() {
  return gate(1, [](Code x) -> Code { return x ^ 1U; });
}

Pmf cnot_gate() {
  return gate(2, [](Code x) -> Code { return (x & 2U) != 0 ? x ^ 1U : x; });
}

Pmf toffoli_gate() {
  return gate(3, [](Code x) -> Code { return (x & 6U) == 6U ? x ^ 1U : x; });
}

Pmf fredkin_gate() {
  return gate(3, [](Code x) -> Code {
    if ((x & 4U) == 0) return x;
    return 4U | ((x & 1U) << 1) | ((x >> 1) & 1U);
  });
}

Pmf xor_gate() {
  return Pmf::from_function(2, 2, 1, [](Code x) -> Code { return ((x >> 1) ^ x) & 1U; });
}

Pmf and_gate() {
  return Pmf::from_function(2, 2, 1, [](Code x) -> Code { return x == 3 ? 1 : 0; });
}

std::vector<Weight> builtin_weights(unsigned base, unsigned threshold) {
  std::vector<Weight> out;
  for (auto o : kOrders) out.push_back(cst1_nat(base, 0, threshold, o));
  for (auto o : kOrders) out.push_back(cst1_semiring(base, 1, threshold, o));
  for (auto o : kOrders) out.push_back(kronecker_delta(base, o));
  out.push_back(conservative(base, threshold));
  for (unsigned c = 2; c <= 4; ++c) out.push_back(mod_weight(base, c));
  if (base == 2) out.push_back(affine(base));
  for (auto o : kOrders) out.push_back(cst0(base, 0, o));
  for (auto o : kOrders) out.push_back(cst0(base, 1, o));
  out.push_back(trivial_weight(base, 1));
  return out;
}

std::vector<std::string> catalog_weight_names() {
  std::vector<std::string> out;
  for (const char* stem : {"cst1", "cst1s", "delta", "cst0", "cst0u"}) {
    for (auto o : kOrders) out.push_back(stem + suffix(o));
  }
  for (const char* n : {"delta", "conservative", "mod2", "mod3", "mod4", "affine", "trivial"}) out.emplace_back(n);
  return out;
}

std::vector<std::string> catalog_pmf_names() {
  return {"not", "cnot", "toffoli", "fredkin", "swap", "xor", "and", "delta2", "id1", "id2"};
}

Weight catalog_weight(std::string_view name, unsigned base, unsigned threshold) {
  auto split = [&](std::string_view stem) -> std::optional<OrderKind> {
    if (name.size() <= stem.size() + 1 || name.substr(0, stem.size()) != stem || name[stem.size()] != '-') {
      return std::nullopt;
    }
    return parse_order_kind(name.substr(stem.size() + 1));
  };
  if (name == "delta") return kronecker_delta(base, OrderKind::le);
  if (name == "conservative") return conservative(base, threshold);
  if (name == "affine") return affine(base);
  if (name == "trivial") return trivial_weight(base, 1);
  if (name.size() > 3 && name.substr(0, 3) == "mod") {
    const std::string digits(name.substr(3));
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 4) {
      return mod_weight(base, static_cast<unsigned>(std::stoul(digits)));
    }
  }
  if (auto o = split("cst1s")) return cst1_semiring(base, 1, threshold, *o);
  if (auto o = split("cst1")) return cst1_nat(base, 0, threshold, *o);
  if (auto o = split("delta")) return kronecker_delta(base, *o);
  if (auto o = split("cst0u")) return cst0(base, 1, *o);
  if (auto o = split("cst0")) return cst0(base, 0, *o);
  throw ParseError("unknown catalog weight '" + std::string(name) + "'");
}

Pmf catalog_pmf(std::string_view name, unsigned base) {
  if (name == "swap") return swap_gate(base);
  if (name == "delta2") return diagonal(base, 2);
  if (name == "id1") return identity(base, 1);
  if (name == "id2") return identity(base, 2);
  if (name == "not" || name == "cnot" || name == "toffoli" || name == "fredkin" || name == "xor" ||
      name == "and") {
    require_binary(base, "this gate");
    if (name == "not") return not_gate();
    if (name == "cnot") return cnot_gate();
    if (name == "toffoli") return toffoli_gate();
    if (name == "fredkin") return fredkin_gate();
    if (name == "xor") return xor_gate();
    return and_gate();
  }
  throw ParseError("unknown catalog pmf '" + std::string(name) + "'");
}

}  // namespace pmfgalois
