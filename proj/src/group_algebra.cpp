#include "veegroups/group_algebra.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "veegroups/common.hpp"

namespace veegroups {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

const GradedGroup& carrier_of(const GroupAlgebraElement& a) {
  require(a.group != nullptr, "group algebra: element has no carrier");
  return *a.group;
}

bool compatible(const AlgebraCarrier& a, const AlgebraCarrier& b) {
  if (a == b) return a != nullptr;
  return a && b && a->same_structure(*b);
}

void check_same_carrier(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require(compatible(a.group, b.group), "group algebra: elements live over different carriers");
}

void accumulate(std::map<int, Rational>& m, int key, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = m.emplace(key, v);
  if (inserted) return;
  it->second += v;
  if (it->second == 0) m.erase(it);
}

GroupAlgebraElement with_coeffs(AlgebraCarrier c, std::map<int, Rational> m) {
  GroupAlgebraElement out;
  out.group = std::move(c);
  out.coeffs = std::move(m);
  return out;
}

}  // namespace

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (!compatible(a.group, b.group)) return false;
  return a.coeffs == b.coeffs;
}

AlgebraCarrier make_carrier(GradedGroup g) {
  if (g.order() > kValidationCap)
    throw size_cap_error("group algebra: carrier order exceeds the validation cap");
  return std::make_shared<const GradedGroup>(std::move(g));
}

GroupAlgebraElement ga_zero(AlgebraCarrier c) {
  require(c != nullptr, "group algebra: null carrier");
  return with_coeffs(std::move(c), {});
}

GroupAlgebraElement ga_delta(AlgebraCarrier c, int element) {
  require(c != nullptr, "group algebra: null carrier");
  require(element >= 0 && element < c->order(), "group algebra: element index out of range");
  std::map<int, Rational> m;
  m.emplace(element, Rational(1));
  return with_coeffs(std::move(c), std::move(m));
}

GroupAlgebraElement ga_unit(AlgebraCarrier c) {
  require(c != nullptr, "group algebra: null carrier");
  const int e = c->identity();
  return ga_delta(std::move(c), e);
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same_carrier(a, b);
  std::map<int, Rational> m = a.coeffs;
  for (const auto& [k, v] : b.coeffs) accumulate(m, k, v);
  return with_coeffs(a.group, std::move(m));
}

GroupAlgebraElement ga_sub(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same_carrier(a, b);
  std::map<int, Rational> m = a.coeffs;
  for (const auto& [k, v] : b.coeffs) accumulate(m, k, -v);
  return with_coeffs(a.group, std::move(m));
}

GroupAlgebraElement ga_scale(const Rational& r, const GroupAlgebraElement& a) {
  carrier_of(a);
  std::map<int, Rational> m;
  if (r != 0)
    for (const auto& [k, v] : a.coeffs) m.emplace(k, r * v);
  return with_coeffs(a.group, std::move(m));
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same_carrier(a, b);
  const GradedGroup& g = carrier_of(a);
  std::map<int, Rational> m;
  for (const auto& [x, cx] : a.coeffs)
    for (const auto& [y, cy] : b.coeffs) accumulate(m, g.mul(x, y), cx * cy);
  return with_coeffs(a.group, std::move(m));
}

GroupAlgebraElement ga_antipode(const GroupAlgebraElement& a) {
  const GradedGroup& g = carrier_of(a);
  std::map<int, Rational> m;
  for (const auto& [x, cx] : a.coeffs) m.emplace(g.inverse(x), cx);
  return with_coeffs(a.group, std::move(m));
}

GroupAlgebraElement ga_z_push(const GroupAlgebraElement& a) {
  const GradedGroup& g = carrier_of(a);
  std::map<int, Rational> m;
  for (const auto& [x, cx] : a.coeffs) m.emplace(g.action(1, x), cx);
  return with_coeffs(a.group, std::move(m));
}

GroupAlgebraElement ga_alpha_push(const GroupAlgebraElement& a) {
  const GradedGroup& g = carrier_of(a);
  std::map<int, Rational> m;
  for (const auto& [x, cx] : a.coeffs) accumulate(m, g.grading_automorphism(x), cx);
  return with_coeffs(a.group, std::move(m));
}

namespace {

GroupAlgebraElement half_combination(const GroupAlgebraElement& a, const GroupAlgebraElement& shifted,
                                     int sign) {
  const Rational half(1, 2);
  GroupAlgebraElement sum = (sign > 0) ? ga_add(a, shifted) : ga_sub(a, shifted);
  return ga_scale(half, sum);
}

}  // namespace

namespace {

// P^{±} are idempotent exactly when the central shift is a nontrivial
// involution on the carrier.
void check_z_involution(const GradedGroup& g) {
  const int z = g.action(1, g.identity());
  require(z != g.identity(), "z projectors: the central element Z is trivial");
  require(g.action(1, z) == g.identity(), "z projectors: Z does not square to the identity");
}

}  // namespace

GroupAlgebraElement ga_plus_projector(const GroupAlgebraElement& a) {
  check_z_involution(carrier_of(a));
  return half_combination(a, ga_z_push(a), +1);
}

GroupAlgebraElement ga_minus_projector(const GroupAlgebraElement& a) {
  check_z_involution(carrier_of(a));
  return half_combination(a, ga_z_push(a), -1);
}

SuperSplit ga_super_split(const GroupAlgebraElement& a) {
  const GroupAlgebraElement pushed = ga_alpha_push(a);
  SuperSplit out;
  out.even = half_combination(a, pushed, +1);
  out.odd = half_combination(a, pushed, -1);
  return out;
}

bool ga_is_central(const GroupAlgebraElement& a) {
  const GradedGroup& g = carrier_of(a);
  for (int s : g.generators()) {
    const GroupAlgebraElement d = ga_delta(a.group, s);
    if (ga_mul(a, d) != ga_mul(d, a)) return false;
  }
  return true;
}

GroupAlgebraElement ga_project(const GroupAlgebraElement& a, const QuotientZ& qz,
                               AlgebraCarrier quotient_carrier) {
  const GradedGroup& g = carrier_of(a);
  require(quotient_carrier != nullptr, "projection: null quotient carrier");
  require(static_cast<int>(qz.project.size()) == g.order(),
          "projection: quotient data does not match the carrier");
  require(quotient_carrier->order() == qz.quotient.order(),
          "projection: quotient carrier has the wrong order");
  std::map<int, Rational> m;
  for (const auto& [x, cx] : a.coeffs) accumulate(m, qz.project.at(x), cx);
  return with_coeffs(std::move(quotient_carrier), std::move(m));
}

MinusIdealTable minus_ideal_structure_constants(const Signature& s) {
  const int n = s.n();
  if (n > 8) throw size_cap_error("minus ideal constants: rank capped at 8");
  const AlgebraCarrier c = make_carrier(as_graded_group(s));
  const std::uint64_t subsets = std::uint64_t{1} << n;
  MinusIdealTable table;
  table.n = n;
  table.sign.assign(subsets, std::vector<int>(subsets, 0));
  table.target.assign(subsets, std::vector<std::uint64_t>(subsets, 0));
  std::vector<GroupAlgebraElement> projected;
  projected.reserve(subsets);
  for (std::uint64_t a = 0; a < subsets; ++a)
    projected.push_back(ga_minus_projector(ga_delta(c, element_index(s, VeeElement{0, a}))));
  for (std::uint64_t a = 0; a < subsets; ++a)
    for (std::uint64_t b = 0; b < subsets; ++b) {
      const GroupAlgebraElement prod = ga_mul(projected[a], projected[b]);
      const std::uint64_t expected = a ^ b;
      if (prod == projected[expected]) {
        table.sign[a][b] = 1;
      } else if (prod == ga_scale(Rational(-1), projected[expected])) {
        table.sign[a][b] = -1;
      } else {
        throw std::logic_error("minus ideal constants: product is not ±(P- delta) on a subset");
      }
      table.target[a][b] = expected;
    }
  return table;
}

std::vector<GroupAlgebraElement> central_function_basis(const Signature& s) {
  const int n = s.n();
  if (n > 8) throw size_cap_error("central function basis: rank capped at 8");
  const AlgebraCarrier c = make_carrier(as_graded_group(s));
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const GroupAlgebraElement one = ga_unit(c);
  const GroupAlgebraElement z = ga_z_push(one);
  const GroupAlgebraElement one_plus_z = ga_add(one, z);

  std::vector<GroupAlgebraElement> basis;
  for (std::uint64_t a = 0; a < subsets; ++a) {
    GroupAlgebraElement sum = ga_zero(c);
    for (std::uint64_t b = 0; b < subsets; ++b) {
      const int chi = (__builtin_popcountll(a & b) % 2 == 0) ? 1 : -1;
      sum.coeffs.emplace(element_index(s, VeeElement{0, b}), Rational(chi));
    }
    basis.push_back(ga_mul(one_plus_z, sum));
  }
  basis.push_back(ga_sub(one, z));
  if (n % 2 == 1) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const GroupAlgebraElement top = ga_delta(c, element_index(s, VeeElement{0, full}));
    basis.push_back(ga_mul(ga_sub(one, z), top));
  }
  return basis;
}

}  // namespace veegroups
