#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "veegroups/graded.hpp"
#include "veegroups/rational.hpp"
#include "veegroups/vee.hpp"

namespace veegroups {

/// Elements of K[G] share their carrier group through this handle; mixing
/// elements over different carriers throws.
using AlgebraCarrier = std::shared_ptr<const GradedGroup>;
AlgebraCarrier make_carrier(GradedGroup g);

/// A finite linear combination of group deltas with exact coefficients.
/// Zero coefficients are never stored.
struct GroupAlgebraElement {
  AlgebraCarrier group;
  std::map<int, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
};
bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
inline bool operator!=(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return !(a == b);
}

GroupAlgebraElement ga_zero(AlgebraCarrier c);
GroupAlgebraElement ga_delta(AlgebraCarrier c, int element);
GroupAlgebraElement ga_unit(AlgebraCarrier c);

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_sub(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_scale(const Rational& r, const GroupAlgebraElement& a);

/// Convolution: delta_x * delta_y = delta_{xy}, extended bilinearly.
GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// The antipode delta_g -> delta_{g^{-1}}: an anti-automorphism.
GroupAlgebraElement ga_antipode(const GroupAlgebraElement& a);

/// Pushforwards along the central shift g -> Zg and along the grading
/// automorphism alpha(g) = Z^{d(g)} g.
GroupAlgebraElement ga_z_push(const GroupAlgebraElement& a);
GroupAlgebraElement ga_alpha_push(const GroupAlgebraElement& a);

/// The central projectors P^{±} f = (f ± Z_* f) / 2. Their images are the
/// two-sided ideals A^{+} and A^{-} of dimension |G|/2 each. Requires a
/// nontrivial central element (Z(1) != e).
GroupAlgebraElement ga_plus_projector(const GroupAlgebraElement& a);
GroupAlgebraElement ga_minus_projector(const GroupAlgebraElement& a);

/// Eigenspace split under alpha_*: f = even + odd with alpha_*(even) = even,
/// alpha_*(odd) = -odd. These satisfy the super rule A_i A_j ⊆ A_{i+j}.
struct SuperSplit {
  GroupAlgebraElement even;
  GroupAlgebraElement odd;
};
SuperSplit ga_super_split(const GroupAlgebraElement& a);

/// Whether f commutes with every delta_g (checked on generators).
bool ga_is_central(const GroupAlgebraElement& a);

/// Pushforward pi_*: K[G] -> K[G/Z] along a quotient previously computed by
/// quotient_by_z; the kernel is exactly the minus ideal.
GroupAlgebraElement ga_project(const GroupAlgebraElement& a, const QuotientZ& qz,
                               AlgebraCarrier quotient_carrier);

/// The structure constants of the minus ideal of K[Q(t)] on the basis
/// {P^- delta_{e_A}}: entry (A, B) holds the sign and the subset with
/// P^- delta_{e_A} * P^- delta_{e_B} = sign * P^- delta_{e_target}.
/// These must coincide with the Clifford algebra constants over the same
/// signature. Rank capped at 8.
struct MinusIdealTable {
  int n = 0;
  std::vector<std::vector<int>> sign;              // +1 or -1
  std::vector<std::vector<std::uint64_t>> target;  // subset masks
};
MinusIdealTable minus_ideal_structure_constants(const Signature& s);

/// The central-function basis of K[Q(t)]: all E_A^+ = (delta_1 + delta_Z) *
/// sum_B (-1)^{|A and B|} delta_{e_B} (A in subset order), then
/// e_0^- = delta_1 - delta_Z, then (n odd) the odd pseudoscalar
/// (delta_1 - delta_Z) * delta_{e_N}. The count equals the number of
/// conjugacy classes. Rank capped at 8.
std::vector<GroupAlgebraElement> central_function_basis(const Signature& s);

}  // namespace veegroups
