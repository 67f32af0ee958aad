#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "veegroups/rational.hpp"
#include "veegroups/vee.hpp"

namespace veegroups {

/// A Clifford algebra element: sparse combination of basis blades e_A, keyed
/// by the subset bitmask A. Zero coefficients are never stored.
struct CliffordElement {
  std::map<std::uint64_t, Rational> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
};

/// Cl(t_1, ..., t_n) over the exact rationals: e_k^2 = t_k with arbitrary
/// nonzero t_k (the groups Q_{p,q} correspond to t_k = ±1). Rank capped
/// at 11 so dense tables stay desk-scale.
class CliffordAlgebra {
 public:
  explicit CliffordAlgebra(std::vector<Rational> t);
  /// t_i = +1 for flag 1, t_i = -1 for flag Z.
  static CliffordAlgebra from_signature(const Signature& s);

  int n() const { return static_cast<int>(t_.size()); }
  long long dim() const { return 1LL << n(); }
  const std::vector<Rational>& coefficients() const { return t_; }
  const Rational& coefficient(int i) const;  // 1-indexed t_i

  CliffordElement zero() const { return {}; }
  CliffordElement unit() const;
  CliffordElement basis(std::uint64_t mask) const;
  CliffordElement generator(int i) const;  // 1-indexed e_i

 private:
  std::vector<Rational> t_;
};

CliffordElement cl_add(const CliffordElement& a, const CliffordElement& b);
CliffordElement cl_sub(const CliffordElement& a, const CliffordElement& b);
CliffordElement cl_scale(const Rational& r, const CliffordElement& a);

/// The basis rule e_A e_B = (-1)^{m(A,B)} (prod_{k in A and B} t_k) e_{A xor B}
/// with m(A,B) = #{(a,b) in A x B : a > b}, extended bilinearly.
CliffordElement clifford_mul(const CliffordAlgebra& alg, const CliffordElement& x,
                             const CliffordElement& y);

/// Cl(t) ⊗̂ Cl(s) = Cl(t ++ s): the combined algebra, and the embedding of a
/// pure tensor x ⊗ y as an element of it (B shifted past the first factor).
/// Products of embedded elements obey the super sign rule (-1)^{|b||a'|}.
CliffordAlgebra graded_tensor_algebra(const CliffordAlgebra& a, const CliffordAlgebra& b);
CliffordElement graded_tensor(const CliffordAlgebra& a, const CliffordAlgebra& b,
                              const CliffordElement& x, const CliffordElement& y);

/// The coordinate-scaling morphism Cl(r_1^2, ..., r_n^2) -> Cl(1, ..., 1):
/// e_A -> (prod_{a in A} r_a) e_A. Roots must be nonzero.
CliffordElement anchor(const std::vector<Rational>& roots, const CliffordElement& x);

/// chi_A(B) = (-1)^{|A and B|}: the characters of the subset parity group.
int character(std::uint64_t a, std::uint64_t b);

/// Basis of the center, found by solving [x, e_i] = 0 for all generators
/// exactly: dimension 1 for even rank (scalars) and 2 for odd rank (scalars
/// and the pseudoscalar line). Rank capped at 6 by the dense solve.
std::vector<CliffordElement> clifford_center(const CliffordAlgebra& alg);

}  // namespace veegroups
