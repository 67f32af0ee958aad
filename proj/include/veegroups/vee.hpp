#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veegroups/graded.hpp"

namespace veegroups {

/// A signature t = (t_1, ..., t_n) with t_i in {1, Z}: the defining data of
/// the group Q(t) on generators e_1, ..., e_n with e_i^2 = t_i and
/// e_k e_l = Z e_l e_k. Generator i is 1-indexed and owns bit i-1 of subset
/// masks. Q(1,...,1; p ones then q Zs) is written Q_{p,q}.
class Signature {
 public:
  Signature(int n, uint64_t z_mask);
  static Signature pq(int p, int q);
  /// Parses "1,Z,Z" (whitespace tolerated). The empty string is n = 0.
  static Signature parse(const std::string& text);

  int n() const { return n_; }
  uint64_t z_mask() const { return zmask_; }
  bool t_is_z(int i) const;  // 1-indexed
  int p_count() const;       // number of +1 entries
  int q_count() const;       // number of Z entries
  std::string str() const;   // "1,Z,Z"
  Signature permuted(const std::vector<int>& sigma1) const;  // t'_i = t_{σ(i)}

  friend bool operator==(const Signature& a, const Signature& b) = default;

 private:
  int n_ = 0;
  uint64_t zmask_ = 0;
};

/// The element Z^z e_A of Q(t).
struct VeeElement {
  uint8_t z = 0;      // 0 or 1
  uint64_t mask = 0;  // the subset A; bit i-1 <=> generator i

  friend auto operator<=>(const VeeElement&, const VeeElement&) = default;
};

inline VeeElement vee_one() { return {0, 0}; }
inline VeeElement vee_z() { return {1, 0}; }

/// |{(a, b) in A x B : a > b}| — the inversion count between two subsets.
int inversion_count(uint64_t a, uint64_t b);

/// The absolute cocycle γ(A, B) = parity of the inversion count.
int gamma_cocycle(uint64_t a, uint64_t b);

/// t_A = prod_{a in A} t_a as a Z-exponent (parity of Z entries hit by A).
int t_measure(const Signature& s, uint64_t a);

/// e_A e_B = t_{A∩B} · γ(A,B) · e_{AΔB}, with Z-bits adding.
VeeElement vee_mul(const Signature& s, VeeElement a, VeeElement b);

VeeElement vee_inverse(const Signature& s, VeeElement a);
int vee_order(const Signature& s, VeeElement a);  // 1, 2 or 4

/// g x g^{-1}.
VeeElement vee_conjugate(const Signature& s, VeeElement g, VeeElement x);

/// e_n^2 as a scalar: Z^{n(n-1)/2} t_n (n = full generator set).
VeeElement pseudoscalar_square(const Signature& s);

/// Dense enumeration index (z << n) | mask and back.
int element_index(const Signature& s, VeeElement a);
VeeElement element_at(const Signature& s, int index);

// ---- structure --------------------------------------------------------------

enum class CenterType { c2, c4, vier };  // {1,Z} ≅ C2; C4; Klein four-group

struct CenterInfo {
  std::vector<VeeElement> elements;
  CenterType type;
};

/// {1, Z} for n even; {1, Z, e_n, Z e_n} for n odd, with the isomorphism type
/// decided by e_n^2 (C4 iff e_n^2 = Z).
CenterInfo center(const Signature& s);

/// Conjugacy classes: singletons for central elements, {e_A, Z e_A} otherwise.
/// Count is 2^n + 1 (n even) or 2^n + 2 (n odd).
std::vector<std::vector<VeeElement>> conjugacy_classes(const Signature& s);
long long conjugacy_class_count(const Signature& s);

struct CommutatorInfo {
  std::vector<VeeElement> subgroup;
  bool within_z;  // [G,G] ⊆ {1, Z}
};
CommutatorInfo commutator_subgroup(const Signature& s);

// ---- automorphisms -----------------------------------------------------------

/// Φ_σ(Z^z e_A) = Z^{z+u} e_{σ(A)} with u = |{(i,j) in A x A : i<j, σ(i)>σ(j)}|.
/// σ is one-line, 1-indexed, and must preserve the signature (t_{σ(i)} = t_i).
VeeElement hyperoctahedral_automorphism(const Signature& s, const std::vector<int>& sigma1,
                                        VeeElement x);

/// |{(i,j) in A x A : i < j, σ(i) > σ(j)}| — the full count, for diagnostics.
int permutation_inversions_on_subset(const std::vector<int>& sigma1, uint64_t a);

/// Automorphisms as permutations of the dense element indices.
std::vector<int> automorphism_perm_sigma(const Signature& s, const std::vector<int>& sigma1);
std::vector<int> automorphism_perm_alpha(const Signature& s);
std::vector<int> automorphism_perm_inner(const Signature& s, VeeElement g);

/// Order of the group generated by a set of permutations (BFS closure).
long long permutation_closure_order(const std::vector<std::vector<int>>& gens);

/// Order of B_n = <Φ_σ, inner automorphisms, α> for an all-equal signature.
/// Theorem value: n! 2^n.
long long hyperoctahedral_group_order(const Signature& s);

/// Searches for e_A with conjugation-by-e_A equal to the grading automorphism
/// α; succeeds exactly when n is even.
std::optional<VeeElement> inner_witness_for_alpha(const Signature& s);

// ---- derived structures ------------------------------------------------------

/// The even-part signature (Z t_1 t_2, ..., Z t_1 t_n) of Thm's b_k = e_1 e_k
/// generators: Q(t)_0 ≅ Q(even_part(t)). Requires n >= 1; result has n-1 slots.
Signature even_part(const Signature& s);

/// Q(t) materialized as a one-atom graded group over Z/2, elements indexed by
/// (z << n) | mask. Capped at n <= 10 (explicit 2^{n+1} x 2^{n+1} table).
GradedGroup as_graded_group(const Signature& s);

/// 𝒫(n): subsets with symmetric difference, graded by parity — the quotient
/// Q(t)/{1,Z} independent of t.
GradedGroup subset_parity_group(int n);

// ---- rendering ----------------------------------------------------------------

/// "1", "Z", "e_{12}", "Z e_{12}" (comma-separated indices once n > 9).
std::string render_element(VeeElement a, int n);
std::string render_subset(uint64_t mask, int n);

/// {"z":0,"A":[1,2]} and back.
std::string element_to_json(VeeElement a);
VeeElement element_from_json(const std::string& text);

}  // namespace veegroups
