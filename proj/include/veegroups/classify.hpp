#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "veegroups/graded.hpp"
#include "veegroups/vee.hpp"

namespace veegroups {

// ---- normal forms -------------------------------------------------------------

/// What remains after the dihedral factors D = Q(1,1) are split off a Vee
/// group: Q(t) ≅ D x_Z ... x_Z D x_Z tail.
enum class TailKind {
  none,             // pure D^k (even rank)
  c2,               // the rank-0 group {1, Z}
  vier,             // V = Q(1), Klein four-group
  c4,               // C4 = Q(Z)
  quaternion,       // Q = Q(Z,Z)
  quaternion_vier,  // Q x_Z V (odd rank, quaternionic doubled)
};

struct NormalForm {
  int dihedral_count = 0;
  TailKind tail = TailKind::c2;

  int rank() const;             // n with |Q| = 2^{n+1}
  long long group_order() const;
  std::string label() const;    // e.g. "D^3 C_4", "D Q V", "C_2"
  std::string compact() const;  // e.g. "D3C4", "DQV", "C2"

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// The central-product normal form of Q_{p,q} (and, by the diagonal
/// relabelling lemma, of any Q(t) with these signature counts).
NormalForm normal_form(int p, int q);
NormalForm normal_form(const Signature& s);

/// The five indecomposable central factors, as explicit graded groups.
GradedGroup base_atom_c2();
GradedGroup base_atom_vier();
GradedGroup base_atom_c4();
GradedGroup base_atom_dihedral();
GradedGroup base_atom_quaternion();

/// Realizes D^k x_Z tail as an iterated ungraded central product.
GradedGroup realize_normal_form(const NormalForm& nf);

// ---- isomorphism oracle ---------------------------------------------------------

/// Exhaustive isomorphism test by backtracking over generator images,
/// pruned by element invariants (order, centrality, centralizer size).
/// Positive answers carry a fully verified witness map. Gradings are
/// deliberately ignored: this compares abstract groups. Both orders must be
/// <= kIsoOracleCap.
struct IsoResult {
  bool isomorphic = false;
  std::vector<int> witness;  // element of a -> element of b (empty if not iso)
};
IsoResult iso_oracle(const GradedGroup& a, const GradedGroup& b);

/// |Aut(G)| by counting all completions of the same backtracking search.
/// Order capped at 16 (the search is exponential in the worst case).
long long full_automorphism_count(const GradedGroup& g);

// ---- fingerprints ----------------------------------------------------------------

/// Cheap isomorphism invariants: enough to separate every pair of distinct
/// normal forms of the same order, so equality on this family is conclusive
/// in combination with the classification theorem.
struct GroupFingerprint {
  long long order = 0;
  std::map<int, long long> element_orders;  // order -> how many elements
  long long center_size = 0;
  long long abelianization_order = 0;
  std::map<int, long long> abelianization_orders;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

/// Computed by iteration over the carrier: O(|G|^2)-ish, |G| <= kValidationCap.
GroupFingerprint fingerprint_of_group(const GradedGroup& g);

/// Computed from the signature combinatorics alone (no tables): n <= 20.
GroupFingerprint fingerprint_of_signature(const Signature& s);

// ---- structure statements ---------------------------------------------------------

/// Q(t) ≅ Q(t1,t2) x_Z Q(t') with t'_k = Z t1 t2 t_{k+2}; needs n >= 2.
struct Rank2Split {
  Signature rank2 = Signature::pq(0, 0);
  Signature rest = Signature::pq(0, 0);
};
Rank2Split split_off_rank2(const Signature& s);

/// Witness that Q(t) ≅ Q(t∘σ): both sides materialized and matched by the
/// oracle (n <= 8 so the orders stay inside the oracle cap).
IsoResult signature_reorder_witness(const Signature& s, const std::vector<int>& sigma1);

// ---- the periodic table -------------------------------------------------------------

/// One cell of the rank-n triangle: the group Q_{p,q}, its normal form and
/// the matrix-algebra shape of the odd part of its group algebra.
struct PeriodicEntry {
  int p = 0;
  int q = 0;
  NormalForm form;
  std::string algebra;  // e.g. "M_2(C)", "2 M_4(R)", "H"
};

/// All entries with 0 <= p + q <= max_n, ordered by rank then by descending p.
std::vector<PeriodicEntry> periodic_table(int max_n);

/// The real matrix-algebra label M_{2^k}(F) / doubled, from the normal form:
/// D contributes M_2(R), tails contribute R, C, H and V doubles.
std::string algebra_label(const NormalForm& nf);

}  // namespace veegroups
