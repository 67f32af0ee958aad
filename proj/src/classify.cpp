#include "veegroups/classify.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "veegroups/common.hpp"

namespace veegroups {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

// ---- normal forms -------------------------------------------------------------

int NormalForm::rank() const {
  const int d2 = 2 * dihedral_count;
  switch (tail) {
    case TailKind::none: return d2;
    case TailKind::c2: return d2;
    case TailKind::vier: return d2 + 1;
    case TailKind::c4: return d2 + 1;
    case TailKind::quaternion: return d2 + 2;
    case TailKind::quaternion_vier: return d2 + 3;
  }
  return d2;
}

long long NormalForm::group_order() const { return 1LL << (rank() + 1); }

namespace {

std::string tail_text(TailKind t, bool compact) {
  switch (t) {
    case TailKind::none: return "";
    case TailKind::c2: return compact ? "C2" : "C_2";
    case TailKind::vier: return "V";
    case TailKind::c4: return compact ? "C4" : "C_4";
    case TailKind::quaternion: return "Q";
    case TailKind::quaternion_vier: return compact ? "QV" : "Q V";
  }
  return "";
}

}  // namespace

std::string NormalForm::label() const {
  std::string out;
  if (dihedral_count == 1) out = "D";
  if (dihedral_count > 1) out = "D^" + std::to_string(dihedral_count);
  const std::string t = tail_text(tail, false);
  if (!t.empty()) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  if (out.empty()) out = "C_2";
  return out;
}

std::string NormalForm::compact() const {
  std::string out;
  if (dihedral_count == 1) out = "D";
  if (dihedral_count > 1) out = "D" + std::to_string(dihedral_count);
  out += tail_text(tail, true);
  if (out.empty()) out = "C2";
  return out;
}

namespace {

// The raw recursion peels off D = Q(1,1) and Q = Q(Z,Z) factors until a
// rank <= 1 base remains; the multiset (D^d, Q^qf, base) is rewritten to the
// unique normal form afterwards.
struct RawForm {
  int d = 0;
  int qf = 0;
  int base = 0;  // 0: C2, 1: V, 2: C4
};

RawForm raw_form(int p, int q) {
  if (p == 0 && q == 0) return {0, 0, 0};
  if (p == 1 && q == 0) return {0, 0, 1};
  if (p == 0 && q == 1) return {0, 0, 2};
  if (p >= 1 && q >= 1) {
    RawForm r = raw_form(p - 1, q - 1);
    ++r.d;
    return r;
  }
  if (p >= 2) {
    RawForm r = raw_form(q, p - 2);
    ++r.d;
    return r;
  }
  RawForm r = raw_form(q - 2, p);
  ++r.qf;
  return r;
}

}  // namespace

NormalForm normal_form(int p, int q) {
  require(p >= 0 && q >= 0, "normal_form: p and q must be nonnegative");
  RawForm r = raw_form(p, q);
  // Q x_Z Q ≅ D x_Z D, and Q x_Z C4 ≅ D x_Z C4: at most one Q survives, and
  // never next to a C4.
  r.d += 2 * (r.qf / 2);
  r.qf %= 2;
  if (r.qf == 1 && r.base == 2) {
    r.qf = 0;
    r.d += 1;
  }
  NormalForm nf;
  nf.dihedral_count = r.d;
  if (r.qf == 1) {
    nf.tail = (r.base == 1) ? TailKind::quaternion_vier : TailKind::quaternion;
  } else if (r.base == 1) {
    nf.tail = TailKind::vier;
  } else if (r.base == 2) {
    nf.tail = TailKind::c4;
  } else {
    nf.tail = (r.d == 0) ? TailKind::c2 : TailKind::none;
  }
  return nf;
}

NormalForm normal_form(const Signature& s) { return normal_form(s.p_count(), s.q_count()); }

GradedGroup base_atom_c2() {
  GradedGroup g = as_graded_group(Signature::pq(0, 0));
  g.set_label("C_2");
  return g;
}

GradedGroup base_atom_vier() {
  GradedGroup g = as_graded_group(Signature::pq(1, 0));
  g.set_label("V");
  return g;
}

GradedGroup base_atom_c4() {
  GradedGroup g = as_graded_group(Signature::pq(0, 1));
  g.set_label("C_4");
  return g;
}

GradedGroup base_atom_dihedral() {
  GradedGroup g = as_graded_group(Signature::pq(2, 0));
  g.set_label("D");
  return g;
}

GradedGroup base_atom_quaternion() {
  GradedGroup g = as_graded_group(Signature::pq(0, 2));
  g.set_label("Q");
  return g;
}

GradedGroup realize_normal_form(const NormalForm& nf) {
  require(nf.dihedral_count >= 0, "realize_normal_form: negative dihedral count");
  require(nf.rank() <= 11, "realize_normal_form: rank capped at 11");
  std::vector<GradedGroup> parts;
  for (int i = 0; i < nf.dihedral_count; ++i) parts.push_back(base_atom_dihedral());
  switch (nf.tail) {
    case TailKind::none:
    case TailKind::c2:  // the empty central product is already {1, Z}
      break;
    case TailKind::vier:
      parts.push_back(base_atom_vier());
      break;
    case TailKind::c4:
      parts.push_back(base_atom_c4());
      break;
    case TailKind::quaternion:
      parts.push_back(base_atom_quaternion());
      break;
    case TailKind::quaternion_vier:
      parts.push_back(base_atom_quaternion());
      parts.push_back(base_atom_vier());
      break;
  }
  if (parts.empty()) {
    GradedGroup g = base_atom_c2();
    g.set_label(nf.label());
    return g;
  }
  GradedGroup acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = ungraded_product(acc, parts[i]);
  acc.set_label(nf.label());
  return acc;
}

// ---- isomorphism oracle ---------------------------------------------------------

namespace {

struct ElementInvariants {
  std::vector<int> order;
  std::vector<int> centralizer;  // centralizer size doubles as a centrality test
};

ElementInvariants invariants_of(const GradedGroup& g) {
  const int n = g.order();
  ElementInvariants inv;
  inv.order.resize(n);
  inv.centralizer.resize(n);
  for (int x = 0; x < n; ++x) {
    inv.order[x] = g.element_order(x);
    int c = 0;
    for (int y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++c;
    inv.centralizer[x] = c;
  }
  return inv;
}

std::vector<char> subgroup_closure(const GradedGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(g.identity());
  for (int s : gens) add(s);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mul(members[i], members[j]));
      add(g.mul(members[j], members[i]));
    }
  return in;
}

// Drops declared generators already generated by their predecessors, so the
// backtracking search branches as few times as possible.
std::vector<int> reduced_generators(const GradedGroup& g) {
  std::vector<int> gens;
  std::vector<char> covered = subgroup_closure(g, {});
  for (int cand : g.generators()) {
    if (covered[cand]) continue;
    gens.push_back(cand);
    covered = subgroup_closure(g, gens);
  }
  int total = 0;
  for (char c : covered) total += c;
  require(total == g.order(), "iso oracle: declared generators do not generate the group");
  return gens;
}

struct IsoSearch {
  const GradedGroup& a;
  const GradedGroup& b;
  ElementInvariants inv_a;
  ElementInvariants inv_b;
  std::vector<int> gens;                     // reduced generating sequence of a
  std::vector<std::vector<int>> candidates;  // possible images per generator
  std::vector<int> map;                      // a -> b, -1 unknown
  std::vector<int> used;                     // b -> a, -1 free
  std::vector<int> mapped;                   // assignment stack
  bool count_all = false;
  long long completions = 0;
  std::vector<int> witness;

  IsoSearch(const GradedGroup& ga, const GradedGroup& gb) : a(ga), b(gb) {
    inv_a = invariants_of(a);
    inv_b = invariants_of(b);
    gens = reduced_generators(a);
    map.assign(a.order(), -1);
    used.assign(b.order(), -1);
    map[a.identity()] = b.identity();
    used[b.identity()] = a.identity();
    mapped.push_back(a.identity());
    for (int g : gens) {
      std::vector<int> cs;
      for (int y = 0; y < b.order(); ++y)
        if (inv_a.order[g] == inv_b.order[y] && inv_a.centralizer[g] == inv_b.centralizer[y])
          cs.push_back(y);
      candidates.push_back(std::move(cs));
    }
  }

  void rollback(std::size_t to) {
    while (mapped.size() > to) {
      const int x = mapped.back();
      mapped.pop_back();
      used[map[x]] = -1;
      map[x] = -1;
    }
  }

  // Extends the partial morphism with g -> c and closes it under products
  // with everything already mapped. Every derived pair is cross-checked, so a
  // completed assignment is a verified isomorphism by construction.
  bool assign_and_close(int g, int c) {
    if (map[g] != -1) return map[g] == c;
    if (used[c] != -1) return false;
    const std::size_t start = mapped.size();
    map[g] = c;
    used[c] = g;
    mapped.push_back(g);
    for (std::size_t i = start; i < mapped.size(); ++i) {
      const int x = mapped[i];
      for (std::size_t j = 0; j <= i; ++j) {
        const int y = mapped[j];
        const std::array<std::array<int, 2>, 2> derived = {{
            {a.mul(x, y), b.mul(map[x], map[y])},
            {a.mul(y, x), b.mul(map[y], map[x])},
        }};
        for (const auto& d : derived) {
          const int p = d[0];
          const int q = d[1];
          if (map[p] == -1) {
            if (used[q] != -1) {
              rollback(start);
              return false;
            }
            map[p] = q;
            used[q] = p;
            mapped.push_back(p);
          } else if (map[p] != q) {
            rollback(start);
            return false;
          }
        }
      }
    }
    return true;
  }

  void search(std::size_t k) {
    if (!count_all && !witness.empty()) return;
    if (k == gens.size()) {
      if (static_cast<int>(mapped.size()) == a.order()) {
        ++completions;
        if (witness.empty()) witness = map;
      }
      return;
    }
    const std::size_t before = mapped.size();
    for (int c : candidates[k]) {
      if (assign_and_close(gens[k], c)) {
        search(k + 1);
        rollback(before);
      }
    }
  }
};

bool same_invariant_multisets(const ElementInvariants& x, const ElementInvariants& y) {
  std::vector<std::array<int, 2>> mx, my;
  for (std::size_t i = 0; i < x.order.size(); ++i) mx.push_back({x.order[i], x.centralizer[i]});
  for (std::size_t i = 0; i < y.order.size(); ++i) my.push_back({y.order[i], y.centralizer[i]});
  std::sort(mx.begin(), mx.end());
  std::sort(my.begin(), my.end());
  return mx == my;
}

}  // namespace

IsoResult iso_oracle(const GradedGroup& a, const GradedGroup& b) {
  if (a.order() > kIsoOracleCap || b.order() > kIsoOracleCap)
    throw size_cap_error("iso oracle: order exceeds the cap of " + std::to_string(kIsoOracleCap));
  IsoResult out;
  if (a.order() != b.order()) return out;
  IsoSearch s(a, b);
  if (!same_invariant_multisets(s.inv_a, s.inv_b)) return out;
  for (const auto& cs : s.candidates)
    if (cs.empty()) return out;
  s.search(0);
  if (s.witness.empty()) return out;
  // Independent re-verification of the witness.
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (s.witness[a.mul(x, y)] != b.mul(s.witness[x], s.witness[y]))
        throw std::logic_error("iso oracle: produced witness failed verification");
  out.isomorphic = true;
  out.witness = std::move(s.witness);
  return out;
}

long long full_automorphism_count(const GradedGroup& g) {
  if (g.order() > 16)
    throw size_cap_error("automorphism count: order exceeds the cap of 16");
  IsoSearch s(g, g);
  s.count_all = true;
  s.search(0);
  return s.completions;
}

// ---- fingerprints ----------------------------------------------------------------

GroupFingerprint fingerprint_of_group(const GradedGroup& g) {
  const int n = g.order();
  if (n > kValidationCap)
    throw size_cap_error("fingerprint: order exceeds the validation cap");
  GroupFingerprint fp;
  fp.order = n;
  for (int x = 0; x < n; ++x) ++fp.element_orders[g.element_order(x)];

  const std::vector<int>& gens = g.generators();
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int s : gens)
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) ++fp.center_size;
  }

  // Derived subgroup: the normal closure of the generator-pair commutators.
  std::vector<char> in(n, 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(g.identity());
  for (int s : gens)
    for (int t : gens)
      add(g.mul(g.mul(g.inverse(s), g.inverse(t)), g.mul(s, t)));
  for (std::size_t i = 0; i < members.size(); ++i) {
    const int x = members[i];
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mul(x, members[j]));
      add(g.mul(members[j], x));
    }
    for (int s : gens) add(g.mul(g.mul(g.inverse(s), x), s));
  }

  const long long derived = static_cast<long long>(members.size());
  fp.abelianization_order = n / derived;
  std::set<int> reps;
  for (int x = 0; x < n; ++x) {
    int m = INT_MAX;
    for (int h : members) m = std::min(m, g.mul(x, h));
    reps.insert(m);
  }
  for (int r : reps) {
    int k = 1;
    int acc = r;
    while (!in[acc]) {
      acc = g.mul(acc, r);
      ++k;
    }
    ++fp.abelianization_orders[k];
  }
  return fp;
}

GroupFingerprint fingerprint_of_signature(const Signature& s) {
  const int n = s.n();
  if (n > kEnumerationCap)
    throw size_cap_error("fingerprint: rank exceeds the enumeration cap");
  GroupFingerprint fp;
  fp.order = 1LL << (n + 1);
  fp.element_orders[1] = 1;
  long long involution_subsets = 0;
  for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask)
    if (vee_order(s, VeeElement{0, mask}) == 2) ++involution_subsets;
  fp.element_orders[2] = 1 + 2 * involution_subsets;
  const long long quartic = 2 * ((1LL << n) - 1 - involution_subsets);
  if (quartic > 0) fp.element_orders[4] = quartic;
  fp.center_size = (n % 2 == 0) ? 2 : 4;
  if (n >= 2) {
    // [G, G] = {1, Z}; the quotient is the elementary abelian subset group.
    fp.abelianization_order = 1LL << n;
    fp.abelianization_orders[1] = 1;
    fp.abelianization_orders[2] = (1LL << n) - 1;
  } else {
    // Abelian already: the abelianization is the group itself.
    fp.abelianization_order = fp.order;
    fp.abelianization_orders = fp.element_orders;
  }
  return fp;
}

// ---- structure statements ---------------------------------------------------------

namespace {

std::string signature_text(const std::vector<bool>& is_z) {
  std::string out;
  for (std::size_t i = 0; i < is_z.size(); ++i) {
    if (i) out += ',';
    out += is_z[i] ? "Z" : "1";
  }
  return out;
}

}  // namespace

Rank2Split split_off_rank2(const Signature& s) {
  require(s.n() >= 2, "split_off_rank2: needs rank at least 2");
  Rank2Split out;
  out.rank2 = Signature::parse(signature_text({s.t_is_z(1), s.t_is_z(2)}));
  if (s.n() == 2) {
    out.rest = Signature::pq(0, 0);
    return out;
  }
  // e'_k = e_1 e_2 e_{k+2} squares to Z t_1 t_2 t_{k+2} and the e'_k pairwise
  // anticommute, so the complement is again a Vee group.
  std::vector<bool> rest;
  for (int k = 3; k <= s.n(); ++k)
    rest.push_back(!(s.t_is_z(1) ^ s.t_is_z(2) ^ s.t_is_z(k)));
  out.rest = Signature::parse(signature_text(rest));
  return out;
}

IsoResult signature_reorder_witness(const Signature& s, const std::vector<int>& sigma1) {
  require(s.n() <= 8, "signature reorder witness: rank capped at 8 by the oracle");
  const Signature t = s.permuted(sigma1);
  return iso_oracle(as_graded_group(s), as_graded_group(t));
}

// ---- the periodic table -------------------------------------------------------------

std::string algebra_label(const NormalForm& nf) {
  const long long size = 1LL << nf.dihedral_count;
  std::string field = "R";
  bool doubled = false;
  switch (nf.tail) {
    case TailKind::none:
    case TailKind::c2:
      break;
    case TailKind::vier:
      doubled = true;
      break;
    case TailKind::c4:
      field = "C";
      break;
    case TailKind::quaternion:
      field = "H";
      break;
    case TailKind::quaternion_vier:
      field = "H";
      doubled = true;
      break;
  }
  std::string core =
      size == 1 ? field : "M_" + std::to_string(size) + "(" + field + ")";
  return doubled ? "2 " + core : core;
}

std::vector<PeriodicEntry> periodic_table(int max_n) {
  require(max_n >= 0 && max_n <= kMaxGenerators, "periodic_table: max rank out of range");
  std::vector<PeriodicEntry> out;
  for (int n = 0; n <= max_n; ++n)
    for (int p = n; p >= 0; --p) {
      PeriodicEntry e;
      e.p = p;
      e.q = n - p;
      e.form = normal_form(e.p, e.q);
      e.algebra = algebra_label(e.form);
      out.push_back(e);
    }
  return out;
}

}  // namespace veegroups
