#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"
#include "support/q2_table.hpp"
#include "veegroups/common.hpp"
#include "veegroups/vee.hpp"

using namespace veegroups;
using namespace veegroups::testing;

namespace {

const std::vector<Signature>& sample_signatures() {
  static const std::vector<Signature> sigs{
      Signature::pq(0, 0), Signature::pq(1, 0), Signature::pq(0, 1), Signature::pq(2, 0),
      Signature::pq(0, 2), Signature::pq(1, 1), Signature::pq(3, 0), Signature::pq(0, 3),
      Signature::pq(2, 1), Signature::parse("Z,1,Z"), Signature::pq(2, 2),
      Signature::parse("1,Z,Z,1")};
  return sigs;
}

int brute_inversions(uint64_t a, uint64_t b) {
  int count = 0;
  for (int x = 1; x <= 64; ++x)
    for (int y = 1; y <= 64; ++y)
      if (((a >> (x - 1)) & 1) && ((b >> (y - 1)) & 1) && x > y) ++count;
  return count;
}

}  // namespace

TEST_CASE("signature parsing, printing, counting") {
  Signature s = Signature::parse(" 1 , Z , Z ");
  CHECK(s.n() == 3);
  CHECK(s.str() == "1,Z,Z");
  CHECK(s.p_count() == 1);
  CHECK(s.q_count() == 2);
  CHECK_FALSE(s.t_is_z(1));
  CHECK(s.t_is_z(2));
  CHECK(s == Signature::pq(1, 2));

  CHECK(Signature::parse("").n() == 0);
  CHECK(Signature::pq(2, 1).str() == "1,1,Z");
  CHECK_THROWS_AS(Signature::parse("1,x"), std::invalid_argument);
  CHECK_THROWS_AS(Signature::pq(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Signature(65, 0), std::invalid_argument);
  CHECK_THROWS_AS(Signature(2, 0b100), std::invalid_argument);
  CHECK_THROWS_AS(s.t_is_z(4), std::invalid_argument);

  Signature perm = s.permuted({3, 1, 2});  // t'_i = t_{sigma(i)}
  CHECK(perm.str() == "Z,1,Z");
  CHECK_THROWS_AS(s.permuted({1, 1, 2}), std::invalid_argument);
}

TEST_CASE("inversion count and cocycle match the quadratic scan") {
  for (uint64_t a : all_masks(6)) {
    for (uint64_t b : all_masks(6)) {
      CHECK(inversion_count(a, b) == brute_inversions(a, b));
      CHECK(gamma_cocycle(a, b) == (brute_inversions(a, b) & 1));
    }
  }
  // top-bit edge
  uint64_t top = uint64_t{1} << 63;
  CHECK(inversion_count(top, 1) == 1);
  CHECK(inversion_count(1, top) == 0);
  CHECK(inversion_count(top, top) == 0);
}

TEST_CASE("multiplication agrees with word rewriting") {
  for (const Signature& s : sample_signatures()) {
    if (s.n() > 4) continue;
    int total = 2 << s.n();
    for (int i = 0; i < total; ++i) {
      for (int j = 0; j < total; ++j) {
        VeeElement a = element_at(s, i), b = element_at(s, j);
        CAPTURE(s.str());
        CHECK(vee_mul(s, a, b) == word_multiply(s, a, b));
      }
    }
  }
}

TEST_CASE("group axioms hold") {
  for (const Signature& s : sample_signatures()) {
    if (s.n() > 3) continue;
    int total = 2 << s.n();
    for (int i = 0; i < total; ++i) {
      VeeElement a = element_at(s, i);
      CHECK(vee_mul(s, vee_one(), a) == a);
      CHECK(vee_mul(s, a, vee_one()) == a);
      CHECK(vee_mul(s, a, vee_inverse(s, a)) == vee_one());
      CHECK(vee_mul(s, vee_inverse(s, a), a) == vee_one());
      for (int j = 0; j < total; ++j) {
        for (int k = 0; k < total; ++k) {
          VeeElement b = element_at(s, j), c = element_at(s, k);
          CHECK(vee_mul(s, vee_mul(s, a, b), c) == vee_mul(s, a, vee_mul(s, b, c)));
        }
      }
    }
  }
}

TEST_CASE("the rank-2 reference table matches for all four signatures") {
  const auto& basis = q2_basis();
  const auto& table = q2_reference_table();
  for (const char* text : {"1,1", "1,Z", "Z,1", "Z,Z"}) {
    Signature s = Signature::parse(text);
    CAPTURE(text);
    for (int r = 0; r < 8; ++r) {
      for (int c = 0; c < 8; ++c) {
        CHECK(vee_mul(s, basis[r], basis[c]) == resolve(s, table[r][c]));
      }
    }
  }
}

TEST_CASE("conjugation follows the subset closed form") {
  // e_A e_B e_A^{-1} = Z^{|A||B| - |A n B|} e_B
  for (const Signature& s : sample_signatures()) {
    if (s.n() > 4) continue;
    for (uint64_t a : all_masks(s.n())) {
      for (uint64_t b : all_masks(s.n())) {
        int exponent =
            (std::popcount(a) * std::popcount(b) - std::popcount(a & b)) & 1;
        VeeElement expected{static_cast<uint8_t>(exponent), b};
        CHECK(vee_conjugate(s, {0, a}, {0, b}) == expected);
      }
    }
  }
}

TEST_CASE("element orders") {
  for (const Signature& s : sample_signatures()) {
    if (s.n() > 4) continue;
    GradedGroup g = as_graded_group(s);
    for (int i = 0; i < 2 << s.n(); ++i) {
      VeeElement a = element_at(s, i);
      CHECK(vee_order(s, a) == g.element_order(element_index(s, a)));
    }
  }
  CHECK(vee_order(Signature::pq(0, 1), {0, 1}) == 4);  // e1^2 = Z
  CHECK(vee_order(Signature::pq(1, 0), {0, 1}) == 2);  // e1^2 = 1
  CHECK(vee_order(Signature::pq(2, 0), {0, 3}) == 4);  // e12^2 = Z
}

TEST_CASE("pseudoscalar square follows n(n-1)/2 + q") {
  for (const Signature& s : sample_signatures()) {
    int expected = ((s.n() * (s.n() - 1) / 2) + s.q_count()) & 1;
    VeeElement sq = pseudoscalar_square(s);
    CHECK(sq.mask == 0);
    CHECK(static_cast<int>(sq.z) == expected);
  }
}

TEST_CASE("center: elements, size, and isomorphism type") {
  for (const Signature& s : sample_signatures()) {
    if (s.n() > 5 || s.n() == 0) continue;
    CenterInfo info = center(s);
    GradedGroup g = as_graded_group(s);
    std::set<int> brute;
    for (int idx : brute_center(g)) brute.insert(idx);
    std::set<int> mine;
    for (VeeElement e : info.elements) mine.insert(element_index(s, e));
    CHECK(mine == brute);
    if (s.n() % 2 == 0) {
      CHECK(info.elements.size() == 2);
      CHECK(info.type == CenterType::c2);
    } else {
      CHECK(info.elements.size() == 4);
      // type matches the brute order profile of the central subgroup
      bool has_order4 = false;
      for (int idx : brute)
        if (g.element_order(idx) == 4) has_order4 = true;
      CHECK(info.type == (has_order4 ? CenterType::c4 : CenterType::vier));
    }
  }
  // spot values
  CHECK(center(Signature::pq(3, 0)).type == CenterType::c4);
  CHECK(center(Signature::pq(5, 0)).type == CenterType::vier);
  CHECK(center(Signature::pq(0, 1)).type == CenterType::c4);
  CHECK(center(Signature::pq(0, 3)).type == CenterType::vier);
  CHECK(center(Signature::pq(1, 0)).type == CenterType::vier);
  CHECK(center(Signature::pq(2, 1)).type == CenterType::vier);
  CHECK(center(Signature::pq(4, 0)).type == CenterType::c2);
}

TEST_CASE("conjugacy classes match brute orbits") {
  for (const Signature& s : sample_signatures()) {
    if (s.n() > 4) continue;
    int total = 2 << s.n();
    // brute orbits
    std::set<std::set<int>> brute;
    for (int i = 0; i < total; ++i) {
      std::set<int> orbit;
      for (int j = 0; j < total; ++j) {
        orbit.insert(element_index(
            s, vee_conjugate(s, element_at(s, j), element_at(s, i))));
      }
      brute.insert(orbit);
    }
    std::set<std::set<int>> mine;
    for (const auto& cls : conjugacy_classes(s)) {
      std::set<int> ids;
      for (VeeElement e : cls) ids.insert(element_index(s, e));
      mine.insert(ids);
    }
    CHECK(mine == brute);
    CHECK(static_cast<long long>(mine.size()) == conjugacy_class_count(s));
    CHECK(conjugacy_class_count(s) == (1LL << s.n()) + 1 + (s.n() % 2));
  }
}

TEST_CASE("commutators land in {1, Z}") {
  for (const Signature& s : sample_signatures()) {
    CommutatorInfo info = commutator_subgroup(s);
    CHECK(info.within_z);
    if (s.n() >= 2) {
      CHECK(info.subgroup.size() == 2);
    } else {
      CHECK(info.subgroup.size() == 1);  // abelian when n <= 1
    }
  }
}

TEST_CASE("hyperoctahedral maps are automorphisms matching word relabelling") {
  struct Case {
    Signature s;
    std::vector<int> sigma;
  };
  std::vector<Case> cases{{Signature::pq(3, 0), {2, 3, 1}},
                          {Signature::pq(3, 0), {3, 2, 1}},
                          {Signature::pq(0, 3), {2, 1, 3}},
                          {Signature::pq(4, 0), {2, 4, 1, 3}},
                          {Signature::pq(0, 4), {4, 3, 2, 1}},
                          {Signature::pq(2, 2), {2, 1, 3, 4}},
                          {Signature::pq(2, 2), {2, 1, 4, 3}}};
  for (const auto& [s, sigma] : cases) {
    CAPTURE(s.str());
    int total = 2 << s.n();
    for (int i = 0; i < total; ++i) {
      VeeElement x = element_at(s, i);
      CHECK(hyperoctahedral_automorphism(s, sigma, x) == word_sigma_image(s, sigma, x));
      for (int j = 0; j < total; ++j) {
        VeeElement y = element_at(s, j);
        CHECK(hyperoctahedral_automorphism(s, sigma, vee_mul(s, x, y)) ==
              vee_mul(s, hyperoctahedral_automorphism(s, sigma, x),
                      hyperoctahedral_automorphism(s, sigma, y)));
      }
    }
  }
  // inversions-on-subset agrees with its definition
  std::vector<int> sigma{2, 4, 1, 3};
  for (uint64_t a : all_masks(4)) {
    int brute = 0;
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        if (((a >> (i - 1)) & 1) && ((a >> (j - 1)) & 1) && sigma[i - 1] > sigma[j - 1]) ++brute;
    CHECK(permutation_inversions_on_subset(sigma, a) == brute);
  }
}

TEST_CASE("signature-breaking permutations are rejected") {
  Signature s = Signature::pq(1, 1);
  CHECK_THROWS_AS(hyperoctahedral_automorphism(s, {2, 1}, vee_one()), std::invalid_argument);
  CHECK_NOTHROW(hyperoctahedral_automorphism(s, {1, 2}, vee_one()));
  CHECK_THROWS_AS(hyperoctahedral_automorphism(Signature::pq(2, 0), {1, 1}, vee_one()),
                  std::invalid_argument);
  CHECK_THROWS_AS(hyperoctahedral_automorphism(Signature::pq(2, 0), {1}, vee_one()),
                  std::invalid_argument);
}

TEST_CASE("hyperoctahedral group orders are n! 2^n") {
  long long expected[] = {1, 2, 8, 48, 384};
  for (int n = 1; n <= 4; ++n) {
    CHECK(hyperoctahedral_group_order(Signature::pq(n, 0)) == expected[n]);
  }
  CHECK(hyperoctahedral_group_order(Signature::pq(0, 3)) == 48);
  CHECK_THROWS_AS(hyperoctahedral_group_order(Signature::pq(1, 1)), std::invalid_argument);
}

TEST_CASE("the grading automorphism is inner exactly in even rank") {
  for (int n = 1; n <= 5; ++n) {
    for (Signature s : {Signature::pq(n, 0), Signature::pq(0, n)}) {
      auto witness = inner_witness_for_alpha(s);
      CHECK(witness.has_value() == (n % 2 == 0));
      if (witness) {
        auto alpha = automorphism_perm_alpha(s);
        CHECK(automorphism_perm_inner(s, *witness) == alpha);
      }
    }
  }
}

TEST_CASE("even part generators satisfy the shifted relations") {
  for (const Signature& s : sample_signatures()) {
    if (s.n() < 2) continue;
    Signature even = even_part(s);
    CHECK(even.n() == s.n() - 1);
    // b_k = e_1 e_{k+1} must square to Z t_1 t_{k+1} and anticommute
    for (int k = 1; k <= even.n(); ++k) {
      VeeElement b_k = vee_mul(s, {0, 1}, {0, uint64_t{1} << k});
      VeeElement sq = vee_mul(s, b_k, b_k);
      CHECK(sq.mask == 0);
      int expected = (1 ^ (s.t_is_z(1) ? 1 : 0) ^ (s.t_is_z(k + 1) ? 1 : 0)) & 1;
      CHECK(static_cast<int>(sq.z) == expected);
      CHECK(static_cast<int>(sq.z) == (even.t_is_z(k) ? 1 : 0));
      for (int l = 1; l < k; ++l) {
        VeeElement b_l = vee_mul(s, {0, 1}, {0, uint64_t{1} << l});
        VeeElement lhs = vee_mul(s, b_k, b_l);
        VeeElement rhs = vee_mul(s, vee_z(), vee_mul(s, b_l, b_k));
        CHECK(lhs == rhs);
      }
    }
  }
  // Q_{1+p, q} has even part Q_{q, p} as a multiset of signs
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= 4 - p; ++q) {
      Signature even = even_part(Signature::pq(1 + p, q));
      CHECK(even.p_count() == q);
      CHECK(even.q_count() == p);
    }
  }
  CHECK_THROWS_AS(even_part(Signature::pq(0, 0)), std::invalid_argument);
}

TEST_CASE("graded group materialization is faithful") {
  for (const Signature& s : sample_signatures()) {
    if (s.n() > 4) continue;
    GradedGroup g = as_graded_group(s);
    audit_group(g);
    CHECK(g.order() == 2 << s.n());
    CHECK(g.z(1) == element_index(s, vee_z()));
    int total = 2 << s.n();
    for (int i = 0; i < total; ++i) {
      VeeElement a = element_at(s, i);
      CHECK(g.degree(i) == (std::popcount(a.mask) & 1));
      for (int j = 0; j < total; ++j) {
        CHECK(g.mul(i, j) == element_index(s, vee_mul(s, a, element_at(s, j))));
      }
      // grading automorphism == alpha
      VeeElement im = a;
      im.z = static_cast<uint8_t>((im.z + std::popcount(im.mask)) & 1);
      CHECK(g.grading_automorphism(i) == element_index(s, im));
    }
  }
}

TEST_CASE("the even subgroup of the carrier has index two") {
  Signature s = Signature::pq(2, 1);
  GradedGroup g = as_graded_group(s);
  GradedGroup even = even_part_subgroup(g);
  CHECK(even.order() == 1 << s.n());
  audit_group(even);
}

TEST_CASE("subset parity group is the quotient by {1, Z}") {
  for (int n : {0, 1, 3, 5}) {
    GradedGroup p = subset_parity_group(n);
    audit_group(p);
    CHECK(p.order() == 1 << n);
    CHECK(p.is_abelian());
    for (int e = 0; e < p.order(); ++e) {
      CHECK(p.mul(e, e) == p.identity());
      CHECK(p.degree(e) == (std::popcount(static_cast<unsigned>(e)) & 1));
    }
    if (n <= 4) {
      QuotientZ q = quotient_by_z(as_graded_group(Signature::pq(n, 0)));
      CHECK(q.quotient.order() == p.order());
    }
  }
}

TEST_CASE("rendering") {
  CHECK(render_element(vee_one(), 3) == "1");
  CHECK(render_element(vee_z(), 3) == "Z");
  CHECK(render_element({0, 0b011}, 3) == "e_{12}");
  CHECK(render_element({1, 0b101}, 3) == "Z e_{13}");
  CHECK(render_element({1, 0b1}, 1) == "Z e_{1}");
  // wide groups separate indices with commas
  CHECK(render_element({0, (1 << 9) | 1}, 10) == "e_{1,10}");
}

TEST_CASE("element json round trip") {
  VeeElement a{1, 0b101};
  std::string j = element_to_json(a);
  CHECK(j == "{\"z\":1,\"A\":[1,3]}");
  CHECK(element_from_json(j) == a);
  CHECK(element_from_json("{\"z\":0,\"A\":[]}") == vee_one());
  CHECK_THROWS_AS(element_from_json("{\"z\":2,\"A\":[]}"), std::invalid_argument);
  CHECK_THROWS_AS(element_from_json("{\"z\":0,\"A\":[1,1]}"), std::invalid_argument);
  CHECK_THROWS_AS(element_from_json("{\"z\":0,\"A\":[0]}"), std::invalid_argument);
  CHECK_THROWS(element_from_json("{\"z\":0}"));
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(Signature(kMaxGenerators + 1, 0), std::invalid_argument);
  CHECK_NOTHROW(Signature(kMaxGenerators, 0));
  CHECK_THROWS_AS(conjugacy_classes(Signature(kEnumerationCap + 1, 0)), size_cap_error);
  CHECK_THROWS_AS(as_graded_group(Signature(11, 0)), size_cap_error);
  CHECK_THROWS_AS(subset_parity_group(12), size_cap_error);
  // structural operations still work at full width
  Signature wide(64, ~uint64_t{0});
  CHECK(wide.q_count() == 64);
  VeeElement top{0, uint64_t{1} << 63};
  CHECK(vee_mul(wide, top, top) == VeeElement{1, 0});  // t_64 = Z
  CHECK(vee_order(wide, top) == 4);
  CHECK(center(wide).type == CenterType::c2);
}

TEST_CASE("element index round trip and validation") {
  Signature s = Signature::pq(1, 1);
  for (int i = 0; i < 8; ++i) CHECK(element_index(s, element_at(s, i)) == i);
  CHECK_THROWS_AS(element_at(s, 8), std::invalid_argument);
  CHECK_THROWS_AS(element_index(s, VeeElement{0, 0b100}), std::invalid_argument);
  CHECK_THROWS_AS(vee_mul(s, {2, 0}, {0, 0}), std::invalid_argument);
}
