#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "support/oracles.hpp"
#include "veegroups/braiding.hpp"
#include "veegroups/gamma.hpp"
#include "veegroups/graded.hpp"

using namespace veegroups;
using namespace veegroups::testing;

namespace {

// C4 = Z/4 graded over Z/2 by parity, with Z(1) = 2.
GradedGroup cyclic4() {
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a][b] = (a + b) % 4;
  return make_graded_group(make_z_mod(2), mul, {0, 1, 0, 1}, {0, 2}, "C4", {1});
}

// C2 x C2 with grading by the second bit and Z(1) = the first generator.
GradedGroup klein() {
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a][b] = a ^ b;
  return make_graded_group(make_z_mod(2), mul, {0, 0, 1, 1}, {0, 1}, "V", {1, 2});
}

std::vector<int> order_profile(const GradedGroup& g) {
  std::vector<int> orders;
  for (int e = 0; e < g.order(); ++e) orders.push_back(g.element_order(e));
  std::sort(orders.begin(), orders.end());
  return orders;
}

// The defining binary law [g1,g2][h1,h2] = Z^{d(g2) d(h1)} [g1 h1, g2 h2],
// evaluated straight from the factor tables.
int binary_law(const GradedGroup& p, int x, int y) {
  REQUIRE(p.factors().size() == 2);
  const auto& t = p.tuple(x);
  const auto& u = p.tuple(y);
  const auto& f0 = *p.factors()[0];
  const auto& f1 = *p.factors()[1];
  int w = p.gamma()->mul(f1.degree[t[1]], f0.degree[u[0]]);
  std::vector<int> v{f0.times(t[0], u[0]), f1.times(t[1], u[1])};
  v[0] = f0.action(w, v[0]);
  return p.element_of(v);
}

void check_cocycle_reconstructs(const GradedGroup& g) {
  CocycleTable ct = central_extension_cocycle(g);
  const int h = static_cast<int>(ct.section.size());
  for (int a = 0; a < h; ++a) {
    for (int b = 0; b < h; ++b) {
      int prod = g.mul(ct.section[a], ct.section[b]);
      int expected = g.action(ct.tau[a][b], ct.section[ct.coset_of[prod]]);
      CHECK(prod == expected);
    }
  }
}

}  // namespace

TEST_CASE("square extensions over Z/2 are C4 and the Klein group") {
  GradedGroup twisted = gamma_square_extension(make_z_mod(2), true);
  GradedGroup split = gamma_square_extension(make_z_mod(2), false);

  CHECK(twisted.order() == 4);
  CHECK(split.order() == 4);
  CHECK(order_profile(twisted) == std::vector<int>{1, 2, 4, 4});
  CHECK(order_profile(split) == std::vector<int>{1, 2, 2, 2});
  CHECK(twisted.is_abelian());
  CHECK(split.is_abelian());
  audit_group(twisted);
  audit_group(split);

  // Z(1) is a degree-zero central involution in both.
  for (const GradedGroup* g : {&twisted, &split}) {
    CHECK(g->z(0) == g->identity());
    CHECK(g->degree(g->z(1)) == 0);
    CHECK(g->element_order(g->z(1)) == 2);
  }
}

TEST_CASE("square extension over Z/3 is elementary abelian") {
  GradedGroup g = gamma_square_extension(make_z_mod(3), true);
  CHECK(g.order() == 9);
  CHECK(g.is_abelian());
  audit_group(g);
  for (int e = 0; e < g.order(); ++e) {
    if (e != g.identity()) CHECK(g.element_order(e) == 3);
  }
  // degrees hit each Γ value |Γ| times
  std::map<int, int> degree_count;
  for (int e = 0; e < g.order(); ++e) ++degree_count[g.degree(e)];
  for (int x = 0; x < 3; ++x) CHECK(degree_count[x] == 3);
}

TEST_CASE("atom validation rejects inconsistent data") {
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a][b] = (a + b) % 4;

  SUBCASE("degree must be a morphism") {
    CHECK_THROWS_AS(make_graded_group(make_z_mod(2), mul, {0, 1, 1, 0}, {0, 2}),
                    std::invalid_argument);
  }
  SUBCASE("Z must land in degree zero") {
    CHECK_THROWS_AS(make_graded_group(make_z_mod(2), mul, {0, 1, 0, 1}, {0, 1}),
                    std::invalid_argument);
  }
  SUBCASE("Z must be a morphism") {
    CHECK_THROWS_AS(make_graded_group(make_z_mod(2), mul, {0, 1, 0, 1}, {1, 0}),
                    std::invalid_argument);
  }
  SUBCASE("multiplication must be a group law") {
    auto bad = mul;
    bad[1][2] = 1;  // breaks cancellation
    CHECK_THROWS_AS(make_graded_group(make_z_mod(2), bad, {0, 1, 0, 1}, {0, 2}),
                    std::invalid_argument);
  }
  SUBCASE("generators must generate") {
    // {2} only reaches {0, 2}.
    CHECK_THROWS_AS(make_graded_group(make_z_mod(2), mul, {0, 1, 0, 1}, {0, 2}, "C4", {2}),
                    std::invalid_argument);
  }
}

TEST_CASE("graded product multiplies by the defining twisted law") {
  GradedGroup a = cyclic4(), b = klein();
  GradedGroup p = graded_product_group(a, b);
  CHECK(p.order() == a.order() * b.order() / 2);
  audit_group(p);
  for (int x = 0; x < p.order(); ++x) {
    for (int y = 0; y < p.order(); ++y) {
      CHECK(p.mul(x, y) == binary_law(p, x, y));
    }
  }
  // identity and Z come from the factors
  CHECK(p.z(0) == p.identity());
  CHECK(p.degree(p.z(1)) == 0);
  CHECK(p.element_of({a.z(1), b.identity()}) == p.z(1));
  CHECK(p.element_of({a.identity(), b.z(1)}) == p.z(1));
}

TEST_CASE("the two central products differ exactly by the twist") {
  GradedGroup a = cyclic4();
  GradedGroup braided = graded_product_group(a, a);
  GradedGroup plain = ungraded_product(a, a);
  CHECK(braided.order() == 8);
  CHECK(plain.order() == 8);
  audit_group(braided);
  audit_group(plain);
  CHECK(plain.is_abelian());        // no twist: product of abelians
  CHECK_FALSE(braided.is_abelian());  // odd-degree elements anticommute
  // plain law is componentwise
  for (int x = 0; x < plain.order(); ++x) {
    for (int y = 0; y < plain.order(); ++y) {
      const auto& t = plain.tuple(x);
      const auto& u = plain.tuple(y);
      CHECK(plain.mul(x, y) ==
            plain.element_of({plain.factors()[0]->times(t[0], u[0]),
                              plain.factors()[1]->times(t[1], u[1])}));
    }
  }
}

TEST_CASE("flat products are strictly associative") {
  GradedGroup a = cyclic4(), b = klein(), c = cyclic4();
  GradedGroup left = graded_product_group(graded_product_group(a, b), c);
  GradedGroup right = graded_product_group(a, graded_product_group(b, c));
  CHECK(left.same_structure(right));
  CHECK(left.order() == right.order());
  for (int x = 0; x < left.order(); ++x) {
    CHECK(left.tuple(x) == right.tuple(x));
    CHECK(left.degree(x) == right.degree(x));
    for (int y = 0; y < left.order(); ++y) CHECK(left.mul(x, y) == right.mul(x, y));
  }
  CHECK(left.factors().size() == 3);
}

TEST_CASE("mixing the two product modes requires materializing") {
  GradedGroup a = cyclic4();
  GradedGroup braided = graded_product_group(a, a);
  GradedGroup plain = ungraded_product(a, a);
  CHECK_THROWS_AS(ungraded_product(braided, a), std::invalid_argument);
  CHECK_THROWS_AS(graded_product_group(plain, a), std::invalid_argument);
  // materializing collapses to one factor, after which both modes work
  GradedGroup m = materialize_atom(braided);
  CHECK(m.factors().size() == 1);
  CHECK(m.order() == braided.order());
  for (int x = 0; x < m.order(); ++x)
    for (int y = 0; y < m.order(); ++y) CHECK(m.mul(x, y) == braided.mul(x, y));
  GradedGroup mixed = ungraded_product(m, a);
  audit_group(mixed);
  CHECK(mixed.order() == 16);
}

TEST_CASE("products over different rings are rejected") {
  GradedGroup a = cyclic4();
  GradedGroup g3 = gamma_square_extension(make_z_mod(3), true);
  CHECK_THROWS_AS(graded_product_group(a, g3), std::invalid_argument);
}

TEST_CASE("element_of canonicalizes along the antidiagonal action") {
  GradedGroup a = cyclic4(), b = klein();
  GradedGroup p = graded_product_group(a, b);
  for (int e = 0; e < p.order(); ++e) {
    std::vector<int> t = p.tuple(e);
    // act by γ = 1 on slot 0 and by -γ = 1 on slot 1: same class
    std::vector<int> shifted{p.factors()[0]->action(1, t[0]), p.factors()[1]->action(1, t[1])};
    CHECK(p.element_of(shifted) == e);
  }
}

TEST_CASE("inverses: closed form equals brute scan") {
  GradedGroup a = cyclic4(), b = klein();
  GradedGroup p = graded_product_group(a, b);
  for (int e = 0; e < p.order(); ++e) {
    CHECK(p.inverse(e) == brute_inverse(p, e));
    CHECK(nfold_inverse(p, e) == brute_inverse(p, e));
    CHECK(p.mul(e, p.inverse(e)) == p.identity());
  }
  GradedGroup triple = graded_product_group(p, a);
  for (int e = 0; e < triple.order(); ++e) {
    CHECK(nfold_inverse(triple, e) == brute_inverse(triple, e));
  }
}

TEST_CASE("n-fold product closed form equals iterated multiplication") {
  GradedGroup a = cyclic4(), b = klein();
  GradedGroup p = graded_product_group(a, b);
  for (int x = 0; x < p.order(); ++x)
    for (int y = 0; y < p.order(); ++y) {
      CHECK(nfold_graded_product(p, {x, y}) == p.mul(x, y));
      for (int z = 0; z < p.order(); z += 3)
        CHECK(nfold_graded_product(p, {x, y, z}) == p.mul(p.mul(x, y), z));
    }
  CHECK(nfold_graded_product(p, {}) == p.identity());
  CHECK(nfold_graded_product(p, {5}) == 5);
}

TEST_CASE("braided dual multiplies by x•y = Z^{d(y)d(x)} xy") {
  GradedGroup g3 = gamma_square_extension(make_z_mod(3), true);
  GradedGroup a = cyclic4();
  GradedGroup p = graded_product_group(a, a);
  for (const GradedGroup* g : {&g3, &p}) {
    GradedGroup dual = braided_dual(*g);
    audit_group(dual);
    CHECK(dual.order() == g->order());
    for (int x = 0; x < g->order(); ++x) {
      for (int y = 0; y < g->order(); ++y) {
        int expected = g->action(g->gamma()->mul(g->degree(y), g->degree(x)), g->mul(x, y));
        CHECK(dual.mul(x, y) == expected);
        CHECK(dual_mul(*g, x, y) == expected);
      }
      // dual inverse has the closed form Z^{d(g)^2} g^{-1}
      int closed = g->action(g->gamma()->mul(g->degree(x), g->degree(x)), g->inverse(x));
      CHECK(dual.inverse(x) == closed);
      CHECK(dual.inverse(x) == brute_inverse(dual, x));
    }
  }
}

TEST_CASE("n-fold dual product closed form equals folded dual multiplication") {
  GradedGroup g3 = gamma_square_extension(make_z_mod(3), true);
  for (int x = 0; x < g3.order(); ++x)
    for (int y = 0; y < g3.order(); ++y) {
      CHECK(nfold_dual_product(g3, {x, y}) == dual_mul(g3, x, y));
      for (int z = 0; z < g3.order(); ++z)
        CHECK(nfold_dual_product(g3, {x, y, z}) == dual_mul(g3, dual_mul(g3, x, y), z));
    }
  CHECK(nfold_dual_product(g3, {}) == g3.identity());
}

TEST_CASE("block braiding is a group isomorphism over a skew ring") {
  GradedGroup a = cyclic4(), b = klein();
  BraidIsoReport report = braiding_is_group_iso_check(a, b);
  CHECK(report.is_morphism);

  GradedGroup g3 = gamma_square_extension(make_z_mod(3), true);
  BraidIsoReport bad = braiding_is_group_iso_check(g3, g3);
  CHECK_FALSE(bad.is_morphism);
  CHECK(bad.counter_a >= 0);
  // the reported pair is a genuine counterexample
  GradedGroup p = graded_product_group(g3, g3);
  auto beta = block_braiding(p, 1);
  CHECK(beta.target.mul(beta(bad.counter_a), beta(bad.counter_b)) !=
        beta(p.mul(bad.counter_a, bad.counter_b)));
}

TEST_CASE("braidings preserve degree and invert as stated") {
  GradedGroup a = cyclic4(), b = klein();
  GradedGroup p = graded_product_group(a, b);
  auto beta = block_braiding(p, 1);
  for (int e = 0; e < p.order(); ++e) {
    CHECK(beta.target.degree(beta(e)) == p.degree(e));
  }
  auto beta_inv = block_braiding_inverse(beta.target, 1);
  CHECK(beta.then(beta_inv) == identity_braid(p));
  CHECK(beta_inv.then(beta) == identity_braid(beta.target));

  // over a skew ring the braiding is symmetric: β_{B,A} ∘ β_{A,B} = id
  auto beta_back = block_braiding(beta.target, 1);
  CHECK(beta.then(beta_back) == identity_braid(p));

  // over Z/3 it is not
  GradedGroup g3 = gamma_square_extension(make_z_mod(3), true);
  GradedGroup p3 = graded_product_group(g3, g3);
  auto b3 = block_braiding(p3, 1);
  auto b3_back = block_braiding(b3.target, 1);
  CHECK_FALSE(b3.then(b3_back) == identity_braid(p3));
  CHECK(b3.then(block_braiding_inverse(b3.target, 1)) == identity_braid(p3));
}

TEST_CASE("hexagon: braiding past a block equals two adjacent steps") {
  for (int m : {2, 3}) {
    GradedGroup g = gamma_square_extension(make_z_mod(m), true);
    GradedGroup triple =
        graded_product_group(graded_product_group(g, g), gamma_square_extension(make_z_mod(m), false));
    auto step1 = adjacent_braiding(triple, 1);
    auto step2 = adjacent_braiding(step1.target, 2);
    auto block = block_braiding(triple, 1);  // first factor past the rest
    CHECK(step1.then(step2) == block);
  }
}

TEST_CASE("permutation braiding agrees with every adjacent-swap decomposition") {
  GradedGroup a = cyclic4(), b = klein(), c = gamma_square_extension(make_z_mod(2), true);
  GradedGroup m = graded_product_group(graded_product_group(a, b), c);

  // all of S3, each via bubble sort from the identity arrangement
  std::vector<std::vector<int>> perms{{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                      {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  for (const auto& sigma : perms) {
    CAPTURE(sigma);
    // decompose: repeatedly swap an adjacent out-of-order pair of the target
    // arrangement, tracking the braid composite alongside
    auto composite = identity_braid(m);
    std::vector<int> current{1, 2, 3};
    bool moved = true;
    while (moved) {
      moved = false;
      // find slot where current order disagrees with sigma's relative order
      for (int i = 0; i + 1 < 3; ++i) {
        auto pos = [&](int v) {
          return static_cast<int>(std::find(sigma.begin(), sigma.end(), v) - sigma.begin());
        };
        if (pos(current[i]) > pos(current[i + 1])) {
          composite = composite.then(adjacent_braiding(composite.target, i + 1));
          std::swap(current[i], current[i + 1]);
          moved = true;
        }
      }
    }
    auto direct = permutation_braiding(m, sigma);
    CHECK(composite == direct);
  }

  // braid relation: s1 s2 s1 = s2 s1 s2 as maps
  auto s1 = adjacent_braiding(m, 1);
  auto word121 = s1.then(adjacent_braiding(s1.target, 2));
  word121 = word121.then(adjacent_braiding(word121.target, 1));
  auto s2 = adjacent_braiding(m, 2);
  auto word212 = s2.then(adjacent_braiding(s2.target, 1));
  word212 = word212.then(adjacent_braiding(word212.target, 2));
  CHECK(word121 == word212);
}

TEST_CASE("permutation braiding requires a skew ring") {
  GradedGroup g3 = gamma_square_extension(make_z_mod(3), true);
  GradedGroup p3 = graded_product_group(g3, g3);
  CHECK_THROWS_AS(permutation_braiding(p3, std::vector<int>{2, 1}), std::invalid_argument);
  // adjacent/block braidings stay available (word-dependent but well-defined)
  CHECK_NOTHROW(adjacent_braiding(p3, 1));
}

TEST_CASE("cocycle extraction reconstructs the extension") {
  check_cocycle_reconstructs(cyclic4());
  check_cocycle_reconstructs(klein());
  GradedGroup p = graded_product_group(cyclic4(), klein());
  check_cocycle_reconstructs(p);

  CocycleTable ct = central_extension_cocycle(cyclic4());
  CHECK(ct.section.size() == 2);
  CHECK(ct.tau[0][0] == 0);
  CHECK(ct.tau[0][1] == 0);
  CHECK(ct.tau[1][0] == 0);
  CHECK(ct.tau[1][1] == 1);  // x^2 = Z for the nontrivial coset
}

TEST_CASE("cocycle extraction demands an injective Z") {
  std::vector<std::vector<int>> mul{{0, 1}, {1, 0}};
  GradedGroup c2 = make_graded_group(make_z_mod(2), mul, {0, 0}, {0, 0}, "C2");
  CHECK_THROWS_AS(central_extension_cocycle(c2), std::invalid_argument);
}

TEST_CASE("a custom section shifts the cocycle by a coboundary") {
  GradedGroup g = cyclic4();
  // default section picks {0, 1}; force {0, 3} instead
  CocycleTable ct = central_extension_cocycle(g, std::vector<int>{0, 3});
  CHECK(ct.section == std::vector<int>{0, 3});
  // still a valid reconstruction
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      int prod = g.mul(ct.section[a], ct.section[b]);
      CHECK(prod == g.action(ct.tau[a][b], ct.section[ct.coset_of[prod]]));
    }
}

TEST_CASE("quotient by Z") {
  GradedGroup p = graded_product_group(cyclic4(), klein());
  QuotientZ q = quotient_by_z(p);
  CHECK(q.quotient.order() == p.order() / 2);
  audit_group(q.quotient);
  for (int c = 0; c < q.quotient.order(); ++c) CHECK(q.project[q.section[c]] == c);
  for (int x = 0; x < p.order(); ++x) {
    CHECK(q.quotient.degree(q.project[x]) == p.degree(x));
    for (int y = 0; y < p.order(); ++y) {
      CHECK(q.project[p.mul(x, y)] == q.quotient.mul(q.project[x], q.project[y]));
    }
  }
  // Z becomes trivial downstairs
  CHECK(q.quotient.z(1) == q.quotient.identity());
}

TEST_CASE("subgroups and the even part") {
  GradedGroup p = graded_product_group(cyclic4(), cyclic4());
  GradedGroup even = even_part_subgroup(p);
  audit_group(even);
  CHECK(even.order() == 4);
  for (int e = 0; e < even.order(); ++e) CHECK(even.degree(e) == 0);

  // a non-closed subset is rejected
  int four_torsion = -1;
  for (int e = 0; e < p.order(); ++e)
    if (p.element_order(e) == 4) four_torsion = e;
  REQUIRE(four_torsion >= 0);
  CHECK_THROWS_AS(subgroup_on(p, {p.identity(), four_torsion}), std::invalid_argument);

  // subgroup generated by Z is fine
  GradedGroup zsub = subgroup_on(p, {p.identity(), p.z(1)}, "im Z");
  CHECK(zsub.order() == 2);
}

TEST_CASE("negated grading keeps the law, flips the degrees") {
  GradedGroup g3 = gamma_square_extension(make_z_mod(3), true);
  GradedGroup neg = g3.with_negated_grading();
  audit_group(neg);
  std::map<std::vector<int>, int> index_by_tuple;
  CHECK(neg.order() == g3.order());
  for (int e = 0; e < g3.order(); ++e) {
    CHECK(neg.degree(e) == g3.gamma()->neg(g3.degree(e)));
  }
  // double negation restores the original degrees
  GradedGroup back = neg.with_negated_grading();
  for (int e = 0; e < g3.order(); ++e) CHECK(back.degree(e) == g3.degree(e));
}

TEST_CASE("graded sets: unit set and product sizes") {
  auto z3 = make_z_mod(3);
  GradedSet e = unit_set(z3);
  audit_set(e);
  CHECK(e.element_count() == 3);
  for (int x = 0; x < 3; ++x) CHECK(e.degree(x) == 0);

  GradedGroup g3 = gamma_square_extension(z3, true);
  GradedSet s = g3.as_set();
  audit_set(s);
  GradedSet prod = graded_product_set(e, s);
  CHECK(prod.element_count() == s.element_count());

  GradedSet both = graded_product_set(s, s);
  CHECK(both.element_count() == s.element_count() * s.element_count() / 3);
  audit_set(both);

  // set-level and group-level carriers of a product agree
  GradedGroup pg = graded_product_group(g3, g3);
  CHECK(graded_product_set(g3.as_set(), g3.as_set()).element_count() == pg.order());
}

TEST_CASE("set permutation and negation") {
  auto z3 = make_z_mod(3);
  GradedGroup g3 = gamma_square_extension(z3, true);
  GradedSet s = graded_product_set(g3.as_set(), unit_set(z3));
  GradedSet swapped = s.permuted({1, 0});
  audit_set(swapped);
  CHECK(swapped.element_count() == s.element_count());
  CHECK(swapped.factors()[0] == s.factors()[1]);
  // carrier indices need not correspond, but degree multisets must negate
  GradedSet neg = s.with_negated_grading();
  std::multiset<int> before, after;
  for (int e = 0; e < s.element_count(); ++e) before.insert(z3->neg(s.degree(e)));
  for (int e = 0; e < neg.element_count(); ++e) after.insert(neg.degree(e));
  CHECK(before == after);
}

TEST_CASE("grading automorphism squares to the identity over Z/2") {
  GradedGroup p = graded_product_group(cyclic4(), klein());
  for (int e = 0; e < p.order(); ++e) {
    int a = p.grading_automorphism(e);
    CHECK(p.grading_automorphism(a) == e);
    CHECK(p.degree(a) == p.degree(e));
  }
  // and is an automorphism
  CHECK(brute_is_morphism(p, p, [&](int e) { return p.grading_automorphism(e); }));
}

TEST_CASE("power and element_order") {
  GradedGroup c4 = cyclic4();
  CHECK(c4.power(1, 0) == c4.identity());
  CHECK(c4.power(1, 3) == 3);
  CHECK(c4.power(1, 4) == 0);
  CHECK(c4.power(1, -1) == c4.inverse(1));
  CHECK(c4.element_order(1) == 4);
  CHECK(c4.element_order(2) == 2);
  for (int e = 0; e < c4.order(); ++e) CHECK(c4.element_order(e) == brute_element_order(c4, e));
}
