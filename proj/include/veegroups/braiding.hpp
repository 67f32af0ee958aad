#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "veegroups/graded.hpp"

namespace veegroups {

/// A degree-preserving bijection between two products built from the same
/// atoms in (possibly) different orders — the shape every braiding takes.
/// Works for both GradedSet and GradedGroup (identical carrier interfaces).
template <class Product>
struct BraidMap {
  Product source;
  Product target;
  std::vector<int> fwd;  // element of source -> element of target

  int operator()(int e) const { return fwd.at(e); }

  BraidMap then(const BraidMap& next) const {
    if (!target.same_structure(next.source))
      throw std::invalid_argument("braiding composition: target/source products differ");
    BraidMap out{source, next.target, std::vector<int>(fwd.size())};
    for (size_t e = 0; e < fwd.size(); ++e) out.fwd[e] = next.fwd.at(fwd[e]);
    return out;
  }

  friend bool operator==(const BraidMap& a, const BraidMap& b) {
    return a.source.same_structure(b.source) && a.target.same_structure(b.target) && a.fwd == b.fwd;
  }
};

namespace detail {

/// Shared worker: permute factors by perm0 (target slot t holds source factor
/// perm0[t]) and twist each element by Z^{u(e)}.
template <class Product, class TwistFn>
BraidMap<Product> permuted_twisted_map(const Product& m, const std::vector<int>& perm0,
                                       TwistFn&& twist_of) {
  Product target = m.permuted(perm0);
  BraidMap<Product> out{m, target, std::vector<int>(m.element_count())};
  const int k = static_cast<int>(perm0.size());
  for (int e = 0; e < m.element_count(); ++e) {
    const std::vector<int>& t = m.tuple(e);
    std::vector<int> tt(k);
    for (int slot = 0; slot < k; ++slot) tt[slot] = t[perm0[slot]];
    int u = twist_of(t);
    if (u != m.gamma()->zero()) tt[0] = target.factors()[0]->action(u, tt[0]);
    out.fwd[e] = target.element_of(std::move(tt));
  }
  return out;
}

template <class Product>
int block_degree(const Product& m, const std::vector<int>& t, int from, int to) {
  int d = m.gamma()->zero();
  for (int i = from; i < to; ++i) d = m.gamma()->add(d, m.component_degree(i, t[i]));
  return d;
}

}  // namespace detail

template <class Product>
BraidMap<Product> identity_braid(const Product& m) {
  std::vector<int> perm0(m.factors().size());
  std::iota(perm0.begin(), perm0.end(), 0);
  return detail::permuted_twisted_map(m, perm0, [&](const std::vector<int>&) { return m.gamma()->zero(); });
}

/// β between the factor blocks [1..split] and [split+1..k]:
/// [x1, x2] ↦ Z^{d(x2)·d(x1)} [x2, x1].
template <class Product>
BraidMap<Product> block_braiding(const Product& m, int split) {
  const int k = static_cast<int>(m.factors().size());
  if (split < 0 || split > k) throw std::invalid_argument("braiding: split out of range");
  std::vector<int> perm0;
  for (int i = split; i < k; ++i) perm0.push_back(i);
  for (int i = 0; i < split; ++i) perm0.push_back(i);
  return detail::permuted_twisted_map(m, perm0, [&, split](const std::vector<int>& t) {
    int d1 = detail::block_degree(m, t, 0, split);
    int d2 = detail::block_degree(m, t, split, k);
    return m.gamma()->mul(d2, d1);
  });
}

/// The inverse braiding as its own closed form:
/// [y1, y2] ↦ Z^{-d(y1)·d(y2)} [y2, y1].
/// block_braiding(m, s).then(block_braiding_inverse(swapped, k-s)) == identity.
template <class Product>
BraidMap<Product> block_braiding_inverse(const Product& m, int split) {
  const int k = static_cast<int>(m.factors().size());
  if (split < 0 || split > k) throw std::invalid_argument("braiding: split out of range");
  std::vector<int> perm0;
  for (int i = split; i < k; ++i) perm0.push_back(i);
  for (int i = 0; i < split; ++i) perm0.push_back(i);
  return detail::permuted_twisted_map(m, perm0, [&, split](const std::vector<int>& t) {
    int d1 = detail::block_degree(m, t, 0, split);
    int d2 = detail::block_degree(m, t, split, k);
    return m.gamma()->neg(m.gamma()->mul(d1, d2));
  });
}

/// s_i: swaps factor positions i and i+1 (1-indexed), twisting by
/// Z^{d(x_{i+1})·d(x_i)}. This is id x β x id with singleton blocks.
template <class Product>
BraidMap<Product> adjacent_braiding(const Product& m, int i) {
  const int k = static_cast<int>(m.factors().size());
  if (i < 1 || i >= k) throw std::invalid_argument("braiding: slot out of range");
  std::vector<int> perm0(k);
  std::iota(perm0.begin(), perm0.end(), 0);
  std::swap(perm0[i - 1], perm0[i]);
  return detail::permuted_twisted_map(m, perm0, [&, i](const std::vector<int>& t) {
    return m.gamma()->mul(m.component_degree(i, t[i]), m.component_degree(i - 1, t[i - 1]));
  });
}

/// β_σ for σ in one-line notation (1-indexed: target slot k holds x_{σ(k)}).
/// Twist: one factor Z^{d(x_b)·d(x_a)} for every source pair a < b whose
/// relative order the output reverses — the closed form that agrees with
/// composing adjacent braidings along any reduced word. Γ must be skew
/// (otherwise β_σ depends on the word, not just on σ).
template <class Product>
BraidMap<Product> permutation_braiding(const Product& m, const std::vector<int>& sigma1) {
  const int k = static_cast<int>(m.factors().size());
  if (!m.gamma()->is_skew())
    throw std::invalid_argument("permutation braiding: Γ must be skew");
  if (static_cast<int>(sigma1.size()) != k)
    throw std::invalid_argument("permutation braiding: permutation arity mismatch");
  std::vector<int> perm0(k), pos_out(k, -1);
  for (int slot = 0; slot < k; ++slot) {
    int v = sigma1[slot] - 1;
    if (v < 0 || v >= k || pos_out[v] >= 0)
      throw std::invalid_argument("permutation braiding: not a permutation");
    perm0[slot] = v;
    pos_out[v] = slot;
  }
  return detail::permuted_twisted_map(m, perm0, [&, pos_out](const std::vector<int>& t) {
    int u = m.gamma()->zero();
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (pos_out[b] < pos_out[a])
          u = m.gamma()->add(u, m.gamma()->mul(m.component_degree(b, t[b]), m.component_degree(a, t[a])));
    return u;
  });
}

/// Checks whether β_{G1,G2} is a morphism of groups G1 x^ G2 -> G2 x^ G1 by
/// exhausting all pairs. True whenever Γ is skew; over non-skew rings the
/// first violating pair is reported.
struct BraidIsoReport {
  bool is_morphism = true;
  int counter_a = -1;  // indices into the product group G1 x^ G2
  int counter_b = -1;
};
BraidIsoReport braiding_is_group_iso_check(const GradedGroup& g1, const GradedGroup& g2);

}  // namespace veegroups
