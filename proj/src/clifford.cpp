#include "veegroups/clifford.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "veegroups/common.hpp"
#include "veegroups/linalg.hpp"

namespace veegroups {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void accumulate(std::map<std::uint64_t, Rational>& m, std::uint64_t key, const Rational& v) {
  if (v == 0) return;
  auto [it, inserted] = m.emplace(key, v);
  if (inserted) return;
  it->second += v;
  if (it->second == 0) m.erase(it);
}

}  // namespace

CliffordAlgebra::CliffordAlgebra(std::vector<Rational> t) : t_(std::move(t)) {
  if (static_cast<int>(t_.size()) > 11)
    throw size_cap_error("clifford algebra: rank capped at 11");
  for (const Rational& v : t_)
    require(v != 0, "clifford algebra: signature coefficients must be nonzero");
}

CliffordAlgebra CliffordAlgebra::from_signature(const Signature& s) {
  std::vector<Rational> t;
  for (int i = 1; i <= s.n(); ++i) t.emplace_back(s.t_is_z(i) ? -1 : 1);
  return CliffordAlgebra(std::move(t));
}

const Rational& CliffordAlgebra::coefficient(int i) const {
  require(i >= 1 && i <= n(), "clifford algebra: coefficient index out of range");
  return t_[i - 1];
}

CliffordElement CliffordAlgebra::unit() const { return basis(0); }

CliffordElement CliffordAlgebra::basis(std::uint64_t mask) const {
  require(mask < (std::uint64_t{1} << n()), "clifford algebra: basis mask out of range");
  CliffordElement e;
  e.coeffs.emplace(mask, Rational(1));
  return e;
}

CliffordElement CliffordAlgebra::generator(int i) const {
  require(i >= 1 && i <= n(), "clifford algebra: generator index out of range");
  return basis(std::uint64_t{1} << (i - 1));
}

CliffordElement cl_add(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement out = a;
  for (const auto& [k, v] : b.coeffs) accumulate(out.coeffs, k, v);
  return out;
}

CliffordElement cl_sub(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement out = a;
  for (const auto& [k, v] : b.coeffs) accumulate(out.coeffs, k, -v);
  return out;
}

CliffordElement cl_scale(const Rational& r, const CliffordElement& a) {
  CliffordElement out;
  if (r != 0)
    for (const auto& [k, v] : a.coeffs) out.coeffs.emplace(k, r * v);
  return out;
}

CliffordElement clifford_mul(const CliffordAlgebra& alg, const CliffordElement& x,
                             const CliffordElement& y) {
  const std::uint64_t full =
      (alg.n() == 0) ? 0 : ((std::uint64_t{1} << alg.n()) - 1);
  CliffordElement out;
  for (const auto& [a, ca] : x.coeffs) {
    require(a <= full, "clifford product: blade outside the algebra");
    for (const auto& [b, cb] : y.coeffs) {
      require(b <= full, "clifford product: blade outside the algebra");
      Rational coef = ca * cb;
      if (inversion_count(a, b) % 2 == 1) coef = -coef;
      for (std::uint64_t inter = a & b; inter != 0; inter &= inter - 1) {
        const int k = __builtin_ctzll(inter);
        coef *= alg.coefficients()[k];
      }
      accumulate(out.coeffs, a ^ b, coef);
    }
  }
  return out;
}

CliffordAlgebra graded_tensor_algebra(const CliffordAlgebra& a, const CliffordAlgebra& b) {
  std::vector<Rational> t = a.coefficients();
  t.insert(t.end(), b.coefficients().begin(), b.coefficients().end());
  return CliffordAlgebra(std::move(t));
}

CliffordElement graded_tensor(const CliffordAlgebra& a, const CliffordAlgebra& b,
                              const CliffordElement& x, const CliffordElement& y) {
  const std::uint64_t full_a = (a.n() == 0) ? 0 : ((std::uint64_t{1} << a.n()) - 1);
  const std::uint64_t full_b = (b.n() == 0) ? 0 : ((std::uint64_t{1} << b.n()) - 1);
  CliffordElement out;
  for (const auto& [ma, ca] : x.coeffs) {
    require(ma <= full_a, "graded tensor: left blade outside its algebra");
    for (const auto& [mb, cb] : y.coeffs) {
      require(mb <= full_b, "graded tensor: right blade outside its algebra");
      accumulate(out.coeffs, ma | (mb << a.n()), ca * cb);
    }
  }
  return out;
}

CliffordElement anchor(const std::vector<Rational>& roots, const CliffordElement& x) {
  for (const Rational& r : roots)
    require(r != 0, "anchor: roots must be nonzero");
  const std::uint64_t full =
      roots.empty() ? 0 : ((std::uint64_t{1} << roots.size()) - 1);
  require(roots.size() <= 11, "anchor: rank capped at 11");
  CliffordElement out;
  for (const auto& [mask, c] : x.coeffs) {
    require(mask <= full, "anchor: blade outside the algebra");
    Rational coef = c;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) coef *= roots[__builtin_ctzll(m)];
    out.coeffs.emplace(mask, coef);
  }
  return out;
}

int character(std::uint64_t a, std::uint64_t b) {
  return (__builtin_popcountll(a & b) % 2 == 0) ? 1 : -1;
}

std::vector<CliffordElement> clifford_center(const CliffordAlgebra& alg) {
  const int n = alg.n();
  if (n > 6) throw size_cap_error("clifford center: rank capped at 6 by the dense solve");
  if (n == 0) return {alg.unit()};  // no generators, no constraints
  const std::uint64_t dim = std::uint64_t{1} << n;
  // Rows: one constraint per (generator i, output blade B); columns: input
  // blade A. Entry: coefficient of e_B in e_A e_i - e_i e_A.
  RationalMatrix m(static_cast<std::size_t>(n) * dim,
                   std::vector<Rational>(dim, Rational(0)));
  for (int i = 0; i < n; ++i) {
    const CliffordElement gen = alg.generator(i + 1);
    for (std::uint64_t a = 0; a < dim; ++a) {
      const CliffordElement bracket = cl_sub(clifford_mul(alg, alg.basis(a), gen),
                                             clifford_mul(alg, gen, alg.basis(a)));
      for (const auto& [target, coef] : bracket.coeffs)
        m[static_cast<std::size_t>(i) * dim + target][a] = coef;
    }
  }
  std::vector<CliffordElement> out;
  for (const std::vector<Rational>& v : nullspace_basis(std::move(m))) {
    CliffordElement e;
    for (std::uint64_t a = 0; a < dim; ++a)
      if (v[a] != 0) e.coeffs.emplace(a, v[a]);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace veegroups
