#include "veegroups/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "veegroups/common.hpp"

namespace veegroups {

namespace {

// ---- atom validation -------------------------------------------------------

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::vector<int> closure_under(const GroupAtom& g, std::vector<int> seed) {
  std::set<int> seen(seed.begin(), seed.end());
  seen.insert(g.identity);
  std::vector<int> queue(seen.begin(), seen.end());
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int s : seed) {
      int p = g.times(queue[qi], s);
      if (seen.insert(p).second) queue.push_back(p);
    }
  return {queue.begin(), queue.end()};
}

GroupAtomPtr build_atom(GammaRingPtr gamma, const std::vector<int>& mul, int order,
                        std::vector<int> degree, std::vector<int> z_embed,
                        std::vector<int> gens, std::string label) {
  require(static_cast<bool>(gamma), "graded group: null gamma ring");
  require(order >= 1, "graded group: empty carrier");
  require(order <= kValidationCap,
          "graded group: explicit atoms are capped at order " + std::to_string(kValidationCap));
  auto atom = std::make_shared<GroupAtom>();
  atom->gamma = gamma;
  atom->order = order;
  atom->mul = mul;
  atom->degree = std::move(degree);
  atom->z = std::move(z_embed);
  atom->label = std::move(label);

  const int n = order;
  require(static_cast<int>(mul.size()) == n * n, "graded group: multiplication table size mismatch");
  for (int a = 0; a < n * n; ++a)
    require(mul[a] >= 0 && mul[a] < n, "graded group: table entry out of range");

  // Latin square: rows and columns are permutations.
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      row[atom->times(a, b)] = 1;
      col[atom->times(b, a)] = 1;
    }
    for (int v = 0; v < n; ++v)
      require(row[v] && col[v], "graded group: table is not cancellative at row/col " + std::to_string(a));
  }

  // Identity.
  atom->identity = -1;
  for (int e = 0; e < n && atom->identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = atom->times(e, a) == a && atom->times(a, e) == a;
    if (ok) atom->identity = e;
  }
  require(atom->identity >= 0, "graded group: no identity element");

  // Inverses.
  atom->inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (atom->times(a, b) == atom->identity && atom->times(b, a) == atom->identity) atom->inv[a] = b;
    require(atom->inv[a] >= 0, "graded group: element " + std::to_string(a) + " has no inverse");
  }

  // Generating set: default to everything (small atoms).
  if (gens.empty()) {
    require(n <= 512, "graded group: atoms above order 512 need an explicit generating set");
    for (int a = 0; a < n; ++a)
      if (a != atom->identity) gens.push_back(a);
  }
  for (int s : gens) require(s >= 0 && s < n, "graded group: generator index out of range");
  atom->gens = std::move(gens);
  require(static_cast<int>(closure_under(*atom, atom->gens).size()) == n,
          "graded group: the given generators do not generate");

  // Light's associativity test: it is enough to check a(gc) = (ag)c for g in
  // a generating set of the magma.
  for (int s : atom->gens)
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        require(atom->times(a, atom->times(s, c)) == atom->times(atom->times(a, s), c),
                "graded group: multiplication not associative at (" + std::to_string(a) + ", " +
                    std::to_string(s) + ", " + std::to_string(c) + ")");

  // Grading: a morphism to Γ.
  const GammaRing& G = *gamma;
  require(static_cast<int>(atom->degree.size()) == n, "graded group: degree map size mismatch");
  for (int d : atom->degree) require(d >= 0 && d < G.size(), "graded group: degree out of range");
  require(atom->degree[atom->identity] == G.zero(), "graded group: identity must have degree 0");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      require(atom->degree[atom->times(a, b)] == G.add(atom->degree[a], atom->degree[b]),
              "graded group: degree map is not a morphism at (" + std::to_string(a) + ", " +
                  std::to_string(b) + ")");

  // Central morphism Z: Γ -> G with d∘Z = 0 and central image.
  require(static_cast<int>(atom->z.size()) == G.size(), "graded group: Z table size mismatch");
  for (int x = 0; x < G.size(); ++x) {
    require(atom->z[x] >= 0 && atom->z[x] < n, "graded group: Z image out of range");
    require(atom->degree[atom->z[x]] == G.zero(), "graded group: Z image must have degree 0");
    for (int y = 0; y < G.size(); ++y)
      require(atom->z[G.add(x, y)] == atom->times(atom->z[x], atom->z[y]),
              "graded group: Z is not a morphism at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    for (int a = 0; a < n; ++a)
      require(atom->times(atom->z[x], a) == atom->times(a, atom->z[x]),
              "graded group: Z(" + std::to_string(x) + ") is not central against " + std::to_string(a));
  }
  return atom;
}

std::vector<int> flatten(const std::vector<std::vector<int>>& rows) {
  std::vector<int> out;
  for (const auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace

// ---- GradedSet --------------------------------------------------------------

GradedSet::GradedSet(GammaRingPtr gamma, std::vector<SetAtomPtr> factors)
    : gamma_(std::move(gamma)), factors_(std::move(factors)) {
  require(static_cast<bool>(gamma_), "graded set: null gamma ring");
  require(!factors_.empty(), "graded set: no factors");
  for (const auto& f : factors_)
    require(f && same_ring(f->gamma, gamma_), "graded set: factor over a different ring");
  build();
}

void GradedSet::canonicalize(std::vector<int>& t) const {
  const int k = static_cast<int>(factors_.size());
  if (k <= 1) return;
  const int n = gamma_->size();
  std::vector<int> best = t;
  std::vector<int> digits(k - 1, 0);
  std::vector<int> cand(k);
  while (true) {
    int pos = 0;
    while (pos < k - 1 && ++digits[pos] == n) digits[pos++] = 0;
    if (pos == k - 1) break;
    int sum = gamma_->zero();
    for (int i = 0; i < k - 1; ++i) {
      sum = gamma_->add(sum, digits[i]);
      cand[i] = factors_[i]->action(digits[i], t[i]);
    }
    cand[k - 1] = factors_[k - 1]->action(gamma_->neg(sum), t[k - 1]);
    if (cand < best) best = cand;
  }
  t = std::move(best);
}

void GradedSet::build() {
  const int k = static_cast<int>(factors_.size());
  std::vector<int> t(k, 0);
  while (true) {
    std::vector<int> c = t;
    canonicalize(c);
    index_.emplace(std::move(c), 0);
    int pos = 0;
    while (pos < k && ++t[pos] == factors_[pos]->size) t[pos++] = 0;
    if (pos == k) break;
  }
  elems_.reserve(index_.size());
  for (auto& [tuple, id] : index_) {
    id = static_cast<int>(elems_.size());
    elems_.push_back(tuple);
  }
  degree_.reserve(elems_.size());
  for (const auto& tuple : elems_) {
    int d = gamma_->zero();
    for (int i = 0; i < k; ++i) d = gamma_->add(d, factors_[i]->degree[tuple[i]]);
    degree_.push_back(d);
  }
}

int GradedSet::action(int x, int e) const {
  std::vector<int> t = tuple(e);
  t[0] = factors_[0]->action(x, t[0]);
  canonicalize(t);
  return index_.at(t);
}

int GradedSet::element_of(std::vector<int> t) const {
  require(t.size() == factors_.size(), "graded set: tuple arity mismatch");
  for (size_t i = 0; i < t.size(); ++i)
    require(t[i] >= 0 && t[i] < factors_[i]->size, "graded set: tuple entry out of range");
  canonicalize(t);
  return index_.at(t);
}

bool GradedSet::same_structure(const GradedSet& other) const {
  return factors_ == other.factors_;
}

GradedSet GradedSet::permuted(const std::vector<int>& perm0) const {
  require(perm0.size() == factors_.size(), "graded set: permutation arity mismatch");
  std::vector<SetAtomPtr> f;
  f.reserve(perm0.size());
  for (int i : perm0) f.push_back(factors_.at(i));
  return GradedSet(gamma_, std::move(f));
}

GradedSet GradedSet::with_negated_grading() const {
  std::vector<SetAtomPtr> f;
  for (const auto& a : factors_) {
    auto b = std::make_shared<SetAtom>(*a);
    for (int& d : b->degree) d = gamma_->neg(d);
    f.push_back(std::move(b));
  }
  return GradedSet(gamma_, std::move(f));
}

// ---- GradedGroup ------------------------------------------------------------

GradedGroup::GradedGroup(GammaRingPtr gamma, std::vector<GroupAtomPtr> factors, ProductTwist twist)
    : gamma_(std::move(gamma)), factors_(std::move(factors)), twist_(twist) {
  require(static_cast<bool>(gamma_), "graded group: null gamma ring");
  require(!factors_.empty(), "graded group: no factors");
  for (const auto& f : factors_)
    require(f && same_ring(f->gamma, gamma_), "graded group: factor over a different ring");
  build();
}

void GradedGroup::canonicalize(std::vector<int>& t) const {
  const int k = static_cast<int>(factors_.size());
  if (k <= 1) return;
  const int n = gamma_->size();
  std::vector<int> best = t;
  std::vector<int> digits(k - 1, 0);
  std::vector<int> cand(k);
  while (true) {
    int pos = 0;
    while (pos < k - 1 && ++digits[pos] == n) digits[pos++] = 0;
    if (pos == k - 1) break;
    int sum = gamma_->zero();
    for (int i = 0; i < k - 1; ++i) {
      sum = gamma_->add(sum, digits[i]);
      cand[i] = factors_[i]->action(digits[i], t[i]);
    }
    cand[k - 1] = factors_[k - 1]->action(gamma_->neg(sum), t[k - 1]);
    if (cand < best) best = cand;
  }
  t = std::move(best);
}

void GradedGroup::build() {
  const int k = static_cast<int>(factors_.size());
  std::vector<int> t(k, 0);
  while (true) {
    std::vector<int> c = t;
    canonicalize(c);
    index_.emplace(std::move(c), 0);
    int pos = 0;
    while (pos < k && ++t[pos] == factors_[pos]->order) t[pos++] = 0;
    if (pos == k) break;
  }
  elems_.reserve(index_.size());
  for (auto& [tuple, id] : index_) {
    id = static_cast<int>(elems_.size());
    elems_.push_back(tuple);
  }
  degree_.reserve(elems_.size());
  for (const auto& tuple : elems_) {
    int d = gamma_->zero();
    for (int i = 0; i < k; ++i) d = gamma_->add(d, factors_[i]->degree[tuple[i]]);
    degree_.push_back(d);
  }

  std::vector<int> id_tuple(k);
  for (int i = 0; i < k; ++i) id_tuple[i] = factors_[i]->identity;
  canonicalize(id_tuple);
  identity_ = index_.at(id_tuple);

  // Z embeds through the first factor; any factor would do modulo the
  // antidiagonal identification.
  z_.resize(gamma_->size());
  for (int x = 0; x < gamma_->size(); ++x) {
    std::vector<int> zt(k);
    for (int i = 0; i < k; ++i) zt[i] = factors_[i]->identity;
    zt[0] = factors_[0]->z[x];
    canonicalize(zt);
    z_[x] = index_.at(zt);
  }

  std::set<int> gen_set;
  for (int i = 0; i < k; ++i)
    for (int s : factors_[i]->gens) {
      std::vector<int> gt(k);
      for (int j = 0; j < k; ++j) gt[j] = factors_[j]->identity;
      gt[i] = s;
      canonicalize(gt);
      int e = index_.at(gt);
      if (e != identity_) gen_set.insert(e);
    }
  gens_.assign(gen_set.begin(), gen_set.end());

  std::ostringstream lbl;
  for (int i = 0; i < k; ++i) {
    if (i) lbl << (twist_ == ProductTwist::graded ? " x^ " : " x_Z ");
    lbl << (factors_[i]->label.empty() ? "?" : factors_[i]->label);
  }
  label_ = lbl.str();
}

int GradedGroup::mul(int a, int b) const {
  const std::vector<int>& ta = elems_.at(a);
  const std::vector<int>& tb = elems_.at(b);
  const int k = static_cast<int>(factors_.size());
  int u = gamma_->zero();
  if (twist_ == ProductTwist::graded && k > 1) {
    for (int i = 1; i < k; ++i) {
      int di = factors_[i]->degree[ta[i]];
      for (int j = 0; j < i; ++j) u = gamma_->add(u, gamma_->mul(di, factors_[j]->degree[tb[j]]));
    }
  }
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = factors_[i]->times(ta[i], tb[i]);
  if (u != gamma_->zero()) t[0] = factors_[0]->action(u, t[0]);
  canonicalize(t);
  return index_.at(t);
}

int GradedGroup::inverse(int a) const {
  const std::vector<int>& ta = elems_.at(a);
  const int k = static_cast<int>(factors_.size());
  int u = gamma_->zero();
  if (twist_ == ProductTwist::graded && k > 1) {
    for (int i = 0; i < k; ++i) {
      int di = factors_[i]->degree[ta[i]];
      for (int j = i + 1; j < k; ++j)
        u = gamma_->add(u, gamma_->mul(factors_[j]->degree[ta[j]], di));  // Σ_{i<j} d_j·d_i
    }
  }
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = factors_[i]->inv[ta[i]];
  if (u != gamma_->zero()) t[0] = factors_[0]->action(u, t[0]);
  canonicalize(t);
  return index_.at(t);
}

int GradedGroup::action(int x, int e) const { return mul(z_.at(x), e); }

int GradedGroup::element_of(std::vector<int> t) const {
  require(t.size() == factors_.size(), "graded group: tuple arity mismatch");
  for (size_t i = 0; i < t.size(); ++i)
    require(t[i] >= 0 && t[i] < factors_[i]->order, "graded group: tuple entry out of range");
  canonicalize(t);
  return index_.at(t);
}

int GradedGroup::power(int e, int k) const {
  int acc = identity_;
  int base = k >= 0 ? e : inverse(e);
  for (int i = 0, m = k >= 0 ? k : -k; i < m; ++i) acc = mul(acc, base);
  return acc;
}

int GradedGroup::element_order(int e) const {
  int x = e, k = 1;
  while (x != identity_) {
    x = mul(x, e);
    ++k;
    if (k > order()) throw std::logic_error("graded group: runaway element order");
  }
  return k;
}

bool GradedGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool GradedGroup::same_structure(const GradedGroup& other) const {
  return twist_ == other.twist_ && factors_ == other.factors_;
}

GradedGroup GradedGroup::permuted(const std::vector<int>& perm0) const {
  require(perm0.size() == factors_.size(), "graded group: permutation arity mismatch");
  std::vector<GroupAtomPtr> f;
  f.reserve(perm0.size());
  for (int i : perm0) f.push_back(factors_.at(i));
  return GradedGroup(gamma_, std::move(f), twist_);
}

GradedGroup GradedGroup::with_negated_grading() const {
  std::vector<GroupAtomPtr> f;
  for (const auto& a : factors_) {
    auto b = std::make_shared<GroupAtom>(*a);
    for (int& d : b->degree) d = gamma_->neg(d);
    f.push_back(std::move(b));
  }
  return GradedGroup(gamma_, std::move(f), twist_);
}

GradedSet GradedGroup::as_set() const {
  std::vector<SetAtomPtr> f;
  for (const auto& a : factors_) {
    auto s = std::make_shared<SetAtom>();
    s->gamma = a->gamma;
    s->size = a->order;
    s->degree = a->degree;
    s->act.resize(static_cast<size_t>(gamma_->size()) * a->order);
    for (int x = 0; x < gamma_->size(); ++x)
      for (int m = 0; m < a->order; ++m) s->act[static_cast<size_t>(x) * a->order + m] = a->action(x, m);
    s->label = a->label;
    f.push_back(std::move(s));
  }
  return GradedSet(gamma_, std::move(f));
}

// ---- constructors -----------------------------------------------------------

GradedGroup make_graded_group(GammaRingPtr gamma, const std::vector<std::vector<int>>& mul,
                              std::vector<int> degree, std::vector<int> z_embed, std::string label,
                              std::vector<int> gens) {
  const int n = static_cast<int>(mul.size());
  for (const auto& row : mul)
    require(static_cast<int>(row.size()) == n, "graded group: ragged multiplication table");
  auto atom = build_atom(gamma, flatten(mul), n, std::move(degree), std::move(z_embed),
                         std::move(gens), std::move(label));
  return GradedGroup(std::move(gamma), {std::move(atom)}, ProductTwist::graded);
}

GradedSet make_graded_set(GammaRingPtr gamma, int size, std::vector<int> degree,
                          const std::vector<std::vector<int>>& action, std::string label) {
  require(static_cast<bool>(gamma), "graded set: null gamma ring");
  require(size >= 1, "graded set: empty carrier");
  const GammaRing& G = *gamma;
  require(static_cast<int>(degree.size()) == size, "graded set: degree map size mismatch");
  require(static_cast<int>(action.size()) == G.size(), "graded set: action table needs one row per Γ element");
  auto atom = std::make_shared<SetAtom>();
  atom->gamma = gamma;
  atom->size = size;
  atom->degree = std::move(degree);
  atom->label = std::move(label);
  atom->act.resize(static_cast<size_t>(G.size()) * size);
  for (int x = 0; x < G.size(); ++x) {
    require(static_cast<int>(action[x].size()) == size, "graded set: ragged action row");
    for (int m = 0; m < size; ++m) {
      int v = action[x][m];
      require(v >= 0 && v < size, "graded set: action entry out of range");
      atom->act[static_cast<size_t>(x) * size + m] = v;
    }
  }
  // Action axioms: z(0) = id, z(x+y) = z(x)∘z(y), degrees preserved.
  for (int m = 0; m < size; ++m)
    require(atom->action(G.zero(), m) == m, "graded set: action of 0 must be the identity");
  for (int x = 0; x < G.size(); ++x)
    for (int y = 0; y < G.size(); ++y)
      for (int m = 0; m < size; ++m)
        require(atom->action(G.add(x, y), m) == atom->action(x, atom->action(y, m)),
                "graded set: action is not additive at (" + std::to_string(x) + ", " +
                    std::to_string(y) + ")");
  for (int x = 0; x < G.size(); ++x)
    for (int m = 0; m < size; ++m)
      require(atom->degree[atom->action(x, m)] == atom->degree[m],
              "graded set: action must preserve degrees");
  return GradedSet(std::move(gamma), {std::move(atom)});
}

GradedSet unit_set(GammaRingPtr gamma) {
  require(static_cast<bool>(gamma), "unit set: null gamma ring");
  const GammaRing& G = *gamma;
  std::vector<int> degree(G.size(), G.zero());
  std::vector<std::vector<int>> action(G.size(), std::vector<int>(G.size()));
  for (int x = 0; x < G.size(); ++x)
    for (int m = 0; m < G.size(); ++m) action[x][m] = G.add(x, m);
  return make_graded_set(gamma, G.size(), std::move(degree), action, "E");
}

GradedGroup gamma_square_extension(GammaRingPtr gamma, bool product_twist) {
  require(static_cast<bool>(gamma), "gamma extension: null ring");
  const GammaRing& G = *gamma;
  const int n = G.size();
  auto idx = [n](int x0, int x1) { return x0 * n + x1; };
  std::vector<std::vector<int>> mul(n * n, std::vector<int>(n * n));
  std::vector<int> degree(n * n), z(n);
  for (int x0 = 0; x0 < n; ++x0)
    for (int x1 = 0; x1 < n; ++x1) {
      degree[idx(x0, x1)] = x1;
      for (int y0 = 0; y0 < n; ++y0)
        for (int y1 = 0; y1 < n; ++y1) {
          int first = G.add(x0, y0);
          if (product_twist) first = G.add(first, G.mul(x1, y1));
          mul[idx(x0, x1)][idx(y0, y1)] = idx(first, G.add(x1, y1));
        }
    }
  for (int x = 0; x < n; ++x) z[x] = idx(x, 0);
  std::string label = product_twist ? "Γ(0,1)" : "Γ(1,0)";
  return make_graded_group(std::move(gamma), mul, std::move(degree), std::move(z), std::move(label));
}

// ---- products ---------------------------------------------------------------

namespace {

void check_operand_twist(const GradedGroup& g, ProductTwist mode, const char* side) {
  if (g.factors().size() > 1 && g.twist() != mode)
    throw std::invalid_argument(std::string("product: ") + side +
                                " operand mixes product modes; materialize it first");
}

}  // namespace

GradedSet graded_product_set(const GradedSet& a, const GradedSet& b) {
  require(same_ring(a.gamma(), b.gamma()), "graded product: factors graded over different rings");
  std::vector<SetAtomPtr> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return GradedSet(a.gamma(), std::move(f));
}

static GradedGroup product_group(const GradedGroup& a, const GradedGroup& b, ProductTwist mode) {
  require(same_ring(a.gamma(), b.gamma()), "graded product: factors graded over different rings");
  check_operand_twist(a, mode, "left");
  check_operand_twist(b, mode, "right");
  std::vector<GroupAtomPtr> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return GradedGroup(a.gamma(), std::move(f), mode);
}

GradedGroup graded_product_group(const GradedGroup& a, const GradedGroup& b) {
  return product_group(a, b, ProductTwist::graded);
}

GradedGroup ungraded_product(const GradedGroup& a, const GradedGroup& b) {
  return product_group(a, b, ProductTwist::plain);
}

GradedGroup materialize_atom(const GradedGroup& g, std::string label) {
  const int n = g.order();
  require(n <= kValidationCap, "materialize: group too large for an explicit table");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = g.mul(a, b);
  std::vector<int> degree(n), z(g.gamma()->size());
  for (int e = 0; e < n; ++e) degree[e] = g.degree(e);
  for (int x = 0; x < g.gamma()->size(); ++x) z[x] = g.z(x);
  if (label.empty()) label = g.label();
  return make_graded_group(g.gamma(), mul, std::move(degree), std::move(z), std::move(label),
                           g.generators());
}

// ---- dual and element-level operations --------------------------------------

int dual_mul(const GradedGroup& g, int x, int y) {
  int u = g.gamma()->mul(g.degree(y), g.degree(x));
  return g.action(u, g.mul(x, y));
}

GradedGroup braided_dual(const GradedGroup& g) {
  const int n = g.order();
  require(n <= 512, "braided dual: group too large to materialize");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = dual_mul(g, a, b);
  std::vector<int> degree(n), z(g.gamma()->size());
  for (int e = 0; e < n; ++e) degree[e] = g.degree(e);
  for (int x = 0; x < g.gamma()->size(); ++x) z[x] = g.z(x);
  return make_graded_group(g.gamma(), mul, std::move(degree), std::move(z), g.label() + "^v");
}

int nfold_dual_product(const GradedGroup& g, const std::vector<int>& elems) {
  const GammaRing& G = *g.gamma();
  int u = G.zero();
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j)
      u = G.add(u, G.mul(g.degree(elems[i]), g.degree(elems[j])));
  int p = g.identity();
  for (int e : elems) p = g.mul(p, e);
  return g.action(u, p);
}

int nfold_graded_product(const GradedGroup& product, const std::vector<int>& rows) {
  require(product.twist() == ProductTwist::graded, "n-fold product: needs a graded product group");
  const GammaRing& G = *product.gamma();
  const int k = static_cast<int>(product.factors().size());
  int u = G.zero();
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t s = r + 1; s < rows.size(); ++s) {
      const auto& tr = product.tuple(rows[r]);
      const auto& ts = product.tuple(rows[s]);
      for (int i = 1; i < k; ++i)
        for (int j = 0; j < i; ++j)
          u = G.add(u, G.mul(product.component_degree(i, tr[i]), product.component_degree(j, ts[j])));
    }
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) {
    int acc = product.factors()[i]->identity;
    for (int row : rows) acc = product.factors()[i]->times(acc, product.tuple(row)[i]);
    t[i] = acc;
  }
  int flat = product.element_of(t);
  return product.action(u, flat);
}

int nfold_inverse(const GradedGroup& product, int e) {
  const GammaRing& G = *product.gamma();
  const int k = static_cast<int>(product.factors().size());
  const auto& te = product.tuple(e);
  int u = G.zero();
  if (product.twist() == ProductTwist::graded) {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        u = G.add(u, G.mul(product.component_degree(j, te[j]), product.component_degree(i, te[i])));
  }
  std::vector<int> t(k);
  for (int i = 0; i < k; ++i) t[i] = product.factors()[i]->inv[te[i]];
  return product.action(u, product.element_of(t));
}

// ---- extensions and quotients ------------------------------------------------

CocycleTable central_extension_cocycle(const GradedGroup& g, std::optional<std::vector<int>> section) {
  const GammaRing& G = *g.gamma();
  // Z must be injective for τ to be single-valued.
  {
    std::set<int> image;
    for (int x = 0; x < G.size(); ++x) image.insert(g.z(x));
    require(static_cast<int>(image.size()) == G.size(),
            "cocycle extraction: the central morphism Z is not injective");
  }

  CocycleTable out;
  out.coset_of.assign(g.order(), -1);
  std::vector<int> rep_of_elem(g.order());
  for (int e = 0; e < g.order(); ++e) {
    int rep = e;
    for (int x = 0; x < G.size(); ++x) rep = std::min(rep, g.mul(g.z(x), e));
    rep_of_elem[e] = rep;
  }
  std::map<int, int> coset_index;
  for (int e = 0; e < g.order(); ++e) coset_index.emplace(rep_of_elem[e], 0);
  {
    int next = 0;
    for (auto& [rep, id] : coset_index) id = next++;
  }
  for (int e = 0; e < g.order(); ++e) out.coset_of[e] = coset_index.at(rep_of_elem[e]);
  const int h = static_cast<int>(coset_index.size());

  if (section) {
    require(static_cast<int>(section->size()) == h, "cocycle extraction: section has wrong size");
    out.section.assign(h, -1);
    for (int s : *section) {
      int c = out.coset_of.at(s);
      require(out.section[c] < 0, "cocycle extraction: section hits a coset twice");
      out.section[c] = s;
    }
  } else {
    out.section.assign(h, -1);
    for (auto& [rep, id] : coset_index) out.section[id] = rep;
  }

  auto z_exponent = [&](int from_section, int actual) {
    for (int x = 0; x < G.size(); ++x)
      if (g.mul(g.z(x), from_section) == actual) return x;
    throw std::logic_error("cocycle extraction: element escapes its coset");
  };

  out.tau.assign(h, std::vector<int>(h));
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) {
      int p = g.mul(out.section[a], out.section[b]);
      out.tau[a][b] = z_exponent(out.section[out.coset_of[p]], p);
    }

  // 2-cocycle identity τ(a,b) + τ(ab,c) = τ(a,bc) + τ(b,c).
  auto coset_mul = [&](int a, int b) { return out.coset_of[g.mul(out.section[a], out.section[b])]; };
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b)
      for (int c = 0; c < h; ++c)
        require(G.add(out.tau[a][b], out.tau[coset_mul(a, b)][c]) ==
                    G.add(out.tau[a][coset_mul(b, c)], out.tau[b][c]),
                "cocycle extraction: 2-cocycle identity fails at (" + std::to_string(a) + ", " +
                    std::to_string(b) + ", " + std::to_string(c) + ")");
  return out;
}

QuotientZ quotient_by_z(const GradedGroup& g) {
  const GammaRing& G = *g.gamma();
  std::vector<int> rep_of_elem(g.order());
  for (int e = 0; e < g.order(); ++e) {
    int rep = e;
    for (int x = 0; x < G.size(); ++x) rep = std::min(rep, g.mul(g.z(x), e));
    rep_of_elem[e] = rep;
  }
  std::map<int, int> coset_index;
  for (int e = 0; e < g.order(); ++e) coset_index.emplace(rep_of_elem[e], 0);
  int next = 0;
  for (auto& [rep, id] : coset_index) id = next++;

  const int h = static_cast<int>(coset_index.size());
  std::vector<int> section(h);
  for (auto& [rep, id] : coset_index) section[id] = rep;
  std::vector<int> project(g.order());
  for (int e = 0; e < g.order(); ++e) project[e] = coset_index.at(rep_of_elem[e]);

  std::vector<std::vector<int>> mul(h, std::vector<int>(h));
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) mul[a][b] = project[g.mul(section[a], section[b])];
  std::vector<int> degree(h), z(G.size(), project[g.identity()]);
  for (int c = 0; c < h; ++c) degree[c] = g.degree(section[c]);
  std::vector<int> gens;
  for (int s : g.generators())
    if (project[s] != project[g.identity()]) gens.push_back(project[s]);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  return QuotientZ{make_graded_group(g.gamma(), mul, std::move(degree), std::move(z),
                                     g.label() + "/Z", std::move(gens)),
                   std::move(project), std::move(section)};
}

GradedGroup subgroup_on(const GradedGroup& g, const std::vector<int>& elements, std::string label) {
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<int, int> local;
  for (int e : sorted) local.emplace(e, static_cast<int>(local.size()));
  require(local.count(g.identity()) > 0, "subgroup: identity missing");
  for (int x = 0; x < g.gamma()->size(); ++x)
    require(local.count(g.z(x)) > 0, "subgroup: must contain the image of Z");
  const int n = static_cast<int>(sorted.size());
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = g.mul(sorted[a], sorted[b]);
      auto it = local.find(p);
      require(it != local.end(), "subgroup: listed elements are not closed under multiplication");
      mul[a][b] = it->second;
    }
  std::vector<int> degree(n), z(g.gamma()->size());
  for (int a = 0; a < n; ++a) degree[a] = g.degree(sorted[a]);
  for (int x = 0; x < g.gamma()->size(); ++x) z[x] = local.at(g.z(x));
  if (label.empty()) label = g.label() + " (subgroup)";
  return make_graded_group(g.gamma(), mul, std::move(degree), std::move(z), std::move(label));
}

GradedGroup even_part_subgroup(const GradedGroup& g) {
  std::vector<int> evens;
  for (int e = 0; e < g.order(); ++e)
    if (g.degree(e) == g.gamma()->zero()) evens.push_back(e);
  return subgroup_on(g, evens, g.label() + "_0");
}

// ---- exhaustive audits --------------------------------------------------------

namespace {

void expect(bool ok, const std::string& msg) {
  if (!ok) throw std::logic_error(msg);
}

}  // namespace

void audit_group(const GradedGroup& g) {
  const GammaRing& G = *g.gamma();
  const int n = g.order();
  if (n > kValidationCap)
    throw size_cap_error("audit: group of order " + std::to_string(n) + " exceeds the validation cap");

  for (int a = 0; a < n; ++a) {
    expect(g.mul(g.identity(), a) == a && g.mul(a, g.identity()) == a, "audit: identity fails");
    expect(g.mul(a, g.inverse(a)) == g.identity() && g.mul(g.inverse(a), a) == g.identity(),
           "audit: inverse fails at " + std::to_string(a));
  }

  std::vector<int> gens = g.generators();
  if (gens.empty())
    for (int a = 0; a < n; ++a) gens.push_back(a);
  // The generators must reach everything (otherwise Light's test is vacuous).
  {
    std::set<int> seen{g.identity()};
    std::vector<int> queue{g.identity()};
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int s : gens) {
        int p = g.mul(queue[qi], s);
        if (seen.insert(p).second) queue.push_back(p);
      }
    expect(static_cast<int>(seen.size()) == n, "audit: generating set does not generate");
  }
  for (int s : gens)
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        expect(g.mul(a, g.mul(s, c)) == g.mul(g.mul(a, s), c),
               "audit: associativity fails at (" + std::to_string(a) + ", " + std::to_string(s) +
                   ", " + std::to_string(c) + ")");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      expect(g.degree(g.mul(a, b)) == G.add(g.degree(a), g.degree(b)),
             "audit: degree map is not a morphism at (" + std::to_string(a) + ", " +
                 std::to_string(b) + ")");

  expect(g.degree(g.identity()) == G.zero(), "audit: identity degree");
  for (int x = 0; x < G.size(); ++x) {
    expect(g.degree(g.z(x)) == G.zero(), "audit: d∘Z must vanish");
    for (int y = 0; y < G.size(); ++y)
      expect(g.z(G.add(x, y)) == g.mul(g.z(x), g.z(y)), "audit: Z is not a morphism");
    for (int a = 0; a < n; ++a)
      expect(g.mul(g.z(x), a) == g.mul(a, g.z(x)), "audit: Z image is not central");
  }
}

void audit_set(const GradedSet& m) {
  const GammaRing& G = *m.gamma();
  const int n = m.element_count();
  if (n > kValidationCap)
    throw size_cap_error("audit: set of size " + std::to_string(n) + " exceeds the validation cap");
  for (int e = 0; e < n; ++e) {
    expect(m.action(G.zero(), e) == e, "audit: action of 0 must be the identity");
    for (int x = 0; x < G.size(); ++x) {
      expect(m.degree(m.action(x, e)) == m.degree(e), "audit: action must preserve degrees");
      for (int y = 0; y < G.size(); ++y)
        expect(m.action(G.add(x, y), e) == m.action(x, m.action(y, e)),
               "audit: action is not additive");
    }
  }
}

}  // namespace veegroups
