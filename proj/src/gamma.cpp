#include "veegroups/gamma.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace veegroups {

namespace {

std::string triple_msg(const char* what, int a, int b, int c) {
  std::ostringstream os;
  os << what << " fails at (" << a << ", " << b << ", " << c << ")";
  return os.str();
}

std::string pair_msg(const char* what, int a, int b) {
  std::ostringstream os;
  os << what << " fails at (" << a << ", " << b << ")";
  return os.str();
}

}  // namespace

GammaRing::GammaRing(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul) {
  size_ = static_cast<int>(add.size());
  if (size_ < 1) throw std::invalid_argument("GammaRing: empty addition table");
  if (static_cast<int>(mul.size()) != size_)
    throw std::invalid_argument("GammaRing: addition and multiplication tables disagree on size");
  add_.resize(static_cast<size_t>(size_) * size_);
  mul_.resize(static_cast<size_t>(size_) * size_);
  for (int a = 0; a < size_; ++a) {
    if (static_cast<int>(add[a].size()) != size_ || static_cast<int>(mul[a].size()) != size_)
      throw std::invalid_argument("GammaRing: ragged table row " + std::to_string(a));
    for (int b = 0; b < size_; ++b) {
      int s = add[a][b], p = mul[a][b];
      if (s < 0 || s >= size_) throw std::invalid_argument(pair_msg("GammaRing: addition entry out of range", a, b));
      if (p < 0 || p >= size_) throw std::invalid_argument(pair_msg("GammaRing: product entry out of range", a, b));
      add_[static_cast<size_t>(a) * size_ + b] = s;
      mul_[static_cast<size_t>(a) * size_ + b] = p;
    }
  }
  validate();
}

GammaRing GammaRing::z_mod(int m) {
  if (m < 1) throw std::invalid_argument("GammaRing::z_mod: modulus must be >= 1");
  std::vector<std::vector<int>> add(m, std::vector<int>(m));
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      add[a][b] = (a + b) % m;
      mul[a][b] = (a * b) % m;
    }
  return GammaRing(std::move(add), std::move(mul));
}

int GammaRing::check(int a) const {
  if (a < 0 || a >= size_) throw std::out_of_range("GammaRing: element index " + std::to_string(a));
  return a;
}

void GammaRing::validate() {
  auto A = [&](int a, int b) { return add_[static_cast<size_t>(a) * size_ + b]; };
  auto M = [&](int a, int b) { return mul_[static_cast<size_t>(a) * size_ + b]; };

  // Commutativity of addition.
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      if (A(a, b) != A(b, a)) throw std::invalid_argument(pair_msg("GammaRing: addition not commutative", a, b));

  // Associativity of addition.
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      for (int c = 0; c < size_; ++c)
        if (A(A(a, b), c) != A(a, A(b, c)))
          throw std::invalid_argument(triple_msg("GammaRing: addition not associative", a, b, c));

  // Zero element.
  zero_ = -1;
  for (int e = 0; e < size_ && zero_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < size_; ++a) ok = ok && A(e, a) == a;
    if (ok) zero_ = e;
  }
  if (zero_ < 0) throw std::invalid_argument("GammaRing: addition has no zero element");

  // Negatives (each row must reach zero; rows are then automatically Latin
  // because a finite cancellative monoid is a group, but check anyway).
  neg_.assign(size_, -1);
  for (int a = 0; a < size_; ++a) {
    for (int b = 0; b < size_; ++b)
      if (A(a, b) == zero_) neg_[a] = b;
    if (neg_[a] < 0) throw std::invalid_argument("GammaRing: element " + std::to_string(a) + " has no negative");
  }

  // Bi-additivity of the product.
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      for (int c = 0; c < size_; ++c) {
        if (M(A(a, b), c) != A(M(a, c), M(b, c)))
          throw std::invalid_argument(triple_msg("GammaRing: product not additive on the left", a, b, c));
        if (M(a, A(b, c)) != A(M(a, b), M(a, c)))
          throw std::invalid_argument(triple_msg("GammaRing: product not additive on the right", a, b, c));
      }

  // Skewness: a·b + b·a = 0 everywhere.
  skew_ = true;
  for (int a = 0; a < size_ && skew_; ++a)
    for (int b = 0; b < size_ && skew_; ++b)
      if (A(M(a, b), M(b, a)) != zero_) skew_ = false;

  // Optional two-sided unit.
  unit_ = -1;
  for (int e = 0; e < size_ && unit_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < size_; ++a) ok = ok && M(e, a) == a && M(a, e) == a;
    if (ok) unit_ = e;
  }
}

int GammaRing::unit() const {
  if (unit_ < 0) throw std::logic_error("GammaRing: ring has no multiplicative unit");
  return unit_;
}

bool GammaRing::same_as(const GammaRing& other) const {
  return size_ == other.size_ && add_ == other.add_ && mul_ == other.mul_;
}

bool same_ring(const GammaRingPtr& a, const GammaRingPtr& b) {
  if (!a || !b) return false;
  return a == b || a->same_as(*b);
}

std::string GammaRing::to_json() const {
  nlohmann::json j;
  j["size"] = size_;
  auto rows = [&](const std::vector<int>& t) {
    nlohmann::json m = nlohmann::json::array();
    for (int a = 0; a < size_; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < size_; ++b) row.push_back(t[static_cast<size_t>(a) * size_ + b]);
      m.push_back(std::move(row));
    }
    return m;
  };
  j["add"] = rows(add_);
  j["mul"] = rows(mul_);
  return j.dump();
}

GammaRing GammaRing::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("size") || !j.contains("add") || !j.contains("mul"))
    throw std::invalid_argument("GammaRing::from_json: need {size, add, mul}");
  int n = j["size"].get<int>();
  auto add = j["add"].get<std::vector<std::vector<int>>>();
  auto mul = j["mul"].get<std::vector<std::vector<int>>>();
  if (static_cast<int>(add.size()) != n || static_cast<int>(mul.size()) != n)
    throw std::invalid_argument("GammaRing::from_json: size field disagrees with tables");
  return GammaRing(std::move(add), std::move(mul));
}

GammaElem::GammaElem(GammaRingPtr r, int i) : ring(std::move(r)), index(i) {
  if (!ring) throw std::invalid_argument("GammaElem: null ring");
  if (index < 0 || index >= ring->size()) throw std::out_of_range("GammaElem: index out of range");
}

static void require_same(const GammaElem& a, const GammaElem& b) {
  if (!same_ring(a.ring, b.ring))
    throw std::invalid_argument("GammaElem: operands belong to different rings");
}

GammaElem operator+(const GammaElem& a, const GammaElem& b) {
  require_same(a, b);
  return GammaElem(a.ring, a.ring->add(a.index, b.index));
}

GammaElem operator*(const GammaElem& a, const GammaElem& b) {
  require_same(a, b);
  return GammaElem(a.ring, a.ring->mul(a.index, b.index));
}

GammaElem GammaElem::operator-() const { return GammaElem(ring, ring->neg(index)); }

bool operator==(const GammaElem& a, const GammaElem& b) {
  return same_ring(a.ring, b.ring) && a.index == b.index;
}

}  // namespace veegroups
