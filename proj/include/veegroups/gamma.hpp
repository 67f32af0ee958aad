#pragma once

#include <memory>
#include <string>
#include <vector>

namespace veegroups {

/// A finite "generalized ring" Γ: an abelian group (written additively)
/// carrying a bi-additive product. The product is *not* required to be
/// associative, commutative, or unital. Γ is *skew* when a·b + b·a = 0 for
/// all a, b — the condition under which braidings become symmetric.
///
/// Elements are canonical integer indices 0..size()-1 into dense tables.
/// Construction validates everything eagerly (abelian group axioms,
/// bi-additivity) and rejects bad tables with an error naming the first
/// failing pair/triple.
class GammaRing {
 public:
  /// Builds a ring from dense row-major tables: add[a][b] and mul[a][b].
  GammaRing(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul);

  /// Z/mZ with its usual multiplication, m >= 1. Skew iff m <= 2.
  static GammaRing z_mod(int m);

  int size() const { return size_; }
  int zero() const { return zero_; }
  int add(int a, int b) const { return add_[check(a) * size_ + check(b)]; }
  int mul(int a, int b) const { return mul_[check(a) * size_ + check(b)]; }
  int neg(int a) const { return neg_[check(a)]; }
  int sub(int a, int b) const { return add(a, neg(b)); }

  bool is_skew() const { return skew_; }
  bool has_unit() const { return unit_ >= 0; }
  /// Two-sided multiplicative unit; throws std::logic_error if none exists.
  int unit() const;

  /// Structural equality of the tables (used to accept "the same Γ" coming
  /// from two construction sites).
  bool same_as(const GammaRing& other) const;

  /// JSON round-trip: {"size": n, "add": [[...]], "mul": [[...]]}.
  std::string to_json() const;
  static GammaRing from_json(const std::string& text);

 private:
  int size_ = 0;
  int zero_ = 0;
  int unit_ = -1;
  bool skew_ = false;
  std::vector<int> add_, mul_, neg_;

  int check(int a) const;
  void validate();
};

using GammaRingPtr = std::shared_ptr<const GammaRing>;

inline GammaRingPtr make_z_mod(int m) {
  return std::make_shared<const GammaRing>(GammaRing::z_mod(m));
}

/// True when the two handles denote the same ring (pointer identity or
/// structural table equality).
bool same_ring(const GammaRingPtr& a, const GammaRingPtr& b);

/// An element of a specific Γ, carrying its ring. Mixing elements of
/// different rings throws std::invalid_argument.
struct GammaElem {
  GammaRingPtr ring;
  int index = 0;

  GammaElem() = default;
  GammaElem(GammaRingPtr r, int i);

  friend GammaElem operator+(const GammaElem& a, const GammaElem& b);
  friend GammaElem operator*(const GammaElem& a, const GammaElem& b);
  GammaElem operator-() const;
  friend bool operator==(const GammaElem& a, const GammaElem& b);
  friend bool operator!=(const GammaElem& a, const GammaElem& b) { return !(a == b); }
};

}  // namespace veegroups
