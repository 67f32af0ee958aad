#include "veegroups/vee.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "veegroups/common.hpp"
#include "json.hpp"

namespace veegroups {

namespace {

uint64_t full_mask(int n) { return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

void check_n(int n) {
  if (n < 0 || n > kMaxGenerators) {
    throw std::invalid_argument("Signature: generator count must be in [0, " +
                                std::to_string(kMaxGenerators) + "], got " + std::to_string(n));
  }
}

void check_element(const Signature& s, VeeElement a, const char* who) {
  if (a.z > 1 || (a.mask & ~full_mask(s.n())) != 0) {
    throw std::invalid_argument(std::string(who) + ": element outside Q(t) with n = " +
                                std::to_string(s.n()));
  }
}

void check_enumerable(const Signature& s, const char* who) {
  if (s.n() > kEnumerationCap) {
    throw size_cap_error(std::string(who) + ": enumeration capped at n <= " +
                         std::to_string(kEnumerationCap) + ", got n = " + std::to_string(s.n()));
  }
}

std::vector<int> parse_one_line(const Signature& s, const std::vector<int>& sigma1,
                                const char* who) {
  const int n = s.n();
  if (static_cast<int>(sigma1.size()) != n) {
    throw std::invalid_argument(std::string(who) + ": permutation must have length n = " +
                                std::to_string(n));
  }
  std::vector<int> seen(n, 0);
  for (int v : sigma1) {
    if (v < 1 || v > n || seen[v - 1]++) {
      throw std::invalid_argument(std::string(who) + ": not a permutation of 1..n");
    }
  }
  return sigma1;
}

}  // namespace

// ---- Signature --------------------------------------------------------------

Signature::Signature(int n, uint64_t z_mask) : n_(n), zmask_(z_mask) {
  check_n(n);
  if ((zmask_ & ~full_mask(n_)) != 0) {
    throw std::invalid_argument("Signature: z_mask has bits beyond generator " +
                                std::to_string(n_));
  }
}

Signature Signature::pq(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("Signature::pq: p, q must be >= 0");
  check_n(p + q);
  uint64_t zm = full_mask(p + q) & ~full_mask(p);
  return Signature(p + q, zm);
}

Signature Signature::parse(const std::string& text) {
  std::vector<int> bits;
  std::string token;
  std::stringstream in(text);
  while (std::getline(in, token, ',')) {
    std::string t;
    for (char c : token) {
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t == "1") {
      bits.push_back(0);
    } else if (t == "Z" || t == "z") {
      bits.push_back(1);
    } else {
      throw std::invalid_argument("Signature::parse: entry '" + t + "' is not '1' or 'Z'");
    }
  }
  uint64_t zm = 0;
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) zm |= uint64_t{1} << i;
  }
  return Signature(static_cast<int>(bits.size()), zm);
}

bool Signature::t_is_z(int i) const {
  if (i < 1 || i > n_) {
    throw std::invalid_argument("Signature::t_is_z: index " + std::to_string(i) +
                                " outside 1.." + std::to_string(n_));
  }
  return (zmask_ >> (i - 1)) & 1;
}

int Signature::p_count() const { return n_ - q_count(); }
int Signature::q_count() const { return std::popcount(zmask_); }

std::string Signature::str() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out += ',';
    out += t_is_z(i) ? "Z" : "1";
  }
  return out;
}

Signature Signature::permuted(const std::vector<int>& sigma1) const {
  auto sigma = parse_one_line(*this, sigma1, "Signature::permuted");
  uint64_t zm = 0;
  for (int i = 1; i <= n_; ++i) {
    if (t_is_z(sigma[i - 1])) zm |= uint64_t{1} << (i - 1);
  }
  return Signature(n_, zm);
}

// ---- arithmetic ----------------------------------------------------------------

int inversion_count(uint64_t a, uint64_t b) {
  int count = 0;
  while (b) {
    uint64_t low = b & (~b + 1);
    b ^= low;
    // Bits of a strictly above the position of `low`. (low << 1) - 1 is the
    // mask of positions <= that bit; the shift overflows to 0 at bit 63,
    // correctly selecting nothing above.
    count += std::popcount(a & ~((low << 1) - 1));
  }
  return count;
}

int gamma_cocycle(uint64_t a, uint64_t b) { return inversion_count(a, b) & 1; }

int t_measure(const Signature& s, uint64_t a) {
  if ((a & ~full_mask(s.n())) != 0) {
    throw std::invalid_argument("t_measure: subset outside 1..n");
  }
  return std::popcount(a & s.z_mask()) & 1;
}

VeeElement vee_mul(const Signature& s, VeeElement a, VeeElement b) {
  check_element(s, a, "vee_mul");
  check_element(s, b, "vee_mul");
  int z = (a.z ^ b.z ^ gamma_cocycle(a.mask, b.mask) ^ t_measure(s, a.mask & b.mask)) & 1;
  return {static_cast<uint8_t>(z), a.mask ^ b.mask};
}

VeeElement vee_inverse(const Signature& s, VeeElement a) {
  check_element(s, a, "vee_inverse");
  int z = (a.z ^ gamma_cocycle(a.mask, a.mask) ^ t_measure(s, a.mask)) & 1;
  return {static_cast<uint8_t>(z), a.mask};
}

int vee_order(const Signature& s, VeeElement a) {
  check_element(s, a, "vee_order");
  if (a.mask == 0) return a.z ? 2 : 1;
  int sq = (gamma_cocycle(a.mask, a.mask) ^ t_measure(s, a.mask)) & 1;
  return sq ? 4 : 2;
}

VeeElement vee_conjugate(const Signature& s, VeeElement g, VeeElement x) {
  return vee_mul(s, vee_mul(s, g, x), vee_inverse(s, g));
}

VeeElement pseudoscalar_square(const Signature& s) {
  uint64_t all = full_mask(s.n());
  int z = (gamma_cocycle(all, all) ^ t_measure(s, all)) & 1;
  return {static_cast<uint8_t>(z), 0};
}

int element_index(const Signature& s, VeeElement a) {
  check_element(s, a, "element_index");
  return (static_cast<int>(a.z) << s.n()) | static_cast<int>(a.mask);
}

VeeElement element_at(const Signature& s, int index) {
  if (s.n() > 30 || index < 0 || index >= (2 << s.n())) {
    throw std::invalid_argument("element_at: index outside dense range");
  }
  return {static_cast<uint8_t>(index >> s.n()),
          static_cast<uint64_t>(index) & full_mask(s.n())};
}

// ---- structure -----------------------------------------------------------------

namespace {

bool is_central_subset(const Signature& s, uint64_t a) {
  if (a == 0) return true;
  return (s.n() & 1) && a == full_mask(s.n());
}

}  // namespace

CenterInfo center(const Signature& s) {
  CenterInfo info;
  info.elements = {vee_one(), vee_z()};
  if (s.n() % 2 == 1) {
    uint64_t all = full_mask(s.n());
    info.elements.push_back({0, all});
    info.elements.push_back({1, all});
    info.type = pseudoscalar_square(s).z ? CenterType::c4 : CenterType::vier;
  } else {
    info.type = CenterType::c2;
  }
  return info;
}

std::vector<std::vector<VeeElement>> conjugacy_classes(const Signature& s) {
  check_enumerable(s, "conjugacy_classes");
  std::vector<std::vector<VeeElement>> classes;
  uint64_t limit = full_mask(s.n());
  for (uint64_t a = 0;; ++a) {
    if (is_central_subset(s, a)) {
      classes.push_back({VeeElement{0, a}});
      classes.push_back({VeeElement{1, a}});
    } else {
      classes.push_back({VeeElement{0, a}, VeeElement{1, a}});
    }
    if (a == limit) break;
  }
  return classes;
}

long long conjugacy_class_count(const Signature& s) {
  long long base = 1LL << s.n();
  return base + 1 + (s.n() & 1);
}

CommutatorInfo commutator_subgroup(const Signature& s) {
  // [G, G] is generated by commutators of generators: commutators land in the
  // central subgroup {1, Z}, so the generated set is already a subgroup.
  std::set<VeeElement> sub{vee_one()};
  std::vector<VeeElement> gens{vee_z()};
  for (int i = 1; i <= s.n(); ++i) gens.push_back({0, uint64_t{1} << (i - 1)});
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      VeeElement c = vee_mul(s, vee_conjugate(s, a, b), vee_inverse(s, b));
      sub.insert(c);
    }
  }
  bool closed_under_mul = true;
  for (const auto& a : sub) {
    for (const auto& b : sub) {
      if (!sub.count(vee_mul(s, a, b))) closed_under_mul = false;
    }
  }
  if (!closed_under_mul) {
    throw std::logic_error("commutator_subgroup: generator commutators did not close");
  }
  // Exhaustive cross-check for small n that no commutator escapes.
  if (s.n() <= 8) {
    int total = 2 << s.n();
    for (int i = 0; i < total; ++i) {
      for (int j = 0; j < total; ++j) {
        VeeElement x = element_at(s, i), y = element_at(s, j);
        VeeElement c = vee_mul(s, vee_conjugate(s, x, y), vee_inverse(s, y));
        sub.insert(c);
      }
    }
  }
  CommutatorInfo info;
  info.subgroup.assign(sub.begin(), sub.end());
  info.within_z = true;
  for (const auto& e : info.subgroup) {
    if (e.mask != 0) info.within_z = false;
  }
  return info;
}

// ---- automorphisms --------------------------------------------------------------

int permutation_inversions_on_subset(const std::vector<int>& sigma1, uint64_t a) {
  std::vector<int> hit;
  for (size_t i = 0; i < sigma1.size(); ++i) {
    if ((a >> i) & 1) hit.push_back(sigma1[i]);
  }
  int count = 0;
  for (size_t i = 0; i < hit.size(); ++i) {
    for (size_t j = i + 1; j < hit.size(); ++j) {
      if (hit[i] > hit[j]) ++count;
    }
  }
  return count;
}

VeeElement hyperoctahedral_automorphism(const Signature& s, const std::vector<int>& sigma1,
                                        VeeElement x) {
  auto sigma = parse_one_line(s, sigma1, "hyperoctahedral_automorphism");
  for (int i = 1; i <= s.n(); ++i) {
    if (s.t_is_z(i) != s.t_is_z(sigma[i - 1])) {
      throw std::invalid_argument(
          "hyperoctahedral_automorphism: permutation does not preserve the signature");
    }
  }
  check_element(s, x, "hyperoctahedral_automorphism");
  uint64_t image = 0;
  for (int i = 1; i <= s.n(); ++i) {
    if ((x.mask >> (i - 1)) & 1) image |= uint64_t{1} << (sigma[i - 1] - 1);
  }
  int u = permutation_inversions_on_subset(sigma, x.mask) & 1;
  return {static_cast<uint8_t>(x.z ^ u), image};
}

std::vector<int> automorphism_perm_sigma(const Signature& s, const std::vector<int>& sigma1) {
  check_enumerable(s, "automorphism_perm_sigma");
  int total = 2 << s.n();
  std::vector<int> perm(total);
  for (int i = 0; i < total; ++i) {
    perm[i] = element_index(s, hyperoctahedral_automorphism(s, sigma1, element_at(s, i)));
  }
  return perm;
}

std::vector<int> automorphism_perm_alpha(const Signature& s) {
  check_enumerable(s, "automorphism_perm_alpha");
  int total = 2 << s.n();
  std::vector<int> perm(total);
  for (int i = 0; i < total; ++i) {
    VeeElement x = element_at(s, i);
    x.z = static_cast<uint8_t>((x.z + std::popcount(x.mask)) & 1);
    perm[i] = element_index(s, x);
  }
  return perm;
}

std::vector<int> automorphism_perm_inner(const Signature& s, VeeElement g) {
  check_enumerable(s, "automorphism_perm_inner");
  int total = 2 << s.n();
  std::vector<int> perm(total);
  for (int i = 0; i < total; ++i) {
    perm[i] = element_index(s, vee_conjugate(s, g, element_at(s, i)));
  }
  return perm;
}

long long permutation_closure_order(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) return 1;
  size_t deg = gens[0].size();
  for (const auto& g : gens) {
    if (g.size() != deg) {
      throw std::invalid_argument("permutation_closure_order: mixed degrees");
    }
    std::vector<int> seen(deg, 0);
    for (int v : g) {
      if (v < 0 || static_cast<size_t>(v) >= deg || seen[v]++) {
        throw std::invalid_argument("permutation_closure_order: not a permutation");
      }
    }
  }
  std::vector<int> id(deg);
  for (size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& cur : frontier) {
      for (const auto& g : gens) {
        std::vector<int> composed(deg);
        for (size_t i = 0; i < deg; ++i) composed[i] = g[cur[i]];
        if (seen.insert(composed).second) next.push_back(std::move(composed));
      }
    }
    if (seen.size() > (1u << 21)) {
      throw size_cap_error("permutation_closure_order: closure exceeded 2^21 elements");
    }
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

long long hyperoctahedral_group_order(const Signature& s) {
  if (s.z_mask() != 0 && s.z_mask() != full_mask(s.n())) {
    throw std::invalid_argument(
        "hyperoctahedral_group_order: signature entries must all agree");
  }
  check_enumerable(s, "hyperoctahedral_group_order");
  std::vector<std::vector<int>> gens;
  gens.push_back(automorphism_perm_alpha(s));
  for (int k = 1; k <= s.n(); ++k) {
    gens.push_back(automorphism_perm_inner(s, {0, uint64_t{1} << (k - 1)}));
  }
  for (int i = 1; i < s.n(); ++i) {
    std::vector<int> sigma(s.n());
    for (int j = 1; j <= s.n(); ++j) sigma[j - 1] = j;
    std::swap(sigma[i - 1], sigma[i]);
    gens.push_back(automorphism_perm_sigma(s, sigma));
  }
  return permutation_closure_order(gens);
}

std::optional<VeeElement> inner_witness_for_alpha(const Signature& s) {
  check_enumerable(s, "inner_witness_for_alpha");
  auto alpha = automorphism_perm_alpha(s);
  uint64_t limit = full_mask(s.n());
  for (uint64_t a = 0;; ++a) {
    VeeElement g{0, a};
    if (automorphism_perm_inner(s, g) == alpha) return g;
    if (a == limit) break;
  }
  return std::nullopt;
}

// ---- derived structures -----------------------------------------------------------

Signature even_part(const Signature& s) {
  if (s.n() < 1) {
    throw std::invalid_argument("even_part: requires n >= 1");
  }
  uint64_t zm = 0;
  bool t1 = s.t_is_z(1);
  for (int k = 2; k <= s.n(); ++k) {
    bool entry = !(t1 ^ s.t_is_z(k));  // Z * t_1 * t_k
    if (entry) zm |= uint64_t{1} << (k - 2);
  }
  return Signature(s.n() - 1, zm);
}

GradedGroup as_graded_group(const Signature& s) {
  if (s.n() > 10) {
    throw size_cap_error("as_graded_group: explicit tables capped at n <= 10, got n = " +
                         std::to_string(s.n()));
  }
  int total = 2 << s.n();
  std::vector<std::vector<int>> mul(total, std::vector<int>(total));
  std::vector<int> degree(total);
  for (int i = 0; i < total; ++i) {
    VeeElement a = element_at(s, i);
    degree[i] = std::popcount(a.mask) & 1;
    for (int j = 0; j < total; ++j) {
      mul[i][j] = element_index(s, vee_mul(s, a, element_at(s, j)));
    }
  }
  std::vector<int> z_embed{element_index(s, vee_one()), element_index(s, vee_z())};
  std::vector<int> gens{element_index(s, vee_z())};
  for (int k = 1; k <= s.n(); ++k) {
    gens.push_back(element_index(s, {0, uint64_t{1} << (k - 1)}));
  }
  return make_graded_group(make_z_mod(2), mul, degree, z_embed, "Q(" + s.str() + ")", gens);
}

GradedGroup subset_parity_group(int n) {
  check_n(n);
  if (n > 11) {
    throw size_cap_error("subset_parity_group: explicit tables capped at n <= 11");
  }
  int total = 1 << n;
  std::vector<std::vector<int>> mul(total, std::vector<int>(total));
  std::vector<int> degree(total);
  for (int i = 0; i < total; ++i) {
    degree[i] = std::popcount(static_cast<unsigned>(i)) & 1;
    for (int j = 0; j < total; ++j) mul[i][j] = i ^ j;
  }
  std::vector<int> z_embed{0, 0};  // the grading group acts trivially on the quotient
  std::vector<int> gens;
  for (int k = 0; k < n; ++k) gens.push_back(1 << k);
  if (n == 0) gens.push_back(0);
  return make_graded_group(make_z_mod(2), mul, degree, z_embed, "P(" + std::to_string(n) + ")",
                           gens);
}

// ---- rendering ------------------------------------------------------------------

std::string render_subset(uint64_t mask, int n) {
  check_n(n);
  std::string body;
  bool wide = n > 9;
  for (int i = 1; i <= n; ++i) {
    if ((mask >> (i - 1)) & 1) {
      if (!body.empty() && wide) body += ',';
      body += std::to_string(i);
    }
  }
  return body;
}

std::string render_element(VeeElement a, int n) {
  std::string out = a.z ? "Z" : "";
  if (a.mask != 0) {
    if (!out.empty()) out += ' ';
    out += "e_{" + render_subset(a.mask, n) + "}";
  }
  if (out.empty()) out = "1";
  return out;
}

std::string element_to_json(VeeElement a) {
  nlohmann::ordered_json j;
  j["z"] = static_cast<int>(a.z);
  j["A"] = nlohmann::ordered_json::array();
  for (int i = 1; i <= 64; ++i) {
    if ((a.mask >> (i - 1)) & 1) j["A"].push_back(i);
  }
  return j.dump();
}

VeeElement element_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  VeeElement a;
  int z = j.at("z").get<int>();
  if (z != 0 && z != 1) throw std::invalid_argument("element_from_json: z must be 0 or 1");
  a.z = static_cast<uint8_t>(z);
  for (int i : j.at("A").get<std::vector<int>>()) {
    if (i < 1 || i > kMaxGenerators) {
      throw std::invalid_argument("element_from_json: generator index outside 1..64");
    }
    uint64_t bit = uint64_t{1} << (i - 1);
    if (a.mask & bit) throw std::invalid_argument("element_from_json: repeated index");
    a.mask |= bit;
  }
  return a;
}

}  // namespace veegroups
