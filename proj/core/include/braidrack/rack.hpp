#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidrack/permutation.hpp"

namespace braidrack {

// Finite rack with validated axioms. Elements are 0..d-1 internally;
// tables at the API boundary are 1-based.
class Rack {
 public:
  // Validates both rack axioms. Entries are 1-based.
  static Rack from_table(const std::vector<std::vector<int>>& table);
  // Zero-based row-major table; validated.
  static Rack from_flat(int d, const std::vector<int>& flat);

  int size() const { return d_; }
  int op(int x, int y) const { return tab_[idx(x, y)]; }
  // The unique z with x > z = y.
  int op_inv(int x, int y) const { return inv_[idx(x, y)]; }
  Perm phi(int x) const;
  std::vector<std::vector<int>> table() const;  // 1-based
  const std::vector<std::uint16_t>& flat() const { return tab_; }

  // Rack transported along the bijection old -> relabel[old].
  Rack relabeled(const std::vector<int>& relabel) const;

  bool operator==(const Rack& rhs) const { return d_ == rhs.d_ && tab_ == rhs.tab_; }

 private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(d_) + static_cast<std::size_t>(y);
  }
  int d_ = 0;
  std::vector<std::uint16_t> tab_;
  std::vector<std::uint16_t> inv_;
};

Rack validate_rack(const std::vector<std::vector<int>>& table);
Rack trivial_rack(int d);

// Finite field F_q with q = p or p^2, elements coded a + b*p for a + b*t.
// F_{p^2} = F_p[t]/(t^2 + c) with the least c >= 1 giving an irreducible.
class SmallField {
 public:
  explicit SmallField(int q);
  int order() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const;
  int sub(int a, int b) const;
  int mul(int a, int b) const;
  int neg(int a) const { return sub(0, a); }
  // Constant term of the modulus t^2 + c; 0 for prime fields.
  int modulus_constant() const { return c_; }
  std::string str(int a) const;
  // Integer code or polynomial literal in t.
  int parse(std::string_view text) const;

 private:
  int q_, p_, k_, c_ = 0;
};

Rack affine_rack(int q, int alpha);

struct AffineParam {
  int q;
  int alpha;  // element code in SmallField(q)
  std::string alpha_text;
};
AffineParam braided_affine_param(int p);

// Names: D3, T, A, B, C, Aff(q,alpha), trivial(n).
Rack preset(std::string_view name);
std::vector<std::string> preset_names();
// Class labels for presets defined by a conjugacy class in a symmetric group.
std::optional<std::vector<Perm>> preset_class_labels(std::string_view name);

bool is_quandle(const Rack& r);
bool is_braided(const Rack& r);
bool is_faithful(const Rack& r);
std::vector<std::vector<int>> components(const Rack& r);
bool is_indecomposable(const Rack& r);

struct RackInvariants {
  int size = 0;
  bool is_quandle = false;
  bool is_braided = false;
  bool is_faithful = false;
  bool is_indecomposable = false;
  std::vector<std::vector<int>> components;  // 0-based
  std::optional<std::size_t> inner_group_order;
  std::string inner_group_note;
  // Defined for indecomposable racks only.
  std::optional<int> degree;
  std::map<int, int> k;  // n -> k_n for n in 2..2d with k_n > 0
  int k_unresolved = 0;  // elements whose alternating sequence never returns within 2d
  std::optional<int> m;
  std::optional<int> t;
  std::string undefined_reason;

  int k_at(int n) const {
    auto it = k.find(n);
    return it == k.end() ? 0 : it->second;
  }
};

RackInvariants invariants(const Rack& r, std::size_t group_cap = 10'000'000);

// k_n counted relative to element x (alternating x > (y > (x > ...)) returns to y after n terms).
std::map<int, int> return_profile(const Rack& r, int x);

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> map;  // r1 element -> r2 element
};
IsoResult find_isomorphism(const Rack& r1, const Rack& r2);
bool is_isomorphic(const Rack& r1, const Rack& r2);

// Least relabelled flat table among breadth-first relabelings driven by
// generating sequences. Returns nullopt when branching exceeds the budget.
std::optional<std::vector<std::uint16_t>> canonical_table(const Rack& r, std::size_t budget = 200'000);

struct ClassRack {
  Rack rack;
  std::vector<Perm> labels;  // rack index -> permutation
};
ClassRack conjugacy_class_rack(const std::vector<Perm>& generators, const Perm& g);
// Labels must be closed under conjugation by each other.
ClassRack class_rack_from_labels(const std::vector<Perm>& labels);

}  // namespace braidrack
