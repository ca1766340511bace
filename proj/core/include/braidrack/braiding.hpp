#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "braidrack/field.hpp"
#include "braidrack/permutation.hpp"
#include "braidrack/rack.hpp"

namespace braidrack {

// Rack 2-cocycle: c(v_x (x) v_y) = q(x,y) v_{x>y} (x) v_x.
template <class F>
class Cocycle {
 public:
  using Element = typename F::Element;

  // Validates nonzero entries and the cocycle condition.
  Cocycle(Rack rack, F field, std::vector<Element> values);

  const Rack& rack() const { return rack_; }
  const F& field() const { return field_; }
  int size() const { return rack_.size(); }
  const Element& q(int x, int y) const {
    return values_[static_cast<std::size_t>(x) * static_cast<std::size_t>(rack_.size()) + static_cast<std::size_t>(y)];
  }
  const std::vector<Element>& values() const { return values_; }

 private:
  Rack rack_;
  F field_;
  std::vector<Element> values_;
};

// First (x,y,z) violating q(x,y>z) q(y,z) = q(x>y,x>z) q(x,z).
template <class F>
std::optional<std::array<int, 3>> cocycle_violation(const Rack& r, const F& f, const std::vector<typename F::Element>& q);

template <class F>
Cocycle<F> constant_cocycle(const Rack& r, const F& f, const typename F::Element& q);

template <class F>
Cocycle<F> table_cocycle(const Rack& r, const F& f, const std::vector<std::vector<typename F::Element>>& entries);

// q'(x,y) = q(x,y) f(y) / f(x>y)
template <class F>
Cocycle<F> coboundary_twist(const Cocycle<F>& c, const std::vector<typename F::Element>& fvals);

// (c x id)(id x c)(c x id) = (id x c)(c x id)(id x c) on all basis tensors.
template <class F>
bool yang_baxter_holds(const Cocycle<F>& c);

// Finite permutation-group model of a Yetter-Drinfeld module M(g, rho):
// rack on a conjugacy class with coset representatives h_x (h_x g h_x^-1 = x).
struct GroupModel {
  std::vector<Perm> generators;
  std::vector<Perm> labels;  // labels[0] = g
  Rack rack;
  PermGroup group;
  std::vector<Perm> reps;
  std::vector<int> rep_length;  // word length of h_x in the generators
};

// Labels default to breadth-first order from g under conjugation.
GroupModel make_group_model(const std::vector<Perm>& generators, const Perm& g);
GroupModel make_group_model(const std::vector<Perm>& generators, const std::vector<Perm>& labels);
// Relabels the class so that its rack equals `target` (must be isomorphic),
// keeping labels[0] = g when an isomorphism allows it.
GroupModel align_group_model(const GroupModel& model, const Rack& target);

// Group generated by pi_x(y, i) = (x > y, i + 1) on X x Z_k; the class of pi_1 is X.
GroupModel enveloping_quotient_model(const Rack& r, int k);

// Named models: "S4-transposition" (rack A), "S4-4cycle" (rack B),
// "S5-transposition" (rack C), "SL23xZ2" (rack T), "A4" (rack T).
GroupModel group_model_preset(const std::string& name);

// A character of the centralizer given by values on words in the class labels.
template <class F>
struct CharacterSpec {
  std::vector<std::pair<std::vector<int>, typename F::Element>> values;
};

// Extends the character over the centralizer of g and returns
// q(x,y) = rho(h_{x>y}^-1 x h_y). Throws NotInCentralizer,
// CharacterInconsistent or CentralizerNotGenerated.
template <class F>
Cocycle<F> group_model_cocycle(const GroupModel& model, const F& f, const CharacterSpec<F>& rho);

// Cocycle presets: "minus1", "one", "const(<scalar>)", "d3char2", "t-new",
// "A-sign", "A-minus", "B-minus", "C-plus", "C-minus", "transposition-sign(A)",
// "transposition-sign(C)", "group(S4,(1234),-1)".
struct CocyclePresetInfo {
  std::string rack;   // preset rack name
  std::string field;  // default field descriptor
};
CocyclePresetInfo cocycle_preset_info(const std::string& name);

template <class F>
Cocycle<F> cocycle_preset(const std::string& name, const Rack& r, const F& f);

}  // namespace braidrack
