#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "braidrack/rack.hpp"

namespace braidrack {

using Tuple = std::vector<int>;

// sigma_i for strand i in 1..n-1: (.., x_i, x_{i+1}, ..) -> (.., x_i > x_{i+1}, x_i, ..)
Tuple sigma(const Rack& r, int i, Tuple t);
Tuple sigma_inverse(const Rack& r, int i, Tuple t);

// phi_{x_1} o ... o phi_{x_n}; constant along a Hurwitz orbit.
Perm tuple_product(const Rack& r, const Tuple& t);

class HurwitzOrbit {
 public:
  HurwitzOrbit() = default;
  HurwitzOrbit(int arity, std::vector<Tuple> tuples, std::vector<std::vector<int>> edges);

  int arity() const { return arity_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  const Tuple& tuple(std::size_t k) const { return tuples_[k]; }
  // Index of sigma_i(tuple k), i in 1..n-1.
  int step(int i, std::size_t k) const { return edges_[static_cast<std::size_t>(i - 1)][k]; }
  int step_inverse(int i, std::size_t k) const { return inverse_[static_cast<std::size_t>(i - 1)][k]; }
  const std::vector<int>& edges(int i) const { return edges_[static_cast<std::size_t>(i - 1)]; }
  std::optional<std::size_t> index_of(const Tuple& t) const;

 private:
  int arity_ = 0;
  std::vector<Tuple> tuples_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<int>> inverse_;
  std::map<Tuple, std::size_t> index_;
};

// Breadth-first closure from the seed (sigma_1..sigma_{n-1}, then inverses).
HurwitzOrbit orbit(const Rack& r, const Tuple& seed, std::size_t cap = 1'000'000);

// Partition of X^n into orbits; words are base-d codes with the first letter most significant.
struct OrbitPartition {
  int arity = 0;
  int d = 0;
  std::vector<std::uint32_t> orbit_of;            // word code -> orbit id
  std::vector<std::vector<std::uint64_t>> members;  // orbit id -> sorted word codes
};
OrbitPartition orbit_partition(const Rack& r, int n, std::uint64_t cap = 300'000);

std::uint64_t encode_word(const Tuple& t, int d);
Tuple decode_word(std::uint64_t code, int n, int d);

// All orbits of X^n, each seeded at its lexicographically least tuple, in seed order.
std::vector<HurwitzOrbit> all_orbits(const Rack& r, int n = 3, std::uint64_t cap = 300'000);

struct OrbitCensus {
  int arity = 3;
  std::map<int, long> counts;
  long total = 0;
  bool total_check = false;
  // Closed-form counts for braided indecomposable racks with n = 3.
  std::optional<std::map<int, long>> formula;
  bool formula_agrees = false;
};

OrbitCensus census(const Rack& r, int n = 3, unsigned threads = 1);
std::map<int, long> census_formula(long d, long k2, long k3, long m, long t);

// Bijection o1 -> o2 commuting with every sigma_i, if any.
std::optional<std::vector<int>> orbit_isomorphism(const HurwitzOrbit& o1, const HurwitzOrbit& o2);
bool orbit_isomorphic(const HurwitzOrbit& o1, const HurwitzOrbit& o2);

// Element of Inn(X) as a composite of phi_x^(+-1); word entries are (element, exponent).
Perm inner_element(const Rack& r, const std::vector<std::pair<int, int>>& word);

// Applies g diagonally; g must be a rack automorphism (e.g. inner).
HurwitzOrbit conjugate_orbit(const Rack& r, const Perm& g, const HurwitzOrbit& o);

// Reference orbit graph of the given size (1,3,6,8,9,12,16,24) for arity 3.
HurwitzOrbit reference_orbit(int size);
// Size of the reference graph isomorphic to o, if any.
std::optional<int> reference_shape(const HurwitzOrbit& o);

}  // namespace braidrack
