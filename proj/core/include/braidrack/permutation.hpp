#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace braidrack {

// Permutation of {0..n-1}; printed and parsed 1-based in cycle notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint16_t> images);

  static Perm identity(std::size_t n);
  // "(1 2 3)(4 5)" or "(1,2)"; n = 0 infers the degree from the largest point.
  static Perm parse(std::string_view cycles, std::size_t n = 0);
  static Perm from_images(const std::vector<int>& images);

  std::size_t degree() const { return img_.size(); }
  int operator()(int x) const {
    return static_cast<std::size_t>(x) < img_.size() ? img_[static_cast<std::size_t>(x)] : x;
  }
  const std::vector<std::uint16_t>& images() const { return img_; }

  // (a * b)(x) = a(b(x))
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm pow(long e) const;
  Perm extended(std::size_t n) const;

  bool is_identity() const;
  long order() const;
  // Cycle lengths in decreasing order, fixed points included.
  std::vector<int> cycle_type() const;
  std::string str() const;

  bool operator==(const Perm& rhs) const;
  std::strong_ordering operator<=>(const Perm& rhs) const;

 private:
  std::vector<std::uint16_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

// Finite permutation group enumerated by breadth-first closure.
class PermGroup {
 public:
  PermGroup(std::vector<Perm> generators, std::size_t cap = 10'000'000);

  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return gens_; }
  std::size_t degree() const { return n_; }
  bool contains(const Perm& p) const;
  // Position in elements(), or npos.
  std::size_t index_of(const Perm& p) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<Perm> centralizer(const Perm& g) const;

 private:
  std::size_t n_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

// Order of the group generated by gens; throws GroupSizeCap beyond cap.
std::size_t group_order(const std::vector<Perm>& gens, std::size_t cap = 10'000'000);

long lcm_of(const std::vector<int>& values);

}  // namespace braidrack
