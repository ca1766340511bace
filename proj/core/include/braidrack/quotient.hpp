#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidrack/nichols.hpp"

namespace braidrack {

// Braided space with homogeneous relations.
template <class F>
struct Presentation {
  Cocycle<F> space;
  std::vector<GradedVector<F>> relations;
};

struct QuotientOptions {
  int max_degree = 30;
  // Bound on dim A_{n-1} * d per degree.
  std::uint64_t ambient_cap = 2'000'000;
};

// Dimensions of T(V)/(relations), degree by degree. A_n is built as
// (A_{n-1} (x) V) modulo the normal forms of u r, u a normal word of degree
// n - deg r. Stops after the first zero or at max_degree.
template <class F>
GradedDims quotient_dims(const Presentation<F>& p, const QuotientOptions& opts = {});

// Relation from (word, coefficient) terms over letters 0..d-1; all words
// must share one length (NotHomogeneous otherwise).
template <class F>
GradedVector<F> relation_from_terms(const F& f, int d, const std::vector<std::pair<Tuple, typename F::Element>>& terms);

}  // namespace braidrack
