#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braidrack/braiding.hpp"
#include "braidrack/hilbert.hpp"
#include "braidrack/hurwitz.hpp"
#include "braidrack/sparse.hpp"

namespace braidrack {

// Element of V^{(x)n} in the word basis; indices are word codes
// (first letter most significant, base d).
template <class F>
struct GradedVector {
  int degree = 0;
  SparseVec<F> terms;
};

template <class F>
GradedVector<F> word_vector(const F& f, int d, const Tuple& word, const typename F::Element& coeff);
template <class F>
GradedVector<F> make_graded(const F& f, int degree, std::vector<std::pair<std::uint64_t, typename F::Element>> terms);
template <class F>
bool is_zero(const GradedVector<F>& v) {
  return v.terms.empty();
}

// c_i with i in 1..n-1, and its inverse.
template <class F>
GradedVector<F> braid_map(const Cocycle<F>& c, int i, const GradedVector<F>& v);
template <class F>
GradedVector<F> braid_map_inverse(const Cocycle<F>& c, int i, const GradedVector<F>& v);

// X_n = sum_k c_1 c_2 ... c_k (c_k applied first) on the full degree.
template <class F>
GradedVector<F> apply_x(const Cocycle<F>& c, const GradedVector<F>& v);
// S_n = (id (x) S_{n-1}) X_n, applied stage by stage.
template <class F>
GradedVector<F> symmetrizer(const Cocycle<F>& c, const GradedVector<F>& v);
// Z_n = sum_k c_k ... c_1 (c_1 applied first); S_n = Z_n (id (x) S_{n-1}).
template <class F>
GradedVector<F> apply_z(const Cocycle<F>& c, const GradedVector<F>& v);
template <class F>
GradedVector<F> symmetrizer_factored(const Cocycle<F>& c, const GradedVector<F>& v);

struct DimsOptions {
  int max_degree = 4;
  unsigned threads = 1;
  std::uint64_t word_cap = 300'000;
  // Rank first over a prime field image (7 or 13) and fail on disagreement.
  bool probe = false;
};

struct GradedDims {
  std::vector<long> dims;
  std::vector<std::string> method;  // "symmetrizer-rank" or "quotient-basis"
  std::string field;
  std::optional<std::uint32_t> probe_prime;
  bool block_diagonal = true;
};

// dim B_n = rank S_n, blockwise over the B_n-orbits of X^n. Im S_n is built
// as Z_n(V (x) Im S_{n-1}). Throws DegreeCap when d^n exceeds word_cap.
template <class F>
GradedDims graded_dims(const Cocycle<F>& c, const DimsOptions& opts);

// Prime field image of a cocycle: Fp itself, QQ reduced mod p, or t sent to a
// root of the modulus mod p. Empty when no image exists.
template <class F>
std::optional<Cocycle<PrimeField>> reduce_mod_prime(const Cocycle<F>& c, std::uint32_t p);

// Which of the special equations a scalar satisfies.
struct ScalarClass {
  bool one = false;
  bool minus_one = false;
  bool cube_root = false;   // 1 + q + q^2 = 0
  bool sixth_root = false;  // 1 - q + q^2 = 0
  std::uint32_t characteristic = 0;
};
template <class F>
ScalarClass scalar_class(const F& f, const typename F::Element& q);

// Kernel of 1 + c12 + c12c23 on a 1-orbit with e-dimensional fiber and x acting by q.
long closed_form_kernel_1orbit(long e, const ScalarClass& q);
// Upper bound on an 8-orbit block; e = 1 and q != -1 gives 2.
long closed_form_kernel_8orbit_bound(long e, bool q_is_minus_one);
// The e^3 x e^3 matrix of 1 + c12 + c12c23 on V_x^{(x)3} with c = q * flip.
template <class F>
SparseMatrix<F> one_orbit_matrix(const F& f, int e, const typename F::Element& q);

struct BlockKernel {
  int size = 0;
  Tuple seed;  // least tuple, 0-based
  long kernel = 0;
  int min_plague = 0;
  bool within_immunity = true;
  bool optimal = false;
};

struct CubicKernel {
  long total = 0;
  std::vector<BlockKernel> blocks;
  std::map<int, std::vector<long>> by_size;
  bool block_diagonal = true;
  bool immunity_bounds = true;
  bool eight_orbit_bounds = true;
  bool one_orbit_closed_form = true;
};

// dim ker(1 + c12 + c12c23) per Hurwitz 3-orbit, with the immunity, 8-orbit
// and 1-orbit checks evaluated on every block.
template <class F>
CubicKernel cubic_kernel(const Cocycle<F>& c, unsigned threads = 1);

// dim ker(1 + c) on V (x) V.
template <class F>
long kernel_one_plus_c(const Cocycle<F>& c);

struct ConditionReport {
  GradedDims dims;
  CubicKernel cubic;
  long dim_v = 0;
  long kernel_one_plus_c = 0;
  long kernel_s3 = 0;
  bool s3_bound = false;  // dim ker S3 <= dim V * dim ker(1+c) + dim ker X3
  bool cond1_truncated = false;
  std::vector<std::vector<HilbertFactor>> factorizations;
  bool cond2 = false;
  bool cond3 = false;
};

template <class F>
ConditionReport check_conditions(const Cocycle<F>& c, int hilbert_degree, unsigned threads = 1);

// Left-hand side of 12 k3 d8 + 24 d1 - k3^2 - 30 k3 + m - 8 d^2 (e^3 - 1) + 8 (e - 1) >= 0
// as printed, and of the form with the fiber dimension carried through
// (24 d1 + 12 k3 d8 - e^3 k3^2 - 30 e^3 k3 + e^3 m - 8 e^3 + 8 e). They agree at e = 1.
long long inequality_lhs_printed(long long d, long long e, long long k3, long long m, long long d1, long long d8);
long long inequality_lhs(long long d, long long e, long long k3, long long m, long long d1, long long d8);
bool general_inequality(long long d, long long e, long long k3, long long m, long long d1, long long d8);
// Specializations at (d1, d8) = (e(e^2-1)/3, e^2(5e+1)/2) and (e(e^2+2)/3, e^2(5e-1)/2):
// returns e k3^2 - e m - 6 k3 and e^2 k3^2 - e^2 m + 6 e k3 - 24 (must be <= 0).
long long reduced_inequality_minus_one(long long e, long long k3, long long m);
long long reduced_inequality_other(long long e, long long k3, long long m);
// Largest k3 allowed by the reductions for the given fiber dimension.
long long k3_bound(long long e, bool q_is_minus_one);

// S_n(r) = 0 for every relation.
template <class F>
std::vector<bool> relations_in_kernel(const Cocycle<F>& c, const std::vector<GradedVector<F>>& relations);

enum class DerivationSide { Left, Right };

// Left: d_x(y w) = [x=y] w + q(y, phi_y^-1 x) y d_{phi_y^-1 x}(w).
// Right: d_x(w z) = [x=z] w + q(x, z) d_x(w) (x > z).
template <class F>
GradedVector<F> derivation(const Cocycle<F>& c, int x, const GradedVector<F>& v, DerivationSide side = DerivationSide::Left);
// Applies the listed derivations, rightmost first, down to degree zero or below.
template <class F>
GradedVector<F> derivation_chain(const Cocycle<F>& c, const std::vector<int>& letters, const GradedVector<F>& v,
                                 DerivationSide side = DerivationSide::Left);

// u in ker S_n <=> d_x(u) in ker S_{n-1} for all x, on a kernel basis of every
// n-block plus `samples` random vectors per block, for n = 2..max_degree.
template <class F>
bool derivation_biconditional(const Cocycle<F>& c, int max_degree, DerivationSide side, std::mt19937_64& rng,
                              int samples = 4);

}  // namespace braidrack
