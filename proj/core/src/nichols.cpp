#include "braidrack/nichols.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <type_traits>

#include "braidrack/error.hpp"
#include "braidrack/parallel.hpp"
#include "braidrack/percolate.hpp"

namespace braidrack {

namespace {

constexpr int kMaxDegree = 40;

// Positional access to base-d word codes of a fixed degree.
struct Words {
  int d;
  int n;
  std::vector<std::uint64_t> pw;  // pw[k] = d^k

  Words(int d_, int n_) : d(d_), n(n_), pw(static_cast<std::size_t>(n_) + 1, 1) {
    if (n_ > kMaxDegree) throw Error(ErrorKind::DegreeCap, "degree " + std::to_string(n_));
    for (int k = 1; k <= n_; ++k) {
      if (pw[static_cast<std::size_t>(k - 1)] > UINT64_MAX / static_cast<std::uint64_t>(d_))
        throw Error(ErrorKind::DegreeCap, "words of degree " + std::to_string(n_) + " overflow 64-bit codes");
      pw[static_cast<std::size_t>(k)] = pw[static_cast<std::size_t>(k - 1)] * static_cast<std::uint64_t>(d_);
    }
  }
  void decode(std::uint64_t code, int* out) const {
    for (int i = n - 1; i >= 0; --i) {
      out[i] = static_cast<int>(code % static_cast<std::uint64_t>(d));
      code /= static_cast<std::uint64_t>(d);
    }
  }
  std::uint64_t encode(const int* w) const {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i) code = code * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(w[i]);
    return code;
  }
};

template <class F>
using Terms = std::vector<std::pair<std::uint64_t, typename F::Element>>;

template <class F>
GradedVector<F> finish(const F& f, int degree, Terms<F> terms) {
  return GradedVector<F>{degree, make_sparse(f, std::move(terms))};
}

// X on the suffix starting at 0-based position s: sum_k c_{s+1} ... c_{s+k} (1-based legs).
template <class F>
GradedVector<F> x_stage(const Cocycle<F>& c, const GradedVector<F>& v, int s) {
  const F& f = c.field();
  const Rack& r = c.rack();
  Words words(r.size(), v.degree);
  int n = v.degree;
  Terms<F> out;
  out.reserve(v.terms.size() * static_cast<std::size_t>(n - s));
  std::array<int, kMaxDegree> y{}, z{};
  for (std::size_t t = 0; t < v.terms.size(); ++t) {
    words.decode(v.terms.idx[t], y.data());
    out.emplace_back(v.terms.idx[t], v.terms.val[t]);
    for (int p = s + 1; p < n; ++p) {
      int b = y[static_cast<std::size_t>(p)];
      auto coef = v.terms.val[t];
      for (int j = p - 1; j >= s; --j) {
        int a = y[static_cast<std::size_t>(j)];
        coef = f.mul(coef, c.q(a, b));
        b = r.op(a, b);
      }
      z = y;
      z[static_cast<std::size_t>(s)] = b;
      for (int j = s; j < p; ++j) z[static_cast<std::size_t>(j + 1)] = y[static_cast<std::size_t>(j)];
      out.emplace_back(words.encode(z.data()), std::move(coef));
    }
  }
  return finish(f, n, std::move(out));
}

// Z = sum_k c_k ... c_1: the first letter travels right acting on the letters it passes.
template <class F>
void z_word(const Cocycle<F>& c, const Words& words, std::uint64_t code, const typename F::Element& coeff,
            Terms<F>& out) {
  const F& f = c.field();
  const Rack& r = c.rack();
  std::array<int, kMaxDegree> y{}, z{};
  words.decode(code, y.data());
  out.emplace_back(code, coeff);
  int x = y[0];
  auto coef = coeff;
  z = y;
  for (int k = 1; k < words.n; ++k) {
    int b = y[static_cast<std::size_t>(k)];
    coef = f.mul(coef, c.q(x, b));
    z[static_cast<std::size_t>(k - 1)] = r.op(x, b);
    z[static_cast<std::size_t>(k)] = x;
    out.emplace_back(words.encode(z.data()), coef);
  }
}

}  // namespace

template <class F>
GradedVector<F> word_vector(const F& f, int d, const Tuple& word, const typename F::Element& coeff) {
  Words words(d, static_cast<int>(word.size()));
  for (int x : word)
    if (x < 0 || x >= d) throw Error(ErrorKind::InvalidArgument, "letter out of range");
  Terms<F> t;
  t.emplace_back(words.encode(word.data()), coeff);
  return finish(f, static_cast<int>(word.size()), std::move(t));
}

template <class F>
GradedVector<F> make_graded(const F& f, int degree, std::vector<std::pair<std::uint64_t, typename F::Element>> terms) {
  return finish(f, degree, std::move(terms));
}

template <class F>
GradedVector<F> braid_map(const Cocycle<F>& c, int i, const GradedVector<F>& v) {
  if (i < 1 || i >= v.degree) throw Error(ErrorKind::InvalidArgument, "braid leg out of range");
  const F& f = c.field();
  const Rack& r = c.rack();
  Words words(r.size(), v.degree);
  Terms<F> out;
  std::array<int, kMaxDegree> y{};
  for (std::size_t t = 0; t < v.terms.size(); ++t) {
    words.decode(v.terms.idx[t], y.data());
    int a = y[static_cast<std::size_t>(i - 1)], b = y[static_cast<std::size_t>(i)];
    y[static_cast<std::size_t>(i - 1)] = r.op(a, b);
    y[static_cast<std::size_t>(i)] = a;
    out.emplace_back(words.encode(y.data()), f.mul(c.q(a, b), v.terms.val[t]));
  }
  return finish(f, v.degree, std::move(out));
}

template <class F>
GradedVector<F> braid_map_inverse(const Cocycle<F>& c, int i, const GradedVector<F>& v) {
  if (i < 1 || i >= v.degree) throw Error(ErrorKind::InvalidArgument, "braid leg out of range");
  const F& f = c.field();
  const Rack& r = c.rack();
  Words words(r.size(), v.degree);
  Terms<F> out;
  std::array<int, kMaxDegree> y{};
  for (std::size_t t = 0; t < v.terms.size(); ++t) {
    words.decode(v.terms.idx[t], y.data());
    int u = y[static_cast<std::size_t>(i - 1)], w = y[static_cast<std::size_t>(i)];
    int b = r.op_inv(w, u);
    y[static_cast<std::size_t>(i - 1)] = w;
    y[static_cast<std::size_t>(i)] = b;
    out.emplace_back(words.encode(y.data()), f.mul(f.inv(c.q(w, b)), v.terms.val[t]));
  }
  return finish(f, v.degree, std::move(out));
}

template <class F>
GradedVector<F> apply_x(const Cocycle<F>& c, const GradedVector<F>& v) {
  if (v.degree < 2) return v;
  return x_stage(c, v, 0);
}

template <class F>
GradedVector<F> symmetrizer(const Cocycle<F>& c, const GradedVector<F>& v) {
  GradedVector<F> out = v;
  for (int s = 0; s + 1 < v.degree; ++s) out = x_stage(c, out, s);
  return out;
}

template <class F>
GradedVector<F> apply_z(const Cocycle<F>& c, const GradedVector<F>& v) {
  if (v.degree < 2) return v;
  Words words(c.size(), v.degree);
  Terms<F> out;
  for (std::size_t t = 0; t < v.terms.size(); ++t) z_word(c, words, v.terms.idx[t], v.terms.val[t], out);
  return finish(c.field(), v.degree, std::move(out));
}

template <class F>
GradedVector<F> symmetrizer_factored(const Cocycle<F>& c, const GradedVector<F>& v) {
  GradedVector<F> out = v;
  for (int s = 1; s + 1 < v.degree; ++s) out = x_stage(c, out, s);
  return apply_z(c, out);
}

namespace {

template <class F>
GradedDims graded_dims_exact(const Cocycle<F>& c, const DimsOptions& opts) {
  const F& f = c.field();
  const Rack& r = c.rack();
  int d = r.size();
  GradedDims res;
  res.field = f.spec();
  res.dims = {1};
  res.method = {"symmetrizer-rank"};
  if (opts.max_degree < 1) return res;
  res.dims.push_back(d);
  res.method.push_back("symmetrizer-rank");
  // Basis of Im S_{n-1}, grouped by block.
  std::vector<std::vector<SparseVec<F>>> basis(static_cast<std::size_t>(d));
  for (int x = 0; x < d; ++x) {
    SparseVec<F> e;
    e.idx.push_back(static_cast<std::uint64_t>(x));
    e.val.push_back(f.one());
    basis[static_cast<std::size_t>(x)].push_back(std::move(e));
  }
  bool vanished = false;
  for (int n = 2; n <= opts.max_degree; ++n) {
    if (vanished) {
      res.dims.push_back(0);
      res.method.push_back("symmetrizer-rank");
      continue;
    }
    Words words(d, n);
    if (words.pw[static_cast<std::size_t>(n)] > opts.word_cap)
      throw Error(ErrorKind::DegreeCap, std::to_string(d) + "^" + std::to_string(n) + " words exceed the cap " +
                                            std::to_string(opts.word_cap));
    OrbitPartition part = orbit_partition(r, n, opts.word_cap);
    std::vector<std::vector<std::pair<int, const SparseVec<F>*>>> tasks(part.members.size());
    std::uint64_t lead = words.pw[static_cast<std::size_t>(n - 1)];
    for (const auto& blk : basis)
      for (const auto& b : blk)
        for (int x = 0; x < d; ++x) {
          std::uint64_t w = static_cast<std::uint64_t>(x) * lead + b.idx.front();
          tasks[part.orbit_of[w]].emplace_back(x, &b);
        }
    std::vector<std::vector<SparseVec<F>>> next(part.members.size());
    std::vector<char> diagonal(part.members.size(), 1);
    parallel_for(part.members.size(), opts.threads, [&](std::size_t blk) {
      if (tasks[blk].empty()) return;
      Echelon<F> ech(f);
      Terms<F> buf;
      for (const auto& [x, b] : tasks[blk]) {
        buf.clear();
        std::uint64_t prefix = static_cast<std::uint64_t>(x) * lead;
        for (std::size_t k = 0; k < b->size(); ++k) z_word(c, words, prefix + b->idx[k], b->val[k], buf);
        for (const auto& [w, _] : buf)
          if (part.orbit_of[w] != blk) diagonal[blk] = 0;
        ech.insert(make_sparse(f, buf));
      }
      next[blk] = ech.rows();
    });
    long dim = 0;
    for (std::size_t blk = 0; blk < next.size(); ++blk) {
      dim += static_cast<long>(next[blk].size());
      if (!diagonal[blk]) res.block_diagonal = false;
    }
    res.dims.push_back(dim);
    res.method.push_back("symmetrizer-rank");
    basis = std::move(next);
    if (dim == 0) vanished = true;
  }
  return res;
}

template <class Base>
std::optional<std::uint32_t> reduce_base(const Base& base, const typename Base::Element& x, const PrimeField& fp) {
  if constexpr (std::is_same_v<Base, PrimeField>) {
    if (base.characteristic() != fp.characteristic()) return std::nullopt;
    return x;
  } else {
    mpz_class p = fp.characteristic();
    if (mpz_divisible_p(x.get_den_mpz_t(), p.get_mpz_t())) return std::nullopt;
    return fp.from_rational(x);
  }
}

}  // namespace

template <class F>
std::optional<Cocycle<PrimeField>> reduce_mod_prime(const Cocycle<F>& c, std::uint32_t p) {
  PrimeField fp(p);
  const F& f = c.field();
  auto build = [&](auto&& map_one) -> std::optional<Cocycle<PrimeField>> {
    std::vector<PrimeField::Element> vals;
    vals.reserve(c.values().size());
    for (const auto& v : c.values()) {
      auto m = map_one(v);
      if (!m || *m == 0) return std::nullopt;
      vals.push_back(*m);
    }
    return Cocycle<PrimeField>(c.rack(), fp, std::move(vals));
  };
  if constexpr (std::is_same_v<F, PrimeField> || std::is_same_v<F, RationalField>) {
    return build([&](const typename F::Element& x) { return reduce_base(f, x, fp); });
  } else {
    const auto& base = f.base();
    std::vector<std::uint32_t> mod;
    for (const auto& m : f.modulus_lower()) {
      auto r = reduce_base(base, m, fp);
      if (!r) return std::nullopt;
      mod.push_back(*r);
    }
    for (std::uint32_t root = 0; root < p; ++root) {
      std::uint32_t val = 1;  // monic leading term
      for (std::size_t k = mod.size(); k-- > 0;) val = fp.add(fp.mul(val, root), mod[k]);
      if (val != 0) continue;
      auto out = build([&](const typename F::Element& x) -> std::optional<std::uint32_t> {
        std::uint32_t acc = 0;
        for (std::size_t k = x.size(); k-- > 0;) {
          auto r = reduce_base(base, x[k], fp);
          if (!r) return std::nullopt;
          acc = fp.add(fp.mul(acc, root), *r);
        }
        return acc;
      });
      if (out) return out;
    }
    return std::nullopt;
  }
}

template <class F>
GradedDims graded_dims(const Cocycle<F>& c, const DimsOptions& opts) {
  if constexpr (!std::is_same_v<F, PrimeField>) {
    if (opts.probe) {
      for (std::uint32_t p : {7u, 13u}) {
        auto image = reduce_mod_prime(c, p);
        if (!image) continue;
        GradedDims probe = graded_dims_exact(*image, opts);
        GradedDims exact = graded_dims_exact(c, opts);
        if (probe.dims != exact.dims)
          throw Error(ErrorKind::ProbeMismatch, "ranks over Fp(" + std::to_string(p) + ") differ from " + exact.field);
        exact.probe_prime = p;
        return exact;
      }
    }
  }
  return graded_dims_exact(c, opts);
}

template <class F>
ScalarClass scalar_class(const F& f, const typename F::Element& q) {
  ScalarClass s;
  auto one = f.one();
  auto q2 = f.mul(q, q);
  s.one = f.equal(q, one);
  s.minus_one = f.equal(q, f.neg(one));
  s.cube_root = f.is_zero(f.add(f.add(one, q), q2));
  s.sixth_root = f.is_zero(f.add(f.sub(one, q), q2));
  s.characteristic = f.characteristic();
  return s;
}

long closed_form_kernel_1orbit(long e, const ScalarClass& q) {
  std::uint32_t ch = q.characteristic;
  if (ch == 3 && q.one) return e * (e * e + 2) / 3;
  if (q.minus_one || (ch != 3 && q.one)) return e * (e * e - 1) / 3;
  if (ch != 3 && q.cube_root) return e * (e + 1) * (e + 2) / 6;
  if (ch != 2 && ch != 3 && q.sixth_root) return e * (e - 1) * (e - 2) / 6;
  return 0;
}

long closed_form_kernel_8orbit_bound(long e, bool q_is_minus_one) {
  if (q_is_minus_one) return e * e * (5 * e + 1) / 2;
  if (e == 1) return 2;
  return e * e * (5 * e - 1) / 2;
}

template <class F>
SparseMatrix<F> one_orbit_matrix(const F& f, int e, const typename F::Element& q) {
  auto idx = [e](int i, int j, int k) { return static_cast<std::uint64_t>((i * e + j) * e + k); };
  auto q2 = f.mul(q, q);
  std::size_t n = static_cast<std::size_t>(e * e * e);
  std::vector<std::vector<std::pair<std::uint64_t, typename F::Element>>> rows(n);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j)
      for (int k = 0; k < e; ++k) {
        std::uint64_t col = idx(i, j, k);
        rows[idx(i, j, k)].emplace_back(col, f.one());
        rows[idx(j, i, k)].emplace_back(col, q);
        rows[idx(k, i, j)].emplace_back(col, q2);
      }
  SparseMatrix<F> m;
  m.cols = n;
  for (auto& r : rows) m.rows.push_back(make_sparse(f, std::move(r)));
  return m;
}

template <class F>
CubicKernel cubic_kernel(const Cocycle<F>& c, unsigned threads) {
  const F& f = c.field();
  const Rack& r = c.rack();
  int d = r.size();
  std::vector<HurwitzOrbit> orbits = all_orbits(r, 3);
  std::map<int, int> plague;
  for (const auto& o : orbits) {
    int size = static_cast<int>(o.size());
    if (plague.count(size)) continue;
    plague[size] = size <= 24 ? minimal_plague(o).min_size : -1;
  }
  CubicKernel res;
  res.blocks.resize(orbits.size());
  std::vector<char> diagonal(orbits.size(), 1);
  Words words(d, 3);
  parallel_for(orbits.size(), threads, [&](std::size_t k) {
    const HurwitzOrbit& o = orbits[k];
    std::unordered_map<std::uint64_t, std::uint64_t> local;
    for (std::size_t i = 0; i < o.size(); ++i) local.emplace(encode_word(o.tuple(i), d), i);
    SparseMatrix<F> m;
    m.cols = o.size();
    for (std::size_t i = 0; i < o.size(); ++i) {
      auto img = x_stage(c, word_vector(f, d, o.tuple(i), f.one()), 0);
      Terms<F> entries;
      for (std::size_t t = 0; t < img.terms.size(); ++t) {
        auto it = local.find(img.terms.idx[t]);
        if (it == local.end()) {
          diagonal[k] = 0;
          continue;
        }
        entries.emplace_back(it->second, img.terms.val[t]);
      }
      m.rows.push_back(make_sparse(f, std::move(entries)));
    }
    BlockKernel& b = res.blocks[k];
    b.size = static_cast<int>(o.size());
    b.seed = o.tuple(0);
    for (const auto& t : o.tuples()) b.seed = std::min(b.seed, t);
    b.kernel = static_cast<long>(o.size()) - static_cast<long>(rank(f, m));
    b.min_plague = plague.at(b.size);
    b.within_immunity = b.min_plague < 0 || b.kernel <= b.min_plague;
    b.optimal = b.min_plague >= 0 && b.kernel == b.min_plague;
  });
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& b = res.blocks[k];
    res.total += b.kernel;
    res.by_size[b.size].push_back(b.kernel);
    if (!diagonal[k]) res.block_diagonal = false;
    if (!b.within_immunity) res.immunity_bounds = false;
    if (b.size == 1) {
      int x = b.seed[0];
      if (b.kernel != closed_form_kernel_1orbit(1, scalar_class(f, c.q(x, x)))) res.one_orbit_closed_form = false;
    }
    if (b.size == 8) {
      bool all_minus = true;
      for (const auto& t : orbits[k].tuples())
        for (int x : t)
          if (!f.equal(c.q(x, x), f.neg(f.one()))) all_minus = false;
      if (b.kernel > closed_form_kernel_8orbit_bound(1, all_minus)) res.eight_orbit_bounds = false;
    }
  }
  return res;
}

template <class F>
long kernel_one_plus_c(const Cocycle<F>& c) {
  const F& f = c.field();
  int d = c.size();
  std::vector<Terms<F>> rows(static_cast<std::size_t>(d * d));
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      std::uint64_t col = static_cast<std::uint64_t>(x * d + y);
      rows[col].emplace_back(col, f.one());
      rows[static_cast<std::size_t>(c.rack().op(x, y) * d + x)].emplace_back(col, c.q(x, y));
    }
  SparseMatrix<F> m;
  m.cols = static_cast<std::uint64_t>(d * d);
  for (auto& r : rows) m.rows.push_back(make_sparse(f, std::move(r)));
  return static_cast<long>(m.cols) - static_cast<long>(rank(f, m));
}

template <class F>
ConditionReport check_conditions(const Cocycle<F>& c, int hilbert_degree, unsigned threads) {
  if (hilbert_degree < 3) throw Error(ErrorKind::InvalidArgument, "conditions need dims through degree 3");
  ConditionReport rep;
  DimsOptions opts;
  opts.max_degree = hilbert_degree;
  opts.threads = threads;
  rep.dims = graded_dims(c, opts);
  rep.cubic = cubic_kernel(c, threads);
  long d = c.size();
  rep.dim_v = d;
  rep.kernel_one_plus_c = kernel_one_plus_c(c);
  rep.kernel_s3 = d * d * d - rep.dims.dims[3];
  rep.s3_bound = rep.kernel_s3 <= d * rep.kernel_one_plus_c + rep.cubic.total;
  Series s(rep.dims.dims.begin(), rep.dims.dims.end());
  rep.factorizations = hilbert_factorizations(s);
  rep.cond1_truncated = !rep.factorizations.empty();
  rep.cond2 = 3 * rep.dims.dims[3] <= d * (3 * rep.dims.dims[2] - (d * d - 1));
  rep.cond3 = 3 * rep.cubic.total >= d * (d * d - 1);
  return rep;
}

long long inequality_lhs_printed(long long d, long long e, long long k3, long long m, long long d1, long long d8) {
  return 12 * k3 * d8 + 24 * d1 - k3 * k3 - 30 * k3 + m - 8 * d * d * (e * e * e - 1) + 8 * (e - 1);
}

long long inequality_lhs(long long d, long long e, long long k3, long long m, long long d1, long long d8) {
  (void)d;
  long long e3 = e * e * e;
  return 24 * d1 + 12 * k3 * d8 - e3 * k3 * k3 - 30 * e3 * k3 + e3 * m - 8 * e3 + 8 * e;
}

bool general_inequality(long long d, long long e, long long k3, long long m, long long d1, long long d8) {
  return inequality_lhs(d, e, k3, m, d1, d8) >= 0;
}

long long reduced_inequality_minus_one(long long e, long long k3, long long m) { return e * k3 * k3 - e * m - 6 * k3; }

long long reduced_inequality_other(long long e, long long k3, long long m) {
  return e * e * k3 * k3 - e * e * m + 6 * e * k3 - 24;
}

long long k3_bound(long long e, bool q_is_minus_one) {
  long long best = -1;
  for (long long k3 = 0; k3 <= 64; ++k3)
    for (long long m = 0; m <= k3; m += 3) {
      long long v = q_is_minus_one ? reduced_inequality_minus_one(e, k3, m) : reduced_inequality_other(e, k3, m);
      if (v <= 0) best = k3;
    }
  return best;
}

template <class F>
std::vector<bool> relations_in_kernel(const Cocycle<F>& c, const std::vector<GradedVector<F>>& relations) {
  std::vector<bool> out;
  for (const auto& rel : relations) out.push_back(is_zero(symmetrizer(c, rel)));
  return out;
}

template <class F>
GradedVector<F> derivation(const Cocycle<F>& c, int x, const GradedVector<F>& v, DerivationSide side) {
  const F& f = c.field();
  const Rack& r = c.rack();
  int n = v.degree;
  if (n == 0) return GradedVector<F>{-1, {}};
  Words words(r.size(), n);
  Words shorter(r.size(), n - 1);
  Terms<F> out;
  std::array<int, kMaxDegree> y{}, z{};
  for (std::size_t t = 0; t < v.terms.size(); ++t) {
    words.decode(v.terms.idx[t], y.data());
    auto coef = v.terms.val[t];
    if (side == DerivationSide::Left) {
      int target = x;
      for (int i = 0; i < n; ++i) {
        int yi = y[static_cast<std::size_t>(i)];
        if (yi == target) {
          int k = 0;
          for (int j = 0; j < n; ++j)
            if (j != i) z[static_cast<std::size_t>(k++)] = y[static_cast<std::size_t>(j)];
          out.emplace_back(shorter.encode(z.data()), coef);
        }
        int next = r.op_inv(yi, target);
        coef = f.mul(coef, c.q(yi, next));
        target = next;
      }
    } else {
      // Removing position i moves x across the suffix: letters y_j become x > y_j.
      for (int i = n - 1; i >= 0; --i) {
        if (y[static_cast<std::size_t>(i)] == x) {
          int k = 0;
          for (int j = 0; j < i; ++j) z[static_cast<std::size_t>(k++)] = y[static_cast<std::size_t>(j)];
          for (int j = i + 1; j < n; ++j) z[static_cast<std::size_t>(k++)] = r.op(x, y[static_cast<std::size_t>(j)]);
          out.emplace_back(shorter.encode(z.data()), coef);
        }
        coef = f.mul(coef, c.q(x, y[static_cast<std::size_t>(i)]));
      }
    }
  }
  return finish(f, n - 1, std::move(out));
}

template <class F>
GradedVector<F> derivation_chain(const Cocycle<F>& c, const std::vector<int>& letters, const GradedVector<F>& v,
                                 DerivationSide side) {
  GradedVector<F> cur = v;
  for (std::size_t k = letters.size(); k-- > 0;) {
    if (cur.degree <= 0) return GradedVector<F>{cur.degree - 1, {}};
    cur = derivation(c, letters[k], cur, side);
  }
  return cur;
}

template <class F>
bool derivation_biconditional(const Cocycle<F>& c, int max_degree, DerivationSide side, std::mt19937_64& rng,
                              int samples) {
  const F& f = c.field();
  int d = c.size();
  auto in_kernel = [&](const GradedVector<F>& u) {
    if (u.degree == 0) return is_zero(u);
    return is_zero(symmetrizer(c, u));
  };
  auto rhs = [&](const GradedVector<F>& u) {
    for (int x = 0; x < d; ++x)
      if (!in_kernel(derivation(c, x, u, side))) return false;
    return true;
  };
  for (int n = 2; n <= max_degree; ++n) {
    OrbitPartition part = orbit_partition(c.rack(), n);
    for (const auto& members : part.members) {
      std::unordered_map<std::uint64_t, std::uint64_t> local;
      for (std::size_t i = 0; i < members.size(); ++i) local.emplace(members[i], i);
      std::vector<Terms<F>> rows(members.size());
      for (std::size_t j = 0; j < members.size(); ++j) {
        GradedVector<F> e{n, {}};
        e.terms.idx.push_back(members[j]);
        e.terms.val.push_back(f.one());
        auto img = symmetrizer(c, e);
        for (std::size_t t = 0; t < img.terms.size(); ++t)
          rows[local.at(img.terms.idx[t])].emplace_back(j, img.terms.val[t]);
      }
      SparseMatrix<F> m;
      m.cols = members.size();
      for (auto& r : rows) m.rows.push_back(make_sparse(f, std::move(r)));
      auto to_graded = [&](const SparseVec<F>& local_vec) {
        Terms<F> t;
        for (std::size_t k = 0; k < local_vec.size(); ++k) t.emplace_back(members[local_vec.idx[k]], local_vec.val[k]);
        return finish(f, n, std::move(t));
      };
      auto kernel = kernel_basis(f, m);
      for (const auto& kv : kernel)
        if (!rhs(to_graded(kv))) return false;
      std::uniform_int_distribution<int> coeff(-3, 3);
      std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
      for (int s = 0; s < samples; ++s) {
        Terms<F> t;
        int support = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < support; ++k) t.emplace_back(members[pick(rng)], f.from_int(coeff(rng)));
        // Half of the samples are perturbed kernel vectors.
        if (!kernel.empty() && (s % 2 == 1)) {
          auto kv = to_graded(kernel[rng() % kernel.size()]);
          for (std::size_t k = 0; k < kv.terms.size(); ++k) t.emplace_back(kv.terms.idx[k], kv.terms.val[k]);
        }
        auto u = finish(f, n, std::move(t));
        if (is_zero(u)) continue;
        if (in_kernel(u) != rhs(u)) return false;
      }
    }
  }
  return true;
}

#define BRAIDRACK_INSTANTIATE(F)                                                                                  \
  template GradedVector<F> word_vector<F>(const F&, int, const Tuple&, const F::Element&);                       \
  template GradedVector<F> make_graded<F>(const F&, int, std::vector<std::pair<std::uint64_t, F::Element>>);     \
  template GradedVector<F> braid_map<F>(const Cocycle<F>&, int, const GradedVector<F>&);                          \
  template GradedVector<F> braid_map_inverse<F>(const Cocycle<F>&, int, const GradedVector<F>&);                  \
  template GradedVector<F> apply_x<F>(const Cocycle<F>&, const GradedVector<F>&);                                 \
  template GradedVector<F> symmetrizer<F>(const Cocycle<F>&, const GradedVector<F>&);                             \
  template GradedVector<F> apply_z<F>(const Cocycle<F>&, const GradedVector<F>&);                                 \
  template GradedVector<F> symmetrizer_factored<F>(const Cocycle<F>&, const GradedVector<F>&);                    \
  template GradedDims graded_dims<F>(const Cocycle<F>&, const DimsOptions&);                                      \
  template std::optional<Cocycle<PrimeField>> reduce_mod_prime<F>(const Cocycle<F>&, std::uint32_t);             \
  template ScalarClass scalar_class<F>(const F&, const F::Element&);                                              \
  template SparseMatrix<F> one_orbit_matrix<F>(const F&, int, const F::Element&);                                 \
  template CubicKernel cubic_kernel<F>(const Cocycle<F>&, unsigned);                                              \
  template long kernel_one_plus_c<F>(const Cocycle<F>&);                                                          \
  template ConditionReport check_conditions<F>(const Cocycle<F>&, int, unsigned);                                 \
  template std::vector<bool> relations_in_kernel<F>(const Cocycle<F>&, const std::vector<GradedVector<F>>&);      \
  template GradedVector<F> derivation<F>(const Cocycle<F>&, int, const GradedVector<F>&, DerivationSide);         \
  template GradedVector<F> derivation_chain<F>(const Cocycle<F>&, const std::vector<int>&, const GradedVector<F>&, \
                                               DerivationSide);                                                   \
  template bool derivation_biconditional<F>(const Cocycle<F>&, int, DerivationSide, std::mt19937_64&, int);

BRAIDRACK_INSTANTIATE(PrimeField)
BRAIDRACK_INSTANTIATE(RationalField)
BRAIDRACK_INSTANTIATE(ExtPrime)
BRAIDRACK_INSTANTIATE(ExtRational)

#undef BRAIDRACK_INSTANTIATE

}  // namespace braidrack
