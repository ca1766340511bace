#include "braidrack/quotient.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "braidrack/error.hpp"

namespace braidrack {

template <class F>
GradedVector<F> relation_from_terms(const F& f, int d, const std::vector<std::pair<Tuple, typename F::Element>>& terms) {
  if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "empty relation");
  std::size_t n = terms.front().first.size();
  std::vector<std::pair<std::uint64_t, typename F::Element>> out;
  for (const auto& [w, coeff] : terms) {
    if (w.size() != n) throw Error(ErrorKind::NotHomogeneous, "relation mixes degrees " + std::to_string(n) + " and " +
                                                                  std::to_string(w.size()));
    for (int x : w)
      if (x < 0 || x >= d) throw Error(ErrorKind::InvalidArgument, "relation letter out of range");
    out.emplace_back(encode_word(w, d), coeff);
  }
  return make_graded(f, static_cast<int>(n), std::move(out));
}

namespace {

template <class F>
class QuotientBuilder {
 public:
  using Element = typename F::Element;

  QuotientBuilder(const F& f, int d) : f_(f), d_(static_cast<std::uint64_t>(d)) {
    levels_.emplace_back(f_);
    levels_[0].normal = {0};
  }

  // Appends degree n = levels_.size() given the relations of each degree.
  std::size_t extend(const std::map<int, std::vector<SparseVec<F>>>& rels, std::uint64_t cap) {
    int n = static_cast<int>(levels_.size());
    const std::vector<std::uint64_t> prev = levels_.back().normal;
    if (prev.size() * d_ > cap)
      throw Error(ErrorKind::DegreeCap, "quotient ambient space in degree " + std::to_string(n) + " exceeds the cap");
    levels_.emplace_back(f_);
    Level& lv = levels_.back();
    std::vector<SparseVec<F>> rows;
    for (const auto& [k, list] : rels) {
      if (k > n) break;
      const auto& prefixes = levels_[static_cast<std::size_t>(n - k)].normal;
      std::uint64_t shift = pow_d(k);
      for (std::uint64_t u : prefixes)
        for (const auto& r : list) {
          std::vector<std::pair<std::uint64_t, Element>> acc;
          for (std::size_t t = 0; t < r.size(); ++t) {
            SparseVec<F> v = ambient(n, u * shift + r.idx[t]);
            for (std::size_t j = 0; j < v.size(); ++j) acc.emplace_back(v.idx[j], f_.mul(r.val[t], v.val[j]));
          }
          rows.push_back(make_sparse(f_, std::move(acc)));
        }
    }
    // Sparsest rows first keeps fill-in low; most rows are redundant.
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (auto& r : rows) lv.ech.insert(lv.ech.reduce_full(std::move(r)));
    for (std::uint64_t u : prev)
      for (std::uint64_t x = 0; x < d_; ++x) {
        std::uint64_t w = u * d_ + x;
        if (!lv.ech.has_pivot(w)) lv.normal.push_back(w);
      }
    lv.ech.make_reduced();
    return lv.normal.size();
  }

 private:
  struct Level {
    explicit Level(const F& f) : ech(f, false) {}
    Echelon<F> ech;
    std::vector<std::uint64_t> normal;
    std::unordered_map<std::uint64_t, SparseVec<F>> memo;
  };

  std::uint64_t pow_d(int k) const {
    std::uint64_t p = 1;
    for (int i = 0; i < k; ++i) p *= d_;
    return p;
  }

  // Coordinates of a degree-n word in A_{n-1} (x) V, before reduction in degree n.
  SparseVec<F> ambient(int n, std::uint64_t w) {
    SparseVec<F> pre = normal_form(n - 1, w / d_);
    std::uint64_t last = w % d_;
    for (auto& i : pre.idx) i = i * d_ + last;
    return pre;
  }

  SparseVec<F> normal_form(int n, std::uint64_t w) {
    if (n == 0) {
      SparseVec<F> e;
      e.idx.push_back(0);
      e.val.push_back(f_.one());
      return e;
    }
    Level& lv = levels_[static_cast<std::size_t>(n)];
    auto it = lv.memo.find(w);
    if (it != lv.memo.end()) return it->second;
    SparseVec<F> v = lv.ech.reduce_full(ambient(n, w));
    lv.memo.emplace(w, v);
    return v;
  }

  F f_;
  std::uint64_t d_;
  std::vector<Level> levels_;
};

}  // namespace

template <class F>
GradedDims quotient_dims(const Presentation<F>& p, const QuotientOptions& opts) {
  const F& f = p.space.field();
  int d = p.space.size();
  std::map<int, std::vector<SparseVec<F>>> rels;
  for (const auto& r : p.relations) {
    if (r.degree < 1) throw Error(ErrorKind::NotHomogeneous, "relation of degree zero");
    if (!r.terms.empty()) rels[r.degree].push_back(r.terms);
  }
  GradedDims res;
  res.field = f.spec();
  res.dims = {1};
  res.method = {"quotient-basis"};
  QuotientBuilder<F> builder(f, d);
  for (int n = 1; n <= opts.max_degree; ++n) {
    long dim = static_cast<long>(builder.extend(rels, opts.ambient_cap));
    res.dims.push_back(dim);
    res.method.push_back("quotient-basis");
    if (dim == 0) break;
  }
  return res;
}

#define BRAIDRACK_INSTANTIATE(F)                                                                   \
  template GradedDims quotient_dims<F>(const Presentation<F>&, const QuotientOptions&);            \
  template GradedVector<F> relation_from_terms<F>(const F&, int,                                   \
                                                  const std::vector<std::pair<Tuple, F::Element>>&);

BRAIDRACK_INSTANTIATE(PrimeField)
BRAIDRACK_INSTANTIATE(RationalField)
BRAIDRACK_INSTANTIATE(ExtPrime)
BRAIDRACK_INSTANTIATE(ExtRational)

#undef BRAIDRACK_INSTANTIATE

}  // namespace braidrack
