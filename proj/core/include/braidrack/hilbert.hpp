#pragma once

#include <string>
#include <vector>

namespace braidrack {

// Truncated power series, coefficient of t^k at index k.
using Series = std::vector<long long>;

// (n)_{t^r} = 1 + t^r + ... + t^{r(n-1)}; n = 0 stands for (infinity)_{t^r} = 1/(1 - t^r).
struct HilbertFactor {
  int n = 0;
  int r = 1;
  friend bool operator==(const HilbertFactor&, const HilbertFactor&) = default;
};

Series factor_series(const HilbertFactor& f, int max_degree);
Series series_product(const std::vector<HilbertFactor>& factors, int max_degree);
// Expands a product given as (n, r, multiplicity) triples; untruncated when all n > 0.
Series product_polynomial(const std::vector<HilbertFactor>& factors);
long long series_total(const Series& s);

// All multisets of factors (n)_t, (n)_{t^2} whose product agrees with `dims`
// through degree dims.size() - 1. Factors with n beyond the truncation are
// reported as infinity since they are indistinguishable there.
std::vector<std::vector<HilbertFactor>> hilbert_factorizations(const Series& dims, std::size_t limit = 64);

// "(2)_t^2(3)_t(6)_{t^2}"
std::string format_factors(const std::vector<HilbertFactor>& factors);
// Parses the format above; "(inf)" or "(oo)" for infinity.
std::vector<HilbertFactor> parse_factors(const std::string& text);

}  // namespace braidrack
