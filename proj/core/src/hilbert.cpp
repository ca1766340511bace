#include "braidrack/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "braidrack/error.hpp"

namespace braidrack {

Series factor_series(const HilbertFactor& f, int max_degree) {
  Series s(static_cast<std::size_t>(max_degree + 1), 0);
  for (int k = 0; k * f.r <= max_degree && (f.n == 0 || k < f.n); ++k) s[static_cast<std::size_t>(k * f.r)] = 1;
  return s;
}

namespace {

Series multiply(const Series& a, const Series& b, std::size_t len) {
  Series out(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// s / (n)_{t^r}, truncated to s.size().
Series divide(const Series& s, const HilbertFactor& f) {
  std::size_t len = s.size();
  Series out = s;
  // multiply by (1 - t^r)
  for (std::size_t k = len; k-- > 0;)
    if (k >= static_cast<std::size_t>(f.r)) out[k] -= out[k - static_cast<std::size_t>(f.r)];
  if (f.n == 0) return out;
  // multiply by 1 / (1 - t^{rn})
  std::size_t step = static_cast<std::size_t>(f.r * f.n);
  for (std::size_t k = step; k < len; ++k) out[k] += out[k - step];
  return out;
}

}  // namespace

Series series_product(const std::vector<HilbertFactor>& factors, int max_degree) {
  Series s(static_cast<std::size_t>(max_degree + 1), 0);
  s[0] = 1;
  for (const auto& f : factors) s = multiply(s, factor_series(f, max_degree), s.size());
  return s;
}

Series product_polynomial(const std::vector<HilbertFactor>& factors) {
  int top = 0;
  for (const auto& f : factors) {
    if (f.n == 0) throw Error(ErrorKind::InvalidArgument, "infinite factor has no polynomial expansion");
    top += f.r * (f.n - 1);
  }
  return series_product(factors, top);
}

long long series_total(const Series& s) { return std::accumulate(s.begin(), s.end(), 0LL); }

std::vector<std::vector<HilbertFactor>> hilbert_factorizations(const Series& dims, std::size_t limit) {
  std::vector<std::vector<HilbertFactor>> found;
  if (dims.empty() || dims[0] != 1) return found;
  int top = static_cast<int>(dims.size()) - 1;
  std::vector<HilbertFactor> acc;
  // Candidate n for each r, largest first; infinity covers every n past the truncation.
  auto candidates = [&](int r) {
    std::vector<int> ns{0};
    for (int n = top / r + 1; n >= 2; --n)
      if (r * (n - 1) <= top) ns.push_back(n);
    return ns;
  };
  auto rank_of = [](int n) { return n == 0 ? 1 << 30 : n; };
  std::function<void(const Series&, int, int)> search = [&](const Series& rest, int r_min, int bound) {
    if (found.size() >= limit) return;
    std::size_t j = 1;
    while (j < rest.size() && rest[j] == 0) ++j;
    if (j == rest.size()) {
      found.push_back(acc);
      return;
    }
    if (rest[j] < 0 || j > 2) return;
    int r = static_cast<int>(j);
    if (r < r_min) return;
    if (r > r_min) bound = 1 << 30;
    for (int n : candidates(r)) {
      if (rank_of(n) > bound) continue;
      HilbertFactor f{n, r};
      acc.push_back(f);
      search(divide(rest, f), r, rank_of(n));
      acc.pop_back();
    }
  };
  search(dims, 1, 1 << 30);
  return found;
}

std::string format_factors(const std::vector<HilbertFactor>& factors) {
  std::string out;
  std::size_t i = 0;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    const auto& f = factors[i];
    out += "(" + (f.n == 0 ? std::string("inf") : std::to_string(f.n)) + ")_" + (f.r == 1 ? "t" : "{t^" + std::to_string(f.r) + "}");
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out.empty() ? "1" : out;
}

std::vector<HilbertFactor> parse_factors(const std::string& text) {
  std::vector<HilbertFactor> out;
  std::size_t pos = 0;
  auto fail = [&]() { throw Error(ErrorKind::ParseError, "hilbert factors: " + text); };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail();
    return std::stoi(text.substr(start, pos - start));
  };
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail();
    ++pos;
    HilbertFactor f;
    if (text.compare(pos, 3, "inf") == 0) {
      f.n = 0;
      pos += 3;
    } else if (text.compare(pos, 2, "oo") == 0) {
      f.n = 0;
      pos += 2;
    } else {
      f.n = read_int();
    }
    if (text.compare(pos, 3, ")_t") != 0 && text.compare(pos, 5, ")_{t^") != 0) fail();
    if (text.compare(pos, 5, ")_{t^") == 0) {
      pos += 5;
      f.r = read_int();
      if (pos >= text.size() || text[pos] != '}') fail();
      ++pos;
    } else {
      pos += 3;
      f.r = 1;
    }
    int mult = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      mult = read_int();
    }
    for (int k = 0; k < mult; ++k) out.push_back(f);
  }
  return out;
}

}  // namespace braidrack
