#include "braidrack/rack.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "braidrack/error.hpp"

namespace braidrack {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::string trim_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

Rack Rack::from_flat(int d, const std::vector<int>& flat) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "rack size must be positive");
  std::size_t n = static_cast<std::size_t>(d);
  if (flat.size() != n * n) throw Error(ErrorKind::InvalidArgument, "table must be d x d");
  Rack r;
  r.d_ = d;
  r.tab_.resize(n * n);
  r.inv_.assign(n * n, 0);
  for (int i = 0; i < d; ++i) {
    std::vector<bool> seen(n, false);
    for (int j = 0; j < d; ++j) {
      int v = flat[r.idx(i, j)];
      if (v < 0 || v >= d) throw Error(ErrorKind::InvalidArgument, "entry out of range in row " + std::to_string(i + 1));
      if (seen[static_cast<std::size_t>(v)]) throw Error(ErrorKind::RowNotPermutation, "row " + std::to_string(i + 1));
      seen[static_cast<std::size_t>(v)] = true;
      r.tab_[r.idx(i, j)] = static_cast<std::uint16_t>(v);
      r.inv_[r.idx(i, v)] = static_cast<std::uint16_t>(j);
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (r.op(i, r.op(j, k)) != r.op(r.op(i, j), r.op(i, k)))
          throw Error(ErrorKind::SelfDistributivityFails,
                      "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
  return r;
}

Rack Rack::from_table(const std::vector<std::vector<int>>& table) {
  int d = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(table.size() * table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].size() != table.size())
      throw Error(ErrorKind::InvalidArgument, "row " + std::to_string(i + 1) + " has wrong length");
    for (int v : table[i]) {
      if (v < 1 || v > d) throw Error(ErrorKind::InvalidArgument, "entry out of range in row " + std::to_string(i + 1));
      flat.push_back(v - 1);
    }
  }
  return from_flat(d, flat);
}

Perm Rack::phi(int x) const {
  std::vector<std::uint16_t> img(static_cast<std::size_t>(d_));
  for (int y = 0; y < d_; ++y) img[static_cast<std::size_t>(y)] = tab_[idx(x, y)];
  return Perm(std::move(img));
}

std::vector<std::vector<int>> Rack::table() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(d_), std::vector<int>(static_cast<std::size_t>(d_)));
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = op(i, j) + 1;
  return out;
}

Rack Rack::relabeled(const std::vector<int>& relabel) const {
  std::vector<int> flat(tab_.size());
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) {
      auto ni = static_cast<std::size_t>(relabel[static_cast<std::size_t>(i)]);
      auto nj = static_cast<std::size_t>(relabel[static_cast<std::size_t>(j)]);
      flat[ni * static_cast<std::size_t>(d_) + nj] = relabel[op(i, j)];
    }
  return from_flat(d_, flat);
}

Rack validate_rack(const std::vector<std::vector<int>>& table) { return Rack::from_table(table); }

Rack trivial_rack(int d) {
  std::vector<int> flat;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) flat.push_back(j);
  return Rack::from_flat(d, flat);
}

SmallField::SmallField(int q) : q_(q) {
  if (is_prime(q)) {
    p_ = q;
    k_ = 1;
    return;
  }
  int p = 2;
  while (p * p < q) ++p;
  if (p * p != q || !is_prime(p))
    throw Error(ErrorKind::InvalidArgument, "field order " + std::to_string(q) + " is not p or p^2");
  p_ = p;
  k_ = 2;
  // t^2 + c irreducible iff -c is a non-square mod p.
  for (int c = 1; c < p; ++c) {
    int target = (p - c) % p;
    bool square = false;
    for (int a = 0; a < p; ++a)
      if ((a * a) % p == target) square = true;
    if (!square) {
      c_ = c;
      break;
    }
  }
}

int SmallField::add(int a, int b) const {
  if (k_ == 1) return (a + b) % p_;
  return (a % p_ + b % p_) % p_ + ((a / p_ + b / p_) % p_) * p_;
}

int SmallField::sub(int a, int b) const {
  if (k_ == 1) return (a - b + p_) % p_;
  return (a % p_ - b % p_ + p_) % p_ + ((a / p_ - b / p_ + p_) % p_) * p_;
}

int SmallField::mul(int a, int b) const {
  if (k_ == 1) return (a * b) % p_;
  int a0 = a % p_, a1 = a / p_, b0 = b % p_, b1 = b / p_;
  int c0 = ((a0 * b0 - c_ * a1 * b1) % p_ + p_ * p_) % p_;
  int c1 = (a0 * b1 + a1 * b0) % p_;
  return c0 + c1 * p_;
}

std::string SmallField::str(int a) const {
  if (k_ == 1) return std::to_string(a);
  int a0 = a % p_, a1 = a / p_;
  std::string out;
  if (a1 != 0) out = (a1 == 1 ? std::string() : std::to_string(a1)) + "t";
  if (a0 != 0 || out.empty()) out += (out.empty() ? "" : "+") + std::to_string(a0);
  return out;
}

int SmallField::parse(std::string_view text) const {
  std::string s = trim_spaces(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty field element");
  bool all_digits = std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (all_digits) {
    long v = std::stol(s);
    if (v < 0 || v >= q_) throw Error(ErrorKind::ParseError, "element code out of range: " + s);
    return static_cast<int>(v);
  }
  long c0 = 0, c1 = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    long coef = -1;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = (coef < 0 ? 0 : coef) * 10 + (s[i] - '0');
      ++i;
    }
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 't') {
      ++i;
      if (k_ == 1) throw Error(ErrorKind::ParseError, "prime field has no t");
      c1 += sign * (coef < 0 ? 1 : coef);
    } else {
      if (coef < 0) throw Error(ErrorKind::ParseError, "bad field element: " + s);
      c0 += sign * coef;
    }
  }
  auto md = [this](long v) { return static_cast<int>(((v % p_) + p_) % p_); };
  return md(c0) + md(c1) * p_;
}

Rack affine_rack(int q, int alpha) {
  SmallField f(q);
  if (alpha <= 0 || alpha >= q) throw Error(ErrorKind::AffineNotARack, "alpha must be a nonzero field element");
  int one_minus = f.sub(1, alpha);
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(q) * static_cast<std::size_t>(q));
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) flat.push_back(f.add(f.mul(one_minus, x), f.mul(alpha, y)));
  return Rack::from_flat(q, flat);
}

AffineParam braided_affine_param(int p) {
  if (p <= 3 || !is_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be a prime > 3");
  for (int q : {p, p * p}) {
    SmallField f(q);
    for (int a = 1; a < q; ++a) {
      int val = f.add(f.sub(1, a), f.mul(a, a));
      if (val == 0) return AffineParam{q, a, f.str(a)};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "no root found");  // unreachable for p > 3
}

namespace {

Rack rack_from_phis(int d, const std::vector<std::string>& phis) {
  std::vector<int> flat;
  for (const auto& s : phis) {
    Perm p = Perm::parse(s, static_cast<std::size_t>(d));
    for (int y = 0; y < d; ++y) flat.push_back(p(y));
  }
  return Rack::from_flat(d, flat);
}

std::vector<Perm> parse_labels(std::size_t n, const std::vector<std::string>& cycles) {
  std::vector<Perm> out;
  for (const auto& c : cycles) out.push_back(Perm::parse(c, n));
  return out;
}

const std::vector<std::string> kLabelsA = {"(1 2)", "(1 3)", "(2 3)", "(3 4)", "(1 4)", "(2 4)"};
const std::vector<std::string> kLabelsC = {"(1 2)", "(2 3)", "(1 3)", "(2 4)", "(1 4)",
                                           "(2 5)", "(1 5)", "(3 4)", "(3 5)", "(4 5)"};

}  // namespace

std::optional<std::vector<Perm>> preset_class_labels(std::string_view name) {
  std::string s = trim_spaces(name);
  if (s == "A") return parse_labels(4, kLabelsA);
  if (s == "C") return parse_labels(5, kLabelsC);
  return std::nullopt;
}

Rack preset(std::string_view name) {
  std::string s = trim_spaces(name);
  if (s == "D3") return rack_from_phis(3, {"(2 3)", "(1 3)", "(1 2)"});
  if (s == "T") return rack_from_phis(4, {"(2 3 4)", "(3 1 4)", "(4 1 2)", "(1 3 2)"});
  if (s == "A") return class_rack_from_labels(parse_labels(4, kLabelsA)).rack;
  if (s == "B")
    return rack_from_phis(6, {"(2 3 4 5)", "(3 1 5 6)", "(4 1 2 6)", "(5 1 3 6)", "(2 1 4 6)", "(2 5 4 3)"});
  if (s == "C") return class_rack_from_labels(parse_labels(5, kLabelsC)).rack;
  if (s.rfind("trivial(", 0) == 0 && s.back() == ')') {
    int d = std::stoi(s.substr(8, s.size() - 9));
    return trivial_rack(d);
  }
  if (s.rfind("Aff(", 0) == 0 && s.back() == ')') {
    std::string body = s.substr(4, s.size() - 5);
    auto comma = body.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::UnknownPreset, std::string(name));
    int q = 0;
    try {
      q = std::stoi(body.substr(0, comma));
    } catch (const std::exception&) {
      throw Error(ErrorKind::UnknownPreset, std::string(name));
    }
    SmallField f(q);
    int alpha = f.parse(body.substr(comma + 1));
    return affine_rack(q, alpha);
  }
  throw Error(ErrorKind::UnknownPreset, std::string(name));
}

std::vector<std::string> preset_names() {
  return {"D3", "T", "A", "B", "C", "Aff(7,3)", "Aff(7,5)", "Aff(9,2)", "Aff(q,alpha)", "trivial(n)"};
}

bool is_quandle(const Rack& r) {
  for (int x = 0; x < r.size(); ++x)
    if (r.op(x, x) != x) return false;
  return true;
}

bool is_braided(const Rack& r) {
  if (!is_quandle(r)) return false;
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y)
      if (r.op(x, r.op(y, x)) != y && r.op(x, y) != y) return false;
  return true;
}

bool is_faithful(const Rack& r) {
  int d = r.size();
  for (int x = 0; x < d; ++x)
    for (int y = x + 1; y < d; ++y) {
      bool same = true;
      for (int z = 0; z < d && same; ++z) same = r.op(x, z) == r.op(y, z);
      if (same) return false;
    }
  return true;
}

std::vector<std::vector<int>> components(const Rack& r) {
  int d = r.size();
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      int a = find(y), b = find(r.op(x, y));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  std::map<int, std::vector<int>> groups;
  for (int y = 0; y < d; ++y) groups[find(y)].push_back(y);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

bool is_indecomposable(const Rack& r) { return components(r).size() == 1; }

std::map<int, int> return_profile(const Rack& r, int x) {
  std::map<int, int> out;
  int d = r.size();
  for (int y = 0; y < d; ++y) {
    if (y == x) continue;
    int f = x, g = y;  // n-term expressions starting with x and with y
    int found = 0;
    for (int n = 2; n <= 2 * d; ++n) {
      int nf = r.op(x, g), ng = r.op(y, f);
      f = nf;
      g = ng;
      if (f == y) {
        found = n;
        break;
      }
    }
    ++out[found];
  }
  return out;
}

RackInvariants invariants(const Rack& r, std::size_t group_cap) {
  RackInvariants inv;
  int d = r.size();
  inv.size = d;
  inv.is_quandle = is_quandle(r);
  inv.is_braided = is_braided(r);
  inv.is_faithful = is_faithful(r);
  inv.components = components(r);
  inv.is_indecomposable = inv.components.size() == 1;
  std::vector<Perm> phis;
  for (int x = 0; x < d; ++x) phis.push_back(r.phi(x));
  try {
    inv.inner_group_order = group_order(phis, group_cap);
  } catch (const Error& e) {
    inv.inner_group_note = e.what();
  }
  if (!inv.is_indecomposable) {
    inv.undefined_reason = "rack is decomposable; degree, k_n, m, t are defined for indecomposable racks";
    return inv;
  }
  inv.degree = static_cast<int>(phis[0].order());
  for (auto [n, count] : return_profile(r, 0)) {
    if (n == 0)
      inv.k_unresolved = count;
    else
      inv.k[n] = count;
  }
  int m = 0;
  for (int y = 0; y < d; ++y) {
    int y1 = r.op(0, y);
    if (y1 != y && r.op(0, r.op(0, y1)) == y) ++m;
  }
  inv.m = m;
  int t = 0;
  for (int a = 1; a < d; ++a) {
    if (r.op(0, a) != a) continue;
    for (int b = 1; b < d; ++b)
      if (b != a && r.op(0, b) == b && r.op(a, b) == b) ++t;
  }
  inv.t = t;
  return inv;
}

namespace {

struct ElementSignature {
  std::vector<int> cycles;
  std::map<int, int> profile;
  bool operator==(const ElementSignature&) const = default;
};

std::vector<ElementSignature> signatures(const Rack& r) {
  std::vector<ElementSignature> out;
  for (int x = 0; x < r.size(); ++x) out.push_back({r.phi(x).cycle_type(), return_profile(r, x)});
  return out;
}

// Propagates f along x > y and its inverse; false on conflict.
bool propagate(const Rack& r1, const Rack& r2, std::vector<int>& f, std::vector<int>& g) {
  int d = r1.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < d; ++x) {
      int fx = f[static_cast<std::size_t>(x)];
      if (fx < 0) continue;
      for (int y = 0; y < d; ++y) {
        int fy = f[static_cast<std::size_t>(y)];
        if (fy < 0) continue;
        for (int dir = 0; dir < 2; ++dir) {
          int z = dir == 0 ? r1.op(x, y) : r1.op_inv(x, y);
          int fz = dir == 0 ? r2.op(fx, fy) : r2.op_inv(fx, fy);
          int& cur = f[static_cast<std::size_t>(z)];
          if (cur == fz) continue;
          if (cur >= 0 || g[static_cast<std::size_t>(fz)] >= 0) return false;
          cur = fz;
          g[static_cast<std::size_t>(fz)] = z;
          changed = true;
        }
      }
    }
  }
  return true;
}

}  // namespace

IsoResult find_isomorphism(const Rack& r1, const Rack& r2) {
  IsoResult res;
  int d = r1.size();
  if (d != r2.size()) return res;
  auto s1 = signatures(r1);
  auto s2 = signatures(r2);
  {
    auto key = [](const ElementSignature& s) {
      std::vector<int> k = s.cycles;
      k.push_back(-1);
      for (auto [n, c] : s.profile) {
        k.push_back(n);
        k.push_back(c);
      }
      return k;
    };
    std::vector<std::vector<int>> k1, k2;
    for (auto& s : s1) k1.push_back(key(s));
    for (auto& s : s2) k2.push_back(key(s));
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    if (k1 != k2) return res;
  }
  std::vector<int> f(static_cast<std::size_t>(d), -1), g(static_cast<std::size_t>(d), -1);
  std::function<bool()> search = [&]() -> bool {
    int x = -1;
    for (int i = 0; i < d; ++i)
      if (f[static_cast<std::size_t>(i)] < 0) {
        x = i;
        break;
      }
    if (x < 0) return true;
    for (int y = 0; y < d; ++y) {
      if (g[static_cast<std::size_t>(y)] >= 0) continue;
      if (!(s1[static_cast<std::size_t>(x)] == s2[static_cast<std::size_t>(y)])) continue;
      auto f_saved = f, g_saved = g;
      f[static_cast<std::size_t>(x)] = y;
      g[static_cast<std::size_t>(y)] = x;
      if (propagate(r1, r2, f, g) && search()) return true;
      f = std::move(f_saved);
      g = std::move(g_saved);
    }
    return false;
  };
  if (search()) {
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        if (f[static_cast<std::size_t>(r1.op(x, y))] != r2.op(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
          return res;
    res.isomorphic = true;
    res.map = std::move(f);
  }
  return res;
}

bool is_isomorphic(const Rack& r1, const Rack& r2) { return find_isomorphism(r1, r2).isomorphic; }

std::optional<std::vector<std::uint16_t>> canonical_table(const Rack& r, std::size_t budget) {
  int d = r.size();
  std::optional<std::vector<std::uint16_t>> best;
  std::size_t visited = 0;
  bool exhausted = false;
  std::vector<int> order;
  std::vector<int> label(static_cast<std::size_t>(d), -1);

  auto close = [&](std::size_t& added) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j) {
          int z = r.op(order[i], order[j]);
          if (label[static_cast<std::size_t>(z)] < 0) {
            label[static_cast<std::size_t>(z)] = static_cast<int>(order.size());
            order.push_back(z);
            ++added;
            grew = true;
          }
        }
    }
  };

  std::function<void()> branch = [&]() {
    if (exhausted) return;
    if (++visited > budget) {
      exhausted = true;
      return;
    }
    if (order.size() == static_cast<std::size_t>(d)) {
      std::vector<std::uint16_t> t(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          t[static_cast<std::size_t>(i * d + j)] =
              static_cast<std::uint16_t>(label[static_cast<std::size_t>(r.op(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))]);
      if (!best || t < *best) best = std::move(t);
      return;
    }
    for (int x = 0; x < d; ++x) {
      if (label[static_cast<std::size_t>(x)] >= 0) continue;
      label[static_cast<std::size_t>(x)] = static_cast<int>(order.size());
      order.push_back(x);
      std::size_t added = 0;
      close(added);
      branch();
      for (std::size_t k = 0; k < added + 1; ++k) {
        label[static_cast<std::size_t>(order.back())] = -1;
        order.pop_back();
      }
    }
  };
  branch();
  if (exhausted) return std::nullopt;
  return best;
}

ClassRack class_rack_from_labels(const std::vector<Perm>& labels) {
  std::unordered_map<Perm, int, PermHash> index;
  std::size_t n = 0;
  for (const auto& p : labels) n = std::max(n, p.degree());
  std::vector<Perm> ext;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ext.push_back(labels[i].extended(n));
    if (!index.emplace(ext.back(), static_cast<int>(i)).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate class label " + labels[i].str());
  }
  int d = static_cast<int>(ext.size());
  std::vector<int> flat;
  for (int i = 0; i < d; ++i) {
    Perm inv = ext[static_cast<std::size_t>(i)].inverse();
    for (int j = 0; j < d; ++j) {
      Perm c = ext[static_cast<std::size_t>(i)] * ext[static_cast<std::size_t>(j)] * inv;
      auto it = index.find(c);
      if (it == index.end()) throw Error(ErrorKind::InvalidArgument, "labels not closed under conjugation");
      flat.push_back(it->second);
    }
  }
  return ClassRack{Rack::from_flat(d, flat), std::move(ext)};
}

ClassRack conjugacy_class_rack(const std::vector<Perm>& generators, const Perm& g) {
  PermGroup group(generators);
  if (!group.contains(g)) throw Error(ErrorKind::ElementNotInGroup, g.str());
  std::size_t n = group.degree();
  std::vector<Perm> cls{g.extended(n)};
  std::unordered_map<Perm, int, PermHash> seen{{cls.front(), 0}};
  for (std::size_t head = 0; head < cls.size(); ++head)
    for (const auto& s : group.generators()) {
      Perm c = s * cls[head] * s.inverse();
      if (seen.emplace(c, static_cast<int>(cls.size())).second) cls.push_back(std::move(c));
    }
  return class_rack_from_labels(cls);
}

}  // namespace braidrack
