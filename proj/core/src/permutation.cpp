#include "braidrack/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "braidrack/error.hpp"

namespace braidrack {

Perm::Perm(std::vector<std::uint16_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v]) throw Error(ErrorKind::InvalidArgument, "images do not form a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::uint16_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_images(const std::vector<int>& images) {
  std::vector<std::uint16_t> img;
  img.reserve(images.size());
  for (int v : images) {
    if (v < 0 || v > 65535) throw Error(ErrorKind::InvalidArgument, "image out of range");
    img.push_back(static_cast<std::uint16_t>(v));
  }
  return Perm(std::move(img));
}

Perm Perm::parse(std::string_view text, std::size_t n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int largest = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "permutation '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) { ++i; continue; }
    if (ch != '(') fail("expected '('");
    ++i;
    std::vector<int> cyc;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') { ++i; break; }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1) fail("points are 1-based");
      largest = std::max(largest, v);
      cyc.push_back(v - 1);
    }
    cycles.push_back(std::move(cyc));
  }
  if (n == 0) n = static_cast<std::size_t>(largest);
  if (static_cast<std::size_t>(largest) > n) fail("point exceeds degree");
  std::vector<std::uint16_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (int v : cyc) {
      if (used[static_cast<std::size_t>(v)]) fail("point repeated");
      used[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[static_cast<std::size_t>(cyc[k])] = static_cast<std::uint16_t>(cyc[(k + 1) % cyc.size()]);
  }
  return Perm(std::move(img));
}

Perm Perm::extended(std::size_t n) const {
  if (n <= img_.size()) return *this;
  std::vector<std::uint16_t> img = img_;
  for (std::size_t k = img_.size(); k < n; ++k) img.push_back(static_cast<std::uint16_t>(k));
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::size_t n = std::max(img_.size(), rhs.img_.size());
  std::vector<std::uint16_t> img(n);
  for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<std::uint16_t>((*this)(rhs(static_cast<int>(x))));
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<std::uint16_t> img(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) img[img_[x]] = static_cast<std::uint16_t>(x);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::pow(long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Perm out = identity(img_.size());
  while (k) {
    if (k & 1UL) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

long lcm_of(const std::vector<int>& values) {
  long l = 1;
  for (int v : values) l = std::lcm(l, static_cast<long>(v));
  return l;
}

long Perm::order() const { return lcm_of(cycle_type()); }

std::string Perm::str() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (std::size_t x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    any = true;
    os << '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = img_[y]) {
      seen[y] = true;
      if (!first) os << ' ';
      os << y + 1;
      first = false;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

bool Perm::operator==(const Perm& rhs) const {
  std::size_t n = std::max(img_.size(), rhs.img_.size());
  for (std::size_t x = 0; x < n; ++x)
    if ((*this)(static_cast<int>(x)) != rhs(static_cast<int>(x))) return false;
  return true;
}

std::strong_ordering Perm::operator<=>(const Perm& rhs) const {
  std::size_t n = std::max(img_.size(), rhs.img_.size());
  for (std::size_t x = 0; x < n; ++x) {
    int a = (*this)(static_cast<int>(x));
    int b = rhs(static_cast<int>(x));
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // Trailing fixed points do not change the hash, matching operator==.
  const auto& img = p.images();
  std::size_t n = img.size();
  while (n > 0 && img[n - 1] == n - 1) --n;
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(img.data()), n * sizeof(std::uint16_t)));
}

namespace {

std::size_t common_degree(const std::vector<Perm>& gens) {
  std::size_t n = 0;
  for (const auto& g : gens) n = std::max(n, g.degree());
  return n;
}

}  // namespace

PermGroup::PermGroup(std::vector<Perm> generators, std::size_t cap) {
  n_ = common_degree(generators);
  for (auto& g : generators) gens_.push_back(g.extended(n_));
  Perm id = Perm::identity(n_);
  index_.emplace(id, 0);
  elements_.push_back(id);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& g : gens_) {
      Perm next = g * elements_[head];
      if (index_.emplace(next, elements_.size()).second) {
        if (elements_.size() >= cap) throw Error(ErrorKind::GroupSizeCap, "group exceeds " + std::to_string(cap) + " elements");
        elements_.push_back(std::move(next));
      }
    }
  }
}

std::size_t PermGroup::index_of(const Perm& p) const {
  for (std::size_t x = n_; x < p.degree(); ++x)
    if (p(static_cast<int>(x)) != static_cast<int>(x)) return npos;
  auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

bool PermGroup::contains(const Perm& p) const { return index_of(p) != npos; }

std::vector<Perm> PermGroup::centralizer(const Perm& g) const {
  std::vector<Perm> out;
  for (const auto& h : elements_)
    if (h * g == g * h) out.push_back(h);
  return out;
}

std::size_t group_order(const std::vector<Perm>& gens, std::size_t cap) {
  std::size_t n = common_degree(gens);
  std::vector<Perm> ext;
  for (const auto& g : gens) ext.push_back(g.extended(n));
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> frontier{Perm::identity(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& h : frontier) {
      for (const auto& g : ext) {
        Perm p = g * h;
        if (seen.insert(p).second) {
          if (seen.size() > cap) throw Error(ErrorKind::GroupSizeCap, "group exceeds " + std::to_string(cap) + " elements");
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace braidrack
