#include "braidrack/field.hpp"

#include <algorithm>
#include <cctype>

namespace braidrack {

namespace {

std::string normalize_literal(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else if (std::isspace(c)) {
      continue;
    } else if (c == 'q') {
      out.push_back('t');
    } else {
      out.push_back(static_cast<char>(c));
    }
  }
  return out;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

}  // namespace

PolyLiteral parse_poly_literal(std::string_view text) {
  std::string s = normalize_literal(text);
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "scalar '" + std::string(text) + "': " + why);
  };
  if (s.empty()) fail("empty");
  PolyLiteral terms;
  std::size_t i = 0;
  auto read_int = [&](mpz_class& out) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    out = mpz_class(s.substr(start, i - start));
    return true;
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!terms.empty()) {
      fail("expected '+' or '-'");
    }
    mpq_class coef(1);
    bool have_coef = false;
    mpz_class num;
    if (read_int(num)) {
      have_coef = true;
      mpz_class den(1);
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (!read_int(den)) fail("bad denominator");
        if (den == 0) fail("zero denominator");
      }
      coef = mpq_class(num, den);
      coef.canonicalize();
    }
    unsigned exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) fail("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != 't') fail("expected t after '*'");
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        mpz_class e;
        if (!read_int(e) || !e.fits_uint_p()) fail("bad exponent");
        exponent = static_cast<unsigned>(e.get_ui());
      }
    } else if (!have_coef) {
      fail("expected a number or t");
    }
    terms.emplace_back(sign < 0 ? mpq_class(-coef) : coef, exponent);
  }
  return terms;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime_u32(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& v) const {
  mpz_class n = v.get_num() % p_;
  if (n < 0) n += p_;
  mpz_class d = v.get_den() % p_;
  if (d == 0) throw Error(ErrorKind::ZeroScalar, "denominator vanishes mod " + std::to_string(p_));
  return mul(static_cast<Element>(n.get_ui()), inv(static_cast<Element>(d.get_ui())));
}

PrimeField::Element PrimeField::pow(Element a, unsigned long e) const {
  Element r = 1;
  while (e) {
    if (e & 1UL) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

PrimeField::Element PrimeField::inv(const Element& a) const {
  if (a == 0) throw Error(ErrorKind::ZeroScalar, "inverse of zero");
  return pow(a, p_ - 2);
}

PrimeField::Element PrimeField::parse(std::string_view text) const {
  Element acc = 0;
  for (const auto& [c, e] : parse_poly_literal(text)) {
    if (e != 0) throw Error(ErrorKind::ParseError, "prime field scalar has no t: " + std::string(text));
    acc = add(acc, from_rational(c));
  }
  return acc;
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw Error(ErrorKind::ZeroScalar, "inverse of zero");
  return 1 / a;
}

RationalField::Element RationalField::parse(std::string_view text) const {
  Element acc = 0;
  for (const auto& [c, e] : parse_poly_literal(text)) {
    if (e != 0) throw Error(ErrorKind::ParseError, "rational scalar has no t: " + std::string(text));
    acc += c;
  }
  return acc;
}

void RationalField::make_primitive(std::vector<Element>& values) const {
  mpz_class l = 1, g = 0;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  for (const auto& v : values) {
    mpz_class n = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return;
  mpq_class scale(l, g);
  scale.canonicalize();
  if (scale == 1) return;
  for (auto& v : values) v *= scale;
}

namespace {

// Dense polynomial helpers over a base field; constant term first, trimmed.
template <class Base>
using Poly = std::vector<typename Base::Element>;

template <class Base>
void trim(const Base& b, Poly<Base>& p) {
  while (!p.empty() && b.is_zero(p.back())) p.pop_back();
}

template <class Base>
Poly<Base> poly_sub_scaled(const Base& b, Poly<Base> a, const Poly<Base>& c, const typename Base::Element& s,
                           std::size_t shift) {
  if (a.size() < c.size() + shift) a.resize(c.size() + shift, b.zero());
  for (std::size_t i = 0; i < c.size(); ++i) a[i + shift] = b.sub(a[i + shift], b.mul(s, c[i]));
  trim(b, a);
  return a;
}

template <class Base>
std::pair<Poly<Base>, Poly<Base>> poly_divmod(const Base& b, Poly<Base> a, const Poly<Base>& m) {
  Poly<Base> q;
  auto lead_inv = b.inv(m.back());
  while (a.size() >= m.size()) {
    std::size_t shift = a.size() - m.size();
    auto s = b.mul(a.back(), lead_inv);
    if (q.size() < shift + 1) q.resize(shift + 1, b.zero());
    q[shift] = s;
    a = poly_sub_scaled(b, std::move(a), m, s, shift);
  }
  return {q, a};
}

template <class Base>
Poly<Base> poly_mul(const Base& b, const Poly<Base>& x, const Poly<Base>& y) {
  if (x.empty() || y.empty()) return {};
  Poly<Base> r(x.size() + y.size() - 1, b.zero());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = b.add(r[i + j], b.mul(x[i], y[j]));
  trim(b, r);
  return r;
}

template <class Base>
std::string format_poly(const Base& b, const Poly<Base>& p) {
  std::string out;
  for (std::size_t ii = p.size(); ii-- > 0;) {
    if (b.is_zero(p[ii])) continue;
    std::string cs = b.format(p[ii]);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (ii == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += "t";
      if (ii > 1) out += "^" + std::to_string(ii);
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  for (mpz_class k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(n / k);
    }
  return out;
}

template <class Base>
bool has_root(const Base& b, const Poly<Base>& f, bool& checked);

template <>
bool has_root<PrimeField>(const PrimeField& b, const Poly<PrimeField>& f, bool& checked) {
  if (b.characteristic() > 2'000'000) {
    checked = false;
    return false;
  }
  checked = true;
  for (std::uint32_t x = 0; x < b.characteristic(); ++x) {
    PrimeField::Element v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = b.add(b.mul(v, x), f[i]);
    if (v == 0) return true;
  }
  return false;
}

template <>
bool has_root<RationalField>(const RationalField& b, const Poly<RationalField>& f, bool& checked) {
  checked = true;
  std::vector<mpq_class> ints(f.begin(), f.end());
  b.make_primitive(ints);
  if (ints.front() == 0) return true;
  auto evaluate = [&](const mpq_class& x) {
    mpq_class v = 0;
    for (std::size_t i = ints.size(); i-- > 0;) v = v * x + ints[i];
    return v;
  };
  for (const auto& p : divisors(ints.front().get_num()))
    for (const auto& q : divisors(ints.back().get_num()))
      for (int sign : {1, -1}) {
        mpq_class x(p * sign, q);
        x.canonicalize();
        if (evaluate(x) == 0) return true;
      }
  return false;
}

}  // namespace

template <class Base>
QuotientRing<Base>::QuotientRing(Base base, std::vector<BaseElement> monic_lower, std::string modulus_text)
    : base_(std::move(base)), k_(monic_lower.size()), mod_(std::move(monic_lower)), modulus_text_(std::move(modulus_text)) {
  if (k_ == 0) throw Error(ErrorKind::InvalidArgument, "modulus must have degree >= 1");
  Poly<Base> f = mod_;
  f.push_back(base_.one());
  if (k_ == 1) {
    irreducible_checked_ = true;
  } else if (k_ <= 3) {
    bool checked = false;
    bool root = has_root(base_, f, checked);
    irreducible_checked_ = checked;
    irreducible_ = !root;
  }
}

template <class Base>
std::optional<typename QuotientRing<Base>::Element> QuotientRing<Base>::generator() const {
  Element e = zero();
  if (k_ == 1) {
    e[0] = base_.neg(mod_[0]);
  } else {
    e[1] = base_.one();
  }
  return e;
}

template <class Base>
typename QuotientRing<Base>::Element QuotientRing<Base>::mul(const Element& a, const Element& b) const {
  std::vector<BaseElement> r(2 * k_ - 1, base_.zero());
  for (std::size_t i = 0; i < k_; ++i) {
    if (base_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < k_; ++j) {
      if (base_.is_zero(b[j])) continue;
      r[i + j] = base_.add(r[i + j], base_.mul(a[i], b[j]));
    }
  }
  for (std::size_t i = 2 * k_ - 1; i-- > k_;) {
    if (base_.is_zero(r[i])) continue;
    for (std::size_t j = 0; j < k_; ++j)
      if (!base_.is_zero(mod_[j])) r[i - k_ + j] = base_.sub(r[i - k_ + j], base_.mul(r[i], mod_[j]));
  }
  r.resize(k_);
  return r;
}

template <class Base>
typename QuotientRing<Base>::Element QuotientRing<Base>::inv(const Element& a) const {
  if (is_zero(a)) throw Error(ErrorKind::ZeroScalar, "inverse of zero");
  Poly<Base> f = mod_;
  f.push_back(base_.one());
  Poly<Base> r0 = f, r1 = a;
  trim(base_, r1);
  Poly<Base> s0, s1{base_.one()};
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(base_, r0, r1);
    Poly<Base> qs = poly_mul(base_, q, s1);
    Poly<Base> s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), base_.zero());
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = base_.sub(s2[i], qs[i]);
    trim(base_, s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd(f, a) up to a unit, with s0 * a = r0 mod f.
  if (r0.size() > 1)
    throw Error(ErrorKind::NotAField, spec() + " has zero divisor " + format_poly(base_, r0) + " (reducible modulus)");
  auto unit_inv = base_.inv(r0[0]);
  Element out = zero();
  for (std::size_t i = 0; i < s0.size() && i < k_; ++i) out[i] = base_.mul(s0[i], unit_inv);
  return out;
}

template <class Base>
typename QuotientRing<Base>::Element QuotientRing<Base>::from_literal(const PolyLiteral& lit) const {
  Element acc = zero();
  for (const auto& [c, e] : lit) {
    Element term = from_rational(c);
    auto t = *generator();
    for (unsigned k = 0; k < e; ++k) term = mul(term, t);
    acc = add(acc, term);
  }
  return acc;
}

template <class Base>
typename QuotientRing<Base>::Element QuotientRing<Base>::parse(std::string_view text) const {
  return from_literal(parse_poly_literal(text));
}

template <class Base>
std::string QuotientRing<Base>::format(const Element& a) const {
  Poly<Base> p(a.begin(), a.end());
  trim(base_, p);
  return format_poly(base_, p);
}

template <class Base>
void QuotientRing<Base>::make_primitive(std::vector<Element>& values) const {
  if constexpr (std::is_same_v<Base, RationalField>) {
    std::vector<mpq_class> flat;
    for (const auto& v : values) flat.insert(flat.end(), v.begin(), v.end());
    std::vector<mpq_class> scaled = flat;
    base_.make_primitive(scaled);
    if (flat.empty()) return;
    std::size_t first = 0;
    while (first < flat.size() && sgn(flat[first]) == 0) ++first;
    if (first == flat.size()) return;
    mpq_class scale = scaled[first] / flat[first];
    if (scale == 1) return;
    for (auto& v : values)
      for (auto& c : v) c *= scale;
  } else {
    (void)values;
  }
}

template class QuotientRing<PrimeField>;
template class QuotientRing<RationalField>;

namespace {

template <class Base>
QuotientRing<Base> make_quotient(const Base& base, const std::string& modulus_text) {
  PolyLiteral lit = parse_poly_literal(modulus_text);
  unsigned deg = 0;
  for (const auto& [c, e] : lit)
    if (c != 0) deg = std::max(deg, e);
  std::vector<mpq_class> coeffs(deg + 1, mpq_class(0));
  for (const auto& [c, e] : lit) coeffs[e] += c;
  if (deg == 0 || coeffs[deg] != 1)
    throw Error(ErrorKind::ParseError, "modulus must be monic of degree >= 1: " + modulus_text);
  std::vector<typename Base::Element> lower;
  for (unsigned i = 0; i < deg; ++i) lower.push_back(base.from_rational(coeffs[i]));
  return QuotientRing<Base>(base, std::move(lower), modulus_text);
}

}  // namespace

AnyField parse_field(std::string_view spec) {
  std::string s = normalize_literal(spec);
  auto fail = [&]() -> AnyField { throw Error(ErrorKind::ParseError, "field spec '" + std::string(spec) + "'"); };
  std::string base_part = s, modulus;
  auto bracket = s.find("[t]/(");
  if (bracket != std::string::npos) {
    if (s.back() != ')') return fail();
    base_part = s.substr(0, bracket);
    modulus = s.substr(bracket + 5, s.size() - bracket - 6);
  }
  std::optional<std::uint32_t> p;
  if (base_part == "QQ" || base_part == "Q") {
  } else if ((base_part.rfind("Fp(", 0) == 0 || base_part.rfind("GF(", 0) == 0) && base_part.back() == ')') {
    std::string digits = base_part.substr(3, base_part.size() - 4);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return fail();
    p = static_cast<std::uint32_t>(std::stoul(digits));
  } else {
    return fail();
  }
  if (modulus.empty()) {
    if (p) return PrimeField(*p);
    return RationalField{};
  }
  if (p) return make_quotient(PrimeField(*p), modulus);
  return make_quotient(RationalField{}, modulus);
}

std::string field_spec(const AnyField& f) {
  return std::visit([](const auto& fld) { return fld.spec(); }, f);
}

std::uint32_t field_characteristic(const AnyField& f) {
  return std::visit([](const auto& fld) { return fld.characteristic(); }, f);
}

}  // namespace braidrack
