#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "braidrack/error.hpp"

namespace braidrack {

// Univariate polynomial literal with rational coefficients: (coefficient, exponent) terms.
// Accepts "-1", "3/2", "t+1", "q^2", "2*t^2-t", ASCII or U+2212 minus, "q" as alias of "t".
using PolyLiteral = std::vector<std::pair<mpq_class, unsigned>>;
PolyLiteral parse_poly_literal(std::string_view text);

class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr bool kFractionFree = false;

  explicit PrimeField(std::uint32_t p);

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const;
  Element from_rational(const mpq_class& v) const;
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(const Element& a, const Element& b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(const Element& a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(const Element& a, const Element& b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(const Element& a) const;
  Element pow(Element a, unsigned long e) const;

  Element parse(std::string_view text) const;
  std::string format(const Element& a) const { return std::to_string(a); }
  std::string spec() const { return "Fp(" + std::to_string(p_) + ")"; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }
  // The element t for quotient rings; none here.
  std::optional<Element> generator() const { return std::nullopt; }

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Element = mpq_class;
  static constexpr bool kFractionFree = true;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const { return Element(v); }
  Element from_rational(const mpq_class& v) const { return v; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;

  Element parse(std::string_view text) const;
  std::string format(const Element& a) const { return a.get_str(); }
  std::string spec() const { return "QQ"; }
  std::uint32_t characteristic() const { return 0; }
  std::optional<Element> generator() const { return std::nullopt; }

  // Fraction-free helpers: scale to integers with unit content.
  void make_primitive(std::vector<Element>& values) const;
};

// Base[t]/(modulus) with monic modulus. Used as a field only when the
// modulus is irreducible; inversion reports a zero divisor otherwise.
template <class Base>
class QuotientRing {
 public:
  using BaseElement = typename Base::Element;
  using Element = std::vector<BaseElement>;  // exactly degree() coefficients, constant term first
  static constexpr bool kFractionFree = Base::kFractionFree;

  // monic: coefficients c_0..c_{k-1}, c_k = 1 implied.
  QuotientRing(Base base, std::vector<BaseElement> monic_lower, std::string modulus_text);

  const Base& base() const { return base_; }
  std::size_t degree() const { return k_; }
  // Recorded flag: checked by root scan for degree <= 3, otherwise asserted.
  bool irreducible_checked() const { return irreducible_checked_; }
  bool irreducible() const { return irreducible_; }
  const std::vector<BaseElement>& modulus_lower() const { return mod_; }

  Element zero() const { return Element(k_, base_.zero()); }
  Element one() const {
    Element e = zero();
    e[0] = base_.one();
    return e;
  }
  Element from_int(long v) const {
    Element e = zero();
    e[0] = base_.from_int(v);
    return e;
  }
  Element from_rational(const mpq_class& v) const {
    Element e = zero();
    e[0] = base_.from_rational(v);
    return e;
  }
  Element from_base(const BaseElement& v) const {
    Element e = zero();
    e[0] = v;
    return e;
  }
  std::optional<Element> generator() const;
  bool is_zero(const Element& a) const {
    for (const auto& c : a)
      if (!base_.is_zero(c)) return false;
    return true;
  }
  bool equal(const Element& a, const Element& b) const {
    for (std::size_t i = 0; i < k_; ++i)
      if (!base_.equal(a[i], b[i])) return false;
    return true;
  }
  Element add(const Element& a, const Element& b) const {
    Element r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = base_.add(a[i], b[i]);
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    Element r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = base_.sub(a[i], b[i]);
    return r;
  }
  Element neg(const Element& a) const {
    Element r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = base_.neg(a[i]);
    return r;
  }
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;

  Element parse(std::string_view text) const;
  Element from_literal(const PolyLiteral& lit) const;
  std::string format(const Element& a) const;
  std::string spec() const { return base_.spec() + "[t]/(" + modulus_text_ + ")"; }
  std::uint32_t characteristic() const { return base_.characteristic(); }

  // Fraction-free helper for integral domains over QQ.
  void make_primitive(std::vector<Element>& values) const;

 private:
  Base base_;
  std::size_t k_;
  std::vector<BaseElement> mod_;
  std::string modulus_text_;
  bool irreducible_checked_ = false;
  bool irreducible_ = true;
};

using ExtPrime = QuotientRing<PrimeField>;
using ExtRational = QuotientRing<RationalField>;
using AnyField = std::variant<PrimeField, RationalField, ExtPrime, ExtRational>;

// "QQ", "Fp(7)", "QQ[t]/(t^2+t+1)", "Fp(2)[t]/(t^2+t+1)".
AnyField parse_field(std::string_view spec);
std::string field_spec(const AnyField& f);
std::uint32_t field_characteristic(const AnyField& f);

extern template class QuotientRing<PrimeField>;
extern template class QuotientRing<RationalField>;

}  // namespace braidrack
