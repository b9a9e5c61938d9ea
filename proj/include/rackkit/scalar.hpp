#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "rackkit/error.hpp"

namespace rackkit {

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Strict parser for "p/q" or "p": rejects anything that does not print
  /// back identically (non-reduced, "3/1", "+2", "-0", spaces).
  static Rational parse(std::string_view text);

  std::string str() const;

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

/// Element a + b·eps of Q[eps]/(eps^2). Ring operations only; there is no
/// division since the ring is not a field.
template <class K>
class Dual {
 public:
  Dual() = default;
  Dual(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Dual(K value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Dual(K value, K eps) : value_(std::move(value)), eps_(std::move(eps)) {}

  static Dual epsilon() { return Dual(K(0), K(1)); }

  const K& value() const { return value_; }
  const K& infinitesimal() const { return eps_; }
  bool is_zero() const { return value_.is_zero() && eps_.is_zero(); }

  Dual& operator+=(const Dual& o) { value_ += o.value_; eps_ += o.eps_; return *this; }
  Dual& operator-=(const Dual& o) { value_ -= o.value_; eps_ -= o.eps_; return *this; }
  Dual& operator*=(const Dual& o) {
    eps_ = value_ * o.eps_ + eps_ * o.value_;
    value_ *= o.value_;
    return *this;
  }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator-(const Dual& a) { return Dual(-a.value_, -a.eps_); }
  friend bool operator==(const Dual& a, const Dual& b) = default;

  /// "v" when the infinitesimal part vanishes, otherwise "v+e@eps".
  std::string str() const {
    if (eps_.is_zero()) return value_.str();
    return value_.str() + "+" + eps_.str() + "@eps";
  }

  static Dual parse(std::string_view text) {
    constexpr std::string_view kSuffix = "@eps";
    if (text.size() < kSuffix.size() || text.substr(text.size() - kSuffix.size()) != kSuffix) {
      return Dual(K::parse(text));
    }
    const auto body = text.substr(0, text.size() - kSuffix.size());
    const auto plus = body.find('+');
    if (plus == std::string_view::npos) {
      throw ParseError("malformed dual scalar '" + std::string(text) + "'");
    }
    Dual d(K::parse(body.substr(0, plus)), K::parse(body.substr(plus + 1)));
    if (d.eps_.is_zero()) {
      throw ParseError("non-canonical dual scalar '" + std::string(text) + "'");
    }
    return d;
  }

  friend std::ostream& operator<<(std::ostream& os, const Dual& d) { return os << d.str(); }

 private:
  K value_{0};
  K eps_{0};
};

using DualRational = Dual<Rational>;

template <class K>
inline bool is_zero(const K& k) {
  return k.is_zero();
}

}  // namespace rackkit
