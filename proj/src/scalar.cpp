#include "rackkit/scalar.hpp"

namespace rackkit {

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw Error("zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw ParseError("malformed scalar '" + s + "'");
  }
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class canon = q;
  canon.canonicalize();
  if (canon.get_str() != s) {
    throw ParseError("non-canonical scalar '" + s + "' (expected '" + canon.get_str() + "')");
  }
  return Rational(canon);
}

std::string Rational::str() const { return q_.get_str(); }

}  // namespace rackkit
