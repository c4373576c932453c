#include "carkwork/integer.hpp"

#include <stdexcept>

namespace carkwork {

Integer isqrt(const Integer& n) {
  if (n.sign() < 0) {
    throw std::domain_error("isqrt of a negative integer");
  }
  Integer remainder;
  return boost::multiprecision::sqrt(n, remainder);
}

bool is_perfect_square(const Integer& n) {
  if (n.sign() < 0) {
    return false;
  }
  Integer remainder;
  boost::multiprecision::sqrt(n, remainder);
  return remainder.is_zero();
}

std::size_t bit_length(const Integer& n) {
  if (n.is_zero()) {
    return 0;
  }
  return boost::multiprecision::msb(abs(n)) + 1;
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d) != 0 && ((n.sign() < 0) != (d.sign() < 0))) {
    --q;
  }
  return q;
}

Integer floor_mod(const Integer& n, const Integer& d) {
  Integer m = abs(d);
  Integer r = n % m;
  if (r.sign() < 0) {
    r += m;
  }
  return r;
}

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    pos = 1;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  Integer value(std::string(text.substr(pos)));
  return text[0] == '-' ? Integer(-value) : value;
}

Rational ratio(Integer n, Integer d) {
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  return Rational(n, d);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) {
    return numerator(q).str();
  }
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Integer& n) { return n.convert_to<double>(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace carkwork
