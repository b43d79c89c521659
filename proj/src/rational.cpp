#include "triweights/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace triweights {

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("parse_rational: empty string");
  std::string body = s.substr(b, e - b + 1);
  auto digits_ok = [](const std::string& part, bool sign_ok) {
    if (part.empty()) return false;
    size_t i = 0;
    if (sign_ok && (part[0] == '+' || part[0] == '-')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  size_t slash = body.find('/');
  if (slash == std::string::npos) {
    if (!digits_ok(body, true)) throw std::invalid_argument("parse_rational: '" + s + "'");
    return Rational(mpz_class(body));
  }
  std::string num = body.substr(0, slash), den = body.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("parse_rational: '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace triweights
