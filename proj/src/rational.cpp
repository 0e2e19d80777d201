#include "multipoly/rational.hpp"

#include <stdexcept>

namespace multipoly {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational q(BigInt(s), 1);
      q.canonicalize();
      return q;
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace multipoly
