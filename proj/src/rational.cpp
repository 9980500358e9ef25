#include "tropmod/rational.hpp"

#include <ostream>

namespace tropmod {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  auto slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (num.empty() || den.empty())
    throw ValidationError("malformed rational literal '" + text + "'");
  auto digits_ok = [](const std::string& s, bool sign_ok) {
    for (size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (i == 0 && sign_ok && (c == '-' || c == '+') && s.size() > 1) continue;
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ValidationError("malformed rational literal '" + text + "'");
  mpq_class v;
  mpz_class n(num), d(den);
  if (d == 0) throw ValidationError("rational with zero denominator: '" + text + "'");
  v = mpq_class(n) / mpq_class(d);
  Rational r;
  r.v_ = v;
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

ExtRational ExtRational::parse(const std::string& text) {
  if (text == "inf") return infinity();
  return ExtRational(Rational::parse(text));
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

}  // namespace tropmod
