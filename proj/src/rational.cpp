#include "cyk/rational.hpp"

#include "cyk/error.hpp"

namespace cyk {

GaussRational operator/(const GaussRational& a, const GaussRational& b) {
  const Rational n = b.norm();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "division by zero in Q(i)");
  const GaussRational num = a * b.conj();
  return {num.re / n, num.im / n};
}

std::string GaussRational::str() const {
  if (im == 0) return re.str();
  return re.str() + (im < 0 ? "-" : "+") + (im < 0 ? Rational(-im) : im).str() + "i";
}

}  // namespace cyk

namespace cyk {

Rational parse_rational(const std::string& text) {
  using boost::multiprecision::cpp_int;
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  if (s.empty()) throw Error(ErrorCode::MalformedInput, "empty number");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      const cpp_int den(s.substr(slash + 1));
      if (den == 0) throw Error(ErrorCode::MalformedInput, "zero denominator");
      return Rational(cpp_int(s.substr(0, slash)), den);
    }
    int exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
      exp10 = std::stoi(s.substr(e + 1));
      s = s.substr(0, e);
    }
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      s = s.substr(1);
    }
    std::string digits = s;
    if (auto dot = s.find('.'); dot != std::string::npos) {
      exp10 -= static_cast<int>(s.size() - dot - 1);
      digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::MalformedInput, "not a number: " + text);
    Rational r{cpp_int(digits)};
    const cpp_int scale = boost::multiprecision::pow(cpp_int(10), std::abs(exp10));
    r = exp10 >= 0 ? r * Rational(scale) : r / Rational(scale);
    return neg ? Rational(-r) : r;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::MalformedInput, "not a number: " + text);
  }
}

}  // namespace cyk
