#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyk {

using Rational = boost::multiprecision::cpp_rational;

// Exact element of Q(i).
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(int r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRational conj() const { return {re, -im}; }
  // |z|^2, exact.
  Rational norm() const { return re * re + im * im; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  std::string str() const;
};

inline GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
inline GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
inline GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
inline GaussRational operator*(const GaussRational& a, const GaussRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussRational operator/(const GaussRational& a, const GaussRational& b);
inline bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

}  // namespace cyk

namespace cyk {
// Exact parse of "3", "-7/2", "1.25", "2.5e-1" and "a+bi"-free real forms.
Rational parse_rational(const std::string& text);
}  // namespace cyk
