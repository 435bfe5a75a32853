#pragma once

#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace steiner {

// Unevaluated sum hi + lo with |lo| ≤ ulp(hi)/2, giving about 106 bits of
// significand. Error-free transformations follow Dekker/Knuth; products use fma.
class DoubleDouble {
 public:
  constexpr DoubleDouble(double x = 0.0) : hi_(x), lo_(0.0) {}  // NOLINT: implicit by design of arithmetic type
  constexpr DoubleDouble(double hi, double lo) : hi_(hi), lo_(lo) {}

  constexpr double hi() const { return hi_; }
  constexpr double lo() const { return lo_; }
  explicit constexpr operator double() const { return hi_ + lo_; }

  static DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double e = (a - (s - bb)) + (b - bb);
    return {s, e};
  }

  static DoubleDouble fast_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
  }

  static DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
  }

  friend DoubleDouble operator-(DoubleDouble a) { return {-a.hi_, -a.lo_}; }

  friend DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
    DoubleDouble s = two_sum(a.hi_, b.hi_);
    const DoubleDouble t = two_sum(a.lo_, b.lo_);
    s = fast_two_sum(s.hi_, s.lo_ + t.hi_);
    return fast_two_sum(s.hi_, s.lo_ + t.lo_);
  }

  friend DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

  friend DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
    DoubleDouble p = two_prod(a.hi_, b.hi_);
    const double cross = std::fma(a.hi_, b.lo_, a.lo_ * b.hi_);
    return fast_two_sum(p.hi_, p.lo_ + cross);
  }

  friend DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
    const double q1 = a.hi_ / b.hi_;
    DoubleDouble r = a - b * DoubleDouble(q1);
    const double q2 = r.hi_ / b.hi_;
    r = r - b * DoubleDouble(q2);
    const double q3 = r.hi_ / b.hi_;
    return fast_two_sum(q1, q2) + DoubleDouble(q3);
  }

  DoubleDouble& operator+=(DoubleDouble b) { return *this = *this + b; }
  DoubleDouble& operator-=(DoubleDouble b) { return *this = *this - b; }
  DoubleDouble& operator*=(DoubleDouble b) { return *this = *this * b; }
  DoubleDouble& operator/=(DoubleDouble b) { return *this = *this / b; }

  friend bool operator<(DoubleDouble a, DoubleDouble b) {
    return a.hi_ < b.hi_ || (a.hi_ == b.hi_ && a.lo_ < b.lo_);
  }
  friend bool operator==(DoubleDouble a, DoubleDouble b) {
    return a.hi_ == b.hi_ && a.lo_ == b.lo_;
  }

 private:
  double hi_;
  double lo_;
};

inline DoubleDouble abs(DoubleDouble a) { return a.hi() < 0.0 ? -a : a; }

inline DoubleDouble sqrt(DoubleDouble a) {
  if (a.hi() <= 0.0) return DoubleDouble(0.0);
  const double x = std::sqrt(a.hi());
  // One Newton step from the double root.
  const DoubleDouble residual = a - DoubleDouble::two_prod(x, x);
  return DoubleDouble::fast_two_sum(x, residual.hi() / (2.0 * x));
}

// Software floats for the upper rungs of the root-finding precision ladder:
// WideFloat (50 significant decimal digits) and CertFloat, which re-evaluates
// residuals of WideFloat results at roughly doubled precision.
using WideFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                                boost::multiprecision::et_off>;
using CertFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<100>,
                                                boost::multiprecision::et_off>;

// Unit roundoff of the working type.
template <class T>
double unit_roundoff();
template <>
inline double unit_roundoff<double>() { return 0x1p-53; }
template <>
inline double unit_roundoff<DoubleDouble>() { return 0x1p-104; }
template <>
inline double unit_roundoff<WideFloat>() {
  return std::ldexp(1.0, -std::numeric_limits<WideFloat>::digits);
}
template <>
inline double unit_roundoff<CertFloat>() {
  return std::ldexp(1.0, -std::numeric_limits<CertFloat>::digits);
}

inline double to_double(double x) { return x; }
inline double to_double(DoubleDouble x) { return static_cast<double>(x); }
inline double to_double(const WideFloat& x) { return x.convert_to<double>(); }
inline double to_double(const CertFloat& x) { return x.convert_to<double>(); }

// Round a WideFloat to the working type T.
template <class T>
T narrow(const WideFloat& x);
template <>
inline double narrow<double>(const WideFloat& x) { return x.convert_to<double>(); }
template <>
inline DoubleDouble narrow<DoubleDouble>(const WideFloat& x) {
  const double hi = x.convert_to<double>();
  return DoubleDouble::fast_two_sum(hi, WideFloat(x - hi).convert_to<double>());
}
template <>
inline WideFloat narrow<WideFloat>(const WideFloat& x) { return x; }
template <>
inline CertFloat narrow<CertFloat>(const WideFloat& x) { return CertFloat(x); }

// Minimal complex number over a real type T (std::complex is only specified
// for the built-in floating types).
template <class T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r, T i = T(0.0)) : re(r), im(i) {}  // NOLINT

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Complex& a, const T& s) { return {a.re * s, a.im * s}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    // Smith's algorithm.
    using std::abs;
    if (abs(b.im) < abs(b.re)) {
      const T r = b.im / b.re;
      const T d = b.re + b.im * r;
      return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    const T r = b.re / b.im;
    const T d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
  }
  Complex& operator+=(const Complex& b) { return *this = *this + b; }
  Complex& operator-=(const Complex& b) { return *this = *this - b; }
  Complex& operator*=(const Complex& b) { return *this = *this * b; }
};

template <class T>
double magnitude(const Complex<T>& z) {
  return std::hypot(to_double(z.re), to_double(z.im));
}

}  // namespace steiner
