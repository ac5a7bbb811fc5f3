#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace ucstar {

using Rational = mpq_class;

/// Exact Gaussian rational a + b i.
struct Coefficient {
  Rational re{0};
  Rational im{0};

  Coefficient() = default;
  Coefficient(Rational r) : re(std::move(r)) { re.canonicalize(); }
  Coefficient(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  Coefficient(long v) : re(v) {}
  Coefficient(int v) : re(v) {}

  static Coefficient imaginary_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  Coefficient conj() const { return {re, -im}; }

  Coefficient& operator+=(Coefficient const& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Coefficient& operator-=(Coefficient const& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Coefficient& operator*=(Coefficient const& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  /// Throws std::domain_error on zero.
  Coefficient inverse() const;
  Coefficient& operator/=(Coefficient const& o) { return *this *= o.inverse(); }

  friend Coefficient operator+(Coefficient a, Coefficient const& b) { return a += b; }
  friend Coefficient operator/(Coefficient a, Coefficient const& b) { return a /= b; }
  friend Coefficient operator-(Coefficient a, Coefficient const& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, Coefficient const& b) { return a *= b; }
  friend Coefficient operator-(Coefficient const& a) { return {-a.re, -a.im}; }
  friend bool operator==(Coefficient const& a, Coefficient const& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  /// Canonical text: `3`, `-1/2`, `i`, `(2+3i)`, `(1/2-i)`.
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, Coefficient const& c);

}  // namespace ucstar
