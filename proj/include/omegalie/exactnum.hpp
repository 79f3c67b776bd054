#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "omegalie/errors.hpp"

namespace omegalie {

/// Arbitrary precision rational, always kept canonical by GMP.
using Rational = mpq_class;

/// Parses `INT` or `INT "/" POSINT`. Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Exact element a + b i of the Gaussian rationals Q(i).
///
/// Both parts are canonical GMP rationals (lowest terms, positive
/// denominator), so two values are equal iff their parts are identical.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: implicit by intent
  GaussianRational(Rational re, Rational im = 0);
  GaussianRational(long num, long den) : re_(num, den) { canonical(); }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Parses the scalar literal grammar: `RAT`, `RAT ("+"|"-") RAT "i"`,
  /// or `RAT "i"`.
  static GaussianRational parse(std::string_view text);

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& im() const { return im_; }

  [[nodiscard]] bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  [[nodiscard]] bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  [[nodiscard]] bool is_real() const { return sgn(im_) == 0; }

  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  /// a^2 + b^2.
  [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Throws DivisionByZero for zero.
  [[nodiscard]] GaussianRational inv() const;

  /// A square root inside Q(i) when one exists. The returned root has
  /// positive real part, or zero real part and nonnegative imaginary part.
  [[nodiscard]] std::optional<GaussianRational> sqrt_exact() const;

  [[nodiscard]] std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Lexicographic order on (re, im). Not a field order; used for stable
  /// sorting of parameter samples.
  friend bool lex_less(const GaussianRational& a, const GaussianRational& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

 private:
  void canonical() {
    re_.canonicalize();
    im_.canonicalize();
  }

  Rational re_{0};
  Rational im_{0};
};

using Scalar = GaussianRational;

/// Renders in the literal grammar, e.g. `3`, `-1/2`, `2i`, `1/2-3/4i`.
std::string to_string(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace omegalie
