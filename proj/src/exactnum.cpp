#include "omegalie/exactnum.hpp"

#include <cctype>
#include <sstream>

namespace omegalie {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<Rational> sqrt_rational(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view sign;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    sign = body.substr(0, 1);
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (sign == "-") n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_str(10);
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  canonical();
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty scalar literal");
  if (s.back() != 'i') return {parse_rational(s), Rational(0)};

  s.remove_suffix(1);
  // The split point is the last sign that is not the leading one; signs
  // never appear inside a RAT except at its start.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), parse_rational(s)};
  std::string_view im_part = s.substr(split);
  if (im_part.size() < 2) throw ParseError("malformed complex literal '" + std::string(text) + "'");
  // The rational grammar allows a leading '+' only through this split.
  return {parse_rational(s.substr(0, split)), parse_rational(im_part)};
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  const Rational n = norm();
  return {re_ / n, -im_ / n};
}

std::optional<GaussianRational> GaussianRational::sqrt_exact() const {
  if (is_zero()) return GaussianRational{};
  // (p + q i)^2 = u + v i  with  p^2 = (u + |z|)/2, q^2 = (|z| - u)/2.
  auto modulus = sqrt_rational(norm());
  if (!modulus) return std::nullopt;
  auto p = sqrt_rational((re_ + *modulus) / 2);
  auto q = sqrt_rational((*modulus - re_) / 2);
  if (!p || !q) return std::nullopt;
  Rational qs = *q;
  if (sgn(im_) < 0) qs = -qs;
  GaussianRational root(*p, qs);
  if (sgn(root.re_) < 0 || (sgn(root.re_) == 0 && sgn(root.im_) < 0)) root = -root;
  return root;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inv();
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im = to_string(z.im());
  if (sgn(z.re()) == 0) return im + "i";
  std::string out = to_string(z.re());
  if (sgn(z.im()) > 0) out += '+';
  return out + im + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << to_string(z);
}

}  // namespace omegalie
