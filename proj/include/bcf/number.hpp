// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cctype>
#include <complex>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "bcf/error.hpp"

namespace bcf {

/// Arbitrary-precision rational; always kept in canonical form.
using Rational = mpq_class;

/// Exact complex number with rational real and imaginary parts.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(Rational re, Rational im = Rational(0))  // NOLINT: implicit from Rational
      : re_(std::move(re)), im_(std::move(im)) {}
  template <std::integral I>
  ComplexRational(I v) : re_(static_cast<long>(v)), im_(0) {}  // NOLINT

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  ComplexRational conj() const { return {re_, Rational(-im_)}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }

  ComplexRational& operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) {
    Rational d = o.norm();
    if (sgn(d) == 0) throw Error(ErrorCode::InvalidArgument, "complex division by zero");
    Rational re = (re_ * o.re_ + im_ * o.im_) / d;
    Rational im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) {
    return {Rational(-a.re_), Rational(-a.im_)};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

// Uniform helpers so that series/polynomial templates work over both fields.
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ComplexRational& z) { return z.is_zero(); }
inline bool is_real(const Rational&) { return true; }
inline bool is_real(const ComplexRational& z) { return z.is_real(); }
inline Rational conj(const Rational& q) { return q; }
inline ComplexRational conj(const ComplexRational& z) { return z.conj(); }
inline const Rational& real_part(const Rational& q) { return q; }
inline const Rational& real_part(const ComplexRational& z) { return z.re(); }

template <class T>
concept ExactField = std::same_as<T, Rational> || std::same_as<T, ComplexRational>;

// ---------------------------------------------------------------------------
// Text encoding. Rationals are "p", "p/q" or a finite decimal "-1.25"; complex
// values are "re", "im i", or "re+im i" with either part in rational form.

namespace detail {

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace detail

inline std::optional<Rational> try_parse_rational(std::string_view text) {
  std::string s = detail::strip_spaces(text);
  if (s.empty()) return std::nullopt;
  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string_view body(s.data() + pos, s.size() - pos);
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return std::nullopt;
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    value = Rational(n, d);
    value.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)))
      return std::nullopt;
    mpz_class scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = Rational(n, scale);
    value.canonicalize();
  } else {
    if (!detail::all_digits(body)) return std::nullopt;
    value = Rational(mpz_class(std::string(body), 10));
  }
  if (negative) value = -value;
  return value;
}

inline Rational parse_rational(std::string_view text) {
  auto q = try_parse_rational(text);
  if (!q) throw Error(ErrorCode::ParseError, "invalid rational '" + std::string(text) + "'");
  return *q;
}

inline std::optional<ComplexRational> try_parse_complex(std::string_view text) {
  std::string s = detail::strip_spaces(text);
  if (s.empty()) return std::nullopt;
  if (s.back() != 'i') {
    auto re = try_parse_rational(s);
    if (!re) return std::nullopt;
    return ComplexRational(*re);
  }
  s.pop_back();
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  Rational re(0);
  if (!re_text.empty()) {
    auto r = try_parse_rational(re_text);
    if (!r) return std::nullopt;
    re = *r;
  }
  Rational im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    auto r = try_parse_rational(im_text);
    if (!r) return std::nullopt;
    im = *r;
  }
  return ComplexRational(re, im);
}

inline ComplexRational parse_complex(std::string_view text) {
  auto z = try_parse_complex(text);
  if (!z) throw Error(ErrorCode::ParseError, "invalid complex rational '" + std::string(text) + "'");
  return *z;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline std::string to_string(const ComplexRational& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im;
  if (z.im() == 1) {
    im = "";
  } else if (z.im() == -1) {
    im = "-";
  } else {
    im = z.im().get_str();
  }
  if (sgn(z.re()) == 0) return im + "i";
  std::string sep = sgn(z.im()) > 0 ? "+" : "";
  return z.re().get_str() + sep + im + "i";
}

inline std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << to_string(z); }

// ---------------------------------------------------------------------------
// Conversion of exact values into floating complex types used for sampling.

template <class C>
struct complex_traits;

template <>
struct complex_traits<std::complex<double>> {
  using real_type = double;
  static double from_rational(const Rational& q) { return q.get_d(); }
};

template <class C>
using real_of = typename complex_traits<C>::real_type;

template <class C>
C to_complex(const Rational& q) {
  return C(complex_traits<C>::from_rational(q), real_of<C>(0));
}

template <class C>
C to_complex(const ComplexRational& z) {
  return C(complex_traits<C>::from_rational(z.re()), complex_traits<C>::from_rational(z.im()));
}

}  // namespace bcf
