// Copyright 2026 The bcf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "bcf/number.hpp"

namespace bcf {

/// 50 decimal digits; used where double precision cannot resolve Taylor
/// coefficients of high-degree interpolants.
using MpReal = boost::multiprecision::cpp_bin_float_50;
using MpComplex = boost::multiprecision::cpp_complex_50;

template <>
struct complex_traits<MpComplex> {
  using real_type = MpReal;
  static MpReal from_rational(const Rational& q) {
    return MpReal(q.get_num().get_str()) / MpReal(q.get_den().get_str());
  }
};

/// z^k by repeated squaring.
template <class C>
C ipow(C z, std::size_t k) {
  C r(1);
  while (k > 0) {
    if (k & 1u) r *= z;
    z *= z;
    k >>= 1u;
  }
  return r;
}

}  // namespace bcf
