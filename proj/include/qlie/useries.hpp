#pragma once

#include <cassert>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qlie/rational.hpp"

namespace qlie {

inline bool coeff_is_zero(const Rat& r) { return sgn(r) == 0; }
template <class C>
bool coeff_is_zero(const C& c) {
  return c.is_zero();
}

// Truncated formal power series in x = 1/u with coefficients in C.  A value knows its
// truncation order (coefficients 0..ord are meaningful).  Binary operations require
// equal orders -- mismatches are treated as caller bugs, retrunc() converts explicitly.
//
// C must supply: default ctor (zero), is_zero(), operator+, operator-, operator*,
// and scalar multiplication by Rat via operator*(Rat, C).
template <class C>
struct USeries {
  int ord = 0;
  std::vector<C> c;  // size ord+1

  USeries() : ord(0), c(1) {}
  explicit USeries(int order) : ord(order), c(order + 1) { assert(order >= 0); }

  static USeries constant(int order, const C& c0) {
    USeries s(order);
    s.c[0] = c0;
    return s;
  }

  const C& coeff(int k) const {
    static const C z{};
    return (k >= 0 && k <= ord) ? c[k] : z;
  }
  void set_coeff(int k, const C& v) {
    assert(k >= 0 && k <= ord);
    c[k] = v;
  }

  bool is_zero() const {
    for (const auto& x : c)
      if (!coeff_is_zero(x)) return false;
    return true;
  }

  USeries retrunc(int order) const {
    USeries r(order);
    for (int k = 0; k <= std::min(order, ord); ++k) r.c[k] = c[k];
    return r;
  }

  friend USeries operator+(const USeries& a, const USeries& b) {
    assert(a.ord == b.ord);
    USeries r(a.ord);
    for (int k = 0; k <= a.ord; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
  }
  friend USeries operator-(const USeries& a, const USeries& b) {
    assert(a.ord == b.ord);
    USeries r(a.ord);
    for (int k = 0; k <= a.ord; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
  }
  friend USeries operator*(const USeries& a, const USeries& b) {
    assert(a.ord == b.ord);
    USeries r(a.ord);
    for (int i = 0; i <= a.ord; ++i) {
      if (coeff_is_zero(a.c[i])) continue;
      for (int j = 0; i + j <= a.ord; ++j) {
        if (coeff_is_zero(b.c[j])) continue;
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
      }
    }
    return r;
  }
  friend USeries operator*(const Rat& s, const USeries& a) {
    USeries r(a.ord);
    for (int k = 0; k <= a.ord; ++k) r.c[k] = s * a.c[k];
    return r;
  }
  friend bool operator==(const USeries& a, const USeries& b) { return (a - b).is_zero(); }

  // Shift by x^k (multiply by u^{-k}); coefficients falling off the truncation are lost.
  USeries shift(int k) const {
    USeries r(ord);
    for (int i = 0; i + k <= ord && i <= ord; ++i)
      if (i + k >= 0) r.c[i + k] = c[i];
    return r;
  }
};

// Two-sided inverse of a series whose constant term is invertible, where inverting the
// constant term is delegated to inv0.  Works over noncommutative coefficient rings:
// B0 = inv0(A0), B_k = -B0 * sum_{j=1..k} A_j B_{k-j}.
template <class C>
USeries<C> useries_inverse(const USeries<C>& a, const std::function<C(const C&)>& inv0) {
  USeries<C> b(a.ord);
  C b0 = inv0(a.c[0]);
  b.c[0] = b0;
  for (int k = 1; k <= a.ord; ++k) {
    C acc{};
    for (int j = 1; j <= k; ++j) acc = acc + a.c[j] * b.c[k - j];
    b.c[k] = Rat(-1) * (b0 * acc);
  }
  return b;
}

}  // namespace qlie
