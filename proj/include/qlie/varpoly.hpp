#pragma once

#include <array>
#include <map>
#include <stdexcept>

#include "qlie/rational.hpp"

namespace qlie {

// Polynomial in NV commuting variables with coefficients in V (an additive group
// with Rat-scalar action).  V must provide is_zero(), +, -, and Rat * V.
template <class V, int NV>
struct VarPoly {
  using Key = std::array<int, NV>;
  std::map<Key, V> t;

  void add_term(const Key& k, const V& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end())
      t.emplace(k, c);
    else {
      it->second = it->second + c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  bool is_zero() const { return t.empty(); }

  friend VarPoly operator+(const VarPoly& a, const VarPoly& b) {
    VarPoly r = a;
    for (const auto& [k, c] : b.t) r.add_term(k, c);
    return r;
  }
  friend VarPoly operator-(const VarPoly& a, const VarPoly& b) {
    VarPoly r = a;
    for (const auto& [k, c] : b.t) r.add_term(k, Rat(-1) * c);
    return r;
  }
  friend VarPoly operator*(const Rat& s, const VarPoly& a) {
    VarPoly r;
    if (sgn(s) == 0) return r;
    for (const auto& [k, c] : a.t) r.add_term(k, s * c);
    return r;
  }
  friend bool operator==(const VarPoly& a, const VarPoly& b) { return (a - b).is_zero(); }

  // multiply by the scalar monomial c * x^e
  VarPoly mul_mono(const Key& e, const Rat& c) const {
    VarPoly r;
    if (sgn(c) == 0) return r;
    for (const auto& [k, v] : t) {
      Key kk = k;
      for (int i = 0; i < NV; ++i) kk[i] += e[i];
      r.add_term(kk, c * v);
    }
    return r;
  }

  // substitute rational values for all variables
  V eval(const std::array<Rat, NV>& x) const {
    V acc{};
    for (const auto& [k, v] : t) {
      Rat c(1);
      for (int i = 0; i < NV; ++i)
        for (int e = 0; e < k[i]; ++e) c *= x[i];
      acc = acc + c * v;
    }
    return acc;
  }

  int degree() const {
    int d = 0;
    for (const auto& [k, v] : t) {
      int s = 0;
      for (int i = 0; i < NV; ++i) s += k[i];
      if (s > d) d = s;
    }
    return d;
  }

  // map coefficients through f (e.g. a tensor embedding), keeping exponents
  template <class W, class F>
  VarPoly<W, NV> map_coeffs(F&& f) const {
    VarPoly<W, NV> r;
    for (const auto& [k, v] : t) r.add_term(k, f(v));
    return r;
  }
};

// Exact division by the binomial x_a - s * x_b (s = +-1).  Synthetic division in
// x_a; throws if a nonzero remainder survives.
template <class V, int NV>
VarPoly<V, NV> div_binomial(VarPoly<V, NV> p, int a, int b, int s) {
  VarPoly<V, NV> q;
  while (!p.t.empty()) {
    // leading term in x_a
    auto lead = p.t.begin();
    for (auto it = p.t.begin(); it != p.t.end(); ++it)
      if (it->first[a] > lead->first[a]) lead = it;
    if (lead->first[a] == 0) throw std::runtime_error("div_binomial: not divisible");
    auto k = lead->first;
    V c = lead->second;
    k[a] -= 1;
    q.add_term(k, c);
    // subtract (x_a - s x_b) * c x^k
    auto k1 = k;
    k1[a] += 1;
    p.add_term(k1, Rat(-1) * c);
    auto k2 = k;
    k2[b] += 1;
    p.add_term(k2, Rat(s) * c);
  }
  return q;
}

}  // namespace qlie
