#pragma once

#include <map>

#include "qlie/supermatrix.hpp"

namespace qlie {

// Matrix-valued Laurent polynomial in u; used for currents x * u^k and their
// brackets.  The twisted algebra keeps sigma-fixed coefficients in even degrees
// and anti-fixed ones in odd degrees.
struct LoopElem {
  int n = 1;
  std::map<int, SuperMatrix> c;  // u-power -> coefficient

  LoopElem() = default;
  explicit LoopElem(int nn) : n(nn) {}

  static LoopElem mono(const SuperMatrix& x, int k) {
    LoopElem e(x.n);
    if (!x.is_zero()) e.c.emplace(k, x);
    return e;
  }

  void add(int k, const SuperMatrix& x) {
    if (x.is_zero()) return;
    auto it = c.find(k);
    if (it == c.end())
      c.emplace(k, x);
    else {
      it->second = it->second + x;
      if (it->second.is_zero()) c.erase(it);
    }
  }

  bool is_zero() const { return c.empty(); }

  friend LoopElem operator+(const LoopElem& a, const LoopElem& b) {
    LoopElem r = a;
    for (const auto& [k, x] : b.c) r.add(k, x);
    return r;
  }
  friend LoopElem operator-(const LoopElem& a, const LoopElem& b) {
    LoopElem r = a;
    for (const auto& [k, x] : b.c) r.add(k, Rat(-1) * x);
    return r;
  }
  friend LoopElem operator*(const Rat& s, const LoopElem& a) {
    LoopElem r(a.n);
    for (const auto& [k, x] : a.c) r.add(k, s * x);
    return r;
  }
  // associative product (degreewise matrix product); makes the loop algebra a
  // target for evaluating free-superalgebra words
  friend LoopElem operator*(const LoopElem& a, const LoopElem& b) {
    LoopElem r(a.n);
    for (const auto& [p, x] : a.c)
      for (const auto& [q, y] : b.c) r.add(p + q, x * y);
    return r;
  }
  static LoopElem one(int n) { return mono(SuperMatrix::identity(n), 0); }
  friend bool operator==(const LoopElem& a, const LoopElem& b) { return (a - b).is_zero(); }
};

// graded bracket taken degreewise: [x u^p, y u^q] = [x,y] u^{p+q}
inline LoopElem lbracket(const LoopElem& a, const LoopElem& b) {
  LoopElem r(a.n);
  for (const auto& [p, x] : a.c)
    for (const auto& [q, y] : b.c) r.add(p + q, sbracket(x, y));
  return r;
}

// extension of sigma with u -> -u
inline LoopElem sigma_tilde(const LoopElem& a) {
  LoopElem r(a.n);
  for (const auto& [k, x] : a.c) r.add(k, (k % 2) ? Rat(-1) * sigma(x) : sigma(x));
  return r;
}

inline bool twisted_member(const LoopElem& a) { return sigma_tilde(a) == a; }

// residue pairing <f,g> = coefficient of 1/u in str(f g)
inline Rat loop_pair(const LoopElem& a, const LoopElem& b) {
  Rat acc(0);
  for (const auto& [p, x] : a.c)
    for (const auto& [q, y] : b.c)
      if (p + q == -1) acc += str(x * y);
  return acc;
}

}  // namespace qlie
