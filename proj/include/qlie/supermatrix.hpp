#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "qlie/rational.hpp"

namespace qlie {

// Dense 2n x 2n matrix over Rat, indexed by the signed set {1..n, -1..-n}.
// Row/column parity of index a is |a| = 0 for a > 0 and 1 for a < 0; the matrix unit
// E_{a,b} has parity |a|+|b|.  Position order is (1,...,n,-1,...,-n).
struct SuperMatrix {
  int n = 0;
  std::vector<Rat> a;  // (2n)^2 entries, row-major over positions

  SuperMatrix() = default;
  explicit SuperMatrix(int n_) : n(n_), a(4 * n_ * n_, Rat(0)) {}

  static int pos(int n, int i) {
    assert(i != 0 && i >= -n && i <= n);
    return i > 0 ? i - 1 : n + (-i) - 1;
  }
  static int idx_at(int n, int p) { return p < n ? p + 1 : -(p - n + 1); }
  static int ipar(int i) { return i > 0 ? 0 : 1; }

  Rat& at(int i, int j) { return a[pos(n, i) * 2 * n + pos(n, j)]; }
  const Rat& at(int i, int j) const { return a[pos(n, i) * 2 * n + pos(n, j)]; }

  bool is_zero() const {
    for (const auto& x : a)
      if (sgn(x) != 0) return false;
    return true;
  }

  static SuperMatrix unit(int n, int i, int j) {
    SuperMatrix m(n);
    m.at(i, j) = 1;
    return m;
  }
  static SuperMatrix identity(int n) {
    SuperMatrix m(n);
    for (int p = 0; p < 2 * n; ++p) m.a[p * 2 * n + p] = 1;
    return m;
  }

  friend SuperMatrix operator+(const SuperMatrix& x, const SuperMatrix& y) {
    assert(x.n == y.n);
    SuperMatrix r = x;
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += y.a[k];
    return r;
  }
  friend SuperMatrix operator-(const SuperMatrix& x, const SuperMatrix& y) {
    assert(x.n == y.n);
    SuperMatrix r = x;
    for (size_t k = 0; k < r.a.size(); ++k) r.a[k] -= y.a[k];
    return r;
  }
  friend SuperMatrix operator*(const Rat& s, const SuperMatrix& x) {
    SuperMatrix r = x;
    for (auto& v : r.a) v *= s;
    return r;
  }
  friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
    assert(x.n == y.n);
    int d = 2 * x.n;
    SuperMatrix r(x.n);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const Rat& xv = x.a[i * d + k];
        if (sgn(xv) == 0) continue;
        for (int j = 0; j < d; ++j) {
          const Rat& yv = y.a[k * d + j];
          if (sgn(yv) == 0) continue;
          r.a[i * d + j] += xv * yv;
        }
      }
    return r;
  }
  friend bool operator==(const SuperMatrix& x, const SuperMatrix& y) {
    return (x - y).is_zero();
  }

  // Parity decomposition: component c = 0 keeps entries with |i|+|j| even, c = 1 odd.
  SuperMatrix parity_part(int c) const {
    SuperMatrix r(n);
    int d = 2 * n;
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q) {
        int pi = ipar(idx_at(n, p)), pj = ipar(idx_at(n, q));
        if (((pi + pj) & 1) == c) r.a[p * d + q] = a[p * d + q];
      }
    return r;
  }
  bool homogeneous(int* par_out = nullptr) const {
    bool has0 = !parity_part(0).is_zero(), has1 = !parity_part(1).is_zero();
    if (has0 && has1) return false;
    if (par_out) *par_out = has1 ? 1 : 0;
    return true;
  }
};

// Supertrace: str(E_{aa}) = (-1)^{1+|a|}, i.e. -1 on positive indices, +1 on negative.
inline Rat str(const SuperMatrix& m) {
  Rat s(0);
  int d = 2 * m.n;
  for (int p = 0; p < d; ++p) {
    int i = SuperMatrix::idx_at(m.n, p);
    s += (SuperMatrix::ipar(i) ? Rat(1) : Rat(-1)) * m.a[p * d + p];
  }
  return s;
}

// Involution E_{a,b} -> E_{-a,-b}: sigma(X)(c,d) = X(-c,-d).
inline SuperMatrix sigma(const SuperMatrix& m) {
  SuperMatrix r(m.n);
  for (int p = 0; p < 2 * m.n; ++p)
    for (int q = 0; q < 2 * m.n; ++q) {
      int i = SuperMatrix::idx_at(m.n, p), j = SuperMatrix::idx_at(m.n, q);
      r.at(i, j) = m.at(-i, -j);
    }
  return r;
}

// Supercommutator, computed bilinearly over parity components.
inline SuperMatrix sbracket(const SuperMatrix& x, const SuperMatrix& y) {
  SuperMatrix r(x.n);
  for (int cx = 0; cx < 2; ++cx)
    for (int cy = 0; cy < 2; ++cy) {
      SuperMatrix xp = x.parity_part(cx), yp = y.parity_part(cy);
      if (xp.is_zero() || yp.is_zero()) continue;
      SuperMatrix term = xp * yp - ((cx & cy) ? Rat(-1) : Rat(1)) * (yp * xp);
      r = r + term;
    }
  return r;
}

inline SuperMatrix anti(const SuperMatrix& x, const SuperMatrix& y) {
  return x * y + y * x;
}

inline std::string sm_str(const SuperMatrix& m) {
  std::string out;
  for (int p = 0; p < 2 * m.n; ++p)
    for (int q = 0; q < 2 * m.n; ++q) {
      const Rat& v = m.a[p * 2 * m.n + q];
      if (sgn(v) == 0) continue;
      int i = SuperMatrix::idx_at(m.n, p), j = SuperMatrix::idx_at(m.n, q);
      if (!out.empty()) out += " + ";
      out += rat_str(v) + "*E(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  return out.empty() ? "0" : out;
}

}  // namespace qlie
