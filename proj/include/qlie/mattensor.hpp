#pragma once

#include <array>
#include <map>
#include <string>

#include "qlie/supermatrix.hpp"

namespace qlie {

// K-fold tensor power of the full 2n x 2n matrix superalgebra.  Basis keys are
// K-tuples of matrix-unit indices (row position * 2n + column position); scalar
// entries are exact rationals and multiplication carries Koszul signs.
template <int K>
struct MatTen {
  int n = 0;  // 0 = dimensionless zero; set on construction or adopted on first add
  std::map<std::array<int, K>, Rat> t;

  MatTen() = default;
  explicit MatTen(int nn) : n(nn) {}

  static int uidx(int n, int p, int q) { return p * 2 * n + q; }
  // parity of a matrix unit given its flat index
  static int upar(int n, int u) {
    int p = u / (2 * n), q = u % (2 * n);
    return (SuperMatrix::ipar(SuperMatrix::idx_at(n, p)) +
            SuperMatrix::ipar(SuperMatrix::idx_at(n, q))) &
           1;
  }

  void add_term(const std::array<int, K>& k, const Rat& c) {
    if (sgn(c) == 0) return;
    auto it = t.find(k);
    if (it == t.end())
      t.emplace(k, c);
    else {
      it->second += c;
      if (sgn(it->second) == 0) t.erase(it);
    }
  }

  bool is_zero() const { return t.empty(); }

  // a default-constructed tensor is a dimensionless zero; adopt the other
  // operand's dimension so accumulator loops can start from V{}
  friend MatTen operator+(const MatTen& a, const MatTen& b) {
    MatTen r = a;
    if (r.n == 0) r.n = b.n;
    for (const auto& [k, c] : b.t) r.add_term(k, c);
    return r;
  }
  friend MatTen operator-(const MatTen& a, const MatTen& b) {
    MatTen r = a;
    if (r.n == 0) r.n = b.n;
    for (const auto& [k, c] : b.t) r.add_term(k, -c);
    return r;
  }
  friend MatTen operator*(const Rat& s, const MatTen& a) {
    MatTen r(a.n);
    if (sgn(s) == 0) return r;
    for (const auto& [k, c] : a.t) r.t.emplace(k, s * c);
    return r;
  }
  friend bool operator==(const MatTen& a, const MatTen& b) { return (a - b).is_zero(); }

  // slotwise matrix-unit products with the Koszul sign for moving the second
  // factor's slot-i unit past the first factor's slots > i
  friend MatTen operator*(const MatTen& A, const MatTen& B) {
    MatTen r(A.n);
    const int n = A.n, d = 2 * n;
    for (const auto& [ka, ca] : A.t)
      for (const auto& [kb, cb] : B.t) {
        std::array<int, K> k{};
        bool dead = false;
        int sign = 0;
        int suffix = 0;  // parity of ka[i+1..K-1]
        for (int i = K - 1; i >= 0; --i) {
          int pa = ka[i] / d, qa = ka[i] % d, pb = kb[i] / d, qb = kb[i] % d;
          if (qa != pb) {
            dead = true;
            break;
          }
          k[i] = uidx(n, pa, qb);
          sign += upar(n, kb[i]) * suffix;
          suffix = (suffix + upar(n, ka[i])) & 1;
        }
        if (dead) continue;
        r.add_term(k, (sign & 1) ? Rat(-(ca * cb)) : Rat(ca * cb));
      }
    return r;
  }

  size_t terms() const { return t.size(); }
};

using MatTen2 = MatTen<2>;
using MatTen3 = MatTen<3>;

// pure tensor a (x) b by basis expansion (no signs arise in the definition)
inline MatTen2 kron(const SuperMatrix& a, const SuperMatrix& b) {
  MatTen2 r(a.n);
  const int d = 2 * a.n;
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      if (sgn(a.a[p * d + q]) == 0) continue;
      for (int s = 0; s < d; ++s)
        for (int w = 0; w < d; ++w) {
          if (sgn(b.a[s * d + w]) == 0) continue;
          r.add_term({MatTen2::uidx(a.n, p, q), MatTen2::uidx(a.n, s, w)},
                     a.a[p * d + q] * b.a[s * d + w]);
        }
    }
  return r;
}

// embed a single matrix into slot `slot` of a K-fold tensor, identity elsewhere
template <int K>
MatTen<K> emb_mat(const SuperMatrix& x, int slot) {
  MatTen<K> r(x.n);
  const int d = 2 * x.n;
  std::array<int, K> base{};
  // enumerate identity choices in the other slots
  std::array<int, K> diag{};
  int total = 1;
  for (int i = 0; i < K; ++i)
    if (i != slot) total *= d;
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      if (sgn(x.a[p * d + q]) == 0) continue;
      for (int mask = 0; mask < total; ++mask) {
        int m = mask;
        for (int i = 0; i < K; ++i) {
          if (i == slot) {
            base[i] = MatTen<K>::uidx(x.n, p, q);
          } else {
            diag[i] = m % d;
            m /= d;
            base[i] = MatTen<K>::uidx(x.n, diag[i], diag[i]);
          }
        }
        r.add_term(base, x.a[p * d + q]);
      }
    }
  return r;
}

// embed a 2-tensor into slots (s1, s2) of a 3-tensor, identity in the third
inline MatTen3 emb2to3(const MatTen2& T, int s1, int s2) {
  MatTen3 r(T.n);
  const int d = 2 * T.n;
  int s3 = 3 - s1 - s2;
  for (const auto& [k, c] : T.t)
    for (int p = 0; p < d; ++p) {
      std::array<int, 3> kk{};
      kk[s1] = k[0];
      kk[s2] = k[1];
      kk[s3] = MatTen3::uidx(T.n, p, p);
      r.add_term(kk, c);
    }
  return r;
}

// graded flip a (x) b -> (-1)^{p(a)p(b)} b (x) a
inline MatTen2 ten_flip2(const MatTen2& T) {
  MatTen2 r(T.n);
  for (const auto& [k, c] : T.t) {
    int s = MatTen2::upar(T.n, k[0]) * MatTen2::upar(T.n, k[1]);
    r.add_term({k[1], k[0]}, s ? Rat(-c) : c);
  }
  return r;
}

// commutator AB - BA; fine for the overall-even tensors handled here (the Koszul
// signs inside operator* do the graded bookkeeping slotwise)
template <int K>
MatTen<K> comm(const MatTen<K>& A, const MatTen<K>& B) {
  return A * B - B * A;
}

// compact human-readable form, units decoded back to signed indices
template <int K>
std::string mt_str(const MatTen<K>& T) {
  std::string out;
  const int d = 2 * T.n;
  for (const auto& [k, c] : T.t) {
    if (!out.empty()) out += "; ";
    for (int i = 0; i < K; ++i) {
      if (i) out += "x";
      out += "E(" + std::to_string(SuperMatrix::idx_at(T.n, k[i] / d)) + "," +
             std::to_string(SuperMatrix::idx_at(T.n, k[i] % d)) + ")";
    }
    out += ":" + rat_str(c);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qlie
