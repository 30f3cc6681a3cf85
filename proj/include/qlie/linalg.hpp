#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qlie/rational.hpp"

namespace qlie {

// Sparse exact row reduction over Rat, generic in the column key type.  Rows are kept
// fully reduced with pivot coefficient 1, pivots chosen as the smallest key present.
template <class Key>
struct RowSpace {
  using Vec = std::map<Key, Rat>;
  std::map<Key, Vec> rows;  // pivot -> reduced row

  static void axpy(Vec& v, const Rat& c, const Vec& w) {
    for (const auto& [k, x] : w) {
      auto it = v.find(k);
      if (it == v.end()) {
        Rat nv = c * x;
        if (sgn(nv) != 0) v.emplace(k, nv);
      } else {
        it->second += c * x;
        if (sgn(it->second) == 0) v.erase(it);
      }
    }
  }

  Vec reduce(Vec v) const {
    for (auto it = v.begin(); it != v.end();) {
      auto r = rows.find(it->first);
      if (r == rows.end()) {
        ++it;
        continue;
      }
      Rat c = -it->second;
      axpy(v, c, r->second);
      it = v.lower_bound(r->first);  // pivot entry got erased; continue from there
    }
    return v;
  }

  // Insert v (reduced); returns false if v was in the span already.
  bool add(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rat piv = v.begin()->second;
    Rat inv = 1 / piv;
    for (auto& [k, x] : v) x *= inv;
    Key pk = v.begin()->first;
    // back-substitute into existing rows
    for (auto& [p, row] : rows) {
      auto it = row.find(pk);
      if (it != row.end()) {
        Rat c = -it->second;
        axpy(row, c, v);
      }
    }
    rows.emplace(pk, std::move(v));
    return true;
  }

  bool member(const Vec& v) const { return reduce(v).empty(); }
  size_t rank() const { return rows.size(); }
};

// Row space that also tracks certificates: each inserted vector gets an id, and
// member_cert() returns the coefficients expressing a vector over the inserted ones.
template <class Key>
struct RowSpaceCert {
  using Vec = std::map<Key, Rat>;
  using Combo = std::map<int, Rat>;
  struct Row {
    Vec v;
    Combo c;
  };
  std::map<Key, Row> rows;
  int next_id = 0;

  static void axpy(Vec& v, Combo& cv, const Rat& c, const Vec& w, const Combo& cw) {
    RowSpace<Key>::axpy(v, c, w);
    for (const auto& [k, x] : cw) {
      auto it = cv.find(k);
      if (it == cv.end()) {
        Rat nv = c * x;
        if (sgn(nv) != 0) cv.emplace(k, nv);
      } else {
        it->second += c * x;
        if (sgn(it->second) == 0) cv.erase(it);
      }
    }
  }

  void reduce_mut(Vec& v, Combo& cv) const {
    for (auto it = v.begin(); it != v.end();) {
      auto r = rows.find(it->first);
      if (r == rows.end()) {
        ++it;
        continue;
      }
      Rat c = -it->second;
      axpy(v, cv, c, r->second.v, r->second.c);
      it = v.lower_bound(r->first);
    }
  }

  // id of the inserted vector, or -1 if dependent
  int add(Vec v) {
    Combo cv;
    int id = next_id;
    cv[id] = 1;
    reduce_mut(v, cv);
    if (v.empty()) return -1;
    ++next_id;
    Rat inv = 1 / v.begin()->second;
    for (auto& [k, x] : v) x *= inv;
    for (auto& [k, x] : cv) x *= inv;
    Key pk = v.begin()->first;  // grab before the move
    rows.emplace(pk, Row{std::move(v), std::move(cv)});
    return id;
  }

  // If v is in the span, return coefficients c_i with v = sum c_i * inserted_i.
  std::optional<Combo> member_cert(Vec v) const {
    Combo cv;
    reduce_mut(v, cv);
    if (!v.empty()) return std::nullopt;
    for (auto& [k, x] : cv) x = -x;
    return cv;
  }
};

// Solve the dense square system M x = b exactly by Gauss elimination with exact
// pivoting (small systems only).  Returns empty optional if singular.
inline std::optional<std::vector<Rat>> solve_dense(std::vector<std::vector<Rat>> M,
                                                   std::vector<Rat> b) {
  const size_t m = M.size();
  if (m == 0) return std::vector<Rat>{};
  const size_t nc = M[0].size();
  if (nc != m || b.size() != m) return std::nullopt;
  std::vector<size_t> perm(m);
  for (size_t i = 0; i < m; ++i) perm[i] = i;
  for (size_t col = 0; col < m; ++col) {
    size_t piv = col;
    while (piv < m && sgn(M[piv][col]) == 0) ++piv;
    if (piv == m) return std::nullopt;
    std::swap(M[col], M[piv]);
    std::swap(b[col], b[piv]);
    Rat inv = 1 / M[col][col];
    for (size_t j = col; j < m; ++j) M[col][j] *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == col || sgn(M[r][col]) == 0) continue;
      Rat c = M[r][col];
      for (size_t j = col; j < m; ++j) M[r][j] -= c * M[col][j];
      b[r] -= c * b[col];
    }
  }
  return b;
}

}  // namespace qlie
