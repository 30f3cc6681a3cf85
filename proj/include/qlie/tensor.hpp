#pragma once

#include <array>
#include <map>

#include "qlie/free_elem.hpp"

namespace qlie {

// Tensor square / cube of a free word algebra, with scalar S.  Slots hold words of
// type W; W must concatenate with insert() and have a parity functor passed to the
// multiplication (Koszul sign convention: factors moving past each other contribute
// (-1)^{p p'}).

template <class W, class S, int K>
struct TenT {
  std::map<std::array<W, K>, S> t;

  bool is_zero() const { return t.empty(); }

  void add_term(const std::array<W, K>& w, const S& c) {
    if (FreeElemT<S>::scalar_is_zero(c)) return;
    auto it = t.find(w);
    if (it == t.end()) {
      t.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (FreeElemT<S>::scalar_is_zero(it->second)) t.erase(it);
    }
  }

  friend TenT operator+(const TenT& a, const TenT& b) {
    TenT r = a;
    for (const auto& [w, c] : b.t) r.add_term(w, c);
    return r;
  }
  friend TenT operator-(const TenT& a, const TenT& b) {
    TenT r = a;
    for (const auto& [w, c] : b.t) r.add_term(w, S(-1) * c);
    return r;
  }
  friend TenT operator*(const S& s, const TenT& a) {
    TenT r;
    for (const auto& [w, c] : a.t) r.add_term(w, s * c);
    return r;
  }
  friend bool operator==(const TenT& a, const TenT& b) { return (a - b).is_zero(); }
};

// Multiply two tensors: (a1 (x) ... (x) aK)(b1 (x) ... (x) bK) carries the sign
// (-1)^E with E = sum over pairs i > j of p(b_j-part passing a_i-part), i.e. each b_j
// moves left past all a_i with i > j.
template <class W, class S, int K, class Par>
TenT<W, S, K> ten_mul(const TenT<W, S, K>& A, const TenT<W, S, K>& B, Par par) {
  TenT<W, S, K> r;
  for (const auto& [wa, ca] : A.t)
    for (const auto& [wb, cb] : B.t) {
      int e = 0;
      for (int j = 0; j < K; ++j)
        for (int i = j + 1; i < K; ++i) e += par(wb[j]) * par(wa[i]);
      std::array<W, K> w;
      for (int k = 0; k < K; ++k) {
        w[k] = wa[k];
        w[k].insert(w[k].end(), wb[k].begin(), wb[k].end());
      }
      S c = ca * cb;
      if (e & 1) c = S(-1) * c;
      r.add_term(w, c);
    }
  return r;
}

// Graded flip on the tensor square: x (x) y -> (-1)^{p(x)p(y)} y (x) x.
template <class W, class S, class Par>
TenT<W, S, 2> ten_flip(const TenT<W, S, 2>& A, Par par) {
  TenT<W, S, 2> r;
  for (const auto& [w, c] : A.t) {
    int e = par(w[0]) * par(w[1]);
    S cc = (e & 1) ? S(-1) * c : c;
    r.add_term({w[1], w[0]}, cc);
  }
  return r;
}

// Ungraded slot swap (no sign), used when adjudicating sign conventions.
template <class W, class S>
TenT<W, S, 2> ten_swap_plain(const TenT<W, S, 2>& A) {
  TenT<W, S, 2> r;
  for (const auto& [w, c] : A.t) r.add_term({w[1], w[0]}, c);
  return r;
}

template <class W, class S, int K>
TenT<W, S, K> ten_unit() {
  TenT<W, S, K> r;
  std::array<W, K> e{};
  r.add_term(e, S(1));
  return r;
}

}  // namespace qlie
