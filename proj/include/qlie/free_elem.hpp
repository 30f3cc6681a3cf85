#pragma once

#include <map>

#include "qlie/gen.hpp"
#include "qlie/rational.hpp"

namespace qlie {

// Element of the free associative superalgebra on Gen symbols, with scalar S
// (S = Rat for most uses, S = HTrunc for deformation computations).
// Stored as an ordered word -> coefficient map; zero coefficients are erased.
template <class S>
struct FreeElemT {
  std::map<Word, S> t;

  bool is_zero() const { return t.empty(); }

  void add_term(const Word& w, const S& c) {
    if (scalar_is_zero(c)) return;
    auto it = t.find(w);
    if (it == t.end()) {
      t.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (scalar_is_zero(it->second)) t.erase(it);
    }
  }

  static bool scalar_is_zero(const S& c) {
    if constexpr (std::is_same_v<S, Rat>)
      return sgn(c) == 0;
    else
      return c.is_zero();
  }

  friend FreeElemT operator+(const FreeElemT& a, const FreeElemT& b) {
    FreeElemT r = a;
    for (const auto& [w, c] : b.t) r.add_term(w, c);
    return r;
  }
  friend FreeElemT operator-(const FreeElemT& a, const FreeElemT& b) {
    FreeElemT r = a;
    for (const auto& [w, c] : b.t) r.add_term(w, S(-1) * c);
    return r;
  }
  friend FreeElemT operator*(const S& s, const FreeElemT& a) {
    FreeElemT r;
    for (const auto& [w, c] : a.t) r.add_term(w, s * c);
    return r;
  }
  friend FreeElemT operator*(const FreeElemT& a, const FreeElemT& b) {
    FreeElemT r;
    for (const auto& [wa, ca] : a.t)
      for (const auto& [wb, cb] : b.t) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(w, ca * cb);
      }
    return r;
  }
  friend bool operator==(const FreeElemT& a, const FreeElemT& b) { return (a - b).is_zero(); }
};

using FreeElem = FreeElemT<Rat>;

template <class S>
FreeElemT<S> unit_elem(const S& c) {
  FreeElemT<S> e;
  e.add_term(Word{}, c);
  return e;
}

template <class S>
FreeElemT<S> gen_elem(const Gen& g) {
  FreeElemT<S> e;
  e.add_term(Word{g}, S(1));
  return e;
}

inline FreeElem fe(const Gen& g) { return gen_elem<Rat>(g); }

// Supercommutator [a,b] = ab - (-1)^{p(a)p(b)} ba, computed term by term so that
// inhomogeneous inputs are handled bilinearly via word parities.
template <class S>
FreeElemT<S> super_bracket(const FreeElemT<S>& a, const FreeElemT<S>& b) {
  FreeElemT<S> r;
  for (const auto& [wa, ca] : a.t)
    for (const auto& [wb, cb] : b.t) {
      Word ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      r.add_term(ab, ca * cb);
      Word ba = wb;
      ba.insert(ba.end(), wa.begin(), wa.end());
      int sign = (word_parity(wa) && word_parity(wb)) ? -1 : 1;
      r.add_term(ba, S(-sign) * (ca * cb));
    }
  return r;
}

// Plain anticommutator {a,b} = ab + ba.
template <class S>
FreeElemT<S> anti_bracket(const FreeElemT<S>& a, const FreeElemT<S>& b) {
  return a * b + b * a;
}

// Super anticommutator {a,b} = ab + (-1)^{p(a)p(b)} ba; for two odd arguments
// this is the plain commutator.
template <class S>
FreeElemT<S> super_anti_bracket(const FreeElemT<S>& a, const FreeElemT<S>& b) {
  FreeElemT<S> r;
  for (const auto& [wa, ca] : a.t)
    for (const auto& [wb, cb] : b.t) {
      Word ab = wa;
      ab.insert(ab.end(), wb.begin(), wb.end());
      r.add_term(ab, ca * cb);
      Word ba = wb;
      ba.insert(ba.end(), wa.begin(), wa.end());
      int sign = (word_parity(wa) && word_parity(wb)) ? -1 : 1;
      r.add_term(ba, S(sign) * (ca * cb));
    }
  return r;
}

// Substitute generators into any target algebra.  Target must supply:
//   V one(), V gen(const Gen&), V mul(V,V), V add(V,V), V scal(Rat/S, V)
template <class S, class Tgt>
auto evaluate(const FreeElemT<S>& e, Tgt&& tgt) {
  using V = decltype(tgt.one());
  V acc = tgt.zero();
  for (const auto& [w, c] : e.t) {
    V prod = tgt.one();
    for (const auto& g : w) prod = tgt.mul(prod, tgt.gen(g));
    acc = tgt.add(acc, tgt.scal(c, prod));
  }
  return acc;
}

}  // namespace qlie
