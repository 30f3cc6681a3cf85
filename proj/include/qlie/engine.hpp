#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlie/rational.hpp"
#include "qlie/report.hpp"

namespace qlie {

// One mode generator t^m_{i,j}, packed as (level<<8)|(rowIdx<<4)|colIdx with the
// canonical-representative convention row > 0 (the m-dependent sign that moves
// t^m_{-i,-j} to t^m_{i,j} is applied before packing).  The packed integer order
// (level, row, column) is the normal-form generator order.
using TGen = std::uint32_t;
using TWord = std::vector<TGen>;

// Element of the mode algebra: exact rational combination of words in canonical
// generators.  Multiplication is free concatenation; all relations are applied
// by Engine::normalize, never here.
struct YElem {
  std::map<TWord, Rat> t;

  bool is_zero() const { return t.empty(); }
  void add(const TWord& w, const Rat& c);

  friend YElem operator+(const YElem& a, const YElem& b);
  friend YElem operator-(const YElem& a, const YElem& b);
  friend YElem operator*(const Rat& s, const YElem& a);
  friend YElem operator*(const YElem& a, const YElem& b);
  friend bool operator==(const YElem& a, const YElem& b) { return (a - b).is_zero(); }

  int total_level() const;  // max over words
};

YElem yzero();
YElem yone();

// Rewriting engine for the mode algebra at rank n (n <= 2; the derived
// commutator recursion is exponential in the level budget for larger ranks).
class Engine {
 public:
  explicit Engine(int n, bool memoize = true);

  int rank() const { return n_; }

  // packing and canonicalization; indices i,j in {-n..-1, 1..n}
  TGen pack(int m, int i, int j) const;  // requires m >= 1, i > 0
  std::pair<TGen, int> canon(int m, int i, int j) const;  // sign * packed
  int level(TGen g) const { return (int)(g >> 8); }
  int row(TGen g) const { return (int)((g >> 4) & 0xF) + 1; }
  int col(TGen g) const;  // signed column
  int parity(TGen g) const { return (int)(g & 0xF) >= n_ ? 1 : 0; }
  std::string gen_str(TGen g) const;
  std::string str(const YElem& e) const;

  // t^m_{i,j} as an element: level 0 is the scalar delta, negative levels vanish
  YElem tmode(int m, int i, int j) const;

  // derived super-commutator [a, b], fully normalized; memoized
  YElem comm(TGen a, TGen b);
  // super-commutator of homogeneous elements (parities required)
  YElem comm(const YElem& a, const YElem& b);

  // sorted-word, odd-square-free normal form
  YElem normalize(const YElem& x);

  struct Stats {
    long rewrites = 0;
    long comm_walks = 0;
    long cache_hits = 0;
  };
  const Stats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }

  // derived-commutator table as versioned JSON text; load refuses a dump from a
  // different engine version or rank
  std::string cache_dump() const;
  void cache_load(const std::string& text);

 private:
  YElem boundary_first(TGen a1, TGen b) const;   // [t^1, t^b], first slot stepped
  YElem boundary_second(TGen a, TGen b1) const;  // [t^a, t^1], second slot stepped
  YElem rhs_products(int m, int r, int i, int j, int k, int l) const;
  YElem comm_walk(TGen a, TGen b);

  int n_;
  bool memo_;
  std::map<std::uint64_t, YElem> cache_;
  Stats stats_;

  friend Report boundary_consistency_check(Engine& eng, int max_level);
};

// ---- engine-level checks ----------------------------------------------------

// walk-derived [t^a, t^1] against the direct second-slot boundary reading
Report boundary_consistency_check(Engine& eng, int max_level);
// [a,b] + (-1)^{p(a)p(b)} [b,a] normalizes to 0 for canonical pairs
Report antisymmetry_check(Engine& eng, int max_total);
// super-Jacobi residual for canonical triples with total level <= max_total
Report jacobi_check(Engine& eng, int max_total);
// the three explicit low-rank commutator displays, verdicted per (m, k)
Report explicit_display_check(Engine& eng, int max_mk);
// [t^{2k}_{1,1}, t^{2r}_{1,1}] = 0 for k + r <= max_sum
Report lemma_comt_check(Engine& eng, int max_sum);

// all normal-form basis words of total level <= max_total (sorted, no odd square)
std::vector<TWord> basis_words(const Engine& eng, int max_total);

// two-sided ideal membership at bounded total level: the spanning set
// {w1 * g * w2} with total level <= degree is normalized and row-reduced; the
// certificate lists (generator index, left word, right word, coefficient)
struct IdealCert {
  struct Piece {
    int gen;
    TWord left, right;
    Rat c;
  };
  std::vector<Piece> pieces;
};
std::optional<IdealCert> ideal_membership(Engine& eng, const YElem& x,
                                          const std::vector<YElem>& gens, int degree);

}  // namespace qlie
