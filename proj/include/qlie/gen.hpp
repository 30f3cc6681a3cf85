#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qlie {

// Abstract generator symbol: a family tag plus an integer index tuple plus a parity.
// Printed as fam[i0] or fam[i0;i1,i2,...] -- the first index is separated because for
// current-algebra families it plays the role of a degree/level.
struct Gen {
  std::string fam;
  std::vector<int> idx;
  int par = 0;  // 0 even, 1 odd

  friend bool operator==(const Gen& a, const Gen& b) { return a.fam == b.fam && a.idx == b.idx; }
  friend bool operator<(const Gen& a, const Gen& b) {
    if (a.fam != b.fam) return a.fam < b.fam;
    return a.idx < b.idx;
  }
};

using Word = std::vector<Gen>;

inline int word_parity(const Word& w) {
  int p = 0;
  for (const auto& g : w) p ^= (g.par & 1);
  return p;
}

inline Gen gen(std::string fam, std::vector<int> idx, int par) {
  return Gen{std::move(fam), std::move(idx), par & 1};
}

}  // namespace qlie
