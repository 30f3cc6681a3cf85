#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlie/gen.hpp"
#include "qlie/supermatrix.hpp"

namespace qlie {

// Distinguished elements of gl(n|n) in the signed-index picture.
//   E0(a,b) = E_{a,b} + E_{-a,-b}          (even,  fixed by sigma)
//   E1(a,b) = E_{-a,b} + E_{a,-b}          (odd,   fixed by sigma)
//   F0(a,b) = E_{a,b} - E_{-a,-b}          (even,  anti-fixed)
//   F1(a,b) = E_{-a,b} - E_{a,-b}          (odd,   anti-fixed)
// with a, b in 1..n.  The fixed subalgebra (the queer superalgebra) is spanned by the
// E0/E1 family; H1(i) = E1(i,i) - E1(i+1,i+1) spans the odd Cartan of its commutant-
// free part together with all E0 and off-diagonal E1.
SuperMatrix E0(int n, int a, int b);
SuperMatrix E1(int n, int a, int b);
SuperMatrix F0(int n, int a, int b);
SuperMatrix F1(int n, int a, int b);
SuperMatrix H1(int n, int i);
SuperMatrix Jmat(int n);

struct LabeledBasis {
  std::vector<std::string> labels;
  std::vector<SuperMatrix> mats;
  std::vector<int> parity;  // super parity of each element
  size_t size() const { return mats.size(); }
};

// Basis of the sigma-fixed subalgebra: all E0(a,b), then all E1(a,b); 2n^2 elements.
LabeledBasis qn_basis(int n);
// Basis of the derived subalgebra: all E0, off-diagonal E1, and H1(1..n-1); 2n^2 - 1.
LabeledBasis sqn_basis(int n);
// Basis of the anti-fixed complement: all F0(a,b), then all F1(a,b); 2n^2 elements.
LabeledBasis anti_basis(int n);

// Rank of the span of the given matrices (exact).
int span_rank(const std::vector<SuperMatrix>& mats);

// Express m in the span of basis.mats; empty optional if not in the span.
std::optional<std::vector<Rat>> express_in(const LabeledBasis& basis, const SuperMatrix& m);

// Dimension of the centralizer of J inside gl(n|n) (kernel of X -> XJ - JX).
int centralizer_dim(int n);

// True if m is fixed (c = +1) or anti-fixed (c = -1) by sigma.
bool sigma_eigen(const SuperMatrix& m, int c);

}  // namespace qlie
