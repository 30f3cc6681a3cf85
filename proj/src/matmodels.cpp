#include "qlie/matmodels.hpp"

#include "qlie/linalg.hpp"

namespace qlie {

SuperMatrix E0(int n, int a, int b) {
  SuperMatrix m(n);
  m.at(a, b) = 1;
  m.at(-a, -b) = 1;
  return m;
}

SuperMatrix E1(int n, int a, int b) {
  SuperMatrix m(n);
  m.at(-a, b) = 1;
  m.at(a, -b) = 1;
  return m;
}

SuperMatrix F0(int n, int a, int b) {
  SuperMatrix m(n);
  m.at(a, b) = 1;
  m.at(-a, -b) = -1;
  return m;
}

SuperMatrix F1(int n, int a, int b) {
  SuperMatrix m(n);
  m.at(-a, b) = 1;
  m.at(a, -b) = -1;
  return m;
}

SuperMatrix H1(int n, int i) { return E1(n, i, i) - E1(n, i + 1, i + 1); }

SuperMatrix Jmat(int n) {
  SuperMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    m.at(i, -i) = 1;
    m.at(-i, i) = -1;
  }
  return m;
}

LabeledBasis qn_basis(int n) {
  LabeledBasis b;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      b.labels.push_back("E0(" + std::to_string(i) + "," + std::to_string(j) + ")");
      b.mats.push_back(E0(n, i, j));
      b.parity.push_back(0);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      b.labels.push_back("E1(" + std::to_string(i) + "," + std::to_string(j) + ")");
      b.mats.push_back(E1(n, i, j));
      b.parity.push_back(1);
    }
  return b;
}

LabeledBasis sqn_basis(int n) {
  LabeledBasis b;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      b.labels.push_back("E0(" + std::to_string(i) + "," + std::to_string(j) + ")");
      b.mats.push_back(E0(n, i, j));
      b.parity.push_back(0);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      b.labels.push_back("E1(" + std::to_string(i) + "," + std::to_string(j) + ")");
      b.mats.push_back(E1(n, i, j));
      b.parity.push_back(1);
    }
  for (int i = 1; i <= n - 1; ++i) {
    b.labels.push_back("H1(" + std::to_string(i) + ")");
    b.mats.push_back(H1(n, i));
    b.parity.push_back(1);
  }
  return b;
}

LabeledBasis anti_basis(int n) {
  LabeledBasis b;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      b.labels.push_back("F0(" + std::to_string(i) + "," + std::to_string(j) + ")");
      b.mats.push_back(F0(n, i, j));
      b.parity.push_back(0);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      b.labels.push_back("F1(" + std::to_string(i) + "," + std::to_string(j) + ")");
      b.mats.push_back(F1(n, i, j));
      b.parity.push_back(1);
    }
  return b;
}

static std::map<int, Rat> flatten(const SuperMatrix& m) {
  std::map<int, Rat> v;
  for (size_t k = 0; k < m.a.size(); ++k)
    if (sgn(m.a[k]) != 0) v[(int)k] = m.a[k];
  return v;
}

int span_rank(const std::vector<SuperMatrix>& mats) {
  RowSpace<int> rs;
  for (const auto& m : mats) rs.add(flatten(m));
  return (int)rs.rank();
}

std::optional<std::vector<Rat>> express_in(const LabeledBasis& basis, const SuperMatrix& m) {
  RowSpaceCert<int> rs;
  for (const auto& bm : basis.mats) rs.add(flatten(bm));
  auto cert = rs.member_cert(flatten(m));
  if (!cert) return std::nullopt;
  std::vector<Rat> coeffs(basis.size(), Rat(0));
  for (const auto& [id, c] : *cert) coeffs[id] = c;
  return coeffs;
}

int centralizer_dim(int n) {
  // X runs over all matrix units E_{a,b}; J is odd, so the graded centralizer is the
  // kernel of X -> XJ - (-1)^{p(X)} JX.  Rank-nullity on the image.
  SuperMatrix J = Jmat(n);
  RowSpace<int> image;
  int total = 0;
  for (int p = 0; p < 2 * n; ++p)
    for (int q = 0; q < 2 * n; ++q) {
      int i = SuperMatrix::idx_at(n, p), j = SuperMatrix::idx_at(n, q);
      SuperMatrix X = SuperMatrix::unit(n, i, j);
      image.add(flatten(sbracket(X, J)));
      ++total;
    }
  return total - (int)image.rank();
}

bool sigma_eigen(const SuperMatrix& m, int c) {
  return (sigma(m) - Rat(c) * m).is_zero();
}

}  // namespace qlie
