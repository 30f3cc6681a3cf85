#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlie/linalg.hpp"
#include "qlie/matmodels.hpp"
#include "qlie/report.hpp"

using namespace qlie;

TEST_CASE("supermatrix index conventions") {
  int n = 3;
  CHECK(SuperMatrix::pos(n, 1) == 0);
  CHECK(SuperMatrix::pos(n, 3) == 2);
  CHECK(SuperMatrix::pos(n, -1) == 3);
  CHECK(SuperMatrix::pos(n, -3) == 5);
  for (int p = 0; p < 2 * n; ++p) CHECK(SuperMatrix::pos(n, SuperMatrix::idx_at(n, p)) == p);
  // unit product rule E_ab E_cd = delta_bc E_ad
  auto e = [&](int i, int j) { return SuperMatrix::unit(n, i, j); };
  CHECK(e(1, -2) * e(-2, 3) == e(1, 3));
  CHECK((e(1, -2) * e(2, 3)).is_zero());
}

TEST_CASE("supertrace convention and invariance") {
  int n = 2;
  CHECK(str(SuperMatrix::unit(n, 1, 1)) == rat(-1));
  CHECK(str(SuperMatrix::unit(n, -1, -1)) == rat(1));
  CHECK(str(SuperMatrix::identity(n)) == rat(0));
  // str(xy) = (-1)^{p(x)p(y)} str(yx) on homogeneous matrix units
  for (int i : {1, 2, -1, -2})
    for (int j : {1, 2, -1, -2})
      for (int k : {1, 2, -1, -2})
        for (int l : {1, 2, -1, -2}) {
          SuperMatrix x = SuperMatrix::unit(n, i, j), y = SuperMatrix::unit(n, k, l);
          int px = (SuperMatrix::ipar(i) + SuperMatrix::ipar(j)) & 1;
          int py = (SuperMatrix::ipar(k) + SuperMatrix::ipar(l)) & 1;
          Rat sign = (px && py) ? rat(-1) : rat(1);
          CHECK(str(x * y) == sign * str(y * x));
        }
  // supertrace kills supercommutators
  SuperMatrix a = E1(n, 1, 2) + F0(n, 2, 1), b = E1(n, 2, 2) - F1(n, 1, 2);
  CHECK(str(sbracket(a, b)) == rat(0));
}

TEST_CASE("sigma is an involutive automorphism with the right eigenspaces") {
  int n = 3;
  for (int i : {1, 3, -2})
    for (int j : {2, -1, -3}) {
      SuperMatrix x = SuperMatrix::unit(n, i, j);
      CHECK(sigma(sigma(x)) == x);
    }
  SuperMatrix a = E0(n, 1, 3) + E1(n, 2, 1), b = F0(n, 2, 2) - F1(n, 3, 1);
  CHECK(sigma(a * b) == sigma(a) * sigma(b));
  CHECK(sigma_eigen(E0(n, 1, 2), 1));
  CHECK(sigma_eigen(E1(n, 1, 2), 1));
  CHECK(sigma_eigen(F0(n, 1, 2), -1));
  CHECK(sigma_eigen(F1(n, 1, 2), -1));
  CHECK_FALSE(sigma_eigen(F1(n, 1, 2), 1));
}

TEST_CASE("J squares to minus one and pins the fixed subalgebra") {
  for (int n : {1, 2, 3, 4}) {
    SuperMatrix J = Jmat(n);
    CHECK(J * J == rat(-1) * SuperMatrix::identity(n));
    // the fixed subalgebra is exactly the graded centralizer of the odd matrix J
    CHECK(centralizer_dim(n) == 2 * n * n);
    auto qb = qn_basis(n);
    CHECK((int)qb.size() == 2 * n * n);
    CHECK(span_rank(qb.mats) == 2 * n * n);
    for (const auto& m : qb.mats) CHECK(sbracket(m, J).is_zero());
    // fixed + anti-fixed spans everything
    auto ab = anti_basis(n);
    std::vector<SuperMatrix> all = qb.mats;
    all.insert(all.end(), ab.mats.begin(), ab.mats.end());
    CHECK(span_rank(all) == 4 * n * n);
    for (const auto& m : ab.mats) CHECK(sigma_eigen(m, -1));
  }
}

TEST_CASE("derived subalgebra basis and dimension") {
  for (int n : {2, 3, 4}) {
    auto sb = sqn_basis(n);
    CHECK((int)sb.size() == 2 * n * n - 1);
    CHECK(span_rank(sb.mats) == 2 * n * n - 1);
    // every basis element of the fixed subalgebra is a bracket combination:
    // check closure instead -- brackets of sqn elements stay in sqn
    RowSpace<int> span;
    auto flat = [&](const SuperMatrix& m) {
      std::map<int, Rat> v;
      for (size_t k = 0; k < m.a.size(); ++k)
        if (sgn(m.a[k]) != 0) v[(int)k] = m.a[k];
      return v;
    };
    for (const auto& m : sb.mats) span.add(flat(m));
    for (size_t i = 0; i < sb.size(); ++i)
      for (size_t j = i; j < sb.size(); ++j)
        CHECK(span.member(flat(sbracket(sb.mats[i], sb.mats[j]))));
    // the odd diagonal sum E1(1,1)+...+E1(n,n) is not in the derived subalgebra
    SuperMatrix odd_sum(n);
    for (int i = 1; i <= n; ++i) odd_sum = odd_sum + E1(n, i, i);
    CHECK_FALSE(express_in(sb, odd_sum).has_value());
    CHECK(express_in(qn_basis(n), odd_sum).has_value());
  }
}

TEST_CASE("express_in returns exact coordinates") {
  int n = 2;
  auto qb = qn_basis(n);
  SuperMatrix m = rat(3) * E0(n, 1, 2) - rat(1, 2) * E1(n, 2, 2);
  auto c = express_in(qb, m);
  REQUIRE(c.has_value());
  SuperMatrix re(n);
  for (size_t k = 0; k < qb.size(); ++k) re = re + (*c)[k] * qb.mats[k];
  CHECK(re == m);
}

TEST_CASE("report json round trip and schema") {
  Report rep;
  rep.config["n"] = "2";
  rep.numbers["degree_bound"] = 6;
  rep.pass("c1", "anchor-a");
  rep.discrepancy("c2", "anchor-b", "residual = 2*E(1,1)", "candidate rhs: 2*h[0;1]", "bounded search");
  std::string txt = rep.to_json_string();
  auto errs = report_validate_json(txt);
  CHECK(errs.empty());
  CHECK(rep.count("pass") == 1);
  CHECK(rep.count("discrepancy") == 1);
  auto errs2 = report_validate_json("{\"version\":1}");
  CHECK_FALSE(errs2.empty());
}
