#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hhl/intlin.hpp"

using namespace hhl;

namespace {

IntMat random_matrix(std::mt19937& rng, int max_dim, int max_abs) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> val(-max_abs, max_abs);
  IntMat m(dim(rng), dim(rng));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = val(rng);
  return m;
}

bool is_diagonal_chain(const IntMat& d) {
  for (int i = 0; i < d.rows; ++i)
    for (int j = 0; j < d.cols; ++j)
      if (i != j && d.at(i, j) != 0) return false;
  int k = std::min(d.rows, d.cols);
  for (int i = 0; i + 1 < k; ++i) {
    if (d.at(i, i) < 0 || d.at(i + 1, i + 1) < 0) return false;
    if (d.at(i, i) != 0 && d.at(i + 1, i + 1) % d.at(i, i) != 0) return false;
    if (d.at(i, i) == 0 && d.at(i + 1, i + 1) != 0) return false;
  }
  return true;
}

// Naive cofactor determinant for cross-checks.
Int naive_det(const IntMat& m) {
  if (m.rows == 1) return m.at(0, 0);
  Int acc = 0;
  for (int j = 0; j < m.cols; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMat sub(m.rows - 1, m.cols - 1);
    for (int i = 1; i < m.rows; ++i) {
      int cc = 0;
      for (int c = 0; c < m.cols; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = m.at(i, c);
      }
    }
    Int term = m.at(0, j) * naive_det(sub);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> dim(1, 5);
    int n = dim(rng);
    std::uniform_int_distribution<int> val(-6, 6);
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = val(rng);
    CHECK(det(m) == naive_det(m));
  }
}

TEST_CASE("snf round trip on random matrices") {
  std::mt19937 rng(11);
  for (int t = 0; t < 500; ++t) {
    IntMat m = random_matrix(rng, 8, 9);
    SnfResult s = snf(m);
    CHECK(mul(mul(s.U, m), s.V) == s.D);
    CHECK(is_diagonal_chain(s.D));
    Int du = det(s.U), dv = det(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
  }
}

TEST_CASE("kernel basis is a saturated basis of the null space") {
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    IntMat m = random_matrix(rng, 6, 5);
    IntMat k = kernel_basis(m);
    CHECK(k.cols == m.cols - rank(m));
    // M*K == 0
    if (k.cols > 0) {
      IntMat z = mul(m, k);
      for (const auto& e : z.a) CHECK(e == 0);
      // saturation: the SNF of K has all invariant factors 1
      SnfResult s = snf(k);
      for (int i = 0; i < k.cols; ++i) CHECK(s.D.at(i, i) == 1);
    }
  }
}

TEST_CASE("cokernel presentation annihilates the input and is surjective") {
  IntMat b(4, 2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}});
  IntMat pi = cokernel_presentation(b);
  CHECK(pi.rows == 2);
  CHECK(pi.cols == 4);
  IntMat z = mul(pi, b);
  for (const auto& e : z.a) CHECK(e == 0);
  // surjectivity: SNF invariant factors of pi are all 1
  SnfResult s = snf(pi);
  for (int i = 0; i < pi.rows; ++i) CHECK(s.D.at(i, i) == 1);
}

TEST_CASE("cokernel presentation rejects torsion") {
  IntMat b(2, 1, {{2}, {0}});
  CHECK_THROWS_AS(cokernel_presentation(b), TorsionClassGroup);
}

TEST_CASE("maximal minors check agrees with brute force") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> rdim(1, 7), cdim(1, 3), val(-2, 2);
  for (int t = 0; t < 300; ++t) {
    int r = rdim(rng), c = std::min(cdim(rng), r);
    IntMat b(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) b.at(i, j) = val(rng);
    // brute force over all row subsets of size c
    bool indep = rank(b) == c;
    bool ok = indep;
    if (indep) {
      std::vector<int> idx(c);
      std::function<bool(int, int)> scan = [&](int start, int k) -> bool {
        if (k == c) {
          IntMat sub(c, c);
          for (int i = 0; i < c; ++i)
            for (int j = 0; j < c; ++j) sub.at(i, j) = b.at(idx[i], j);
          Int d = det(sub);
          return d >= -1 && d <= 1;
        }
        for (int i = start; i < r; ++i) {
          idx[k] = i;
          if (!scan(i + 1, k + 1)) return false;
        }
        return true;
      };
      ok = scan(0, 0);
    }
    CHECK(maximal_minors_in_unit_set(b) == ok);
  }
}

TEST_CASE("hermite form canonicalizes column spans") {
  IntMat a(3, 2, {{2, 1}, {0, 3}, {4, 5}});
  IntMat h1 = hnf_columns(a);
  // permuting and mixing columns unimodularly leaves the HNF unchanged
  IntMat b(3, 2, {{1, 3}, {3, 3}, {5, 9}});  // col swaps + col additions of a
  IntMat h2 = hnf_columns(b);
  CHECK(h1 == h2);
}

TEST_CASE("rational solve") {
  RatMat m(2, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 0;
  m.at(1, 0) = 0; m.at(1, 1) = 1; m.at(1, 2) = 1;
  RatVec rhs{Rat(5), Rat(3)};
  RatVec x;
  REQUIRE(solve_rational(m, rhs, x));
  CHECK(x[0] + 2 * x[1] == 5);
  CHECK(x[1] + x[2] == 3);
  RatMat bad(2, 1);
  bad.at(0, 0) = 1; bad.at(1, 0) = 1;
  RatVec rhs2{Rat(0), Rat(1)};
  CHECK_FALSE(solve_rational(bad, rhs2, x));
}

TEST_CASE("integer solve") {
  IntMat m(2, 2, {{2, 0}, {0, 3}});
  IntVec rhs{4, 9}, x;
  REQUIRE(solve_integer(m, rhs, x));
  CHECK(x[0] == 2);
  CHECK(x[1] == 3);
  IntVec odd{3, 9};
  CHECK_FALSE(solve_integer(m, odd, x));
}

TEST_CASE("leftmost maximal rank column selection") {
  RatMat m(2, 4);
  m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 0; m.at(0, 3) = 1;
  m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 1; m.at(1, 3) = 0;
  auto cols = leftmost_maxrank_columns(m);
  REQUIRE(cols.size() == 2);
  CHECK(cols[0] == 0);
  CHECK(cols[1] == 2);
}
