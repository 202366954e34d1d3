#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hhl/diagres.hpp"

using namespace hhl;

namespace {

ToricVariety projective_space(int n) {
  ToricVariety x;
  x.name = "P" + std::to_string(n);
  x.dim = n;
  x.rays = IntMat(n + 1, n);
  for (int i = 0; i < n; ++i) x.rays.at(i, i) = 1;
  for (int j = 0; j < n; ++j) x.rays.at(n, j) = -1;
  for (int drop = 0; drop <= n; ++drop) {
    std::vector<int> c;
    for (int i = 0; i <= n; ++i)
      if (i != drop) c.push_back(i);
    x.max_cones.push_back(c);
  }
  x.grading = IntMat(1, n + 1);
  for (int j = 0; j <= n; ++j) x.grading.at(0, j) = 1;
  return x;
}

std::vector<int> ranks(const GradedFreeComplex& c) {
  std::vector<int> r;
  for (const auto& t : c.terms) r.push_back(static_cast<int>(t.size()));
  return r;
}

IntVec iv(std::vector<long> v) {
  IntVec r;
  for (long x : v) r.push_back(Int(x));
  return r;
}

}  // namespace

TEST_CASE("kernel subspace") {
  CHECK(kernel_subspace(diagonal_map(1)).dim() == 1);
  CHECK(kernel_subspace(IntMat::identity(3)).dim() == 0);
  IntMat phi(3, 1, {{1}, {3}, {4}});
  CHECK(kernel_subspace(phi).dim() == 2);
}

TEST_CASE("diagonal of the projective line") {
  ToricVariety p1 = projective_space(1);
  ToricVariety y = product(p1, p1);
  CellComplex cc = build_cells(y, diagonal_map(1));
  CHECK(cc.cells.size() == 1);  // one segment; its two endpoints are glued
  GradedFreeComplex c = diagonal_resolution(p1);
  CHECK(ranks(c) == std::vector<int>{1, 1});
  CHECK(c.terms[0][0] == iv({0, 0}));
  CHECK(c.terms[1][0] == iv({-1, -1}));
  // the single entry is the classic binomial: two monomials, opposite signs
  REQUIRE(c.diffs[0][0][0].size() == 2);
  CHECK(c.diffs[0][0][0][0].sign * c.diffs[0][0][0][1].sign == -1);
  CHECK(check_d2_zero(c));
  CHECK(check_homogeneity(product(p1, p1), c));
  CHECK(check_minimality(c));
  auto e = extract_collection(c, 1, 0);
  CHECK(e == std::vector<IntVec>{iv({-1}), iv({0})});
  CHECK(extract_collection(c, 1, 1) == e);
}

TEST_CASE("diagonal of the projective plane") {
  ToricVariety p2 = projective_space(2);
  GradedFreeComplex c = diagonal_resolution(p2);
  CHECK(ranks(c) == std::vector<int>{1, 3, 2});
  CHECK(check_d2_zero(c));
  CHECK(check_homogeneity(product(p2, p2), c));
  CHECK(check_minimality(c));
  auto e = extract_collection(c, 1, 0);
  CHECK(e == std::vector<IntVec>{iv({-2}), iv({-1}), iv({0})});
  CHECK(extract_collection(c, 1, 1) == e);
}

TEST_CASE("diagonal of P1 x P1") {
  ToricVariety p1 = projective_space(1);
  ToricVariety x = product(p1, p1);
  x.name = "P1xP1";
  GradedFreeComplex c = diagonal_resolution(x);
  CHECK(ranks(c) == std::vector<int>{1, 2, 1});
  CHECK(check_d2_zero(c));
  CHECK(check_homogeneity(product(x, x), c));
  CHECK(check_minimality(c));
  auto e = extract_collection(c, 2, 0);
  CHECK(e == std::vector<IntVec>{iv({-1, -1}), iv({-1, 0}), iv({0, -1}), iv({0, 0})});
  CHECK(extract_collection(c, 2, 1) == e);
  // middle twists pair the same class on both factors
  std::vector<IntVec> mid = c.terms[1];
  std::sort(mid.begin(), mid.end());
  CHECK(mid == std::vector<IntVec>{iv({-1, 0, -1, 0}), iv({0, -1, 0, -1})});
}

TEST_CASE("euler characteristic oracle") {
  ToricVariety p1 = projective_space(1);
  GradedFreeComplex c1 = diagonal_resolution(p1);
  CHECK(euler_char_oracle(p1, c1, {{iv({1}), iv({1})}, {iv({0}), iv({0})},
                                   {iv({2}), iv({1})}, {iv({2}), iv({2})},
                                   {iv({3}), iv({1})}}));
  ToricVariety p2 = projective_space(2);
  GradedFreeComplex c2 = diagonal_resolution(p2);
  CHECK(euler_char_oracle(p2, c2, {{iv({1}), iv({1})}, {iv({2}), iv({1})},
                                   {iv({1}), iv({2})}, {iv({2}), iv({2})},
                                   {iv({3}), iv({2})}}));
  // a wrong complex must fail
  GradedFreeComplex broken = c1;
  broken.terms[1].push_back(broken.terms[1][0]);
  CHECK_FALSE(euler_char_oracle(p1, broken, {{iv({1}), iv({1})}}));
}

TEST_CASE("monomial counting") {
  ToricVariety p2 = projective_space(2);
  CHECK(count_monomials(p2.grading, iv({2})) == 6);
  CHECK(count_monomials(p2.grading, iv({0})) == 1);
  CHECK(count_monomials(p2.grading, iv({-1})) == 0);
}

TEST_CASE("fine degrees are interior point independent") {
  ToricVariety p2 = projective_space(2);
  ToricVariety y = product(p2, p2);
  CellComplex cc = build_cells(y, diagonal_map(2));
  CellClassTable t = group_by_lattice_class(y, cc);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> wdist(1, 7);
  for (const auto& [d, faces] : t.faces.faces_by_dim) {
    for (size_t f = 0; f < faces.size(); ++f) {
      // random positive convex combination of the face's vertices
      std::vector<Rat> w;
      Rat total(0);
      for (size_t i = 0; i < faces[f].size(); ++i) {
        w.push_back(Rat(wdist(rng)));
        total += w.back();
      }
      Point p(y.dim, Rat(0));
      for (size_t i = 0; i < faces[f].size(); ++i)
        for (int j = 0; j < y.dim; ++j)
          p[j] += w[i] / total * t.faces.verts[faces[f][i]][j];
      IntVec fd(y.num_rays());
      for (int r = 0; r < y.num_rays(); ++r) {
        Rat s(0);
        for (int j = 0; j < y.dim; ++j) s += Rat(y.rays.at(r, j)) * p[j];
        s.canonicalize();
        Int c;
        mpz_cdiv_q(c.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
        fd[r] = c;
      }
      CHECK(fd == t.fine_degree.at(d)[f]);
    }
  }
}

TEST_CASE("subvariety resolution from the appendix example runs") {
  ToricVariety p3 = projective_space(3);
  IntMat phi(3, 1, {{1}, {3}, {4}});
  CellComplex cc = build_cells(p3, phi);
  CHECK(cc.lattice.l.cols == 2);
  CellClassTable t = group_by_lattice_class(p3, cc);
  GradedFreeComplex c = assemble(p3, t);
  CHECK(check_d2_zero(c));
  CHECK(check_homogeneity(p3, c));
  CHECK(c.terms.size() == 3);
}
