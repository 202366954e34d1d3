#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hhl/toric.hpp"

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

}  // namespace

TEST_CASE("projective spaces validate") {
  for (int n = 1; n <= 3; ++n) CHECK_NOTHROW(validate(projective_space(n), 200));
}

TEST_CASE("a fan with a missing cone fails completeness") {
  ToricVariety x = projective_space(2);
  x.max_cones.pop_back();
  // the dropped ray is still referenced by remaining cones, so the failure is
  // the facet pairing
  CHECK_THROWS_AS(validate(x, 50), InvalidFan);
}

TEST_CASE("a non smooth cone is rejected") {
  ToricVariety x;  // weighted projective-like fan with a det 2 cone
  x.name = "sing";
  x.dim = 2;
  x.rays = IntMat(3, 2, {{1, 0}, {-1, 2}, {0, -1}});
  x.max_cones = {{0, 1}, {1, 2}, {0, 2}};
  x.grading = cokernel_presentation(x.rays);
  CHECK_THROWS_AS(validate(x, 50), InvalidFan);
}

TEST_CASE("product of projective lines") {
  ToricVariety p1 = projective_space(1);
  ToricVariety q = product(p1, p1);
  CHECK(q.dim == 2);
  CHECK(q.num_rays() == 4);
  CHECK(q.max_cones.size() == 4);
  CHECK_NOTHROW(validate(q, 200));
}

TEST_CASE("product of a surface and a threefold validates") {
  ToricVariety p2 = projective_space(2);
  ToricVariety p1 = projective_space(1);
  ToricVariety q = product(p2, product(p1, p1));
  CHECK(q.dim == 4);
  CHECK(q.picard_rank() == 3);
  CHECK_NOTHROW(validate(q, 100));
}

TEST_CASE("fan from a reflexive polytope: P3") {
  IntMat normals(4, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
  ToricVariety x = fan_from_reflexive_polytope("P3", normals);
  CHECK(x.max_cones.size() == 4);
  CHECK_NOTHROW(validate(x, 200));
}

TEST_CASE("line bundle class round trip") {
  ToricVariety p2 = projective_space(2);
  IntVec coeffs{3, -1, 0};
  IntVec cls = line_bundle_class(p2, coeffs);
  REQUIRE(cls.size() == 1);
  CHECK(cls[0] == 2);
  IntVec back = class_to_coeffs(p2, cls);
  CHECK(line_bundle_class(p2, back) == cls);
}

TEST_CASE("classification of unimodular surfaces") {
  auto fans = classify_unimodular_surfaces();
  REQUIRE(fans.size() == 5);
  std::vector<int> ray_counts;
  for (const auto& f : fans) {
    ray_counts.push_back(f.num_rays());
    CHECK_NOTHROW(validate(f, 200));
  }
  CHECK(ray_counts == std::vector<int>{3, 4, 4, 5, 6});
}
