#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hhl/database.hpp"
#include "hhl/excol.hpp"

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

IntVec iv(std::vector<long> v) {
  IntVec r;
  for (long x : v) r.push_back(Int(x));
  return r;
}

}  // namespace

TEST_CASE("hom table diagonal is the base field") {
  CohomologyEngine e(projective_space(2));
  HomTable t = hom_table(e, {iv({-2}), iv({-1}), iv({0})});
  for (int i = 0; i < 3; ++i) {
    CHECK(t.hom[i][i][0] == 1);
    CHECK(t.hom[i][i][1] == 0);
  }
  // backward homs all vanish
  CHECK_FALSE(t.nonzero(1, 0));
  CHECK_FALSE(t.nonzero(2, 0));
  CHECK_FALSE(t.nonzero(2, 1));
}

TEST_CASE("beilinson collection on the plane") {
  CohomologyEngine e(projective_space(2));
  HomTable t = hom_table(e, {iv({-2}), iv({-1}), iv({0})});
  CollectionReport r = find_exceptional_order(t);
  CHECK(r.verdict == "strong_exceptional");
  CHECK(r.order == std::vector<int>{0, 1, 2});
  CHECK(r.f[1][0] == 3);
  CHECK(r.f[2][0] == 6);
  CHECK(r.f[2][1] == 3);
  for (int i = 0; i < 3; ++i) CHECK(r.f[i][i] == 1);
}

TEST_CASE("singleton collection") {
  CohomologyEngine e(projective_space(1));
  HomTable t = hom_table(e, {iv({0})});
  CollectionReport r = find_exceptional_order(t);
  CHECK(r.verdict == "strong_exceptional");
  CHECK(r.f == std::vector<std::vector<Int>>{{Int(1)}});
  CHECK(quiver_dot(r) == "digraph quiver {\n  0;\n}\n");
}

TEST_CASE("quiver for the line") {
  CohomologyEngine e(projective_space(1));
  HomTable t = hom_table(e, {iv({-1}), iv({0})});
  CollectionReport r = find_exceptional_order(t);
  CHECK(r.verdict == "strong_exceptional");
  CHECK(quiver_dot(r) ==
        "digraph quiver {\n  0;\n  1;\n  0 -> 1 [label=\"2\"];\n}\n");
}

TEST_CASE("two-cycle refutation") {
  // O and O(2,-2) on P^1 x P^1 have nonzero homs both ways (in degree 1)
  ToricVariety p1 = projective_space(1);
  ToricVariety x = product(p1, p1);
  CohomologyEngine e(x);
  HomTable t = hom_table(e, {iv({0, 0}), iv({2, -2})});
  CollectionReport r = find_exceptional_order(t);
  CHECK(r.verdict == "no_ordering_exists");
  CHECK(r.cert_i == 0);
  CHECK(r.cert_j == 1);
  CHECK(r.cert_forward[1] != 0);
  CHECK(r.cert_backward[1] != 0);
  CHECK_THROWS_AS(quiver_dot(r), NoOrdering);
}

TEST_CASE("verdict is order independent") {
  CohomologyEngine e(projective_space(2));
  std::vector<IntVec> classes{iv({0}), iv({-2}), iv({-1})};
  HomTable t = hom_table(e, classes);
  CollectionReport r = find_exceptional_order(t);
  CHECK(r.verdict == "strong_exceptional");
  // tie-broken order sorts by class
  CHECK(t.classes[r.order[0]] == iv({-2}));
  CHECK(t.classes[r.order[2]] == iv({0}));
}

TEST_CASE("report in a stored order") {
  CohomologyEngine e(projective_space(2));
  HomTable t = hom_table(e, {iv({-2}), iv({-1}), iv({0})});
  CollectionReport good = report_in_order(t, {0, 1, 2});
  CHECK(good.verdict == "strong_exceptional");
  CollectionReport bad = report_in_order(t, {2, 1, 0});
  CHECK(bad.verdict == "no_ordering_exists");
}

TEST_CASE("surface figure checks") {
  auto db = load_database(std::string(HHL_DATA_DIR) + "/varieties.json");
  const VarietyRecord* blp = find_record(db, "BlpP2");
  REQUIRE(blp != nullptr);
  CohomologyEngine e(blp->variety);
  FigureCheck fc = surface_figure_checks(e, blp->expected->collection,
                                         blp->expected->figure_backward,
                                         blp->expected->figure_forward);
  CHECK(fc.ok);
  // a forward label with higher cohomology must be flagged
  FigureCheck bad = surface_figure_checks(e, {}, {}, {iv({-3, -2})});
  CHECK_FALSE(bad.ok);
  // and a backward label with any cohomology at all
  FigureCheck bad2 = surface_figure_checks(e, {}, {iv({1, 0})}, {});
  CHECK_FALSE(bad2.ok);
}
