#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hhl/polyhedra.hpp"

using namespace hhl;

namespace {

Polyhedron unit_cube(int d) {
  std::vector<HalfSpace> in;
  for (int i = 0; i < d; ++i) {
    RatVec lo(d, Rat(0)), hi(d, Rat(0));
    lo[i] = -1;
    hi[i] = 1;
    in.push_back({lo, Rat(0)});
    in.push_back({hi, Rat(1)});
  }
  return Polyhedron(d, in, {});
}

Point pt(std::vector<long> v) {
  Point p;
  for (long x : v) p.push_back(Rat(x));
  return p;
}

}  // namespace

TEST_CASE("cube vertices, dim, interior point") {
  for (int d = 1; d <= 4; ++d) {
    Polyhedron c = unit_cube(d);
    CHECK(static_cast<int>(c.vertices().size()) == (1 << d));
    CHECK(c.dim() == d);
    Point ip = c.interior_point();
    for (const auto& x : ip) CHECK(x == Rat(1, 2));
  }
}

TEST_CASE("vertices are sorted lexicographically and deduplicated") {
  Polyhedron c = unit_cube(2);
  const auto& vs = c.vertices();
  REQUIRE(vs.size() == 4);
  CHECK(vs[0] == pt({0, 0}));
  CHECK(vs[1] == pt({0, 1}));
  CHECK(vs[2] == pt({1, 0}));
  CHECK(vs[3] == pt({1, 1}));
}

TEST_CASE("empty and inconsistent systems") {
  RatMat in(2, 1);
  in.at(0, 0) = 1;
  in.at(1, 0) = -1;
  RatVec off{Rat(-1), Rat(0)};  // x <= -1 and x >= 0
  Polyhedron p = from_hdata(in, off, RatMat(0, 1), {});
  CHECK(p.is_empty());
  CHECK(p.dim() == -1);
}

TEST_CASE("unbounded polyhedra are detected") {
  RatMat in(1, 2);
  in.at(0, 0) = 1;
  in.at(0, 1) = 1;
  RatVec off{Rat(1)};
  Polyhedron p = from_hdata(in, off, RatMat(0, 2), {});
  CHECK_THROWS_AS(p.vertices(), Unbounded);
}

TEST_CASE("equalities cut dimension") {
  std::vector<Hyperplane> eq{{RatVec{Rat(1), Rat(1), Rat(1)}, Rat(1)}};
  Polyhedron c = unit_cube(3);
  Polyhedron s(3, c.ineqs(), eq);
  CHECK(s.dim() == 2);
  CHECK(s.vertices().size() == 3);  // triangle slice of the cube
}

TEST_CASE("from_points round trip") {
  std::vector<Point> pts{pt({0, 0}), pt({2, 0}), pt({0, 2}), pt({1, 1}), pt({1, 0})};
  Polyhedron h = from_points(2, pts);
  CHECK(h.dim() == 2);
  const auto& vs = h.vertices();
  REQUIRE(vs.size() == 3);
  CHECK(h.contains_point(pt({1, 1})));
  CHECK_FALSE(h.contains_point(pt({2, 1})));
}

TEST_CASE("from_points handles lower dimensional hulls") {
  std::vector<Point> pts{pt({0, 0, 0}), pt({1, 1, 0}), pt({2, 2, 0})};
  Polyhedron h = from_points(3, pts);
  CHECK(h.dim() == 1);
  CHECK(h.vertices().size() == 2);
  CHECK(h.contains_point(pt({1, 1, 0})));
  CHECK_FALSE(h.contains_point(pt({1, 0, 0})));
}

TEST_CASE("slice of the unit square by both axes at half-integer scale") {
  // slicing by 2x and 2y planes splits the square into 4 cells
  Polyhedron sq = unit_cube(2);
  IntMat rays(2, 2, {{2, 0}, {0, 2}});
  auto cells = slice_by_hyperplanes(sq, rays);
  CHECK(cells.size() == 4);
  Rat total(0);
  for (const auto& c : cells) {
    CHECK(c.dim() == 2);
    total += relative_volume(c);
  }
  CHECK(total == relative_volume(sq));
}

TEST_CASE("slice subdivision covers and respects faces") {
  // diagonal slicing of a square
  Polyhedron sq = unit_cube(2);
  IntMat rays(1, 2, {{1, 1}});
  auto cells = slice_by_hyperplanes(sq, rays);
  REQUIRE(cells.size() == 2);
  Rat total(0);
  for (const auto& c : cells) total += relative_volume(c);
  CHECK(total == Rat(1));
  FaceTable t = faces_by_dimension(cells);
  CHECK(t.verts.size() == 4);              // square corners; diagonal adds none
  CHECK(t.faces_by_dim[2].size() == 2);    // two triangles
  CHECK(t.faces_by_dim[1].size() == 5);    // 4 sides + diagonal
  CHECK(t.faces_by_dim[0].size() == 4);
}

TEST_CASE("faces of a cube") {
  Polyhedron c = unit_cube(3);
  auto faces = faces_of(c);
  CHECK(faces[3].size() == 1);
  CHECK(faces[2].size() == 6);
  CHECK(faces[1].size() == 12);
  CHECK(faces[0].size() == 8);
}

TEST_CASE("pruning drops redundant inequalities") {
  Polyhedron c = unit_cube(2);
  std::vector<HalfSpace> in = c.ineqs();
  in.push_back({RatVec{Rat(1), Rat(1)}, Rat(5)});  // slack everywhere
  Polyhedron loose(2, in, {});
  Polyhedron tight = loose.pruned();
  CHECK(tight.ineqs().size() == 4);
  CHECK(tight.vertices() == c.vertices());
}

TEST_CASE("translation") {
  Polyhedron c = unit_cube(2);
  Polyhedron t = c.translated(RatVec{Rat(3), Rat(-1)});
  CHECK(t.vertices().front() == pt({3, -1}));
  Polyhedron back = minkowski_translate(t, RatVec{Rat(3), Rat(-1)});
  CHECK(back.vertices() == c.vertices());
}

TEST_CASE("relative volume of a simplex") {
  std::vector<Point> pts{pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})};
  Polyhedron s = from_points(3, pts);
  CHECK(relative_volume(s) == Rat(1, 6));
}

TEST_CASE("relative volume inside an affine subspace") {
  // segment from (0,0) to (2,2): chart on first coordinate gives length 2
  std::vector<Point> pts{pt({0, 0}), pt({2, 2})};
  Polyhedron s = from_points(2, pts);
  CHECK(relative_volume(s) == Rat(2));
}

TEST_CASE("containment") {
  Polyhedron big = unit_cube(2);
  std::vector<Point> pts{pt({0, 0}), pt({1, 0}), pt({0, 1})};
  Polyhedron tri = from_points(2, pts);
  CHECK(big.contains(tri));
  CHECK_FALSE(tri.contains(big));
}
