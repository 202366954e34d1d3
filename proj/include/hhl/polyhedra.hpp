#ifndef HHL_POLYHEDRA_HPP
#define HHL_POLYHEDRA_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hhl/intlin.hpp"

// Exact rational convex polytopes in small ambient dimension. The V-rep is
// computed by brute-force basis enumeration over the H-rep, which is entirely
// adequate at the instance sizes this project meets (dim <= 6, a dozen or so
// facets per cell).

namespace hhl {

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};
struct Unbounded : std::runtime_error {
  explicit Unbounded(const std::string& msg) : std::runtime_error(msg) {}
};
struct EmptyPolyhedron : std::runtime_error {
  explicit EmptyPolyhedron(const std::string& msg) : std::runtime_error(msg) {}
};

using Point = RatVec;

struct HalfSpace {
  RatVec normal;  // normal . x <= offset
  Rat offset;
};

struct Hyperplane {
  RatVec normal;  // normal . x == offset
  Rat offset;
};

class Polyhedron {
 public:
  Polyhedron() = default;
  Polyhedron(int ambient_dim, std::vector<HalfSpace> ineqs, std::vector<Hyperplane> eqs);

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<HalfSpace>& ineqs() const { return ineqs_; }
  const std::vector<Hyperplane>& eqs() const { return eqs_; }

  // Minimal V-representation, lexicographically sorted. Cached after the
  // first call. Throws Unbounded if a recession direction exists.
  const std::vector<Point>& vertices() const;

  bool is_empty() const;
  int dim() const;  // affine dimension of the vertex set; -1 if empty

  bool contains_point(const Point& p) const;
  bool contains(const Polyhedron& q) const;  // every vertex of q satisfies us

  Point interior_point() const;  // vertex barycenter; throws EmptyPolyhedron

  Polyhedron translated(const RatVec& v) const;

  // Drops inequalities that are not tight at any vertex and collapses
  // duplicates. Keeps the polyhedron identical as a point set.
  Polyhedron pruned() const;

 private:
  void ensure_vrep() const;

  int ambient_dim_ = 0;
  std::vector<HalfSpace> ineqs_;
  std::vector<Hyperplane> eqs_;
  mutable std::optional<std::vector<Point>> vrep_;
};

Polyhedron from_hdata(const RatMat& ineq_normals, const RatVec& ineq_offsets,
                      const RatMat& eq_normals, const RatVec& eq_offsets);
Polyhedron from_points(int ambient_dim, const std::vector<Point>& pts);

RatMat vertex_matrix(const Polyhedron& p);  // columns = sorted vertices

Polyhedron intersection(const Polyhedron& p, const Polyhedron& q);

// Slices P by all integer translates of the hyperplanes {v.x = k} for each
// row v of rays, keeping only cells of full dimension dim(P). The result is a
// polyhedral subdivision of P.
std::vector<Polyhedron> slice_by_hyperplanes(const Polyhedron& p, const IntMat& rays);

struct FaceTable {
  std::vector<Point> verts;                       // deduplicated, sorted
  std::map<int, std::vector<std::vector<int>>> faces_by_dim;  // dim -> sorted index sets
};

// Collects the faces of every cell in all dimensions, with a global
// deduplicated vertex table. Assumes the cells intersect in common faces.
FaceTable faces_by_dimension(const std::vector<Polyhedron>& cells);

// Faces of a single polytope as vertex subsets of its own vertex list.
std::map<int, std::vector<std::vector<int>>> faces_of(const Polyhedron& p);

Polyhedron minkowski_translate(const Polyhedron& p, const RatVec& v);

// Exact relative volume (within the affine hull) by triangulation.
Rat relative_volume(const Polyhedron& p);

int affine_rank_minus_one(const std::vector<Point>& pts);  // dim of affine hull

}  // namespace hhl

#endif
