#ifndef HHL_TORIC_HPP
#define HHL_TORIC_HPP

#include <string>
#include <vector>

#include "hhl/intlin.hpp"
#include "hhl/polyhedra.hpp"

// Smooth complete toric varieties given by fans, with their divisor class
// grading. Rays are stored as rows of an integer matrix; the grading matrix
// pi satisfies pi * rays == 0 and presents the class group Z^(#rays - dim).

namespace hhl {

struct InvalidFan : std::runtime_error {
  explicit InvalidFan(const std::string& msg) : std::runtime_error(msg) {}
};

struct ToricVariety {
  std::string name;
  int dim = 0;
  IntMat rays;                              // (#rays) x dim, one ray per row
  std::vector<std::vector<int>> max_cones;  // ray index lists, each sorted
  IntMat grading;                           // (#rays - dim) x #rays

  int num_rays() const { return rays.rows; }
  int picard_rank() const { return grading.rows; }
};

// Checks: primitive rays, maximal cones smooth (unimodular), fan complete
// (every facet shared by exactly two maximal cones, plus randomized ray
// membership probes with a fixed seed), grading annihilates the rays and
// presents a free class group. Throws InvalidFan on failure.
void validate(const ToricVariety& x, int probe_count = 1000, unsigned seed = 12345);

// X x Y with block fan and block grading.
ToricVariety product(const ToricVariety& x, const ToricVariety& y);

// Fan over the proper faces of the reflexive polytope {x : a_i . x >= -1}
// where the rows of `normals` are the a_i. Maximal cones correspond to
// polytope vertices and are spanned by the normals tight there. The grading
// is recomputed unless one is supplied by the caller afterwards.
ToricVariety fan_from_reflexive_polytope(const std::string& name, const IntMat& normals);

// Divisor coefficient vector -> class group element via the grading.
IntVec line_bundle_class(const ToricVariety& x, const IntVec& coeffs);

// Any divisor coefficient vector representing the given class.
IntVec class_to_coeffs(const ToricVariety& x, const IntVec& cls);

// All complete smooth fans on rays drawn from the primitive vectors of
// {-1,0,1}^2, up to unimodular equivalence; returned with canonical
// (lexicographically minimal) ray sets, sorted by ray count then rays.
std::vector<ToricVariety> classify_unimodular_surfaces();

}  // namespace hhl

#endif
