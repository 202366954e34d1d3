#ifndef HHL_DIAGRES_HPP
#define HHL_DIAGRES_HPP

#include <optional>

#include "hhl/polyhedra.hpp"
#include "hhl/toric.hpp"

// Resolution of the structure sheaf of a toric subvariety (in practice the
// diagonal of X x X) by a complex of line bundles, built from the polyhedral
// decomposition of a fundamental parallelepiped in the kernel subspace.

namespace hhl {

struct NoUnimodularFrame : std::runtime_error {
  NoUnimodularFrame()
      : std::runtime_error(
            "Unhandled case, fundemental parallelogram not cut out by hyperplanes from Y") {}
};
struct DegenerateFrame : std::runtime_error {
  explicit DegenerateFrame(const std::string& msg) : std::runtime_error(msg) {}
};
struct NegativeExponent : std::runtime_error {
  explicit NegativeExponent(const std::string& msg) : std::runtime_error(msg) {}
};
struct SampleTooLarge : std::runtime_error {
  explicit SampleTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

// One term of a differential entry: sign * x^exp over the Cox variables of Y.
struct MonomialTerm {
  int sign = 0;
  IntVec exp;
};
using PolyEntry = std::vector<MonomialTerm>;

struct GradedFreeComplex {
  int num_vars = 0;
  // terms[t] = twists of the degree-t summands; each twist is a Cl(Y) vector
  // (the summand is S(twist), i.e. generator in degree -twist)
  std::vector<std::vector<IntVec>> terms;
  // diffs[t]: matrix of the map terms[t+1] -> terms[t]; diffs[t][row][col]
  std::vector<std::vector<std::vector<PolyEntry>>> diffs;
};

struct LatticeBasis {
  IntMat l;  // columns = basis vectors, lex sorted
};

struct CellComplex {
  std::vector<Polyhedron> cells;
  LatticeBasis lattice;
};

struct CellClassTable {
  FaceTable faces;
  // For each dimension, the classes of translate-equivalent faces; a face is
  // (dim, index into faces.faces_by_dim[dim]).
  std::map<int, std::vector<std::vector<int>>> classes_by_dim;
  // Per face, keyed the same way.
  std::map<int, std::vector<IntVec>> fine_degree;
  std::map<int, std::vector<IntVec>> twist;  // = -grading * fine_degree
};

// {x : phi^T x = 0} as an H-rep polyhedron (equalities only).
Polyhedron kernel_subspace(const IntMat& phi);

// The inclusion matrix of the diagonal X -> X x X.
IntMat diagonal_map(int dim);

// Polyhedral decomposition of the fundamental parallelepiped in the kernel
// subspace, sliced by all ray hyperplanes of Y. Throws NoUnimodularFrame if
// no ray subset projects to a unimodular frame on coker(phi).
CellComplex build_cells(const ToricVariety& y, const IntMat& phi);

// Quotient by the lattice: greedy translation toward the fundamental cone,
// grouping faces with equal representative vertex sets. Labels each face by
// its fine degree (componentwise ceiling of rays * interior point) and twist.
CellClassTable group_by_lattice_class(const ToricVariety& y, const CellComplex& cc);

// Orientation signs via leftmost maximal-rank frames of edge vectors.
int boundary_sign(const std::vector<Point>& verts, const std::vector<int>& q,
                  const std::vector<int>& p);
int gluing_sign(const std::vector<Point>& verts, const std::vector<int>& p,
                const std::vector<int>& q);

GradedFreeComplex assemble(const ToricVariety& y, const CellClassTable& table);

// Convenience: the full pipeline for the diagonal of X.
GradedFreeComplex diagonal_resolution(const ToricVariety& x);

// Verification helpers (exact).
bool check_d2_zero(const GradedFreeComplex& c);
bool check_homogeneity(const ToricVariety& y, const GradedFreeComplex& c);
bool check_minimality(const GradedFreeComplex& c);

// Twists of the chosen factor (0 = first, 1 = second) from every summand.
// Returns the deduplicated set, sorted; multiset optionally via out param.
std::vector<IntVec> extract_collection(const GradedFreeComplex& c, int x_class_rank,
                                       int side,
                                       std::vector<IntVec>* multiset = nullptr);

// Number of monomials of the given class group degree in the Cox ring.
Int count_monomials(const IntMat& grading, const IntVec& cls, long cap = 2000000);

// Exactness evidence: for each sampled bidegree (a,b) on X x X, the Euler
// characteristic of the complex's graded piece must equal the number of
// connected components of the fiber graph of monomial pairs modulo the
// lattice action.
bool euler_char_oracle(const ToricVariety& x, const GradedFreeComplex& c,
                       const std::vector<std::pair<IntVec, IntVec>>& bidegrees);

}  // namespace hhl

#endif
