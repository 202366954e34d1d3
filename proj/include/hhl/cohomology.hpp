#ifndef HHL_COHOMOLOGY_HPP
#define HHL_COHOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "hhl/toric.hpp"

// Sheaf cohomology of torus invariant line bundles, computed per character.
// For a character m the local cohomology contribution depends only on the set
// of rays where m pairs negatively against the divisor, so the reduced
// cohomology of every ray subset's support complex is precomputed once per
// variety and the character sum becomes a table lookup.

namespace hhl {

class CohomologyEngine {
 public:
  explicit CohomologyEngine(const ToricVariety& x);

  const ToricVariety& variety() const { return x_; }

  // h^0..h^n of O(sum a_rho D_rho).
  std::vector<Int> line_bundle_cohomology(const IntVec& coeffs) const;

  // Same, addressed by class group element.
  std::vector<Int> cohomology_of_class(const IntVec& cls) const;

  // Total dimension of Ext^*(O(a), O(b)) = sum_i h^i(O(b-a)), by class.
  Int total_hom_of_class_difference(const IntVec& diff_cls) const;

  // Reduced cohomology dimensions (indices -1..n-1, stored shifted by one)
  // of the support complex of a ray subset. Exposed for tests.
  const std::vector<int>& support_dims(uint32_t ray_mask) const;

 private:
  ToricVariety x_;
  std::vector<uint32_t> cone_masks_;
  mutable std::map<uint32_t, std::vector<int>> cache_;
};

// Independent Cech computation over the cover by maximal cone charts, with
// explicit coboundary matrices per character. Slower; used to cross-check the
// engine. The graded piece at m depends only on the set of rays where m pairs
// nonnegatively, which is cached.
class CechOracle {
 public:
  explicit CechOracle(const ToricVariety& x);

  std::vector<Int> line_bundle_cohomology(const IntVec& coeffs) const;
  std::vector<Int> cohomology_of_class(const IntVec& cls) const;

 private:
  const std::vector<int>& piece_dims(uint32_t allowed_mask) const;

  ToricVariety x_;
  // subsets of the cover, grouped by cardinality-1 (Cech degree), with the
  // ray set of the corresponding cone intersection
  std::vector<std::vector<std::pair<std::vector<int>, uint32_t>>> nerve_;
  mutable std::map<uint32_t, std::vector<int>> cache_;
};

}  // namespace hhl

#endif
