#ifndef HHL_EXCOL_HPP
#define HHL_EXCOL_HPP

#include <string>
#include <vector>

#include "hhl/cohomology.hpp"
#include "hhl/toric.hpp"

// Deciding whether a set of line bundle classes admits an ordering making it
// a (strong) exceptional collection, and reporting the F matrix, ordering,
// failure certificates, and quiver.

namespace hhl {

struct NoOrdering : std::runtime_error {
  NoOrdering() : std::runtime_error("no exceptional ordering exists") {}
};

struct HomTable {
  std::vector<IntVec> classes;
  // hom[i][j] = cohomology vector of class(j) - class(i), i.e. Hom(E_i, E_j)
  std::vector<std::vector<std::vector<Int>>> hom;

  bool nonzero(int i, int j) const;
};

struct CollectionReport {
  std::string verdict;  // strong_exceptional | exceptional_not_strong | no_ordering_exists
  std::vector<int> order;           // indices into classes, empty on failure
  std::vector<std::vector<Int>> f;  // f[i][j] = dim Hom^0(E_order[j], E_order[i])
  // two-sided-nonzero pair when no ordering exists
  int cert_i = -1, cert_j = -1;
  std::vector<Int> cert_forward, cert_backward;
};

HomTable hom_table(const CohomologyEngine& engine, const std::vector<IntVec>& classes);

// Topological sort of the nonzero-hom digraph, ties broken by lexicographic
// class order; on a cycle, reports a two-sided pair as certificate.
CollectionReport find_exceptional_order(const HomTable& t);

// Verifies that the given order (a permutation of class indices) has no
// backward homs, then classifies it like find_exceptional_order does.
CollectionReport report_in_order(const HomTable& t, const std::vector<int>& order);

struct FigureCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

// Re-verifies hom figure labels: backward classes must have vanishing
// cohomology in all degrees, forward classes must be concentrated in degree
// 0; also checks every pairwise difference of the ordered collection.
FigureCheck surface_figure_checks(const CohomologyEngine& engine,
                                  const std::vector<IntVec>& ordered_classes,
                                  const std::vector<IntVec>& backward_labels,
                                  const std::vector<IntVec>& forward_labels);

// Deterministic DOT rendering; vertex labels are order indices 0..n-1 and an
// arc j -> i with label F[i][j] marks each nonzero off-diagonal Hom^0.
std::string quiver_dot(const CollectionReport& r);

}  // namespace hhl

#endif
