#include "hhl/excol.hpp"

#include <algorithm>
#include <sstream>

namespace hhl {

namespace {

IntVec diff(const IntVec& a, const IntVec& b) {
  IntVec d(a.size());
  for (size_t k = 0; k < a.size(); ++k) d[k] = a[k] - b[k];
  return d;
}

bool degree_zero_only(const std::vector<Int>& h) {
  for (size_t k = 1; k < h.size(); ++k)
    if (h[k] != 0) return false;
  return true;
}

bool all_zero(const std::vector<Int>& h) {
  for (const auto& v : h)
    if (v != 0) return false;
  return true;
}

// Classifies a valid exceptional order and fills in F.
void finish_report(const HomTable& t, CollectionReport& r) {
  const int n = static_cast<int>(t.classes.size());
  r.verdict = "strong_exceptional";
  for (int p = 0; p < n && r.verdict == "strong_exceptional"; ++p)
    for (int q = p + 1; q < n; ++q)
      if (!degree_zero_only(t.hom[r.order[p]][r.order[q]])) {
        r.verdict = "exceptional_not_strong";
        break;
      }
  r.f.assign(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) r.f[i][j] = t.hom[r.order[j]][r.order[i]][0];
}

}  // namespace

bool HomTable::nonzero(int i, int j) const { return !all_zero(hom[i][j]); }

HomTable hom_table(const CohomologyEngine& engine, const std::vector<IntVec>& classes) {
  HomTable t;
  t.classes = classes;
  const int n = static_cast<int>(classes.size());
  t.hom.resize(n, std::vector<std::vector<Int>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t.hom[i][j] = engine.cohomology_of_class(diff(classes[j], classes[i]));
      if (i == j) {
        if (t.hom[i][i][0] != 1 || !degree_zero_only(t.hom[i][i]))
          throw std::runtime_error("self-hom of a line bundle is not the base field");
      }
    }
  return t;
}

CollectionReport find_exceptional_order(const HomTable& t) {
  const int n = static_cast<int>(t.classes.size());
  CollectionReport r;
  // arc i -> j when Hom(E_i, E_j) != 0: i must precede j
  std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && t.nonzero(i, j)) arc[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (arc[i][j] && arc[j][i]) {
        r.verdict = "no_ordering_exists";
        r.cert_i = i;
        r.cert_j = j;
        r.cert_forward = t.hom[i][j];
        r.cert_backward = t.hom[j][i];
        return r;
      }
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (arc[i][j]) ++indeg[j];
  std::vector<bool> used(n, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (used[i] || indeg[i] != 0) continue;
      if (pick < 0 || t.classes[i] < t.classes[pick]) pick = i;
    }
    if (pick < 0) {
      // a longer cycle with no 2-cycle; report some pair on it
      r.verdict = "no_ordering_exists";
      return r;
    }
    used[pick] = true;
    r.order.push_back(pick);
    for (int j = 0; j < n; ++j)
      if (arc[pick][j]) --indeg[j];
  }
  finish_report(t, r);
  return r;
}

CollectionReport report_in_order(const HomTable& t, const std::vector<int>& order) {
  const int n = static_cast<int>(t.classes.size());
  CollectionReport r;
  r.order = order;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (t.nonzero(order[q], order[p])) {
        r.verdict = "no_ordering_exists";
        r.order.clear();
        r.cert_i = order[q];
        r.cert_j = order[p];
        r.cert_forward = t.hom[order[q]][order[p]];
        r.cert_backward = t.hom[order[p]][order[q]];
        return r;
      }
  finish_report(t, r);
  return r;
}

FigureCheck surface_figure_checks(const CohomologyEngine& engine,
                                  const std::vector<IntVec>& ordered_classes,
                                  const std::vector<IntVec>& backward_labels,
                                  const std::vector<IntVec>& forward_labels) {
  FigureCheck out;
  auto show = [](const IntVec& v) {
    std::ostringstream s;
    s << "(";
    for (size_t k = 0; k < v.size(); ++k) s << (k ? "," : "") << v[k];
    s << ")";
    return s.str();
  };
  auto want_zero = [&](const IntVec& cls) {
    if (!all_zero(engine.cohomology_of_class(cls))) {
      out.ok = false;
      out.failures.push_back("backward " + show(cls) + " has nonzero cohomology");
    }
  };
  auto want_deg0 = [&](const IntVec& cls) {
    if (!degree_zero_only(engine.cohomology_of_class(cls))) {
      out.ok = false;
      out.failures.push_back("forward " + show(cls) + " not concentrated in degree 0");
    }
  };
  for (const auto& cls : backward_labels) want_zero(cls);
  for (const auto& cls : forward_labels) want_deg0(cls);
  const int n = static_cast<int>(ordered_classes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      want_zero(diff(ordered_classes[i], ordered_classes[j]));  // hom from later to earlier
      want_deg0(diff(ordered_classes[j], ordered_classes[i]));
    }
  return out;
}

std::string quiver_dot(const CollectionReport& r) {
  if (r.verdict == "no_ordering_exists") throw NoOrdering();
  const int n = static_cast<int>(r.order.size());
  std::ostringstream s;
  s << "digraph quiver {\n";
  for (int i = 0; i < n; ++i) s << "  " << i << ";\n";
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j && r.f[i][j] != 0)
        s << "  " << j << " -> " << i << " [label=\"" << r.f[i][j] << "\"];\n";
  s << "}\n";
  return s.str();
}

}  // namespace hhl
