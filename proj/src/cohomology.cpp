#include "hhl/cohomology.hpp"

#include <algorithm>
#include <functional>

namespace hhl {

namespace {

// Rank of a sparse rational matrix given as rows of (column, value) maps.
int sparse_rank(std::vector<std::map<int, Rat>> rows) {
  int r = 0;
  while (true) {
    // pick the shortest nonempty row
    int best = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) continue;
      if (best < 0 || rows[i].size() < rows[best].size()) best = static_cast<int>(i);
    }
    if (best < 0) break;
    ++r;
    auto pivot_row = std::move(rows[best]);
    rows[best].clear();
    int pc = pivot_row.begin()->first;
    Rat pv = pivot_row.begin()->second;
    for (auto& row : rows) {
      auto it = row.find(pc);
      if (it == row.end()) continue;
      Rat f = it->second / pv;
      f.canonicalize();
      for (const auto& [c, v] : pivot_row) {
        auto jt = row.find(c);
        if (jt == row.end()) {
          Rat nv = -f * v;
          nv.canonicalize();
          if (nv != 0) row.emplace(c, std::move(nv));
        } else {
          jt->second -= f * v;
          jt->second.canonicalize();
          if (jt->second == 0) row.erase(jt);
        }
      }
    }
  }
  return r;
}

// Enumerates characters in [-w, w]^n, calling f on each.
void for_each_in_box(int n, long w, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> m(n, -w);
  while (true) {
    f(m);
    int i = 0;
    while (i < n && m[i] == w) m[i++] = -w;
    if (i == n) break;
    ++m[i];
  }
}

// Runs the per-character accumulation over boxes of doubling half-width until
// two consecutive rounds agree.
std::vector<Int> stable_box_sum(
    int n, long seed_width,
    const std::function<void(const std::vector<long>&, std::vector<Int>&)>& add) {
  long w = std::max<long>(seed_width, 1);
  std::vector<Int> prev;
  for (int round = 0; round < 12; ++round) {
    std::vector<Int> total(static_cast<size_t>(n) + 1, Int(0));
    for_each_in_box(n, w, [&](const std::vector<long>& m) { add(m, total); });
    if (!prev.empty() && total == prev) return total;
    prev = std::move(total);
    w *= 2;
  }
  throw std::runtime_error("cohomology search region did not stabilize");
}

long seed_width_for(const IntVec& coeffs) {
  Int s(1);
  for (const auto& a : coeffs) s += abs(a);
  return s.get_si();
}

}  // namespace

CohomologyEngine::CohomologyEngine(const ToricVariety& x) : x_(x) {
  if (x_.num_rays() > 31) throw std::runtime_error("too many rays for mask representation");
  for (const auto& c : x_.max_cones) {
    uint32_t m = 0;
    for (int i : c) m |= (uint32_t{1} << i);
    cone_masks_.push_back(m);
  }
}

const std::vector<int>& CohomologyEngine::support_dims(uint32_t ray_mask) const {
  auto it = cache_.find(ray_mask);
  if (it != cache_.end()) return it->second;
  const int n = x_.dim;
  // Faces of the support complex: subsets of ray_mask contained in some cone,
  // grouped by cardinality. The empty face is always present.
  std::vector<std::vector<uint32_t>> faces(static_cast<size_t>(n) + 1);
  uint32_t sub = ray_mask;
  while (true) {
    bool in_cone = sub == 0;
    for (uint32_t cm : cone_masks_) {
      if ((sub & ~cm) == 0) { in_cone = true; break; }
    }
    if (in_cone) {
      int k = __builtin_popcount(sub);
      if (k <= n) faces[k].push_back(sub);
    }
    if (sub == 0) break;
    sub = (sub - 1) & ray_mask;
  }
  for (auto& f : faces) std::sort(f.begin(), f.end());
  // Reduced boundary maps D_k : Q^{faces[k]} -> Q^{faces[k-1]}; homology at
  // cardinality k lands in H^k of the sheaf cohomology.
  std::vector<int> ranks(static_cast<size_t>(n) + 1, 0);  // ranks[k] = rank D_k, k>=1
  for (int k = 1; k <= n; ++k) {
    if (faces[k].empty() || faces[k - 1].empty()) continue;
    std::vector<std::map<int, Rat>> rows(faces[k].size());
    for (size_t f = 0; f < faces[k].size(); ++f) {
      uint32_t fm = faces[k][f];
      int sign = 1;
      for (int b = 0; b < x_.num_rays(); ++b) {
        uint32_t bit = uint32_t{1} << b;
        if (!(fm & bit)) continue;
        uint32_t sm = fm & ~bit;
        auto pos = std::lower_bound(faces[k - 1].begin(), faces[k - 1].end(), sm);
        // subsets of faces are faces, so sm is present
        rows[f][static_cast<int>(pos - faces[k - 1].begin())] = Rat(sign);
        sign = -sign;
      }
    }
    ranks[k] = sparse_rank(std::move(rows));
  }
  std::vector<int> dims(static_cast<size_t>(n) + 1, 0);
  for (int k = 0; k <= n; ++k) dims[k] = static_cast<int>(faces[k].size()) - ranks[k];
  for (int k = 1; k <= n; ++k) dims[k - 1] -= ranks[k];
  return cache_.emplace(ray_mask, std::move(dims)).first->second;
}

std::vector<Int> CohomologyEngine::line_bundle_cohomology(const IntVec& coeffs) const {
  if (static_cast<int>(coeffs.size()) != x_.num_rays())
    throw std::runtime_error("divisor coefficient count mismatch");
  const int n = x_.dim;
  return stable_box_sum(n, seed_width_for(coeffs),
                        [&](const std::vector<long>& m, std::vector<Int>& total) {
                          uint32_t neg = 0;
                          for (int r = 0; r < x_.num_rays(); ++r) {
                            Int s = coeffs[r];
                            for (int j = 0; j < n; ++j) s += x_.rays.at(r, j) * m[j];
                            if (s < 0) neg |= (uint32_t{1} << r);
                          }
                          const auto& d = support_dims(neg);
                          for (int i = 0; i <= n; ++i) total[i] += d[i];
                        });
}

std::vector<Int> CohomologyEngine::cohomology_of_class(const IntVec& cls) const {
  return line_bundle_cohomology(class_to_coeffs(x_, cls));
}

Int CohomologyEngine::total_hom_of_class_difference(const IntVec& diff_cls) const {
  auto h = cohomology_of_class(diff_cls);
  Int t(0);
  for (const auto& v : h) t += v;
  return t;
}

CechOracle::CechOracle(const ToricVariety& x) : x_(x) {
  if (x_.num_rays() > 31) throw std::runtime_error("too many rays for mask representation");
  int c = static_cast<int>(x_.max_cones.size());
  std::vector<uint32_t> cone_masks;
  for (const auto& cone : x_.max_cones) {
    uint32_t m = 0;
    for (int i : cone) m |= (uint32_t{1} << i);
    cone_masks.push_back(m);
  }
  // Subsets of the cover up to size dim+2 (enough for ranks through degree n).
  nerve_.resize(static_cast<size_t>(x_.dim) + 2);
  std::vector<int> pick;
  std::function<void(int)> gen = [&](int start) {
    if (!pick.empty()) {
      uint32_t inter = ~uint32_t{0};
      for (int i : pick) inter &= cone_masks[i];
      nerve_[pick.size() - 1].emplace_back(pick, inter);
    }
    if (pick.size() == nerve_.size()) return;
    for (int i = start; i < c; ++i) {
      pick.push_back(i);
      gen(i + 1);
      pick.pop_back();
    }
  };
  gen(0);
}

const std::vector<int>& CechOracle::piece_dims(uint32_t allowed) const {
  auto it = cache_.find(allowed);
  if (it != cache_.end()) return it->second;
  const int n = x_.dim;
  // Which nerve cells carry the character: all intersection rays allowed.
  std::vector<std::vector<int>> present(nerve_.size());
  std::vector<std::map<std::vector<int>, int>> index(nerve_.size());
  for (size_t p = 0; p < nerve_.size(); ++p)
    for (size_t i = 0; i < nerve_[p].size(); ++i)
      if ((nerve_[p][i].second & ~allowed) == 0) {
        index[p][nerve_[p][i].first] = static_cast<int>(present[p].size());
        present[p].push_back(static_cast<int>(i));
      }
  // rank of d^p : C^p -> C^{p+1}
  std::vector<int> rank_d(nerve_.size(), 0);
  for (size_t p = 0; p + 1 < nerve_.size(); ++p) {
    if (present[p].empty() || present[p + 1].empty()) continue;
    std::vector<std::map<int, Rat>> rows(present[p + 1].size());
    for (size_t r = 0; r < present[p + 1].size(); ++r) {
      const auto& big = nerve_[p + 1][present[p + 1][r]].first;
      for (size_t k = 0; k < big.size(); ++k) {
        std::vector<int> small;
        for (size_t i = 0; i < big.size(); ++i)
          if (i != k) small.push_back(big[i]);
        auto jt = index[p].find(small);
        if (jt == index[p].end()) continue;
        rows[r][jt->second] = Rat(k % 2 ? -1 : 1);
      }
    }
    rank_d[p] = sparse_rank(std::move(rows));
  }
  std::vector<int> dims(static_cast<size_t>(n) + 1, 0);
  for (int i = 0; i <= n; ++i) {
    int h = static_cast<int>(present[i].size()) - rank_d[i];
    if (i > 0) h -= rank_d[i - 1];
    dims[i] = h;
  }
  return cache_.emplace(allowed, std::move(dims)).first->second;
}

std::vector<Int> CechOracle::line_bundle_cohomology(const IntVec& coeffs) const {
  if (static_cast<int>(coeffs.size()) != x_.num_rays())
    throw std::runtime_error("divisor coefficient count mismatch");
  const int n = x_.dim;
  return stable_box_sum(n, seed_width_for(coeffs),
                        [&](const std::vector<long>& m, std::vector<Int>& total) {
                          uint32_t allowed = 0;
                          for (int r = 0; r < x_.num_rays(); ++r) {
                            Int s = coeffs[r];
                            for (int j = 0; j < n; ++j) s += x_.rays.at(r, j) * m[j];
                            if (s >= 0) allowed |= (uint32_t{1} << r);
                          }
                          const auto& d = piece_dims(allowed);
                          for (int i = 0; i <= n; ++i) total[i] += d[i];
                        });
}

std::vector<Int> CechOracle::cohomology_of_class(const IntVec& cls) const {
  return line_bundle_cohomology(class_to_coeffs(x_, cls));
}

}  // namespace hhl
