#include "hhl/toric.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace hhl {

namespace {

bool primitive(const IntMat& rays, int row) {
  Int g(0);
  for (int j = 0; j < rays.cols; ++j) g = gcd(g, rays.at(row, j));
  return g == 1;
}

// lambda >= 0 solution of  U^T lambda = v  for the square smooth cone given
// by ray indices.
bool in_cone(const ToricVariety& x, const std::vector<int>& cone, const IntVec& v) {
  int n = x.dim;
  RatMat a(n, static_cast<int>(cone.size()));
  for (size_t k = 0; k < cone.size(); ++k)
    for (int j = 0; j < n; ++j) a.at(j, static_cast<int>(k)) = Rat(x.rays.at(cone[k], j));
  RatVec rhs(n);
  for (int j = 0; j < n; ++j) rhs[j] = Rat(v[j]);
  RatVec lam;
  if (!solve_rational(a, rhs, lam)) return false;
  for (const auto& l : lam)
    if (l < 0) return false;
  // guard against spurious solutions when the cone matrix is rank deficient
  for (int j = 0; j < n; ++j) {
    Rat s(0);
    for (size_t k = 0; k < cone.size(); ++k) s += a.at(j, static_cast<int>(k)) * lam[k];
    if (s != rhs[j]) return false;
  }
  return true;
}

}  // namespace

void validate(const ToricVariety& x, int probe_count, unsigned seed) {
  const int n = x.dim;
  const int r = x.num_rays();
  if (x.rays.cols != n) throw InvalidFan(x.name + ": ray dimension mismatch");
  for (int i = 0; i < r; ++i)
    if (!primitive(x.rays, i)) throw InvalidFan(x.name + ": ray is not primitive");
  for (const auto& c : x.max_cones) {
    if (static_cast<int>(c.size()) != n)
      throw InvalidFan(x.name + ": maximal cone is not simplicial full dimensional");
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = x.rays.at(c[i], j);
    Int d = det(m);
    if (d != 1 && d != -1) throw InvalidFan(x.name + ": maximal cone is not smooth");
  }
  // Every ray must appear in some maximal cone.
  {
    std::set<int> used;
    for (const auto& c : x.max_cones) used.insert(c.begin(), c.end());
    if (static_cast<int>(used.size()) != r)
      throw InvalidFan(x.name + ": unused or out-of-range ray");
    if (*used.begin() < 0 || *used.rbegin() >= r)
      throw InvalidFan(x.name + ": cone references invalid ray");
  }
  // Completeness, combinatorial part: each facet of a maximal cone is shared
  // by exactly two maximal cones (n >= 2).
  if (n >= 2) {
    std::map<std::vector<int>, int> facet_count;
    for (const auto& c : x.max_cones) {
      std::vector<int> s = c;
      std::sort(s.begin(), s.end());
      for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> f;
        for (size_t i = 0; i < s.size(); ++i)
          if (i != drop) f.push_back(s[i]);
        ++facet_count[f];
      }
    }
    for (const auto& [f, cnt] : facet_count)
      if (cnt != 2) throw InvalidFan(x.name + ": fan is not complete (facet pairing)");
  }
  // Completeness, sampling part: random lattice points must lie in some cone.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(-50, 50);
  for (int t = 0; t < probe_count; ++t) {
    IntVec v(n);
    bool zero = true;
    for (int j = 0; j < n; ++j) {
      v[j] = val(rng);
      if (v[j] != 0) zero = false;
    }
    if (zero) continue;
    bool hit = false;
    for (const auto& c : x.max_cones)
      if (in_cone(x, c, v)) { hit = true; break; }
    if (!hit) throw InvalidFan(x.name + ": fan is not complete (uncovered point)");
  }
  // Grading: pi * rays == 0, pi surjective, correct rank.
  if (x.grading.rows != r - n || x.grading.cols != r)
    throw InvalidFan(x.name + ": grading has wrong shape");
  IntMat z = mul(x.grading, x.rays);
  for (const auto& e : z.a)
    if (e != 0) throw InvalidFan(x.name + ": grading does not annihilate the rays");
  if (r > n) {
    SnfResult s = snf(x.grading);
    for (int i = 0; i < x.grading.rows; ++i)
      if (s.D.at(i, i) != 1)
        throw InvalidFan(x.name + ": grading is not surjective onto the class group");
  }
}

ToricVariety product(const ToricVariety& x, const ToricVariety& y) {
  ToricVariety p;
  p.name = x.name + "x" + y.name;
  p.dim = x.dim + y.dim;
  int rx = x.num_rays(), ry = y.num_rays();
  p.rays = IntMat(rx + ry, p.dim);
  for (int i = 0; i < rx; ++i)
    for (int j = 0; j < x.dim; ++j) p.rays.at(i, j) = x.rays.at(i, j);
  for (int i = 0; i < ry; ++i)
    for (int j = 0; j < y.dim; ++j) p.rays.at(rx + i, x.dim + j) = y.rays.at(i, j);
  for (const auto& cx : x.max_cones)
    for (const auto& cy : y.max_cones) {
      std::vector<int> c = cx;
      for (int i : cy) c.push_back(rx + i);
      std::sort(c.begin(), c.end());
      p.max_cones.push_back(std::move(c));
    }
  p.grading = IntMat(x.grading.rows + y.grading.rows, rx + ry);
  for (int i = 0; i < x.grading.rows; ++i)
    for (int j = 0; j < rx; ++j) p.grading.at(i, j) = x.grading.at(i, j);
  for (int i = 0; i < y.grading.rows; ++i)
    for (int j = 0; j < ry; ++j) p.grading.at(x.grading.rows + i, rx + j) = y.grading.at(i, j);
  return p;
}

ToricVariety fan_from_reflexive_polytope(const std::string& name, const IntMat& normals) {
  int n = normals.cols;
  int r = normals.rows;
  // P = {x : a_i . x >= -1}  written as  -a_i . x <= 1
  RatMat in(r, n);
  RatVec off(r, Rat(1));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) in.at(i, j) = Rat(-normals.at(i, j));
  Polyhedron p = from_hdata(in, off, RatMat(0, n), {});
  ToricVariety x;
  x.name = name;
  x.dim = n;
  x.rays = normals;
  for (const auto& v : p.vertices()) {
    std::vector<int> cone;
    for (int i = 0; i < r; ++i) {
      Rat s(0);
      for (int j = 0; j < n; ++j) s += Rat(normals.at(i, j)) * v[j];
      if (s == -1) cone.push_back(i);
    }
    if (static_cast<int>(cone.size()) != n)
      throw InvalidFan(name + ": polytope vertex is not simple");
    x.max_cones.push_back(std::move(cone));
  }
  std::sort(x.max_cones.begin(), x.max_cones.end());
  x.grading = cokernel_presentation(x.rays);
  return x;
}

IntVec line_bundle_class(const ToricVariety& x, const IntVec& coeffs) {
  return mul(x.grading, coeffs);
}

IntVec class_to_coeffs(const ToricVariety& x, const IntVec& cls) {
  IntVec c;
  if (!solve_integer(x.grading, cls, c))
    throw std::runtime_error(x.name + ": class not in the image of the grading");
  return c;
}

std::vector<ToricVariety> classify_unimodular_surfaces() {
  // The eight primitive vectors of {-1,0,1}^2 in counterclockwise order.
  const std::vector<std::pair<int, int>> dirs = {
      {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  auto det2 = [](std::pair<int, int> a, std::pair<int, int> b) {
    return a.first * b.second - a.second * b.first;
  };
  std::vector<std::vector<int>> fans;  // subsets of dirs, in circular order
  for (int mask = 0; mask < 256; ++mask) {
    std::vector<int> sel;
    for (int i = 0; i < 8; ++i)
      if (mask & (1 << i)) sel.push_back(i);
    if (sel.size() < 3) continue;
    bool ok = true;
    for (size_t i = 0; i < sel.size() && ok; ++i) {
      auto a = dirs[sel[i]], b = dirs[sel[(i + 1) % sel.size()]];
      if (det2(a, b) != 1) ok = false;  // smooth, counterclockwise, complete
    }
    for (size_t i = 0; i < sel.size() && ok; ++i)
      for (size_t j = i + 1; j < sel.size() && ok; ++j) {
        int d = det2(dirs[sel[i]], dirs[sel[j]]);
        if (d < -1 || d > 1) ok = false;  // unimodularity of the ray system
      }
    if (ok) fans.push_back(sel);
  }
  // Deduplicate up to unimodular change of lattice coordinates. Any
  // equivalence between these fans maps a unit basis pair to vectors with
  // entries in {-1,0,1}, so entries of the transformation are bounded by 2.
  auto key_of = [&](const std::vector<std::pair<int, int>>& rays) {
    std::vector<std::pair<int, int>> s = rays;
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<std::pair<int, int>>> canon;
  std::vector<std::vector<int>> reps;
  std::set<std::pair<int, int>> dirset(dirs.begin(), dirs.end());
  for (const auto& sel : fans) {
    std::vector<std::pair<int, int>> rays;
    for (int i : sel) rays.push_back(dirs[i]);
    std::vector<std::pair<int, int>> best = key_of(rays);
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int c = -2; c <= 2; ++c)
          for (int d = -2; d <= 2; ++d) {
            int dd = a * d - b * c;
            if (dd != 1 && dd != -1) continue;
            std::vector<std::pair<int, int>> img;
            bool inside = true;
            for (auto [x0, y0] : rays) {
              std::pair<int, int> w{a * x0 + b * y0, c * x0 + d * y0};
              if (!dirset.count(w)) { inside = false; break; }
              img.push_back(w);
            }
            if (!inside) continue;
            auto k = key_of(img);
            if (k < best) best = k;
          }
    bool seen = false;
    for (const auto& c : canon)
      if (c == best) { seen = true; break; }
    if (!seen) {
      canon.push_back(best);
      reps.push_back(sel);
    }
  }
  std::vector<ToricVariety> out;
  for (size_t f = 0; f < reps.size(); ++f) {
    const auto& sel = reps[f];
    ToricVariety x;
    x.dim = 2;
    x.rays = IntMat(static_cast<int>(sel.size()), 2);
    for (size_t i = 0; i < sel.size(); ++i) {
      x.rays.at(static_cast<int>(i), 0) = dirs[sel[i]].first;
      x.rays.at(static_cast<int>(i), 1) = dirs[sel[i]].second;
    }
    for (size_t i = 0; i < sel.size(); ++i) {
      std::vector<int> c{static_cast<int>(i), static_cast<int>((i + 1) % sel.size())};
      std::sort(c.begin(), c.end());
      x.max_cones.push_back(std::move(c));
    }
    std::sort(x.max_cones.begin(), x.max_cones.end());
    x.grading = cokernel_presentation(x.rays);
    // Names by ray count; the two quadrilateral fans differ in how many
    // opposite ray pairs they have.
    switch (sel.size()) {
      case 3: x.name = "P2"; break;
      case 4: {
        int opp = 0;
        for (size_t i = 0; i < sel.size(); ++i)
          for (size_t j = i + 1; j < sel.size(); ++j)
            if (dirs[sel[i]].first == -dirs[sel[j]].first &&
                dirs[sel[i]].second == -dirs[sel[j]].second)
              ++opp;
        x.name = opp == 2 ? "P1xP1" : "Bl_p P2";
        break;
      }
      case 5: x.name = "Bl_pq P2"; break;
      case 6: x.name = "Bl_pqr P2"; break;
      default: x.name = "surface_" + std::to_string(sel.size());
    }
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const ToricVariety& a, const ToricVariety& b) {
    if (a.num_rays() != b.num_rays()) return a.num_rays() < b.num_rays();
    return a.name < b.name;
  });
  return out;
}

}  // namespace hhl
