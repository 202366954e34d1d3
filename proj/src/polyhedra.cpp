#include "hhl/polyhedra.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <set>

namespace hhl {

namespace {

int cmp_points(const Point& x, const Point& y) {
  assert(x.size() == y.size());
  for (size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c;
  }
  return 0;
}

struct PointLess {
  bool operator()(const Point& x, const Point& y) const { return cmp_points(x, y) < 0; }
};

Rat dot(const RatVec& a, const Point& p) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * p[i];
  s.canonicalize();
  return s;
}

// Scale so the normal is a primitive integer vector with deterministic sign.
void normalize(RatVec& normal, Rat& offset) {
  Int l(1);
  for (auto& q : normal) l = lcm(l, q.get_den());
  l = lcm(l, offset.get_den());
  IntVec n(normal.size());
  Int g(0);
  for (size_t i = 0; i < normal.size(); ++i) {
    n[i] = normal[i].get_num() * (l / normal[i].get_den());
    g = gcd(g, n[i]);
  }
  Int off = offset.get_num() * (l / offset.get_den());
  if (g == 0) return;  // zero normal; leave as-is
  for (size_t i = 0; i < n.size(); ++i) normal[i] = Rat(n[i] / g);
  offset = Rat(off) / Rat(g);
  offset.canonicalize();
}

// Extreme-ray style check that {r : A r <= 0, E r = 0} contains a nonzero
// vector. A and E are given as row lists.
bool recession_nontrivial(int d, const std::vector<RatVec>& ineq_rows,
                          const std::vector<RatVec>& eq_rows) {
  // Restrict to the null space of E.
  RatMat e(static_cast<int>(eq_rows.size()), d);
  for (size_t i = 0; i < eq_rows.size(); ++i)
    for (int j = 0; j < d; ++j) e.at(static_cast<int>(i), j) = eq_rows[i][j];
  IntMat ez(e.rows, e.cols);
  {  // clear denominators rowwise
    for (int i = 0; i < e.rows; ++i) {
      Int l(1);
      for (int j = 0; j < e.cols; ++j) l = lcm(l, e.at(i, j).get_den());
      for (int j = 0; j < e.cols; ++j)
        ez.at(i, j) = e.at(i, j).get_num() * (l / e.at(i, j).get_den());
    }
  }
  IntMat nz = kernel_basis(ez);  // d x k
  int k = nz.cols;
  if (k == 0) return false;
  // M = A * N, rows of the restricted cone's H-rep (M t <= 0).
  std::vector<RatVec> m;
  for (const auto& row : ineq_rows) {
    RatVec mr(k, Rat(0));
    bool zero = true;
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < d; ++i) mr[j] += row[i] * Rat(nz.at(i, j));
      mr[j].canonicalize();
      if (mr[j] != 0) zero = false;
    }
    if (!zero) m.push_back(std::move(mr));
  }
  if (m.empty()) return true;  // whole null space is free
  RatMat mm(static_cast<int>(m.size()), k);
  for (size_t i = 0; i < m.size(); ++i)
    for (int j = 0; j < k; ++j) mm.at(static_cast<int>(i), j) = m[i][j];
  if (rank(mm) < k) return true;  // lineality in the restricted cone
  // Pointed cone: every extreme ray is cut out by k-1 active rows.
  std::vector<int> pick;
  auto feasible_dir = [&](const RatVec& t) {
    bool nonzero = false;
    for (const auto& ti : t)
      if (ti != 0) nonzero = true;
    if (!nonzero) return false;
    for (const auto& row : m) {
      Rat s(0);
      for (int j = 0; j < k; ++j) s += row[j] * t[j];
      if (s > 0) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int start) {
    if (static_cast<int>(cur.size()) == k - 1) {
      subsets.push_back(cur);
      return;
    }
    for (int i = start; i < static_cast<int>(m.size()); ++i) {
      cur.push_back(i);
      gen(i + 1);
      cur.pop_back();
    }
  };
  if (k == 1) {
    RatVec t{Rat(1)};
    if (feasible_dir(t)) return true;
    t[0] = -1;
    return feasible_dir(t);
  }
  gen(0);
  for (const auto& s : subsets) {
    RatMat sub(static_cast<int>(s.size()), k);
    for (size_t i = 0; i < s.size(); ++i)
      for (int j = 0; j < k; ++j) sub.at(static_cast<int>(i), j) = m[s[i]][j];
    if (rank(sub) != k - 1) continue;
    // 1-dimensional kernel: take an integer direction.
    IntMat si(sub.rows, k);
    for (int i = 0; i < sub.rows; ++i) {
      Int l(1);
      for (int j = 0; j < k; ++j) l = lcm(l, sub.at(i, j).get_den());
      for (int j = 0; j < k; ++j)
        si.at(i, j) = sub.at(i, j).get_num() * (l / sub.at(i, j).get_den());
    }
    IntMat kk = kernel_basis(si);
    if (kk.cols != 1) continue;
    RatVec t(k);
    for (int j = 0; j < k; ++j) t[j] = Rat(kk.at(j, 0));
    if (feasible_dir(t)) return true;
    for (auto& q : t) q = -q;
    if (feasible_dir(t)) return true;
  }
  return false;
}

}  // namespace

Polyhedron::Polyhedron(int ambient_dim, std::vector<HalfSpace> ineqs,
                       std::vector<Hyperplane> eqs)
    : ambient_dim_(ambient_dim), ineqs_(std::move(ineqs)), eqs_(std::move(eqs)) {
  for (const auto& h : ineqs_)
    if (static_cast<int>(h.normal.size()) != ambient_dim_)
      throw DimensionMismatch("inequality normal has wrong dimension");
  for (const auto& h : eqs_)
    if (static_cast<int>(h.normal.size()) != ambient_dim_)
      throw DimensionMismatch("equality normal has wrong dimension");
}

void Polyhedron::ensure_vrep() const {
  if (vrep_) return;
  const int d = ambient_dim_;
  // Stack equalities; candidate vertices come from completing them with
  // subsets of inequalities to a rank-d system.
  RatMat em(static_cast<int>(eqs_.size()), d);
  RatVec eb(eqs_.size());
  for (size_t i = 0; i < eqs_.size(); ++i) {
    for (int j = 0; j < d; ++j) em.at(static_cast<int>(i), j) = eqs_[i].normal[j];
    eb[i] = eqs_[i].offset;
  }
  int re = rank(em);
  int need = d - re;
  std::vector<Point> found;
  std::vector<int> pick;
  std::function<void(int)> scan = [&](int start) {
    if (static_cast<int>(pick.size()) == need) {
      RatMat a(static_cast<int>(eqs_.size()) + need, d);
      RatVec b(eqs_.size() + need);
      for (size_t i = 0; i < eqs_.size(); ++i) {
        for (int j = 0; j < d; ++j) a.at(static_cast<int>(i), j) = eqs_[i].normal[j];
        b[i] = eqs_[i].offset;
      }
      for (int i = 0; i < need; ++i) {
        const auto& h = ineqs_[pick[i]];
        for (int j = 0; j < d; ++j) a.at(static_cast<int>(eqs_.size()) + i, j) = h.normal[j];
        b[eqs_.size() + i] = h.offset;
      }
      if (rank(a) == d) {
        RatVec x;
        if (solve_rational(a, b, x) && contains_point(x)) found.push_back(std::move(x));
      }
      return;
    }
    for (int i = start; i < static_cast<int>(ineqs_.size()); ++i) {
      pick.push_back(i);
      scan(i + 1);
      pick.pop_back();
    }
  };
  if (need == 0) {
    RatVec x;
    if (eqs_.empty()) {
      // d == 0: the single point of R^0.
      if (d == 0) found.push_back(Point{});
    } else if (solve_rational(em, eb, x) && contains_point(x)) {
      found.push_back(std::move(x));
    }
  } else {
    scan(0);
  }
  std::sort(found.begin(), found.end(), PointLess{});
  found.erase(std::unique(found.begin(), found.end(),
                          [](const Point& x, const Point& y) { return cmp_points(x, y) == 0; }),
              found.end());
  std::vector<RatVec> irows, erows;
  for (const auto& h : ineqs_) irows.push_back(h.normal);
  for (const auto& h : eqs_) erows.push_back(h.normal);
  if (recession_nontrivial(d, irows, erows)) {
    if (!found.empty()) throw Unbounded("polyhedron has a recession direction");
    // No vertices: either empty or an unbounded set without vertices. Clip by
    // a box large enough (Hadamard-style bound) to contain a point of every
    // nonempty face, and test feasibility there.
    Rat bound(1);
    auto grow = [&](const RatVec& n, const Rat& off) {
      Rat s = abs(off);
      for (const auto& q : n) s += abs(q);
      if (s > 1) bound *= s;
    };
    for (const auto& h : ineqs_) grow(h.normal, h.offset);
    for (const auto& h : eqs_) grow(h.normal, h.offset);
    std::vector<HalfSpace> boxed = ineqs_;
    for (int i = 0; i < d; ++i) {
      RatVec lo(d, Rat(0)), hi(d, Rat(0));
      lo[i] = -1;
      hi[i] = 1;
      boxed.push_back(HalfSpace{lo, bound});
      boxed.push_back(HalfSpace{hi, bound});
    }
    Polyhedron clipped(d, std::move(boxed), eqs_);
    if (!clipped.vertices().empty())
      throw Unbounded("polyhedron has a recession direction");
  }
  vrep_ = std::move(found);
}

const std::vector<Point>& Polyhedron::vertices() const {
  ensure_vrep();
  return *vrep_;
}

bool Polyhedron::is_empty() const { return vertices().empty(); }

int affine_rank_minus_one(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  if (pts.size() == 1) return 0;
  RatMat diff(static_cast<int>(pts.size()) - 1, static_cast<int>(pts[0].size()));
  for (size_t i = 1; i < pts.size(); ++i)
    for (size_t j = 0; j < pts[0].size(); ++j) {
      diff.at(static_cast<int>(i) - 1, static_cast<int>(j)) = pts[i][j] - pts[0][j];
      diff.at(static_cast<int>(i) - 1, static_cast<int>(j)).canonicalize();
    }
  return rank(diff);
}

int Polyhedron::dim() const {
  if (ineqs_.empty()) {
    // Affine subspace; no vertices to speak of.
    RatMat em(static_cast<int>(eqs_.size()), ambient_dim_);
    RatVec eb(eqs_.size());
    for (size_t i = 0; i < eqs_.size(); ++i) {
      for (int j = 0; j < ambient_dim_; ++j) em.at(static_cast<int>(i), j) = eqs_[i].normal[j];
      eb[i] = eqs_[i].offset;
    }
    RatVec x;
    if (!eqs_.empty() && !solve_rational(em, eb, x)) return -1;
    return ambient_dim_ - rank(em);
  }
  return affine_rank_minus_one(vertices());
}

bool Polyhedron::contains_point(const Point& p) const {
  if (static_cast<int>(p.size()) != ambient_dim_)
    throw DimensionMismatch("point has wrong dimension");
  for (const auto& h : ineqs_)
    if (dot(h.normal, p) > h.offset) return false;
  for (const auto& h : eqs_)
    if (dot(h.normal, p) != h.offset) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& q) const {
  if (q.ambient_dim() != ambient_dim_)
    throw DimensionMismatch("containment across different ambient spaces");
  for (const auto& v : q.vertices())
    if (!contains_point(v)) return false;
  return true;
}

Point Polyhedron::interior_point() const {
  const auto& vs = vertices();
  if (vs.empty()) throw EmptyPolyhedron("interior point of empty polyhedron");
  Point c(ambient_dim_, Rat(0));
  for (const auto& v : vs)
    for (int j = 0; j < ambient_dim_; ++j) c[j] += v[j];
  Rat n(static_cast<long>(vs.size()));
  for (auto& x : c) {
    x /= n;
    x.canonicalize();
  }
  return c;
}

Polyhedron Polyhedron::translated(const RatVec& v) const {
  std::vector<HalfSpace> in = ineqs_;
  std::vector<Hyperplane> eq = eqs_;
  for (auto& h : in) {
    h.offset += dot(h.normal, v);
    h.offset.canonicalize();
  }
  for (auto& h : eq) {
    h.offset += dot(h.normal, v);
    h.offset.canonicalize();
  }
  Polyhedron p(ambient_dim_, std::move(in), std::move(eq));
  if (vrep_) {
    std::vector<Point> moved = *vrep_;
    for (auto& pt : moved)
      for (int j = 0; j < ambient_dim_; ++j) {
        pt[j] += v[j];
        pt[j].canonicalize();
      }
    p.vrep_ = std::move(moved);
  }
  return p;
}

Polyhedron Polyhedron::pruned() const {
  const auto& vs = vertices();
  std::vector<HalfSpace> keep;
  std::set<std::pair<std::vector<std::pair<Int, Int>>, std::pair<Int, Int>>> seen;
  for (const auto& h : ineqs_) {
    bool tight = false;
    for (const auto& v : vs)
      if (dot(h.normal, v) == h.offset) { tight = true; break; }
    if (!tight) continue;
    RatVec n = h.normal;
    Rat off = h.offset;
    normalize(n, off);
    std::vector<std::pair<Int, Int>> key;
    for (const auto& q : n) key.emplace_back(q.get_num(), q.get_den());
    auto full = std::make_pair(key, std::make_pair(off.get_num(), off.get_den()));
    if (seen.insert(full).second) keep.push_back(HalfSpace{std::move(n), std::move(off)});
  }
  Polyhedron p(ambient_dim_, std::move(keep), eqs_);
  p.vrep_ = vs;
  return p;
}

Polyhedron from_hdata(const RatMat& ineq_normals, const RatVec& ineq_offsets,
                      const RatMat& eq_normals, const RatVec& eq_offsets) {
  if (static_cast<size_t>(ineq_normals.rows) != ineq_offsets.size() ||
      static_cast<size_t>(eq_normals.rows) != eq_offsets.size())
    throw DimensionMismatch("offset count does not match row count");
  int d = ineq_normals.rows > 0 ? ineq_normals.cols : eq_normals.cols;
  std::vector<HalfSpace> in;
  for (int i = 0; i < ineq_normals.rows; ++i) {
    RatVec n(d);
    for (int j = 0; j < d; ++j) n[j] = ineq_normals.at(i, j);
    in.push_back(HalfSpace{std::move(n), ineq_offsets[i]});
  }
  std::vector<Hyperplane> eq;
  for (int i = 0; i < eq_normals.rows; ++i) {
    RatVec n(d);
    for (int j = 0; j < d; ++j) n[j] = eq_normals.at(i, j);
    eq.push_back(Hyperplane{std::move(n), eq_offsets[i]});
  }
  return Polyhedron(d, std::move(in), std::move(eq));
}

Polyhedron from_points(int ambient_dim, const std::vector<Point>& pts) {
  // Convex hull via the dual of vertex enumeration: every facet is the
  // affine span of a maximal tight subset. At these sizes a direct scan over
  // (dim affine hull - 1)-subsets is fine.
  if (pts.empty())
    return Polyhedron(ambient_dim, {HalfSpace{RatVec(ambient_dim, Rat(0)), Rat(-1)}}, {});
  int k = affine_rank_minus_one(pts);
  // Equalities: affine hull.
  std::vector<Hyperplane> eqs;
  {
    RatMat diff(static_cast<int>(pts.size()), ambient_dim + 1);
    for (size_t i = 0; i < pts.size(); ++i) {
      for (int j = 0; j < ambient_dim; ++j) diff.at(static_cast<int>(i), j) = pts[i][j];
      diff.at(static_cast<int>(i), ambient_dim) = 1;
    }
    // Null space of [points | 1]^T gives affine relations a.x = c.
    IntMat di(diff.rows, diff.cols);
    for (int i = 0; i < diff.rows; ++i) {
      Int l(1);
      for (int j = 0; j < diff.cols; ++j) l = lcm(l, diff.at(i, j).get_den());
      for (int j = 0; j < diff.cols; ++j)
        di.at(i, j) = diff.at(i, j).get_num() * (l / diff.at(i, j).get_den());
    }
    IntMat ker = kernel_basis(di);
    for (int c = 0; c < ker.cols; ++c) {
      RatVec n(ambient_dim);
      for (int j = 0; j < ambient_dim; ++j) n[j] = Rat(ker.at(j, c));
      eqs.push_back(Hyperplane{std::move(n), Rat(-ker.at(ambient_dim, c))});
    }
  }
  std::vector<HalfSpace> ineqs;
  std::set<std::vector<std::pair<Int, Int>>> seen;
  std::vector<int> pick;
  std::function<void(int)> scan = [&](int start) {
    if (static_cast<int>(pick.size()) == k) {
      // Affine span of picked points plus the hull equalities; facet iff all
      // points on one side.
      RatMat a(static_cast<int>(eqs.size()) + k, ambient_dim + 1);
      for (size_t i = 0; i < eqs.size(); ++i) {
        for (int j = 0; j < ambient_dim; ++j) a.at(static_cast<int>(i), j) = eqs[i].normal[j];
        a.at(static_cast<int>(i), ambient_dim) = -eqs[i].offset;
      }
      for (int i = 0; i < k; ++i) {
        const Point& p = pts[pick[i]];
        for (int j = 0; j < ambient_dim; ++j)
          a.at(static_cast<int>(eqs.size()) + i, j) = p[j];
        a.at(static_cast<int>(eqs.size()) + i, ambient_dim) = 1;
      }
      // A hyperplane (n, c) through the picked points within the hull:
      // kernel of a restricted system.
      IntMat ai(a.rows, a.cols);
      for (int i = 0; i < a.rows; ++i) {
        Int l(1);
        for (int j = 0; j < a.cols; ++j) l = lcm(l, a.at(i, j).get_den());
        for (int j = 0; j < a.cols; ++j)
          ai.at(i, j) = a.at(i, j).get_num() * (l / a.at(i, j).get_den());
      }
      IntMat ker = kernel_basis(ai);
      for (int c = 0; c < ker.cols; ++c) {
        RatVec n(ambient_dim);
        bool zero = true;
        for (int j = 0; j < ambient_dim; ++j) {
          n[j] = Rat(ker.at(j, c));
          if (n[j] != 0) zero = false;
        }
        if (zero) continue;
        Rat off = Rat(-ker.at(ambient_dim, c));
        int side = 0;
        bool facet = true;
        for (const auto& p : pts) {
          int s = cmp(dot(n, p), off);
          if (s == 0) continue;
          if (side == 0) side = s;
          else if (side != s) { facet = false; break; }
        }
        if (!facet || side == 0) continue;
        if (side > 0) {  // all points on the >= side; flip into <= form
          for (auto& q : n) q = -q;
          off = -off;
        }
        normalize(n, off);
        std::vector<std::pair<Int, Int>> key;
        for (const auto& q : n) key.emplace_back(q.get_num(), q.get_den());
        key.emplace_back(off.get_num(), off.get_den());
        if (seen.insert(key).second) ineqs.push_back(HalfSpace{n, off});
      }
      return;
    }
    for (int i = start; i < static_cast<int>(pts.size()); ++i) {
      pick.push_back(i);
      scan(i + 1);
      pick.pop_back();
    }
  };
  if (k == 0) {
    // single point: equalities pin it down
  } else {
    scan(0);
  }
  return Polyhedron(ambient_dim, std::move(ineqs), std::move(eqs));
}

RatMat vertex_matrix(const Polyhedron& p) {
  const auto& vs = p.vertices();
  RatMat m(p.ambient_dim(), static_cast<int>(vs.size()));
  for (size_t j = 0; j < vs.size(); ++j)
    for (int i = 0; i < p.ambient_dim(); ++i) m.at(i, static_cast<int>(j)) = vs[j][i];
  return m;
}

Polyhedron intersection(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw DimensionMismatch("intersection across different ambient spaces");
  std::vector<HalfSpace> in = p.ineqs();
  in.insert(in.end(), q.ineqs().begin(), q.ineqs().end());
  std::vector<Hyperplane> eq = p.eqs();
  eq.insert(eq.end(), q.eqs().begin(), q.eqs().end());
  return Polyhedron(p.ambient_dim(), std::move(in), std::move(eq));
}

std::vector<Polyhedron> slice_by_hyperplanes(const Polyhedron& p, const IntMat& rays) {
  int full_dim = p.dim();
  std::vector<Polyhedron> cells{p.pruned()};
  for (int r = 0; r < rays.rows; ++r) {
    RatVec v(rays.cols);
    for (int j = 0; j < rays.cols; ++j) v[j] = Rat(rays.at(r, j));
    std::vector<Polyhedron> next;
    for (const auto& c : cells) {
      Rat lo, hi;
      bool first = true;
      for (const auto& vert : c.vertices()) {
        Rat s = dot(v, vert);
        if (first) { lo = hi = s; first = false; }
        else {
          if (s < lo) lo = s;
          if (s > hi) hi = s;
        }
      }
      Int kmin, kmax;
      mpz_fdiv_q(kmin.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      mpz_cdiv_q(kmax.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
      for (Int k = kmin; k < kmax; ++k) {
        RatVec neg(v.size());
        for (size_t j = 0; j < v.size(); ++j) neg[j] = -v[j];
        std::vector<HalfSpace> slab{HalfSpace{neg, Rat(-k)}, HalfSpace{v, Rat(k + 1)}};
        Polyhedron cell = intersection(c, Polyhedron(p.ambient_dim(), slab, {}));
        if (cell.dim() == full_dim) next.push_back(cell.pruned());
      }
    }
    cells = std::move(next);
  }
  return cells;
}

std::map<int, std::vector<std::vector<int>>> faces_of(const Polyhedron& p) {
  Polyhedron q = p.pruned();
  const auto& vs = q.vertices();
  const int nv = static_cast<int>(vs.size());
  // Tight vertex mask per facet candidate.
  std::vector<uint64_t> masks;
  for (const auto& h : q.ineqs()) {
    uint64_t m = 0;
    for (int i = 0; i < nv; ++i) {
      Rat s(0);
      for (size_t j = 0; j < h.normal.size(); ++j) s += h.normal[j] * vs[i][j];
      if (s == h.offset) m |= (uint64_t{1} << i);
    }
    masks.push_back(m);
  }
  if (nv > 62) throw std::runtime_error("faces_of: too many vertices");
  uint64_t all = nv == 0 ? 0 : ((uint64_t{1} << nv) - 1);
  std::set<uint64_t> face_masks;
  face_masks.insert(all);  // the cell itself
  // Every face is the intersection of the facets containing it.
  std::function<void(size_t, uint64_t)> rec = [&](size_t i, uint64_t cur) {
    if (cur == 0) return;
    face_masks.insert(cur);
    for (size_t j = i; j < masks.size(); ++j) rec(j + 1, cur & masks[j]);
  };
  rec(0, all);
  std::map<int, std::vector<std::vector<int>>> out;
  for (uint64_t fm : face_masks) {
    std::vector<int> idx;
    std::vector<Point> pts;
    for (int i = 0; i < nv; ++i)
      if (fm & (uint64_t{1} << i)) {
        idx.push_back(i);
        pts.push_back(vs[i]);
      }
    if (idx.empty()) continue;
    out[affine_rank_minus_one(pts)].push_back(idx);
  }
  for (auto& [d, lst] : out) std::sort(lst.begin(), lst.end());
  return out;
}

FaceTable faces_by_dimension(const std::vector<Polyhedron>& cells) {
  FaceTable t;
  std::map<Point, int, PointLess> index;
  for (const auto& c : cells)
    for (const auto& v : c.vertices())
      if (!index.count(v)) index.emplace(v, 0);
  int n = 0;
  for (auto& [pt, id] : index) {
    id = n++;
    t.verts.push_back(pt);
  }
  std::map<int, std::set<std::vector<int>>> acc;
  for (const auto& c : cells) {
    const auto& vs = c.vertices();
    auto faces = faces_of(c);
    for (const auto& [d, lst] : faces)
      for (const auto& f : lst) {
        std::vector<int> g;
        for (int li : f) g.push_back(index.at(vs[li]));
        std::sort(g.begin(), g.end());
        acc[d].insert(std::move(g));
      }
  }
  for (const auto& [d, st] : acc)
    t.faces_by_dim[d] = std::vector<std::vector<int>>(st.begin(), st.end());
  return t;
}

Polyhedron minkowski_translate(const Polyhedron& p, const RatVec& v) {
  RatVec neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  return p.translated(neg);
}

namespace {

// Volume of a simplex spanned by pts (k+1 points) inside a k-dim chart given
// by coordinate indices.
Rat simplex_volume(const std::vector<Point>& pts, const std::vector<int>& chart) {
  int k = static_cast<int>(chart.size());
  RatMat m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      m.at(i, j) = pts[i + 1][chart[j]] - pts[0][chart[j]];
      m.at(i, j).canonicalize();
    }
  // determinant by elimination
  Rat det(1);
  RatMat w = m;
  for (int c = 0; c < k; ++c) {
    int p = -1;
    for (int i = c; i < k; ++i)
      if (w.at(i, c) != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < k; ++j) std::swap(w.at(c, j), w.at(p, j));
      det = -det;
    }
    det *= w.at(c, c);
    det.canonicalize();
    for (int i = c + 1; i < k; ++i) {
      Rat f = w.at(i, c) / w.at(c, c);
      for (int j = c; j < k; ++j) {
        w.at(i, j) -= f * w.at(c, j);
        w.at(i, j).canonicalize();
      }
    }
  }
  if (det < 0) det = -det;
  Int fact(1);
  for (int i = 2; i <= k; ++i) fact *= i;
  det /= Rat(fact);
  det.canonicalize();
  return det;
}

// Recursive triangulation: fan from the first vertex over simplices of the
// facets avoiding it.
void triangulate(const std::vector<Point>& verts, const std::vector<int>& face, int fdim,
                 std::vector<std::vector<int>>& out) {
  if (fdim <= 0) {
    out.push_back(face);
    return;
  }
  if (static_cast<int>(face.size()) == fdim + 1) {
    out.push_back(face);
    return;
  }
  std::vector<Point> pts;
  for (int i : face) pts.push_back(verts[i]);
  Polyhedron hull = from_points(static_cast<int>(verts[0].size()), pts);
  auto faces = faces_of(hull);
  // map hull-local vertex indices back to our face indices
  const auto& hv = hull.vertices();
  std::map<Point, int, PointLess> back;
  for (int i : face) back[verts[i]] = i;
  int v0 = face[0];
  const Point& p0 = verts[v0];
  auto it = faces.find(fdim - 1);
  if (it == faces.end()) return;
  for (const auto& f : it->second) {
    std::vector<int> sub;
    bool has_v0 = false;
    for (int li : f) {
      int gi = back.at(hv[li]);
      if (gi == v0) has_v0 = true;
      sub.push_back(gi);
    }
    if (has_v0) continue;
    std::vector<std::vector<int>> simps;
    triangulate(verts, sub, fdim - 1, simps);
    for (auto& s : simps) {
      s.insert(s.begin(), v0);
      out.push_back(s);
    }
  }
}

}  // namespace

Rat relative_volume(const Polyhedron& p) {
  const auto& vs = p.vertices();
  int k = p.dim();
  if (k <= 0) return Rat(k == 0 ? 1 : 0);
  // Chart: k coordinates on which the affine hull projects bijectively.
  RatMat diff(static_cast<int>(vs.size()) - 1, p.ambient_dim());
  for (size_t i = 1; i < vs.size(); ++i)
    for (int j = 0; j < p.ambient_dim(); ++j) {
      diff.at(static_cast<int>(i) - 1, j) = vs[i][j] - vs[0][j];
      diff.at(static_cast<int>(i) - 1, j).canonicalize();
    }
  std::vector<int> chart = leftmost_maxrank_columns(diff);
  std::vector<int> all(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> simplices;
  triangulate(vs, all, k, simplices);
  Rat vol(0);
  for (const auto& s : simplices) {
    std::vector<Point> pts;
    for (int i : s) pts.push_back(vs[i]);
    vol += simplex_volume(pts, chart);
  }
  vol.canonicalize();
  return vol;
}

}  // namespace hhl
