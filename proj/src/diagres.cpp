#include "hhl/diagres.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hhl {

namespace {

Int ceil_rat(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Int floor_rat(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rat rat_det(RatMat w) {
  int k = w.rows;
  if (k != w.cols) throw std::runtime_error("rat_det: not square");
  Rat d(1);
  for (int c = 0; c < k; ++c) {
    int p = -1;
    for (int i = c; i < k; ++i)
      if (w.at(i, c) != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != c) {
      for (int j = 0; j < k; ++j) std::swap(w.at(c, j), w.at(p, j));
      d = -d;
    }
    d *= w.at(c, c);
    d.canonicalize();
    for (int i = c + 1; i < k; ++i) {
      Rat f = w.at(i, c) / w.at(c, c);
      for (int j = c; j < k; ++j) {
        w.at(i, j) -= f * w.at(c, j);
        w.at(i, j).canonicalize();
      }
    }
  }
  return d;
}

Int gcd_maximal_minors(const IntMat& m) {
  int r = m.cols;
  Int g(0);
  std::vector<int> pick;
  std::function<void(int)> scan = [&](int start) {
    if (static_cast<int>(pick.size()) == r) {
      IntMat sub(r, r);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub.at(i, j) = m.at(pick[i], j);
      g = gcd(g, det(sub));
      return;
    }
    if (g == 1) return;
    for (int i = start; i < m.rows; ++i) {
      pick.push_back(i);
      scan(i + 1);
      pick.pop_back();
    }
  };
  scan(0);
  return g;
}

// lambda >= 0 with L*lambda == x; L has full column rank.
bool in_lattice_cone(const RatMat& l, const Point& x) {
  RatVec lam;
  if (!solve_rational(l, x, lam)) return false;
  for (const auto& v : lam)
    if (v < 0) return false;
  return true;
}

RatMat frame_of(const std::vector<Point>& verts, const std::vector<int>& p) {
  int amb = static_cast<int>(verts[p[0]].size());
  RatMat edges(amb, static_cast<int>(p.size()) - 1);
  for (size_t c = 1; c < p.size(); ++c)
    for (int i = 0; i < amb; ++i) {
      edges.at(i, static_cast<int>(c) - 1) = verts[p[c]][i] - verts[p[0]][i];
      edges.at(i, static_cast<int>(c) - 1).canonicalize();
    }
  if (p.size() == 1) return RatMat(amb, 0);
  return leftmost_maxrank_submatrix(edges);
}

// M with F*M = G, columnwise; F has full column rank.
RatMat solve_frames(const RatMat& f, const RatMat& g) {
  RatMat m(f.cols, g.cols);
  for (int c = 0; c < g.cols; ++c) {
    RatVec rhs(f.rows);
    for (int i = 0; i < f.rows; ++i) rhs[i] = g.at(i, c);
    RatVec x;
    if (!solve_rational(f, rhs, x))
      throw DegenerateFrame("frame does not span the compared face");
    for (int i = 0; i < f.cols; ++i) m.at(i, c) = x[i];
  }
  return m;
}

using Poly = std::map<IntVec, long>;

Poly entry_poly(const PolyEntry& e) {
  Poly p;
  for (const auto& t : e) {
    p[t.exp] += t.sign;
    if (p[t.exp] == 0) p.erase(t.exp);
  }
  return p;
}

}  // namespace

Polyhedron kernel_subspace(const IntMat& phi) {
  int amb = phi.rows;
  std::vector<Hyperplane> eqs;
  for (int c = 0; c < phi.cols; ++c) {
    RatVec n(amb);
    for (int i = 0; i < amb; ++i) n[i] = Rat(phi.at(i, c));
    eqs.push_back(Hyperplane{std::move(n), Rat(0)});
  }
  return Polyhedron(amb, {}, std::move(eqs));
}

IntMat diagonal_map(int dim) {
  IntMat phi(2 * dim, dim);
  for (int i = 0; i < dim; ++i) {
    phi.at(i, i) = 1;
    phi.at(dim + i, i) = 1;
  }
  return phi;
}

CellComplex build_cells(const ToricVariety& y, const IntMat& phi) {
  const IntMat& rays = y.rays;  // R x amb
  IntMat psi = cokernel_presentation(phi);
  IntMat arays = mul(psi, rays.transposed());  // (amb - cols) x R
  int r = rank(arays);
  if (r != phi.rows - phi.cols)
    throw std::runtime_error("projected rays do not span the cokernel");
  // First ray subset (lexicographic) whose projection is unimodular.
  std::vector<int> chosen;
  {
    std::vector<int> pick;
    std::function<bool(int)> scan = [&](int start) -> bool {
      if (static_cast<int>(pick.size()) == r) {
        IntMat sub(r, r);
        for (int j = 0; j < r; ++j)
          for (int i = 0; i < r; ++i) sub.at(i, j) = arays.at(i, pick[j]);
        Int d = det(sub);
        if (d == 1 || d == -1) {
          chosen = pick;
          return true;
        }
        return false;
      }
      for (int i = start; i < arays.cols; ++i) {
        pick.push_back(i);
        if (scan(i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    scan(0);
  }
  if (chosen.empty()) throw NoUnimodularFrame();
  // P = {0 <= v.x <= 1 for the chosen rays} within the kernel subspace.
  Polyhedron k = kernel_subspace(phi);
  if (k.dim() != r) throw std::runtime_error("kernel dimension mismatch");
  std::vector<HalfSpace> ineqs;
  for (int idx : chosen) {
    RatVec lo(phi.rows), hi(phi.rows);
    for (int j = 0; j < phi.rows; ++j) {
      hi[j] = Rat(rays.at(idx, j));
      lo[j] = -hi[j];
    }
    ineqs.push_back(HalfSpace{std::move(lo), Rat(0)});
    ineqs.push_back(HalfSpace{std::move(hi), Rat(1)});
  }
  Polyhedron p(phi.rows, std::move(ineqs), k.eqs());
  // Lattice basis: extreme rays of the cone over the vertices of P.
  const auto& vs = p.vertices();
  std::vector<IntVec> gens;
  for (const auto& v : vs) {
    Int den(1);
    for (const auto& q : v) den = lcm(den, q.get_den());
    IntVec w(v.size());
    Int g(0);
    for (size_t i = 0; i < v.size(); ++i) {
      w[i] = v[i].get_num() * (den / v[i].get_den());
      g = gcd(g, w[i]);
    }
    if (g == 0) continue;
    for (auto& e : w) e /= g;
    if (std::find(gens.begin(), gens.end(), w) == gens.end()) gens.push_back(w);
  }
  std::vector<IntVec> extreme;
  for (size_t i = 0; i < gens.size(); ++i) {
    // is gens[i] a nonnegative combination of the others?
    std::vector<HalfSpace> nonneg;
    int m = static_cast<int>(gens.size()) - 1;
    for (int j = 0; j < m; ++j) {
      RatVec n(m, Rat(0));
      n[j] = -1;
      nonneg.push_back(HalfSpace{std::move(n), Rat(0)});
    }
    std::vector<Hyperplane> eqs;
    for (int row = 0; row < phi.rows; ++row) {
      RatVec n(m);
      int c = 0;
      for (size_t j = 0; j < gens.size(); ++j) {
        if (j == i) continue;
        n[c++] = Rat(gens[j][row]);
      }
      eqs.push_back(Hyperplane{std::move(n), Rat(gens[i][row])});
    }
    Polyhedron feas(m, std::move(nonneg), std::move(eqs));
    if (feas.is_empty()) extreme.push_back(gens[i]);
  }
  std::sort(extreme.begin(), extreme.end());
  IntMat l(phi.rows, static_cast<int>(extreme.size()));
  for (size_t c = 0; c < extreme.size(); ++c)
    for (int i = 0; i < phi.rows; ++i) l.at(i, static_cast<int>(c)) = extreme[c][i];
  if (rank(l) != r || l.cols != r)
    throw std::runtime_error("lattice basis has wrong rank");
  if (gcd_maximal_minors(l) != 1)
    throw std::runtime_error("lattice basis is not unimodular");
  CellComplex cc;
  cc.cells = slice_by_hyperplanes(p, rays);
  cc.lattice.l = std::move(l);
  return cc;
}

CellClassTable group_by_lattice_class(const ToricVariety& y, const CellComplex& cc) {
  CellClassTable t;
  t.faces = faces_by_dimension(cc.cells);
  const auto& verts = t.faces.verts;
  RatMat lrat = to_rat(cc.lattice.l);
  int amb = cc.lattice.l.rows;
  for (const auto& [d, faces] : t.faces.faces_by_dim) {
    auto& fine = t.fine_degree[d];
    auto& tw = t.twist[d];
    std::map<std::vector<Point>, std::vector<int>> classes;
    for (size_t f = 0; f < faces.size(); ++f) {
      std::vector<Point> pts;
      for (int i : faces[f]) pts.push_back(verts[i]);
      // interior point: barycenter of the face's vertices
      Point ip(amb, Rat(0));
      for (const auto& p : pts)
        for (int j = 0; j < amb; ++j) ip[j] += p[j];
      Rat n(static_cast<long>(pts.size()));
      for (auto& q : ip) {
        q /= n;
        q.canonicalize();
      }
      IntVec fd(y.num_rays());
      for (int rr = 0; rr < y.num_rays(); ++rr) {
        Rat s(0);
        for (int j = 0; j < amb; ++j) s += Rat(y.rays.at(rr, j)) * ip[j];
        fd[rr] = ceil_rat(s);
      }
      IntVec w = mul(y.grading, fd);
      for (auto& e : w) e = -e;
      fine.push_back(std::move(fd));
      tw.push_back(std::move(w));
      // representative: pull back by lattice vectors while inside the cone
      std::vector<Point> rep = pts;
      bool moved = true;
      while (moved) {
        moved = false;
        for (int c = 0; c < lrat.cols; ++c) {
          std::vector<Point> cand = rep;
          for (auto& p : cand)
            for (int j = 0; j < amb; ++j) {
              p[j] -= lrat.at(j, c);
              p[j].canonicalize();
            }
          bool ok = true;
          for (const auto& p : cand)
            if (!in_lattice_cone(lrat, p)) { ok = false; break; }
          if (ok) {
            rep = std::move(cand);
            moved = true;
          }
        }
      }
      std::sort(rep.begin(), rep.end(), [](const Point& a, const Point& b) {
        for (size_t i = 0; i < a.size(); ++i) {
          int c = cmp(a[i], b[i]);
          if (c != 0) return c < 0;
        }
        return false;
      });
      classes[rep].push_back(static_cast<int>(f));
    }
    auto& out = t.classes_by_dim[d];
    for (auto& [key, members] : classes) out.push_back(members);
  }
  return t;
}

int boundary_sign(const std::vector<Point>& verts, const std::vector<int>& q,
                  const std::vector<int>& p) {
  RatMat fp = frame_of(verts, p);
  RatMat fq = frame_of(verts, q);
  int v = -1;
  for (int i : p)
    if (std::find(q.begin(), q.end(), i) == q.end()) { v = i; break; }
  if (v < 0) throw DegenerateFrame("faces coincide in boundary_sign");
  RatMat ext(fp.rows, fq.cols + 1);
  for (int i = 0; i < fp.rows; ++i) {
    for (int c = 0; c < fq.cols; ++c) ext.at(i, c) = fq.at(i, c);
    ext.at(i, fq.cols) = verts[v][i] - verts[q[0]][i];
    ext.at(i, fq.cols).canonicalize();
  }
  Rat d = rat_det(solve_frames(fp, ext));
  return d > 0 ? 1 : -1;
}

int gluing_sign(const std::vector<Point>& verts, const std::vector<int>& p,
                const std::vector<int>& q) {
  RatMat fp = frame_of(verts, p);
  RatMat fq = frame_of(verts, q);
  if (fp.cols == 0) return 1;
  Rat d = rat_det(solve_frames(fp, fq));
  return d > 0 ? 1 : -1;
}

GradedFreeComplex assemble(const ToricVariety& y, const CellClassTable& table) {
  GradedFreeComplex c;
  c.num_vars = y.num_rays();
  int d = table.classes_by_dim.empty() ? -1 : table.classes_by_dim.rbegin()->first;
  const auto& verts = table.faces.verts;
  c.terms.resize(d + 1);
  for (int t = 0; t <= d; ++t) {
    const auto& classes = table.classes_by_dim.at(t);
    const auto& tw = table.twist.at(t);
    for (const auto& cls : classes) {
      for (int m : cls)
        if (tw[m] != tw[cls[0]])
          throw std::runtime_error("twists differ within a lattice class");
      c.terms[t].push_back(tw[cls[0]]);
    }
  }
  c.diffs.resize(d);
  for (int t = 0; t + 1 <= d; ++t) {
    const auto& tgt_classes = table.classes_by_dim.at(t);
    const auto& src_classes = table.classes_by_dim.at(t + 1);
    const auto& tgt_faces = table.faces.faces_by_dim.at(t);
    const auto& src_faces = table.faces.faces_by_dim.at(t + 1);
    const auto& tgt_fine = table.fine_degree.at(t);
    const auto& src_fine = table.fine_degree.at(t + 1);
    auto& m = c.diffs[t];
    m.assign(tgt_classes.size(), std::vector<PolyEntry>(src_classes.size()));
    for (size_t col = 0; col < src_classes.size(); ++col) {
      int src = src_classes[col][0];
      const auto& sv = src_faces[src];
      for (size_t row = 0; row < tgt_classes.size(); ++row) {
        int tgt_rep = tgt_classes[row][0];
        PolyEntry entry;
        for (int tgt : tgt_classes[row]) {
          const auto& tv = tgt_faces[tgt];
          if (!std::includes(sv.begin(), sv.end(), tv.begin(), tv.end())) continue;
          IntVec diff(src_fine[src].size());
          for (size_t i = 0; i < diff.size(); ++i) {
            diff[i] = src_fine[src][i] - tgt_fine[tgt][i];
            if (diff[i] < 0)
              throw NegativeExponent("negative exponent in differential entry");
          }
          int s = gluing_sign(verts, tgt_faces[tgt_rep], tv) * boundary_sign(verts, tv, sv);
          entry.push_back(MonomialTerm{s, std::move(diff)});
        }
        // merge equal monomials
        Poly merged = entry_poly(entry);
        PolyEntry out;
        for (const auto& [exp, coef] : merged)
          out.push_back(MonomialTerm{static_cast<int>(coef), exp});
        m[row][col] = std::move(out);
      }
    }
  }
  return c;
}

GradedFreeComplex diagonal_resolution(const ToricVariety& x) {
  ToricVariety y = product(x, x);
  IntMat phi = diagonal_map(x.dim);
  CellComplex cc = build_cells(y, phi);
  CellClassTable table = group_by_lattice_class(y, cc);
  return assemble(y, table);
}

bool check_d2_zero(const GradedFreeComplex& c) {
  for (size_t t = 0; t + 1 < c.diffs.size(); ++t) {
    const auto& a = c.diffs[t];      // terms[t+1] -> terms[t]
    const auto& b = c.diffs[t + 1];  // terms[t+2] -> terms[t+1]
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t k = 0; b.size() > 0 && k < b[0].size(); ++k) {
        Poly acc;
        for (size_t j = 0; j < b.size(); ++j) {
          Poly pa = entry_poly(a[i][j]);
          Poly pb = entry_poly(b[j][k]);
          for (const auto& [ea, ca] : pa)
            for (const auto& [eb, cb] : pb) {
              IntVec e(ea.size());
              for (size_t q = 0; q < e.size(); ++q) e[q] = ea[q] + eb[q];
              acc[e] += ca * cb;
              if (acc[e] == 0) acc.erase(e);
            }
        }
        if (!acc.empty()) return false;
      }
  }
  return true;
}

bool check_homogeneity(const ToricVariety& y, const GradedFreeComplex& c) {
  for (size_t t = 0; t < c.diffs.size(); ++t)
    for (size_t i = 0; i < c.diffs[t].size(); ++i)
      for (size_t j = 0; j < c.diffs[t][i].size(); ++j)
        for (const auto& term : c.diffs[t][i][j]) {
          if (term.sign == 0) continue;
          for (const auto& e : term.exp)
            if (e < 0) return false;
          IntVec deg = mul(y.grading, term.exp);
          const IntVec& wt = c.terms[t][i];      // target twist
          const IntVec& ws = c.terms[t + 1][j];  // source twist
          for (size_t q = 0; q < deg.size(); ++q)
            if (deg[q] != wt[q] - ws[q]) return false;
        }
  return true;
}

bool check_minimality(const GradedFreeComplex& c) {
  for (const auto& m : c.diffs)
    for (const auto& row : m)
      for (const auto& e : row)
        for (const auto& term : e) {
          if (term.sign == 0) continue;
          bool constant = true;
          for (const auto& v : term.exp)
            if (v != 0) constant = false;
          if (constant) return false;
        }
  return true;
}

std::vector<IntVec> extract_collection(const GradedFreeComplex& c, int x_class_rank,
                                       int side, std::vector<IntVec>* multiset) {
  std::vector<IntVec> all;
  for (const auto& term : c.terms)
    for (const auto& tw : term) {
      IntVec half(x_class_rank);
      for (int i = 0; i < x_class_rank; ++i)
        half[i] = tw[side == 0 ? i : x_class_rank + i];
      all.push_back(std::move(half));
    }
  if (multiset) *multiset = all;
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

Int count_monomials(const IntMat& grading, const IntVec& cls, long cap) {
  int n = grading.cols;
  std::vector<HalfSpace> nonneg;
  for (int i = 0; i < n; ++i) {
    RatVec v(n, Rat(0));
    v[i] = -1;
    nonneg.push_back(HalfSpace{std::move(v), Rat(0)});
  }
  std::vector<Hyperplane> eqs;
  for (int r = 0; r < grading.rows; ++r) {
    RatVec v(n);
    for (int j = 0; j < n; ++j) v[j] = Rat(grading.at(r, j));
    eqs.push_back(Hyperplane{std::move(v), Rat(cls[r])});
  }
  Polyhedron p(n, std::move(nonneg), std::move(eqs));
  if (p.is_empty()) return 0;
  // enumerate lattice points of the bounding box
  std::vector<long> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    Rat mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = floor_rat(mn).get_si();
    hi[i] = ceil_rat(mx).get_si();
  }
  long vol = 1;
  for (int i = 0; i < n; ++i) {
    vol *= hi[i] - lo[i] + 1;
    if (vol > cap) throw SampleTooLarge("monomial enumeration cap exceeded");
  }
  Int count(0);
  std::vector<long> u(lo);
  while (true) {
    bool ok = true;
    for (int r = 0; r < grading.rows && ok; ++r) {
      Int s(0);
      for (int j = 0; j < n; ++j) s += grading.at(r, j) * u[j];
      if (s != cls[r]) ok = false;
    }
    if (ok) ++count;
    int i = 0;
    while (i < n && u[i] == hi[i]) u[i] = lo[i], ++i;
    if (i == n) break;
    ++u[i];
  }
  return count;
}

namespace {

std::vector<std::vector<long>> enumerate_monomials(const IntMat& grading, const IntVec& cls,
                                                   long cap) {
  int n = grading.cols;
  std::vector<std::vector<long>> out;
  std::vector<HalfSpace> nonneg;
  for (int i = 0; i < n; ++i) {
    RatVec v(n, Rat(0));
    v[i] = -1;
    nonneg.push_back(HalfSpace{std::move(v), Rat(0)});
  }
  std::vector<Hyperplane> eqs;
  for (int r = 0; r < grading.rows; ++r) {
    RatVec v(n);
    for (int j = 0; j < n; ++j) v[j] = Rat(grading.at(r, j));
    eqs.push_back(Hyperplane{std::move(v), Rat(cls[r])});
  }
  Polyhedron p(n, std::move(nonneg), std::move(eqs));
  if (p.is_empty()) return out;
  std::vector<long> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    Rat mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = floor_rat(mn).get_si();
    hi[i] = ceil_rat(mx).get_si();
  }
  long vol = 1;
  for (int i = 0; i < n; ++i) {
    vol *= hi[i] - lo[i] + 1;
    if (vol > cap) throw SampleTooLarge("monomial enumeration cap exceeded");
  }
  std::vector<long> u(lo);
  while (true) {
    bool ok = true;
    for (int r = 0; r < grading.rows && ok; ++r) {
      long s = 0;
      for (int j = 0; j < n; ++j) s += grading.at(r, j).get_si() * u[j];
      if (s != cls[r].get_si()) ok = false;
    }
    if (ok) out.push_back(u);
    int i = 0;
    while (i < n && u[i] == hi[i]) u[i] = lo[i], ++i;
    if (i == n) break;
    ++u[i];
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  void join(int i, int j) { parent[find(i)] = find(j); }
};

}  // namespace

bool euler_char_oracle(const ToricVariety& x, const GradedFreeComplex& c,
                       const std::vector<std::pair<IntVec, IntVec>>& bidegrees) {
  int cl = x.picard_rank();
  for (const auto& [a, b] : bidegrees) {
    // Euler characteristic of the complex's graded piece at (a, b)
    Int chi(0);
    int s = 1;
    for (const auto& term : c.terms) {
      for (const auto& tw : term) {
        IntVec ca(cl), cb(cl);
        for (int i = 0; i < cl; ++i) {
          ca[i] = a[i] + tw[i];
          cb[i] = b[i] + tw[cl + i];
        }
        chi += s * count_monomials(x.grading, ca) * count_monomials(x.grading, cb);
      }
      s = -s;
    }
    // connected components of the fiber graph
    auto ma = enumerate_monomials(x.grading, a, 2000000);
    auto mb = enumerate_monomials(x.grading, b, 2000000);
    long na = static_cast<long>(ma.size()), nb = static_cast<long>(mb.size());
    if (na * nb > 20000) throw SampleTooLarge("fiber graph too large");
    UnionFind uf(static_cast<int>(na * nb));
    for (long i = 0; i < na * nb; ++i)
      for (long j = i + 1; j < na * nb; ++j) {
        const auto &u = ma[i / nb], &v = mb[i % nb];
        const auto &u2 = ma[j / nb], &v2 = mb[j % nb];
        bool match = true;
        for (size_t q = 0; q < u.size() && match; ++q)
          if (u[q] - u2[q] != v2[q] - v[q]) match = false;
        if (match) uf.join(static_cast<int>(i), static_cast<int>(j));
      }
    long comps = 0;
    for (long i = 0; i < na * nb; ++i)
      if (uf.find(static_cast<int>(i)) == i) ++comps;
    if (chi != comps) return false;
  }
  return true;
}

}  // namespace hhl
