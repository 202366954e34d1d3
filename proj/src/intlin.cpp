#include "hhl/intlin.hpp"

#include <algorithm>
#include <cassert>

namespace hhl {

IntMat IntMat::transposed() const {
  IntMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::row(int i) const {
  IntMat r(1, cols);
  for (int j = 0; j < cols; ++j) r.at(0, j) = at(i, j);
  return r;
}

IntMat IntMat::col(int j) const {
  IntMat c(rows, 1);
  for (int i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
  return c;
}

RatMat RatMat::transposed() const {
  RatMat t(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat mul(const IntMat& x, const IntMat& y) {
  assert(x.cols == y.rows);
  IntMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  return z;
}

IntVec mul(const IntMat& x, const IntVec& v) {
  assert(static_cast<size_t>(x.cols) == v.size());
  IntVec r(x.rows, 0);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i] += x.at(i, j) * v[j];
  return r;
}

RatMat mul(const RatMat& x, const RatMat& y) {
  assert(x.cols == y.rows);
  RatMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  for (auto& q : z.a) q.canonicalize();
  return z;
}

RatVec mul(const RatMat& x, const RatVec& v) {
  assert(static_cast<size_t>(x.cols) == v.size());
  RatVec r(x.rows, Rat(0));
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r[i] += x.at(i, j) * v[j];
    r[i].canonicalize();
  }
  return r;
}

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

Int det(const IntMat& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMat w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

int rank(const RatMat& m) {
  RatMat w = m;
  int r = 0;
  for (int c = 0; c < w.cols && r < w.rows; ++c) {
    int p = -1;
    for (int i = r; i < w.rows; ++i)
      if (w.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(p, j));
    for (int i = r + 1; i < w.rows; ++i) {
      if (w.at(i, c) == 0) continue;
      Rat f = w.at(i, c) / w.at(r, c);
      for (int j = c; j < w.cols; ++j) {
        w.at(i, j) -= f * w.at(r, j);
        w.at(i, j).canonicalize();
      }
    }
    ++r;
  }
  return r;
}

int rank(const IntMat& m) { return rank(to_rat(m)); }

namespace {

struct SnfWork {
  IntMat u, d, v;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const Int& f) {  // row dst += f * row src
    for (int c = 0; c < d.cols; ++c) d.at(dst, c) += f * d.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
  }
  void add_col(int dst, int src, const Int& f) {
    for (int r = 0; r < d.rows; ++r) d.at(r, dst) += f * d.at(r, src);
    for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
  }
  void negate_row(int i) {
    for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
    for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

}  // namespace

SnfResult snf(const IntMat& m) {
  SnfWork w{IntMat::identity(m.rows), m, IntMat::identity(m.cols)};
  int n = std::min(m.rows, m.cols);
  for (int k = 0; k < n; ++k) {
    for (;;) {
      // Smallest-absolute-value nonzero pivot in the trailing block.
      int pi = -1, pj = -1;
      Int best;
      for (int i = k; i < w.d.rows; ++i)
        for (int j = k; j < w.d.cols; ++j) {
          const Int& e = w.d.at(i, j);
          if (e == 0) continue;
          Int ae = abs(e);
          if (pi < 0 || ae < best) { best = ae; pi = i; pj = j; }
        }
      if (pi < 0) break;  // trailing block is zero
      w.swap_rows(k, pi);
      w.swap_cols(k, pj);
      bool clean = true;
      for (int i = k + 1; i < w.d.rows; ++i) {
        if (w.d.at(i, k) == 0) continue;
        Int q = w.d.at(i, k) / w.d.at(k, k);  // truncated division is fine
        if (q != 0) w.add_row(i, k, -q);
        if (w.d.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < w.d.cols; ++j) {
        if (w.d.at(k, j) == 0) continue;
        Int q = w.d.at(k, j) / w.d.at(k, k);
        if (q != 0) w.add_col(j, k, -q);
        if (w.d.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any non-multiple entry into the pivot row.
      bool div_ok = true;
      for (int i = k + 1; i < w.d.rows && div_ok; ++i)
        for (int j = k + 1; j < w.d.cols; ++j)
          if (w.d.at(i, j) % w.d.at(k, k) != 0) {
            w.add_row(k, i, 1);
            div_ok = false;
            break;
          }
      if (div_ok) break;
    }
    if (w.d.at(k, k) < 0) w.negate_row(k);
  }
  return SnfResult{std::move(w.u), std::move(w.d), std::move(w.v)};
}

IntMat hnf_columns(const IntMat& m) {
  IntMat w = m;
  int r = 0;  // pivot row
  int c = 0;  // next column to place
  auto add_col = [&](int dst, int src, const Int& f) {
    for (int i = 0; i < w.rows; ++i) w.at(i, dst) += f * w.at(i, src);
  };
  auto swap_col = [&](int i, int j) {
    if (i == j) return;
    for (int rr = 0; rr < w.rows; ++rr) std::swap(w.at(rr, i), w.at(rr, j));
  };
  for (; r < w.rows && c < w.cols; ++r) {
    // Euclidean reduction across columns c..end on row r.
    for (;;) {
      int p = -1;
      Int best;
      for (int j = c; j < w.cols; ++j) {
        if (w.at(r, j) == 0) continue;
        Int ae = abs(w.at(r, j));
        if (p < 0 || ae < best) { best = ae; p = j; }
      }
      if (p < 0) break;
      swap_col(c, p);
      bool done = true;
      for (int j = c + 1; j < w.cols; ++j) {
        if (w.at(r, j) == 0) continue;
        Int q = w.at(r, j) / w.at(r, c);
        if (q != 0) add_col(j, c, -q);
        if (w.at(r, j) != 0) done = false;
      }
      if (done) break;
    }
    if (w.at(r, c) == 0) continue;  // no pivot in this row
    if (w.at(r, c) < 0)
      for (int i = 0; i < w.rows; ++i) w.at(i, c) = -w.at(i, c);
    // Reduce earlier columns against the pivot.
    for (int j = 0; j < c; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), w.at(r, j).get_mpz_t(), w.at(r, c).get_mpz_t());
      if (q != 0) add_col(j, c, -q);
    }
    ++c;
  }
  return w;
}

IntMat kernel_basis(const IntMat& m) {
  SnfResult s = snf(m);
  int r = 0;
  int n = std::min(m.rows, m.cols);
  for (int i = 0; i < n; ++i)
    if (s.D.at(i, i) != 0) ++r;
  IntMat k(m.cols, m.cols - r);
  for (int i = 0; i < m.cols; ++i)
    for (int j = r; j < m.cols; ++j) k.at(i, j - r) = s.V.at(i, j);
  return hnf_columns(k);
}

IntMat cokernel_presentation(const IntMat& b) {
  if (rank(b) != b.cols)
    throw std::invalid_argument("cokernel_presentation: columns must be independent");
  SnfResult s = snf(b);
  for (int i = 0; i < b.cols; ++i)
    if (s.D.at(i, i) != 1)
      throw TorsionClassGroup("class group has torsion (invariant factor " +
                              s.D.at(i, i).get_str() + ")");
  IntMat pi(b.rows - b.cols, b.rows);
  for (int i = b.cols; i < b.rows; ++i)
    for (int j = 0; j < b.rows; ++j) pi.at(i - b.cols, j) = s.U.at(i, j);
  return pi;
}

namespace {

void minor_scan(const IntMat& b, int r, std::vector<int>& pick, int start, bool& ok) {
  if (!ok) return;
  if (static_cast<int>(pick.size()) == r) {
    IntMat sub(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) sub.at(i, j) = b.at(pick[i], j);
    Int d = det(sub);
    if (d < -1 || d > 1) ok = false;
    return;
  }
  for (int i = start; i <= b.rows - (r - static_cast<int>(pick.size())); ++i) {
    pick.push_back(i);
    minor_scan(b, r, pick, i + 1, ok);
    pick.pop_back();
    if (!ok) return;
  }
}

}  // namespace

bool maximal_minors_in_unit_set(const IntMat& b) {
  if (rank(b) != b.cols) return false;
  bool ok = true;
  std::vector<int> pick;
  minor_scan(b, b.cols, pick, 0, ok);
  return ok;
}

std::vector<int> leftmost_maxrank_columns(const RatMat& m) {
  std::vector<int> kept;
  RatMat cur(m.rows, 0);
  int cur_rank = 0;
  for (int j = 0; j < m.cols; ++j) {
    RatMat cand(m.rows, cur.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
      for (int c = 0; c < cur.cols; ++c) cand.at(i, c) = cur.at(i, c);
      cand.at(i, cur.cols) = m.at(i, j);
    }
    if (rank(cand) > cur_rank) {
      cur = std::move(cand);
      ++cur_rank;
      kept.push_back(j);
    }
  }
  return kept;
}

RatMat leftmost_maxrank_submatrix(const RatMat& m) {
  std::vector<int> kept = leftmost_maxrank_columns(m);
  RatMat out(m.rows, static_cast<int>(kept.size()));
  for (int i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < kept.size(); ++j) out.at(i, static_cast<int>(j)) = m.at(i, kept[j]);
  return out;
}

bool solve_rational(const RatMat& m, const RatVec& rhs, RatVec& x) {
  assert(static_cast<size_t>(m.rows) == rhs.size());
  RatMat w(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, m.cols) = rhs[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < m.cols && r < w.rows; ++c) {
    int p = -1;
    for (int i = r; i < w.rows; ++i)
      if (w.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    for (int j = 0; j <= m.cols; ++j) std::swap(w.at(r, j), w.at(p, j));
    Rat inv = 1 / w.at(r, c);
    for (int j = c; j <= m.cols; ++j) {
      w.at(r, j) *= inv;
      w.at(r, j).canonicalize();
    }
    for (int i = 0; i < w.rows; ++i) {
      if (i == r || w.at(i, c) == 0) continue;
      Rat f = w.at(i, c);
      for (int j = c; j <= m.cols; ++j) {
        w.at(i, j) -= f * w.at(r, j);
        w.at(i, j).canonicalize();
      }
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < w.rows; ++i)
    if (w.at(i, m.cols) != 0) return false;
  x.assign(m.cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = w.at(i, m.cols);
  return true;
}

bool solve_integer(const IntMat& m, const IntVec& rhs, IntVec& x) {
  SnfResult s = snf(m);
  IntVec y = mul(s.U, rhs);
  int n = std::min(m.rows, m.cols);
  IntVec z(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (i < n && s.D.at(i, i) != 0) {
      if (y[i] % s.D.at(i, i) != 0) return false;
      z[i] = y[i] / s.D.at(i, i);
    } else if (y[i] != 0) {
      return false;
    }
  }
  x = mul(s.V, z);
  return true;
}

}  // namespace hhl
