#ifndef HHL_INTLIN_HPP
#define HHL_INTLIN_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

// Exact integer and rational linear algebra. Everything here is pure and
// value-semantic; matrices are dense row-major with arbitrary-precision
// entries.

namespace hhl {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct TorsionClassGroup : std::runtime_error {
  explicit TorsionClassGroup(const std::string& msg) : std::runtime_error(msg) {}
};

struct IntMat {
  int rows = 0;
  int cols = 0;
  IntVec a;  // row-major, a.size() == rows*cols

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  IntMat(int r, int c, std::vector<std::vector<long>> init) : IntMat(r, c) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) at(i, j) = init[i][j];
  }

  Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  IntMat transposed() const;
  IntMat row(int i) const;
  IntMat col(int j) const;
};

struct RatMat {
  int rows = 0;
  int cols = 0;
  RatVec a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const RatMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  RatMat transposed() const;
};

IntMat mul(const IntMat& x, const IntMat& y);
IntVec mul(const IntMat& x, const IntVec& v);
RatMat mul(const RatMat& x, const RatMat& y);
RatVec mul(const RatMat& x, const RatVec& v);
RatMat to_rat(const IntMat& m);

Int det(const IntMat& m);  // square only; Bareiss fraction-free
int rank(const RatMat& m);
int rank(const IntMat& m);

struct SnfResult {
  IntMat U;  // unimodular, rows x rows
  IntMat D;  // diagonal, rows x cols, d1 | d2 | ...
  IntMat V;  // unimodular, cols x cols
};

// U*M*V == D with nonnegative diagonal and divisibility chain.
SnfResult snf(const IntMat& m);

// Columns form a saturated Z-basis of {x : M x = 0}, in column HNF.
IntMat kernel_basis(const IntMat& m);

// Grading matrix pi with pi*B == 0 and pi surjective onto Z^(rows-cols).
// Requires B of full column rank; throws TorsionClassGroup if coker(B) has
// invariant factors > 1.
IntMat cokernel_presentation(const IntMat& b);

// True iff columns of B are linearly independent and every maximal minor of
// B lies in {0, +1, -1}.
bool maximal_minors_in_unit_set(const IntMat& b);

// Greedy left-to-right scan keeping each column that increases the rank.
RatMat leftmost_maxrank_submatrix(const RatMat& m);
std::vector<int> leftmost_maxrank_columns(const RatMat& m);

// Column-style Hermite normal form (used to canonicalize kernel bases).
IntMat hnf_columns(const IntMat& m);

// Solve M x = rhs over the rationals; returns false if inconsistent.
// On success x has m.cols entries (one solution; kernel directions zeroed).
bool solve_rational(const RatMat& m, const RatVec& rhs, RatVec& x);

// Solve M x = rhs over the integers via SNF; returns false if no integral
// solution exists.
bool solve_integer(const IntMat& m, const IntVec& rhs, IntVec& x);

}  // namespace hhl

#endif
