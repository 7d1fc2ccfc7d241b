#include "nashlab/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

namespace nashlab {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void check_same_length(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector length mismatch: " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

}  // namespace

LatticeVector make_vector(std::initializer_list<long> coords) {
  LatticeVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  check_same_length(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  check_same_length(a, b);
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  check_same_length(a, b);
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

LatticeVector scaled(const LatticeVector& v, const Integer& k) {
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * k;
  return r;
}

bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const LatticeVector> rows,
                                       std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged row list");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(
    std::span<const LatticeVector> columns, std::size_t rows) {
  return from_rows(columns, rows).transposed();
}

LatticeVector IntegerMatrix::row(std::size_t r) const {
  return LatticeVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

LatticeVector IntegerMatrix::column(std::size_t c) const {
  LatticeVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<LatticeVector> IntegerMatrix::row_vectors() const {
  std::vector<LatticeVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<LatticeVector> IntegerMatrix::column_vectors() const {
  std::vector<LatticeVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                     const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += k * (*this)(source, c);
}

void IntegerMatrix::add_column_multiple(std::size_t target, std::size_t source,
                                        const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += k * (*this)(r, source);
}

void IntegerMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_column(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntegerMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  LatticeVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) r[i] += a(i, k) * v[k];
  return r;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << to_string(m.row(r));
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Characteristic

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

Characteristic::Characteristic(unsigned long value) : value_(value) {
  if (value != 0 && !is_prime(value)) {
    throw Error("characteristic must be 0 or a prime, got " +
                std::to_string(value));
  }
}

bool Characteristic::nonzero_in_field(const Integer& x) const {
  if (value_ == 0) return x != 0;
  return mpz_divisible_ui_p(x.get_mpz_t(), value_) == 0;
}

// ---------------------------------------------------------------------------
// Determinant and rank

Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square()) {
    throw DimensionError("determinant of a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Integer f = a(i, c), piv = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * piv - a(r, j) * f;
      Integer g = content(a.row(i));
      if (g > 1)
        for (std::size_t j = c; j < a.cols(); ++j) a(i, j) /= g;
    }
    ++r;
  }
  return r;
}

std::size_t rank(std::span<const LatticeVector> rows, std::size_t cols) {
  return rank(IntegerMatrix::from_rows(rows, cols));
}

// ---------------------------------------------------------------------------
// Hermite and Smith normal forms

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t k = r; k < rows; ++k) {
        if (h(k, c) == 0) continue;
        if (best == rows || abs_value(h(k, c)) < abs_value(h(best, c))) best = k;
      }
      if (best == rows) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t k = r + 1; k < rows; ++k) {
        if (h(k, c) == 0) continue;
        Integer q = floor_div(h(k, c), h(r, c));
        h.add_row_multiple(k, r, -q);
        u.add_row_multiple(k, r, -q);
        if (h(k, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer q = floor_div(h(k, c), h(r, c));
      h.add_row_multiple(k, r, -q);
      u.add_row_multiple(k, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix s = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t rows = s.rows(), cols = s.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (s(i, j) != 0 &&
            (bi == rows || abs_value(s(i, j)) < abs_value(s(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    s.swap_rows(t, bi);
    u.swap_rows(t, bi);
    s.swap_columns(t, bj);
    v.swap_columns(t, bj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q = floor_div(s(i, t), s(t, t));
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q = floor_div(s(t, j), s(t, t));
        s.add_column_multiple(j, t, -q);
        v.add_column_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; move it to the pivot.
        std::size_t bi2 = t, bj2 = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (s(i, t) != 0 && abs_value(s(i, t)) < abs_value(s(bi2, bj2))) {
            bi2 = i;
            bj2 = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (s(t, j) != 0 && abs_value(s(t, j)) < abs_value(s(bi2, bj2))) {
            bi2 = t;
            bj2 = j;
          }
        s.swap_rows(t, bi2);
        u.swap_rows(t, bi2);
        s.swap_columns(t, bj2);
        v.swap_columns(t, bj2);
        continue;
      }
      // Divisibility chain: fold a row with a non-multiple into row t.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t()) == 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      s.add_row_multiple(t, bad, 1);
      u.add_row_multiple(t, bad, 1);
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  Integer d = determinant(m);
  if (d != 1 && d != -1) throw Error("matrix is not unimodular");
  // U·m = H with H = identity for a unimodular m.
  HermiteForm hf = hermite_normal_form(m);
  assert(hf.h == IntegerMatrix::identity(m.rows()));
  return hf.u;
}

// ---------------------------------------------------------------------------
// Rational solving

LinearSolution solve_rational(const IntegerMatrix& a, const LatticeVector& b) {
  if (a.rows() != b.size()) throw DimensionError("right-hand side length mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<RationalVector> t(m, RationalVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a(i, j);
    t[i][n] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && t[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(t[r], t[p]);
    Rational inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (std::size_t j = c; j <= n; ++j) t[i][j] -= f * t[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  LinearSolution out;
  for (std::size_t i = r; i < m; ++i) {
    if (t[i][n] != 0) {
      out.kind = LinearSolution::Kind::NoSolution;
      return out;
    }
  }
  out.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.solution[pivots[i]] = t[i][n];
  if (r == n) {
    out.kind = LinearSolution::Kind::Unique;
    return out;
  }
  out.kind = LinearSolution::Kind::Underdetermined;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector k(n, Rational(0));
    k[f] = 1;
    for (std::size_t i = 0; i < r; ++i) k[pivots[i]] = -t[i][f];
    Integer den = 1;
    for (auto& x : k) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    LatticeVector kv(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = k[j] * den;
      kv[j] = s.get_num();
    }
    kv = primitive(kv);
    auto first = std::find_if(kv.begin(), kv.end(), [](const Integer& x) { return x != 0; });
    if (first != kv.end() && *first < 0) kv = -kv;
    out.kernel_basis.push_back(std::move(kv));
  }
  return out;
}

std::vector<LatticeVector> integer_kernel(const IntegerMatrix& a) {
  HermiteForm hf = hermite_normal_form(a.transposed());
  std::vector<LatticeVector> basis;
  for (std::size_t r = 0; r < hf.h.rows(); ++r) {
    if (is_zero(hf.h.row(r))) basis.push_back(hf.u.row(r));
  }
  if (basis.empty()) return basis;
  return lattice_basis(basis, a.cols());
}

std::vector<LatticeVector> lattice_basis(std::span<const LatticeVector> vectors,
                                         std::size_t dim) {
  HermiteForm hf = hermite_normal_form(IntegerMatrix::from_rows(vectors, dim));
  std::vector<LatticeVector> basis;
  for (std::size_t r = 0; r < hf.h.rows(); ++r) {
    LatticeVector row = hf.h.row(r);
    if (is_zero(row)) break;
    basis.push_back(std::move(row));
  }
  return basis;
}

std::vector<LatticeVector> saturated_basis(
    std::span<const LatticeVector> vectors, std::size_t dim) {
  auto orthogonal = integer_kernel(IntegerMatrix::from_rows(vectors, dim));
  return integer_kernel(IntegerMatrix::from_rows(orthogonal, dim));
}

std::optional<LatticeVector> lattice_coordinates(
    std::span<const LatticeVector> basis, const LatticeVector& v) {
  if (basis.empty()) {
    if (is_zero(v)) return LatticeVector{};
    return std::nullopt;
  }
  IntegerMatrix bt = IntegerMatrix::from_rows(basis, v.size()).transposed();
  LinearSolution sol = solve_rational(bt, v);
  if (sol.kind != LinearSolution::Kind::Unique) return std::nullopt;
  LatticeVector x(sol.solution.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sol.solution[i].get_den() != 1) return std::nullopt;
    x[i] = sol.solution[i].get_num();
  }
  return x;
}

LatticeVector reduce_modulo(std::span<const LatticeVector> hnf_basis,
                            LatticeVector v) {
  for (const auto& row : hnf_basis) {
    auto it = std::find_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; });
    if (it == row.end()) continue;
    std::size_t p = static_cast<std::size_t>(it - row.begin());
    Integer q = floor_div(v[p], row[p]);
    if (q != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return v;
}

// ---------------------------------------------------------------------------
// Exact LP

std::optional<RationalVector> lp_feasible_point(const IntegerMatrix& a,
                                                const RationalVector& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw DimensionError("LP right-hand side length mismatch");
  if (m == 0) return RationalVector(n, Rational(0));
  // Columns: x+ [0,n), x- [n,2n), surplus [2n,2n+m), artificial [2n+m,2n+2m).
  const std::size_t art0 = 2 * n + m;
  const std::size_t width = 2 * n + 2 * m;
  std::vector<RationalVector> t(m, RationalVector(width + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t[i][j] = sign * Rational(a(i, j));
      t[i][n + j] = -sign * Rational(a(i, j));
    }
    t[i][2 * n + i] = -sign;
    t[i][art0 + i] = 1;
    t[i][width] = sign * b[i];
    basis[i] = art0 + i;
  }
  // Phase one: minimize the sum of artificials.
  RationalVector cost(width + 1, Rational(0));
  for (std::size_t j = 0; j < art0; ++j)
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[width] -= t[i][width];

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j <= width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[width] != 0) return std::nullopt;
  RationalVector x(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] += t[i][width];
    else if (basis[i] < 2 * n) x[basis[i] - n] -= t[i][width];
  }
  return x;
}

namespace {

struct PhaseOne {
  bool feasible = false;
  /// Infeasible case: pi with pi.A_j <= 0 for every column j and pi.b > 0.
  RationalVector pi;
};

// Phase one for {A y = b, y >= 0} with b >= 0, Bland's rule. The cost row
// holds reduced costs, so the simplex multipliers at the optimum are
// 1 - (reduced cost of each artificial column).
PhaseOne phase_one_equalities(const std::vector<RationalVector>& a, const RationalVector& b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  const std::size_t width = n + m;
  std::vector<RationalVector> t(m, RationalVector(width + 1));
  std::vector<std::size_t> basis(m);
  RationalVector cost(width + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width] = b[i];
    basis[i] = n + i;
    for (std::size_t j = 0; j < n; ++j) cost[j] -= a[i][j];
    cost[width] -= b[i];
  }
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j <= width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  PhaseOne out;
  out.feasible = cost[width] == 0;
  if (!out.feasible) {
    out.pi.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.pi[i] = Rational(1) - cost[n + i];
  }
  return out;
}

}  // namespace

std::optional<LatticeVector> lp_strict_separation(
    const LatticeVector& target, std::span<const LatticeVector> others,
    std::span<const LatticeVector> recession) {
  const std::size_t d = target.size();
  std::vector<LatticeVector> rows;
  for (const auto& v : others) {
    if (v.size() != d) throw DimensionError("separation: vector length mismatch");
    rows.push_back(v - target);
  }
  for (const auto& r : recession) {
    if (r.size() != d) throw DimensionError("separation: vector length mismatch");
    if (!is_zero(r)) rows.push_back(r);
  }
  if (rows.empty()) return LatticeVector(d);
  for (const auto& r : rows)
    if (is_zero(r)) return std::nullopt;  // target coincides with another point

  // l.r >= 1 for all rows is feasible iff {sum y_j r_j = 0, sum y_j = 1,
  // y >= 0} is not (Farkas); the phase-one multipliers of the latter give l.
  std::vector<RationalVector> a(d + 1, RationalVector(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) a[i][j] = rows[j][i];
    a[d][j] = 1;
  }
  RationalVector b(d + 1, Rational(0));
  b[d] = 1;
  PhaseOne p = phase_one_equalities(a, b);
  if (p.feasible) return std::nullopt;

  Integer den = 1;
  for (std::size_t i = 0; i < d; ++i)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.pi[i].get_den_mpz_t());
  LatticeVector l(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational s = -p.pi[i] * den;
    l[i] = s.get_num();
  }
  l = primitive(l);
  for (const auto& r : rows) {
    if (dot(l, r) <= 0) throw std::logic_error("separation certificate failed to verify");
  }
  return l;
}

}  // namespace nashlab
