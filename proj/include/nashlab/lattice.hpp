#pragma once

// Exact integer and rational linear algebra over lattices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nashlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of Z^d. The ambient rank is the length of the vector.
using LatticeVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation needs a pointed cone or semigroup.
class NotPointedError : public Error {
 public:
  using Error::Error;
};

/// Raised for input with no geometric meaning (e.g. only zero generators).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

LatticeVector make_vector(std::initializer_list<long> coords);

Integer dot(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
LatticeVector scaled(const LatticeVector& v, const Integer& k);
bool is_zero(const LatticeVector& v);

/// gcd of the coordinates (0 for the zero vector).
Integer content(const LatticeVector& v);
/// v divided by its content; the zero vector is returned unchanged.
LatticeVector primitive(const LatticeVector& v);

std::string to_string(const LatticeVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  /// Builds a matrix whose rows are the given vectors; `cols` is used when
  /// `rows` is empty.
  static IntegerMatrix from_rows(std::span<const LatticeVector> rows,
                                 std::size_t cols = 0);
  static IntegerMatrix from_columns(std::span<const LatticeVector> columns,
                                    std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  LatticeVector row(std::size_t r) const;
  LatticeVector column(std::size_t c) const;
  std::vector<LatticeVector> row_vectors() const;
  std::vector<LatticeVector> column_vectors() const;
  IntegerMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[target] += k * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const Integer& k);
  void add_column_multiple(std::size_t target, std::size_t source,
                           const Integer& k);
  void negate_row(std::size_t r);
  void negate_column(std::size_t c);

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
LatticeVector operator*(const IntegerMatrix& a, const LatticeVector& v);
std::string to_string(const IntegerMatrix& m);

/// Characteristic of the base field: 0 or a prime.
class Characteristic {
 public:
  Characteristic() = default;
  /// Throws Error unless `value` is 0 or prime.
  explicit Characteristic(unsigned long value);

  unsigned long value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  /// True iff `x` maps to a nonzero element of the prime field.
  bool nonzero_in_field(const Integer& x) const;

  friend bool operator==(Characteristic, Characteristic) = default;

 private:
  unsigned long value_ = 0;
};

bool is_prime(unsigned long n);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& m);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(std::span<const LatticeVector> rows, std::size_t cols);

struct HermiteForm {
  IntegerMatrix h;
  IntegerMatrix u;
};

/// Row-style Hermite normal form: U·m = H with U unimodular, H in row
/// echelon form, pivots positive and entries above each pivot reduced into
/// [0, pivot). Zero rows are at the bottom.
HermiteForm hermite_normal_form(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix s;
  IntegerMatrix u;
  IntegerMatrix v;
};

/// U·m·V = S with S diagonal, nonnegative, each diagonal entry dividing the
/// next.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Inverse of a unimodular matrix; throws Error if |det| != 1.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

struct LinearSolution {
  enum class Kind { Unique, NoSolution, Underdetermined };
  Kind kind = Kind::NoSolution;
  /// A particular solution (Unique or Underdetermined).
  RationalVector solution;
  /// Primitive integer basis of ker A (Underdetermined only).
  std::vector<LatticeVector> kernel_basis;
};

LinearSolution solve_rational(const IntegerMatrix& a, const LatticeVector& b);

/// Saturated basis of {x in Z^n : A x = 0}, in Hermite normal form.
std::vector<LatticeVector> integer_kernel(const IntegerMatrix& a);

/// Lattice basis (HNF rows) of the Z-span of `vectors`.
std::vector<LatticeVector> lattice_basis(std::span<const LatticeVector> vectors,
                                         std::size_t dim);

/// Lattice basis of span_Q(vectors) ∩ Z^dim.
std::vector<LatticeVector> saturated_basis(
    std::span<const LatticeVector> vectors, std::size_t dim);

/// Coordinates of `v` in the lattice basis `basis` (rows); nullopt if `v` is
/// not in the Z-span.
std::optional<LatticeVector> lattice_coordinates(
    std::span<const LatticeVector> basis, const LatticeVector& v);

/// Reduces `v` modulo the lattice spanned by the HNF rows `hnf_basis`.
/// Two vectors are congruent iff their reductions agree.
LatticeVector reduce_modulo(std::span<const LatticeVector> hnf_basis,
                            LatticeVector v);

/// Finds x with A·x >= b over the rationals; nullopt if infeasible.
/// Phase-one simplex over the rationals with Bland's rule.
std::optional<RationalVector> lp_feasible_point(const IntegerMatrix& a,
                                                const RationalVector& b);

/// Searches for a functional l with l(target) < l(v) for every v in `others`
/// and l(r) > 0 for every nonzero r in `recession`. The result is integral
/// and is verified before it is returned.
std::optional<LatticeVector> lp_strict_separation(
    const LatticeVector& target, std::span<const LatticeVector> others,
    std::span<const LatticeVector> recession);

}  // namespace nashlab
