#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace cayleykit {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix from_cols(const std::vector<IntVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  IntMatrix transposed() const;

  /// Matrix-vector product M*x.
  IntVec apply(const IntVec& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Dense exact rational matrix, row-major.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  static RatMatrix from(const IntMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RatVec apply(const RatVec& x) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Int dot(const IntVec& a, const IntVec& b);

/// gcd of all entries (nonnegative); 0 for the zero vector.
Int vector_gcd(const IntVec& v);

/// Divides by the gcd and flips sign so the first nonzero entry is positive.
/// The zero vector is left unchanged.
void make_primitive(IntVec& v);

struct HermiteResult {
  IntMatrix h;  // row Hermite form of the input
  IntMatrix u;  // unimodular, u * input = h
};

// Row-style Hermite normal form: upper echelon, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows sink to the bottom.
HermiteResult hermite_normal_form(const IntMatrix& m);

struct SmithResult {
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix d;  // diagonal, nonnegative, each entry divides the next
  IntMatrix v;  // unimodular, cols x cols
};

// Smith normal form: u * input * v = d.
SmithResult smith_normal_form(const IntMatrix& m);

std::size_t integer_rank(const IntMatrix& m);

/// Basis of the right kernel {x : m*x = 0} over the integers.
std::vector<IntVec> kernel_basis(const IntMatrix& m);

struct IntegerSolution {
  IntVec particular;           // one solution of a*x = b
  std::vector<IntVec> kernel;  // lattice basis of {x : a*x = 0}
};

/// Solves a*x = b over the integers; nullopt when no integer solution exists.
std::optional<IntegerSolution> solve_integer(const IntMatrix& a,
                                             const IntVec& b);

/// Index [Z^n : <vs>] of the sublattice generated by vs, or nullopt when the
/// vectors span a lattice of rank < n ("infinite" index).
std::optional<Int> lattice_index(const std::vector<IntVec>& vs, std::size_t n);

/// Exact inverse; throws std::invalid_argument on a singular matrix.
RatMatrix invert_rational(const RatMatrix& m);

/// Inverse of a unimodular integer matrix; throws std::invalid_argument when
/// the input is singular or the inverse is not integral.
IntMatrix unimodular_inverse(const IntMatrix& m);

std::size_t rational_rank(const std::vector<RatVec>& vectors);

}  // namespace cayleykit
